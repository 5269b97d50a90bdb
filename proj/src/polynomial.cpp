#include "oddcycle/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oddcycle {
namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return zero();
  return coeffs_[i];
}

const BigInt& IntPolynomial::leading() const {
  return coeffs_.empty() ? zero() : coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(d));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// With x = a/b and b > 0, sign p(x) = sign(b^d p(a/b)), and b^d p(a/b) is
// an integer computed by homogenised Horner.
int IntPolynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt bpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + coeffs_[i] * bpow;
  }
  return sgn(acc);
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (BigInt& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial a) {
  for (BigInt& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

bool PolynomialLess::operator()(const IntPolynomial& a,
                                const IntPolynomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

std::string IntPolynomial::to_coefficient_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

IntPolynomial parse_coefficient_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> coeffs;
  std::string token;
  while (in >> token) {
    BigInt c;
    if (c.set_str(token, 10) != 0) {
      throw std::invalid_argument("bad coefficient '" + token + "'");
    }
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    BigInt lead = r[k];
    for (int i = 0; i <= k; ++i) r[i] *= lb;
    if (sgn(lead) != 0) {
      for (int i = 0; i <= db; ++i) r[k - db + i] -= lead * b.coeff(i);
    }
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw std::domain_error("exact_quotient: divisor does not divide");
  }
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<BigInt> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("exact_quotient: divisor does not divide");
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.leading().get_mpz_t());
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b.coeff(i);
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) {
      throw std::domain_error("exact_quotient: divisor does not divide");
    }
  }
  return IntPolynomial(std::move(q));
}

// Primitive polynomial remainder sequence.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive();
  IntPolynomial y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive();
  IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive(), g).primitive();
}

// Yun's algorithm, keeping every intermediate primitive so that all
// divisions stay exact over the integers.
IntPolynomial odd_multiplicity_part(const IntPolynomial& p) {
  if (p.degree() < 1) return IntPolynomial{1};
  IntPolynomial f = p.primitive();
  IntPolynomial df = f.derivative();
  IntPolynomial a = gcd(f, df);
  IntPolynomial b = exact_quotient(f, a);
  IntPolynomial c = exact_quotient(df, a);
  IntPolynomial d = c - b.derivative();
  IntPolynomial result{1};
  for (int multiplicity = 1; b.degree() >= 1; ++multiplicity) {
    IntPolynomial factor = gcd(b, d);
    b = exact_quotient(b, factor);
    c = exact_quotient(d, factor);
    d = c - b.derivative();
    if (multiplicity % 2 == 1) result = result * factor;
  }
  return result.primitive();
}

std::string to_decimal(const Rational& q, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round half away from zero: floor(|q| * 10^digits + 1/2).
  Rational scaled = abs(q) * scale + Rational(1, 2);
  BigInt units = scaled.get_num() / scaled.get_den();
  std::string s = units.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  }
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (sgn(q) < 0 && sgn(units) != 0) s.insert(0, "-");
  return s;
}

}  // namespace oddcycle
