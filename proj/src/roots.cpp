#include "oddcycle/roots.hpp"

#include <stdexcept>

#include "oddcycle/matching.hpp"

namespace oddcycle {

Rational default_eps() {
  Rational eps = 1;
  mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), 40);
  return eps;
}

// ---- AlgebraicRoot -------------------------------------------------------

AlgebraicRoot::AlgebraicRoot(IntPolynomial square_free, Rational lo,
                             Rational hi)
    : poly_(std::move(square_free)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("AlgebraicRoot: lo > hi");
  if (lo_ == hi_) {
    if (poly_.sign_at(lo_) != 0) {
      throw std::invalid_argument("AlgebraicRoot: point is not a root");
    }
    return;
  }
  sign_lo_ = poly_.sign_at(lo_);
  if (sign_lo_ == 0 || poly_.sign_at(hi_) != -sign_lo_) {
    throw std::invalid_argument("AlgebraicRoot: interval is not isolating");
  }
}

void AlgebraicRoot::halve() {
  if (is_exact()) return;
  Rational mid = midpoint();
  int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = mid;
    hi_ = mid;
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void AlgebraicRoot::refine(const Rational& eps) {
  while (width() > eps) halve();
}

std::string AlgebraicRoot::to_decimal(int digits) const {
  Rational eps = 1;
  mpz_ui_pow_ui(eps.get_den_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  AlgebraicRoot copy = *this;
  copy.refine(eps);
  return oddcycle::to_decimal(copy.midpoint(), digits);
}

// ---- Sturm sequences -----------------------------------------------------

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of zero");
  chain_.push_back(p.primitive());
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive());
  while (true) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^e * rem; the Sturm step wants -rem up to a positive
    // factor, which is -prem unless lc(b)^e is negative.
    const int e = a.degree() - b.degree() + 1;
    const bool negative_factor = sgn(b.leading()) < 0 && e % 2 == 1;
    BigInt g = r.content();
    if (!negative_factor) g = -g;
    std::vector<BigInt> scaled(r.coefficients().begin(), r.coefficients().end());
    for (BigInt& c : scaled) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    chain_.emplace_back(std::move(scaled));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const IntPolynomial& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

int sturm_root_count(const IntPolynomial& p, const Rational& lo,
                     const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_root_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: lo >= hi");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
    throw std::invalid_argument("sturm_root_count: endpoint is a root");
  }
  return SturmSequence(p).count(lo, hi);
}

BigInt cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  BigInt lc = abs(p.leading());
  BigInt best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt c = abs(p.coeff(i));
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    if (q > best) best = q;
  }
  return best + 1;
}

// ---- isolation -----------------------------------------------------------

namespace {

// A point strictly inside (lo, hi) that is not a root of p: the midpoint,
// or if that is a root, a nearby dyadic point.
Rational split_point(const IntPolynomial& p, const Rational& lo,
                     const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (p.sign_at(mid) != 0) return mid;
  Rational step = (hi - lo) / 4;
  while (true) {
    Rational right = mid + step;
    if (p.sign_at(right) != 0) return right;
    Rational left = mid - step;
    if (p.sign_at(left) != 0) return left;
    step /= 2;
  }
}

}  // namespace

std::optional<AlgebraicRoot> isolate_max_root(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_max_root: zero polynomial");
  IntPolynomial q = square_free_part(p);
  if (q.degree() < 1) return std::nullopt;
  if (q.degree() == 1) {
    Rational r(-q.coeff(0), q.coeff(1));
    r.canonicalize();
    return AlgebraicRoot(q, r, r);
  }
  SturmSequence sturm(q);
  const BigInt bound = cauchy_bound(q);
  Rational lo = -bound;
  Rational hi = bound;
  int v_lo = sturm.variations(lo);
  int v_hi = sturm.variations(hi);
  if (v_lo - v_hi == 0) return std::nullopt;
  // Invariant: the largest root lies in (lo, hi) and nothing at or above hi.
  while (v_lo - v_hi > 1) {
    Rational mid = split_point(q, lo, hi);
    int v_mid = sturm.variations(mid);
    if (v_mid - v_hi >= 1) {
      lo = std::move(mid);
      v_lo = v_mid;
    } else {
      hi = std::move(mid);
      v_hi = v_mid;
    }
  }
  return AlgebraicRoot(std::move(q), std::move(lo), std::move(hi));
}

AlgebraicRoot max_real_root(const IntPolynomial& p, const Rational& eps) {
  std::optional<AlgebraicRoot> root = isolate_max_root(p);
  if (!root) throw std::domain_error("max_real_root: no real root");
  root->refine(eps);
  return *root;
}

AlgebraicRoot max_matching_root(const Graph& g, const Rational& eps) {
  return max_real_root(matching_polynomial(g), eps);
}

AlgebraicRoot max_matching_root(const Graph& g) {
  return max_matching_root(g, default_eps());
}

// ---- comparison ----------------------------------------------------------

std::strong_ordering compare_roots(const AlgebraicRoot& a, const Rational& q) {
  if (q < a.lo()) return std::strong_ordering::greater;
  if (q > a.hi()) return std::strong_ordering::less;
  if (a.is_exact()) return std::strong_ordering::equal;
  // q is inside the isolating interval, strictly (endpoints are not roots
  // but q may coincide with one, which the sign test handles too).
  int s = a.polynomial().sign_at(q);
  if (s == 0) return std::strong_ordering::equal;
  return s == a.polynomial().sign_at(a.lo()) ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
}

std::strong_ordering compare_roots(const AlgebraicRoot& a,
                                   const AlgebraicRoot& b) {
  if (a.is_exact()) return 0 <=> compare_roots(b, a.lo());
  if (b.is_exact()) return compare_roots(a, b.lo());
  AlgebraicRoot x = a;
  AlgebraicRoot y = b;
  bool checked_common = false;
  while (true) {
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (y.hi() < x.lo()) return std::strong_ordering::greater;
    if (!checked_common) {
      // Both roots are the unique roots of their polynomials inside their
      // intervals, so they coincide iff gcd has a root in the overlap. The
      // gcd is square-free and has at most one root there.
      checked_common = true;
      IntPolynomial g = gcd(x.polynomial(), y.polynomial());
      if (g.degree() >= 1) {
        const Rational& lo = x.lo() > y.lo() ? x.lo() : y.lo();
        const Rational& hi = x.hi() < y.hi() ? x.hi() : y.hi();
        int s_lo = g.sign_at(lo);
        int s_hi = g.sign_at(hi);
        if (s_lo == 0 || s_hi == 0 || s_lo != s_hi) {
          return std::strong_ordering::equal;
        }
      }
    }
    if (x.is_exact()) return 0 <=> compare_roots(y, x.lo());
    if (y.is_exact()) return compare_roots(x, y.lo());
    if (x.width() >= y.width()) {
      x.halve();
    } else {
      y.halve();
    }
  }
}

}  // namespace oddcycle
