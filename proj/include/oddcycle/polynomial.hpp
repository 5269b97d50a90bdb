#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddcycle {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored from the constant term upward with no trailing
/// zeros, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^i; zero outside the stored range.
  const BigInt& coeff(int i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  IntPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  BigInt evaluate(const BigInt& x) const;
  /// Sign (-1, 0, 1) of p(x), computed exactly.
  int sign_at(const Rational& x) const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content(p), with a positive leading coefficient.
  IntPolynomial primitive() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) {
    return a *= s;
  }
  friend IntPolynomial operator-(IntPolynomial a);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, highest power first: "x^3 - 3x".
  std::string to_string() const;
  /// Space-separated coefficients from the constant term upward.
  std::string to_coefficient_text() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Total order (degree first, then coefficients from the top), for use as a
/// map key.
struct PolynomialLess {
  bool operator()(const IntPolynomial& a, const IntPolynomial& b) const;
};

IntPolynomial parse_coefficient_text(std::string_view text);

/// lc(b)^(deg a - deg b + 1) * a mod b. Requires b != 0.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// a / b, throwing std::domain_error unless b divides a exactly in Z[x].
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Product of the distinct irreducible factors of p, primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Product of the square-free factors of p whose multiplicity is odd,
/// primitive. Its real roots are exactly where p changes sign.
IntPolynomial odd_multiplicity_part(const IntPolynomial& p);

/// Decimal expansion of q rounded to `digits` places after the point.
std::string to_decimal(const Rational& q, int digits);

}  // namespace oddcycle
