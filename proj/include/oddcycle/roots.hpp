#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/polynomial.hpp"

namespace oddcycle {

/// Report precision for root intervals: 2^-40.
Rational default_eps();

/// A real algebraic number: the unique root of a square-free integer
/// polynomial inside [lo, hi]. When lo < hi the endpoints are not roots and
/// the polynomial changes sign across the interval; when lo == hi the root
/// is that rational.
class AlgebraicRoot {
 public:
  AlgebraicRoot(IntPolynomial square_free, Rational lo, Rational hi);

  const IntPolynomial& polynomial() const noexcept { return poly_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Bisects by sign until the interval is at most eps wide.
  void refine(const Rational& eps);
  /// One bisection step; no-op on exact roots.
  void halve();

  Rational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const { return midpoint().get_d(); }
  /// Decimal rendering after refining a copy below 10^-digits.
  std::string to_decimal(int digits) const;

 private:
  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
};

/// Fraction-free Sturm chain of a polynomial: p, p', then negated
/// pseudo-remainders rescaled by positive factors only.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  /// Sign variations of the chain at x.
  int variations(const Rational& x) const;
  /// Distinct real roots in the open interval (lo, hi); requires that
  /// neither endpoint is a root of p.
  int count(const Rational& lo, const Rational& hi) const;

  const std::vector<IntPolynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Distinct real roots of p in (lo, hi). Throws std::domain_error for the
/// zero polynomial and std::invalid_argument if lo >= hi or an endpoint is
/// a root.
int sturm_root_count(const IntPolynomial& p, const Rational& lo,
                     const Rational& hi);

/// 1 + max |c_i / c_deg|, rounded up to an integer: every root lies strictly
/// inside (-bound, bound).
BigInt cauchy_bound(const IntPolynomial& p);

/// Largest real root of p, or nullopt if p has none. The returned interval
/// is isolating but not refined.
std::optional<AlgebraicRoot> isolate_max_root(const IntPolynomial& p);

/// Largest real root of p to width <= eps. Throws std::domain_error if p
/// has no real root.
AlgebraicRoot max_real_root(const IntPolynomial& p, const Rational& eps);

/// t(G): the largest root of the matching polynomial of g.
AlgebraicRoot max_matching_root(const Graph& g, const Rational& eps);
AlgebraicRoot max_matching_root(const Graph& g);

/// Exact order of two algebraic numbers.
std::strong_ordering compare_roots(const AlgebraicRoot& a,
                                   const AlgebraicRoot& b);

/// Exact order of an algebraic number against a rational.
std::strong_ordering compare_roots(const AlgebraicRoot& a, const Rational& q);

}  // namespace oddcycle
