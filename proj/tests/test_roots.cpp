#include <cmath>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "oddcycle/extremal.hpp"
#include "oddcycle/matching.hpp"
#include "oddcycle/roots.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

std::vector<double> as_doubles(const IntPolynomial& p) {
  std::vector<double> out;
  for (const BigInt& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

AlgebraicRoot root_of(const IntPolynomial& p) { return *isolate_max_root(p); }

const Rational kTight(1, BigInt(1) << 60);

}  // namespace

TEST_CASE("Sturm root counts") {
  CHECK(sturm_root_count(IntPolynomial{-2, 0, 1}, 0, 2) == 1);
  CHECK(sturm_root_count(IntPolynomial{0, -3, 0, 1}, -2, 2) == 3);
  CHECK(sturm_root_count(IntPolynomial{1, 0, -4, 0, 1}, 0, 10) == 2);
  CHECK(sturm_root_count(IntPolynomial{1, 0, 1}, -10, 10) == 0);
  // repeated roots count once
  CHECK(sturm_root_count(IntPolynomial{1, 0, -2, 0, 1}, -5, 5) == 2);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{}, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{-1, 1}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{-1, 1}, 2, 0), std::invalid_argument);
}

TEST_CASE("the quartic x^4 - 4x^2 + 1 against the float oracle") {
  const IntPolynomial p{1, 0, -4, 0, 1};
  CHECK(sturm_root_count(p, 0, 10) == 2);
  const double expected = oracle::max_real_root(as_doubles(p));
  CHECK(expected == doctest::Approx(std::sqrt(2 + std::sqrt(3.0))).epsilon(1e-12));
  CHECK(max_real_root(p, kTight).approx() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("Sturm counts agree with the float oracle on random polynomials") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int rep = 0; rep < 300; ++rep) {
    // Products of distinct linear factors with integer roots, so the oracle
    // count is exact.
    std::set<long> roots;
    const int k = 1 + rep % 6;
    while (static_cast<int>(roots.size()) < k) roots.insert(coeff(rng));
    IntPolynomial p{1};
    for (long r : roots) p = p * IntPolynomial{-r, 1};
    if (rep % 2) p = p * IntPolynomial{1, 0, 1};  // no extra real roots
    CHECK(sturm_root_count(p, Rational(-19, 2), Rational(19, 2)) == k);
    CHECK(sturm_root_count(p, Rational(1, 2), Rational(19, 2)) ==
          std::count_if(roots.begin(), roots.end(), [](long r) { return r > 0; }));
    const AlgebraicRoot top = root_of(p);
    CHECK(compare_roots(top, Rational(*roots.rbegin())) == std::strong_ordering::equal);
  }
}

TEST_CASE("largest real roots") {
  CHECK(max_real_root(IntPolynomial{-2, 0, 1}, default_eps()).approx() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  const IntPolynomial bowtie{0, 5, 0, -6, 0, 1};
  CHECK(IntPolynomial{0, 1} * IntPolynomial{-1, 0, 1} * IntPolynomial{-5, 0, 1} == bowtie);
  CHECK(max_real_root(bowtie, default_eps()).approx() ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
  CHECK(max_real_root(IntPolynomial{1, 0, -3, 0, 1}, default_eps()).approx() ==
        doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
  CHECK(max_real_root(IntPolynomial{-1, 2}, default_eps()).is_exact());
  CHECK(max_real_root(IntPolynomial{-1, 2}, default_eps()).lo() == Rational(1, 2));
  CHECK_THROWS_AS(max_real_root(IntPolynomial{1, 0, 1}, default_eps()), std::domain_error);
  CHECK_FALSE(isolate_max_root(IntPolynomial{1, 0, 1}).has_value());
  CHECK_FALSE(isolate_max_root(IntPolynomial{7}).has_value());
  CHECK(max_real_root(IntPolynomial{6, -5, 1}, default_eps()).approx() ==
        doctest::Approx(3.0));
  CHECK(max_real_root(IntPolynomial{-3, 1} * IntPolynomial{-3, 1} * IntPolynomial{1, 1},
                      default_eps())
            .approx() == doctest::Approx(3.0));
}

TEST_CASE("refinement meets the requested width") {
  AlgebraicRoot r = root_of(IntPolynomial{-2, 0, 1});
  const Rational eps(1, 1000000);
  r.refine(eps);
  CHECK(r.width() <= eps);
  CHECK(r.lo() * r.lo() < 2);
  CHECK(r.hi() * r.hi() > 2);
  CHECK(sturm_root_count(r.polynomial(), r.lo(), r.hi()) == 1);
  CHECK(r.to_decimal(8) == "1.41421356");
  CHECK(max_real_root(IntPolynomial{-2, 0, 1}, default_eps()).width() <= default_eps());
}

TEST_CASE("interval validation") {
  CHECK_THROWS(AlgebraicRoot(IntPolynomial{-2, 0, 1}, 2, 3));
  CHECK_THROWS(AlgebraicRoot(IntPolynomial{-2, 0, 1}, 2, 1));
  CHECK_NOTHROW(AlgebraicRoot(IntPolynomial{-2, 0, 1}, 1, 2));
  CHECK_NOTHROW(AlgebraicRoot(IntPolynomial{-1, 1}, 1, 1));
  CHECK_THROWS(AlgebraicRoot(IntPolynomial{-1, 1}, 2, 2));
}

TEST_CASE("t(G) for named graphs") {
  CHECK(compare_roots(max_matching_root(complete_graph(2)), Rational(1)) == 0);
  const AlgebraicRoot sqrt3 = root_of(IntPolynomial{-3, 0, 1});
  CHECK(compare_roots(max_matching_root(star_graph(3)), sqrt3) == 0);
  CHECK(compare_roots(max_matching_root(complete_graph(3)), sqrt3) == 0);
  CHECK(max_matching_root(make_F(4, 4), default_eps()).approx() ==
        doctest::Approx(1.93185165).epsilon(1e-8));
  CHECK(max_matching_root(make_F(4, 4), default_eps()).approx() ==
        doctest::Approx(oracle::max_real_root({1, 0, -4, 0, 1})).epsilon(1e-12));
  CHECK(compare_roots(max_matching_root(Graph(3)), Rational(0)) == 0);
}

TEST_CASE("exact comparison") {
  const AlgebraicRoot sqrt2 = root_of(IntPolynomial{-2, 0, 1});
  const AlgebraicRoot sqrt3 = root_of(IntPolynomial{-3, 0, 1});
  CHECK(compare_roots(sqrt2, sqrt3) == std::strong_ordering::less);
  CHECK(compare_roots(sqrt3, sqrt2) == std::strong_ordering::greater);

  const AlgebraicRoot sqrt5 = root_of(IntPolynomial{-5, 0, 1});
  const AlgebraicRoot narrowed(IntPolynomial{-5, 0, 1}, 2, 3);
  CHECK(compare_roots(sqrt5, narrowed) == std::strong_ordering::equal);
  const AlgebraicRoot bowtie = max_matching_root(make_H(5));
  CHECK(compare_roots(bowtie, sqrt5) == std::strong_ordering::equal);
  // sqrt 2 as a root of a different polynomial
  const AlgebraicRoot other = root_of(IntPolynomial{-2, 0, 1} * IntPolynomial{-1, 1});
  CHECK(compare_roots(other, sqrt2) == std::strong_ordering::equal);

  const AlgebraicRoot golden = max_matching_root(path_graph(4));
  CHECK(compare_roots(golden, max_matching_root(star_graph(3))) ==
        std::strong_ordering::less);

  CHECK(compare_roots(sqrt2, Rational(141, 100)) == std::strong_ordering::greater);
  CHECK(compare_roots(sqrt2, Rational(142, 100)) == std::strong_ordering::less);
  CHECK(compare_roots(max_matching_root(star_graph(4)), Rational(2)) ==
        std::strong_ordering::equal);
}

TEST_CASE("nearby roots are separated exactly") {
  // sqrt(1000000/999999) against 1, then sqrt(2.000001) against sqrt 2.
  const AlgebraicRoot a = root_of(IntPolynomial{-1000000, 0, 999999});
  const AlgebraicRoot b = root_of(IntPolynomial{-1, 0, 1});
  CHECK(compare_roots(a, b) == std::strong_ordering::greater);
  const IntPolynomial p{-2000001, 0, 1000000};  // root sqrt(2.000001)
  CHECK(compare_roots(root_of(p), root_of(IntPolynomial{-2, 0, 1})) ==
        std::strong_ordering::greater);
}

TEST_CASE("matching polynomials up to order 7 are real-rooted and symmetric") {
  std::set<IntPolynomial, PolynomialLess> distinct;
  for (int n = 1; n <= 7; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      distinct.insert(matching_polynomial(g));
    });
  }
  for (const IntPolynomial& p : distinct) {
    const IntPolynomial sf = square_free_part(p);
    const BigInt b = cauchy_bound(sf);
    REQUIRE(sturm_root_count(sf, Rational(-b), Rational(b)) == sf.degree());
    const int n = p.degree();
    for (int d = 0; d <= n; ++d) {
      if ((n - d) % 2 != 0) REQUIRE(p.coeff(d) == 0);
    }
  }
}

TEST_CASE("t(G) agrees with the path-tree oracle") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 1 + rep % 7;
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const AlgebraicRoot t = max_matching_root(g, Rational(1, BigInt(1) << 50));
    CHECK(t.approx() == doctest::Approx(oracle::path_tree_radius(g)).epsilon(1e-9));
  }
}

TEST_CASE("proper subgraphs of connected graphs have smaller t") {
  // Every proper subgraph lies inside a one-edge or one-vertex deletion, so
  // checking those deletions covers all proper subgraphs.
  std::map<IntPolynomial, AlgebraicRoot, PolynomialLess> roots;
  auto t = [&](const Graph& g) -> const AlgebraicRoot& {
    const IntPolynomial p = matching_polynomial(g);
    auto it = roots.find(p);
    if (it == roots.end()) it = roots.emplace(p, max_matching_root(g)).first;
    return it->second;
  };
  std::int64_t failures = 0;
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      const AlgebraicRoot& tg = t(g);
      for (const Edge& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        failures += compare_roots(tg, t(h)) <= 0;
      }
      for (Vertex v = 0; v < n; ++v) {
        failures += compare_roots(tg, t(induced_subgraph(g, g.vertices() & ~bit(v)).graph)) <= 0;
      }
    });
  }
  CHECK(failures == 0);
}

TEST_CASE("cauchy bound encloses every root") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<BigInt> c(2 + rep % 6);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    const IntPolynomial p(c);
    const BigInt b = cauchy_bound(p);
    const double top = oracle::max_real_root(as_doubles(p));
    if (top > -1e299) CHECK(top < b.get_d());
  }
}

TEST_CASE("isolation is deterministic") {
  const IntPolynomial p = matching_polynomial(make_H(7));
  const AlgebraicRoot a = max_real_root(p, default_eps());
  const AlgebraicRoot b = max_real_root(p, default_eps());
  CHECK(a.lo() == b.lo());
  CHECK(a.hi() == b.hi());
}
