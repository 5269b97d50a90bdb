#include <random>

#include "doctest.h"
#include "oddcycle/extremal.hpp"
#include "oddcycle/matching.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

MatchingProfile profile_of(std::initializer_list<long> counts) {
  MatchingProfile p;
  for (long c : counts) p.counts.emplace_back(c);
  return p;
}

bool same_counts(const MatchingProfile& p, const std::vector<std::int64_t>& expected) {
  if (p.counts.size() != expected.size()) return false;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (p.counts[k] != BigInt(static_cast<long>(expected[k]))) return false;
  }
  return true;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("matching profiles of small graphs") {
  CHECK(matching_profile(star_graph(2)) == profile_of({1, 2}));
  CHECK(matching_profile(complete_graph(3)) == profile_of({1, 3}));
  CHECK(matching_profile(make_H(5)) == profile_of({1, 6, 5}));
  CHECK(matching_profile(cycle_graph(4)) == profile_of({1, 4, 2}));
  CHECK(matching_profile(Graph(1)) == profile_of({1}));
  CHECK(matching_profile(Graph(4)) == profile_of({1, 0, 0}));
}

TEST_CASE("matching polynomials of small graphs") {
  CHECK(matching_polynomial(star_graph(2)) == IntPolynomial{0, -2, 0, 1});
  CHECK(matching_polynomial(Graph(1)) == IntPolynomial{0, 1});
  CHECK(matching_polynomial(make_H(5)) == IntPolynomial{0, 5, 0, -6, 0, 1});
  CHECK(matching_polynomial(make_H(5)).to_string() == "x^5 - 6x^3 + 5x");
}

TEST_CASE("matching profile agrees with subset enumeration up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      REQUIRE(same_counts(matching_profile(g), oracle::matching_counts(g)));
    }
  }
}

TEST_CASE("matching profile agrees with subset enumeration on larger graphs") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 7 + rep % 8;
    const Graph g = oracle::random_graph(n, rep % 2 ? 0.25 : 0.5, rng);
    REQUIRE(same_counts(matching_profile(g), oracle::matching_counts(g)));
  }
}

TEST_CASE("complete graphs use the big-integer path") {
  // m_k(K_n) = n! / (k! (n-2k)! 2^k)
  for (int n : {12, 16, 20}) {
    const MatchingProfile p = matching_profile(complete_graph(n));
    for (int k = 0; k <= n / 2; ++k) {
      const BigInt expected =
          factorial(n) / (factorial(k) * factorial(n - 2 * k) * (BigInt(1) << k));
      CHECK(p.counts[k] == expected);
    }
  }
}

TEST_CASE("sparse order-64 graphs") {
  const MatchingProfile p = matching_profile(path_graph(64));
  // m_k(P_n) = C(n-k, k)
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 64 - 32, 32);
  CHECK(p.counts[32] == c);
  mpz_bin_uiui(c.get_mpz_t(), 64 - 10, 10);
  CHECK(p.counts[10] == c);
  CHECK(matching_profile(star_graph(63)).counts[1] == 63);
}

TEST_CASE("monic with alternating parity") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + rep % 14;
    const IntPolynomial p = matching_polynomial(oracle::random_graph(n, 0.4, rng));
    REQUIRE(p.degree() == n);
    CHECK(p.leading() == 1);
    for (int d = n - 1; d >= 0; d -= 2) CHECK(p.coeff(d) == 0);
  }
}

TEST_CASE("profile restricted to an active vertex set") {
  const Graph g = make_H(5);
  const VertexMask active = bit(0) | bit(1) | bit(2);
  CHECK(matching_profile(g, active) == matching_profile(complete_graph(3)));
  CHECK(matching_polynomial(g, active) == matching_polynomial(complete_graph(3)));
  CHECK(matching_profile(g, 0) == profile_of({1}));
}

TEST_CASE("edge deletion identity") {
  for (const Edge& e : cycle_graph(5).edges()) {
    CHECK(check_deletion_identity(cycle_graph(5), e));
  }
  CHECK(check_deletion_identity(complete_graph(2), Edge{0, 1}));
  CHECK(check_deletion_identity(make_F(4, 4), Edge{0, 3}));
  CHECK_THROWS_AS(check_deletion_identity(path_graph(3), Edge{0, 2}),
                  std::invalid_argument);
}

TEST_CASE("edge deletion identity on every edge of every graph up to order 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const Edge& e : g.edges()) REQUIRE(check_deletion_identity(g, e));
    }
  }
}

TEST_CASE("edge deletion identity at order 7 on a sample") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 500; ++rep) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    for (const Edge& e : g.edges()) REQUIRE(check_deletion_identity(g, e));
  }
}

TEST_CASE("disjoint union identity") {
  CHECK(check_union_identity({complete_graph(2), complete_graph(2)}));
  CHECK(matching_polynomial(disjoint_union(complete_graph(2), complete_graph(2))) ==
        IntPolynomial{1, 0, -2, 0, 1});
  CHECK(check_union_identity({Graph(1), make_H(5)}));
  CHECK(check_union_identity({complete_graph(3), star_graph(2)}));
  CHECK_THROWS_AS(check_union_identity({}), std::invalid_argument);

  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Graph> parts;
    int total = 0;
    while (true) {
      const int n = 1 + static_cast<int>(rng() % 5);
      if (total + n > 12) break;
      parts.push_back(oracle::random_graph(n, 0.5, rng));
      total += n;
    }
    REQUIRE(check_union_identity(parts));
  }
}

TEST_CASE("spanning subgraphs have no more matchings") {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + rep % 9;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    Graph h = g;
    for (const Edge& e : g.edges()) {
      if (rng() % 3 == 0) h.remove_edge(e.u, e.v);
    }
    const auto pg = matching_profile(g);
    const auto ph = matching_profile(h);
    for (std::size_t k = 0; k < pg.counts.size(); ++k) {
      REQUIRE(ph.counts[k] <= pg.counts[k]);
    }
  }
}

TEST_CASE("star polynomials") {
  for (int s = 1; s <= 10; ++s) {
    CHECK(matching_polynomial(star_graph(s)) ==
          IntPolynomial::monomial(1, s + 1) - IntPolynomial::monomial(s, s - 1));
  }
}
