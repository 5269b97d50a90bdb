#include <random>

#include "doctest.h"
#include "oddcycle/errors.hpp"
#include "oddcycle/extremal.hpp"
#include "oddcycle/kelmans.hpp"
#include "oddcycle/matching.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

// Sign of d = m2 - m1 sampled on a grid past t(g1): a float stand-in for the
// dominance decision, used only where the verdict is strict or equal.
bool sampled_positive_beyond(const IntPolynomial& d, double from) {
  for (int i = 0; i <= 400; ++i) {
    const double x = from + 1e-6 + i * 0.05;
    double value = 0;
    for (int k = d.degree(); k >= 0; --k) value = value * x + d.coeff(k).get_d();
    if (value <= 0) return false;
  }
  return true;
}

Graph spider() {
  Graph g(7);
  for (int leg = 0; leg < 3; ++leg) {
    g.add_edge(0, 1 + 2 * leg);
    g.add_edge(1 + 2 * leg, 2 + 2 * leg);
  }
  return g;
}

}  // namespace

TEST_CASE("Kelmans transformation examples") {
  // P4 a-b-c-d with a=0, b=1, c=2, d=3.
  const KelmansResult r = kelmans_transform(path_graph(4), 1, 2);
  CHECK(is_isomorphic(r.graph, star_graph(3)));
  CHECK(r.graph.degree(1) == 3);
  CHECK(r.graph.has_edge(1, 3));
  CHECK_FALSE(r.graph.has_edge(2, 3));
  CHECK(r.step.moved == std::vector<Vertex>{3});

  // N(v) \ {u} inside N(u): nothing moves.
  const Graph k = complete_graph(4);
  CHECK(kelmans_transform(k, 0, 1).graph == k);
  CHECK(kelmans_transform(k, 0, 1).step.moved.empty());

  // C5 = u w v w' x as 0 1 2 3 4: KT(0, 2) moves 2-3 to 0-3.
  const KelmansResult c = kelmans_transform(cycle_graph(5), 0, 2);
  CHECK(c.graph.degree(2) == 1);
  CHECK(c.graph.has_edge(0, 3));
  CHECK_FALSE(is_isomorphic(c.graph, make_F(5, 5)));
  CHECK(is_odd_cycle_graph(c.graph));

  CHECK_THROWS_AS(kelmans_transform(k, 2, 2), std::invalid_argument);
}

TEST_CASE("Kelmans transformation keeps the edge count") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + rep % 8;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Vertex u = static_cast<Vertex>(rng() % n);
    Vertex v = static_cast<Vertex>(rng() % n);
    if (u == v) v = (v + 1) % n;
    const KelmansResult r = kelmans_transform(g, u, v);
    CHECK(r.graph.size() == g.size());
    CHECK(r.graph.order() == g.order());
    for (Vertex w : r.step.moved) {
      CHECK(g.has_edge(v, w));
      CHECK_FALSE(g.has_edge(u, w));
      CHECK(w != u);
    }
  }
}

TEST_CASE("reduction examples") {
  const ReductionTrace c5 = reduce_to_F(cycle_graph(5));
  CHECK(c5.steps.size() >= 1);
  CHECK(is_isomorphic(c5.final_graph(), make_F(5, 5)));
  CHECK(c5.steps.front().step.phase == ReductionPhase::kLongCycle);

  CHECK(reduce_to_F(make_F(6, 7)).steps.empty());

  const ReductionTrace p5 = reduce_to_F(path_graph(5));
  CHECK(is_isomorphic(p5.final_graph(), star_graph(4)));

  CHECK(is_isomorphic(reduce_to_F(spider()).final_graph(), make_F(7, 6)));
  CHECK(is_isomorphic(reduce_to_F(cycle_graph(7)).final_graph(), make_F(7, 7)));

  Graph c5_pendant = with_isolated(cycle_graph(5), 1);
  c5_pendant.add_edge(0, 5);
  CHECK(is_isomorphic(reduce_to_F(c5_pendant).final_graph(), make_F(6, 6)));

  CHECK_THROWS_AS(reduce_to_F(cycle_graph(4)), PreconditionError);
  CHECK_THROWS_AS(reduce_to_F(with_isolated(complete_graph(3), 1)), PreconditionError);
}

TEST_CASE("reduction traces replay") {
  for (const Graph& g : structured_odd_cacti(7)) {
    const ReductionTrace trace = reduce_to_F(g);
    Graph prev = g;
    bool lifting = false;
    for (const KelmansResult& s : trace.steps) {
      const KelmansResult again =
          kelmans_transform(prev, s.step.beneficiary, s.step.co_beneficiary);
      REQUIRE(again.graph == s.graph);
      REQUIRE(again.step.moved == s.step.moved);
      // long-cycle steps all come first
      if (s.step.phase == ReductionPhase::kDegreeLift) lifting = true;
      REQUIRE((!lifting || s.step.phase == ReductionPhase::kDegreeLift));
      prev = s.graph;
    }
    CHECK(is_isomorphic(trace.final_graph(), make_F(7, g.size())));
  }
}

TEST_CASE("dominance examples") {
  const Graph k13 = star_graph(3);
  const Graph k12 = with_isolated(star_graph(2), 1);
  CHECK(dominance(k13, k12) == DominanceVerdict::kStrictlyDominates);
  CHECK(matching_polynomial(k12) - matching_polynomial(k13) == IntPolynomial{0, 0, 1});
  CHECK(dominance(make_H(5), make_H(5)) == DominanceVerdict::kEqualPolynomials);
  CHECK(dominance(with_isolated(complete_graph(3), 1), k13) ==
        DominanceVerdict::kEqualPolynomials);
  // A dominated graph never dominates back.
  CHECK(dominance(k12, k13) == DominanceVerdict::kIncomparable);
}

TEST_CASE("weak dominance needs a touching zero") {
  // d(x) = (x - 2)^2 with t(g1) = 1: zero on the ray, no sign change.
  const IntPolynomial m1{-1, 1};
  const IntPolynomial m2 = m1 + IntPolynomial{4, -4, 1};
  CHECK(dominance(m1, m2) == DominanceVerdict::kWeaklyDominates);
  // d(x) = x - 2 changes sign at 2 > 1.
  CHECK(dominance(m1, m1 + IntPolynomial{-2, 1}) == DominanceVerdict::kIncomparable);
  // d(x) = x - 1 vanishes exactly at t(g1).
  CHECK(dominance(m1, m1 + IntPolynomial{-1, 1}) == DominanceVerdict::kWeaklyDominates);
  // d(x) = x - 1/2 is positive on [1, inf).
  CHECK(dominance(m1, m1 + IntPolynomial{-1, 2}) == DominanceVerdict::kStrictlyDominates);
  CHECK(positive_beyond(IntPolynomial{-1, 2}, *isolate_max_root(m1)));
  CHECK_FALSE(positive_beyond(IntPolynomial{-2, 1}, *isolate_max_root(m1)));
}

TEST_CASE("Kelmans results dominate on small connected graphs") {
  std::mt19937_64 rng(103);
  int strict = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 3 + rep % 5;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    if (!is_connected(g)) continue;
    const Vertex u = static_cast<Vertex>(rng() % n);
    const Vertex v = static_cast<Vertex>((u + 1 + rng() % (n - 1)) % n);
    const Graph moved = kelmans_transform(g, u, v).graph;
    const DominanceVerdict d = dominance(moved, g);
    REQUIRE(d != DominanceVerdict::kIncomparable);
    if (!is_isomorphic(moved, g)) {
      REQUIRE(d == DominanceVerdict::kStrictlyDominates);
      const double t = max_matching_root(moved).approx();
      CHECK(sampled_positive_beyond(matching_polynomial(g) - matching_polynomial(moved), t));
      ++strict;
    }
  }
  CHECK(strict > 50);
}

TEST_CASE("spanning subgraphs are dominated") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + rep % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    if (g.size() == 0) continue;
    Graph h = g;
    const auto edges = g.edges();
    const Edge e = edges[rng() % edges.size()];
    h.remove_edge(e.u, e.v);
    const DominanceVerdict d = dominance(g, h);
    if (is_connected(g)) REQUIRE(d == DominanceVerdict::kStrictlyDominates);
    // m(H, x) > m(G, x) for every x > t(G)
    const IntPolynomial diff = matching_polynomial(h) - matching_polynomial(g);
    REQUIRE(positive_beyond(diff, max_matching_root(g)));
  }
}

TEST_CASE("strict dominance chains compose") {
  std::mt19937_64 rng(109);
  int chains = 0;
  for (int rep = 0; rep < 2000 && chains < 100; ++rep) {
    const int n = 4 + rep % 3;
    const Graph a = oracle::random_graph(n, 0.6, rng);
    const Graph b = oracle::random_graph(n, 0.45, rng);
    const Graph c = oracle::random_graph(n, 0.3, rng);
    if (dominance(a, b) != DominanceVerdict::kStrictlyDominates) continue;
    const DominanceVerdict bc = dominance(b, c);
    if (bc == DominanceVerdict::kIncomparable) continue;
    ++chains;
    REQUIRE(dominance(a, c) == DominanceVerdict::kStrictlyDominates);
  }
  CHECK(chains > 20);
}

TEST_CASE("phase names") {
  CHECK(to_string(ReductionPhase::kLongCycle) == "LongCycle");
  CHECK(to_string(ReductionPhase::kDegreeLift) == "DegreeLift");
  CHECK(to_string(DominanceVerdict::kWeaklyDominates) == "WeaklyDominates");
}
