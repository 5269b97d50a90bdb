#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "oddcycle/errors.hpp"
#include "oddcycle/extremal.hpp"
#include "oddcycle/matching.hpp"
#include "oddcycle/report.hpp"
#include "oddcycle/roots.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

Json without_timing(const VerificationReport& r) {
  Json j = to_json(r);
  j.erase("seconds");
  return j;
}

const Witness* find_witness(const VerificationReport& r, const std::string& label) {
  for (const Witness& w : r.witnesses) {
    if (w.label == label) return &w;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("F(n,m) and H_n") {
  CHECK(is_isomorphic(make_F(5, 4), star_graph(4)));
  CHECK(make_F(5, 4) == star_graph(4));
  Graph bowtie(5);
  bowtie.add_edge(0, 1);
  bowtie.add_edge(0, 2);
  bowtie.add_edge(1, 2);
  bowtie.add_edge(0, 3);
  bowtie.add_edge(0, 4);
  bowtie.add_edge(3, 4);
  CHECK(make_F(5, 6) == bowtie);
  CHECK(make_H(5) == bowtie);
  CHECK(is_isomorphic(make_H(3), complete_graph(3)));
  CHECK(make_H(4) == make_F(4, 4));
  CHECK(make_F(4, 4).degree(0) == 3);
  CHECK(make_F(4, 4).size() == 4);
  CHECK(make_H(1) == Graph(1));

  for (int n = 1; n <= 20; ++n) {
    for (int m = n - 1; m <= max_odd_cycle_size(n); ++m) {
      const Graph f = make_F(n, m);
      CHECK(f.degree(0) == n - 1);
      CHECK(f.size() == m);
      CHECK(is_odd_cycle_graph(f));
    }
  }
  CHECK_THROWS_AS(make_F(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_F(5, 7), std::invalid_argument);
  CHECK_THROWS_AS(make_F(0, 0), std::invalid_argument);
}

TEST_CASE("stars have t = sqrt of their size") {
  for (int n = 2; n <= 20; ++n) {
    const AlgebraicRoot t = max_matching_root(make_F(n, n - 1), Rational(1, BigInt(1) << 50));
    CHECK(t.approx() == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("labeled sweep finds exactly the odd-cycle graphs") {
  for (int n = 1; n <= 6; ++n) {
    std::int64_t expected = 0;
    std::int64_t expected_connected = 0;
    for (const Graph& g : oracle::all_graphs(n)) {
      if (oracle::has_even_cycle(g)) continue;
      ++expected;
      expected_connected += is_connected(g);
    }
    std::set<std::string> seen;
    for (const Graph& g : enumerate_odd_cycle_graphs(n, false, EnumerationMode::kLabeled)) {
      REQUIRE(is_odd_cycle_graph(g));
      REQUIRE(g.size() <= max_odd_cycle_size(n));
      seen.insert(write_graph6(g));
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == expected);
    CHECK(static_cast<std::int64_t>(
              enumerate_odd_cycle_graphs(n, true, EnumerationMode::kLabeled).size()) ==
          expected_connected);
  }
}

TEST_CASE("shards partition the labeled sweep") {
  for (int shards : {1, 3, 64}) {
    std::multiset<std::string> all;
    for (int s = 0; s < shards; ++s) {
      for_each_labeled_odd_cycle_graph(
          6, false, [&](const Graph& g) { all.insert(write_graph6(g)); }, s, shards);
    }
    std::set<std::string> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(all.size() ==
          enumerate_odd_cycle_graphs(6, false, EnumerationMode::kLabeled).size());
  }
  CHECK_THROWS(for_each_labeled_odd_cycle_graph(4, false, [](const Graph&) {}, 2, 2));
  CHECK_THROWS_AS(for_each_labeled_odd_cycle_graph(10, false, [](const Graph&) {}),
                  SizeLimitError);
}

TEST_CASE("small connected class counts") {
  CHECK(structured_odd_cacti(2).size() == 1);
  CHECK(structured_odd_cacti(3).size() == 2);
  CHECK(enumerate_odd_cycle_graphs(2, false, EnumerationMode::kLabeled).size() == 2);
  CHECK(enumerate_odd_cycle_graphs(2, true, EnumerationMode::kLabeled).size() == 1);
  CHECK(enumerate_odd_cycle_graphs(2, false, EnumerationMode::kStructured).size() == 2);
  CHECK_THROWS_AS(structured_odd_cacti(12), SizeLimitError);
}

TEST_CASE("structured generation matches labeled classes per size") {
  for (int n = 1; n <= 6; ++n) {
    for (bool connected : {true, false}) {
      std::map<int, int> labeled;
      for (const Graph& g : isomorphism_classes(
               enumerate_odd_cycle_graphs(n, connected, EnumerationMode::kLabeled))) {
        ++labeled[g.size()];
      }
      std::map<int, int> structured;
      const auto reps = enumerate_odd_cycle_graphs(n, connected, EnumerationMode::kStructured);
      for (const Graph& g : reps) {
        REQUIRE(is_odd_cycle_graph(g));
        REQUIRE(g.order() == n);
        if (connected) REQUIRE(is_connected(g));
        ++structured[g.size()];
      }
      CHECK(labeled == structured);
      CHECK(isomorphism_classes(reps).size() == reps.size());
    }
  }
}

TEST_CASE("connected odd-cycle graphs obey the edge bounds") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& g : structured_odd_cacti(n)) {
      CHECK(g.size() >= n - 1);
      CHECK(g.size() <= n + (n - 1) / 2 - 1);
      CHECK(g.size() <= max_odd_cycle_size(n));
    }
  }
}

TEST_CASE("F(n,m) is the only odd-cycle graph with a dominating vertex") {
  for (int n = 2; n <= 7; ++n) {
    for_each_labeled_odd_cycle_graph(n, true, [n](const Graph& g) {
      if (g.max_degree() == n - 1) REQUIRE(is_isomorphic(g, make_F(n, g.size())));
    });
  }
}

TEST_CASE("classification sweep") {
  for (int n = 1; n <= 6; ++n) {
    const VerificationReport r = verify_extremal_classification(n);
    CHECK(r.passed());
    CHECK(r.counterexamples.empty());
  }
  const VerificationReport six = verify_extremal_classification(6);
  const Witness* m4 = find_witness(six, "m=4");
  REQUIRE(m4 != nullptr);
  CHECK(parse_graph6(m4->graph6) == with_isolated(star_graph(4), 1));
  CHECK(m4->value == "2.000000000000");

  const VerificationReport four = verify_extremal_classification(4);
  int ties = 0;
  for (const Witness& w : four.witnesses) ties += w.label == "m=3";
  CHECK(ties == 2);

  const VerificationReport five = verify_extremal_classification(5);
  const Witness* m6 = find_witness(five, "m=6");
  REQUIRE(m6 != nullptr);
  CHECK(parse_graph6(m6->graph6) == make_H(5));
  CHECK(m6->value.substr(0, 10) == "2.23606797");
}

TEST_CASE("H_n is the overall maximiser") {
  for (int n = 1; n <= 7; ++n) CHECK(verify_maximum_at_H(n).passed());
  const VerificationReport three = verify_maximum_at_H(3);
  REQUIRE(three.witnesses.size() == 1);
  CHECK(three.witnesses[0].value.substr(0, 8) == "1.732050");
  CHECK(compare_roots(max_matching_root(star_graph(2)), max_matching_root(make_H(3))) < 0);
  const VerificationReport seven = verify_maximum_at_H(7);
  CHECK(seven.witnesses[0].graph6 == write_graph6(make_H(7)));
  CHECK(make_H(7).size() == 9);
}

TEST_CASE("monotonicity grid") {
  const VerificationReport r = verify_monotonicity(12);
  CHECK(r.passed());
  CHECK(r.checked > 0);
  CHECK(compare_roots(max_matching_root(make_F(5, 5)), max_matching_root(make_F(5, 6))) < 0);
  CHECK(compare_roots(max_matching_root(make_F(4, 4)), max_matching_root(make_F(5, 4))) < 0);
  bool m4_reported = false;
  for (const std::string& note : r.notes) m4_reported |= note.rfind("m=4", 0) == 0;
  CHECK(m4_reported);
  CHECK_THROWS_AS(verify_monotonicity(21), SizeLimitError);
}

TEST_CASE("reduction sweep") {
  for (int n = 1; n <= 7; ++n) {
    const VerificationReport r = verify_reduction(n);
    CHECK(r.passed());
    CHECK(r.checked == static_cast<std::int64_t>(structured_odd_cacti(n).size()));
  }
}

TEST_CASE("small skew and Kelmans sweeps") {
  CHECK(verify_skew_identity(4).passed());
  CHECK(verify_orientation_independence(4).passed());
  CHECK(verify_kelmans_dominance(4).passed());
}

TEST_CASE("reports do not depend on the thread count") {
  const VerifyOptions one{1};
  const VerifyOptions four{4};
  CHECK(without_timing(verify_extremal_classification(6, one)) ==
        without_timing(verify_extremal_classification(6, four)));
  CHECK(without_timing(verify_skew_identity(5, one)) ==
        without_timing(verify_skew_identity(5, four)));
  CHECK(without_timing(verify_kelmans_dominance(5, one)) ==
        without_timing(verify_kelmans_dominance(5, four)));
  CHECK(without_timing(verify_reduction(7, one)) ==
        without_timing(verify_reduction(7, four)));
}

TEST_CASE("failures are capped but counted") {
  VerificationReport r;
  for (int i = 0; i < 50; ++i) r.fail("@", "detail");
  CHECK(r.counterexample_total == 50);
  CHECK(r.counterexamples.size() == 20);
  CHECK_FALSE(r.passed());
  CHECK(to_json(r)["verdict"] == "FAIL");
  CHECK(to_table(r).find("counterexamples (50)") != std::string::npos);
}
