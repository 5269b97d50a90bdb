#pragma once

#include <string_view>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/polynomial.hpp"
#include "oddcycle/roots.hpp"

namespace oddcycle {

enum class ReductionPhase { kLongCycle, kDegreeLift };

std::string_view to_string(ReductionPhase phase);

/// One Kelmans transformation: every neighbour w of the co-beneficiary
/// with w != beneficiary and w not adjacent to the beneficiary has its edge
/// vw replaced by uw.
struct KelmansStep {
  Vertex beneficiary = 0;
  Vertex co_beneficiary = 0;
  std::vector<Vertex> moved;  // the w's, ascending
  ReductionPhase phase = ReductionPhase::kDegreeLift;
};

struct KelmansResult {
  Graph graph;
  KelmansStep step;
};

/// KT(g, u, v). Throws std::invalid_argument if u == v.
KelmansResult kelmans_transform(const Graph& g, Vertex u, Vertex v);

struct ReductionTrace {
  Graph start;
  std::vector<KelmansResult> steps;  // each step with the graph it produced
  const Graph& final_graph() const {
    return steps.empty() ? start : steps.back().graph;
  }
  int count(ReductionPhase phase) const;
};

/// Reshapes a connected odd-cycle graph into F(n, m) by Kelmans
/// transformations: first open every odd cycle longer than a triangle, then
/// grow a maximum-degree vertex until it is adjacent to everything.
///
/// Long cycles: take the lexicographically smallest cycle c0 c1 c2 ... and
/// apply KT(g, c0, c2). Degree lift: take the smallest maximum-degree
/// vertex u, the smallest vertex v at distance 2, the smallest common
/// neighbour w, and apply KT(g, u, w).
///
/// Throws PreconditionError if g is disconnected or has an even cycle.
ReductionTrace reduce_to_F(const Graph& g);

enum class DominanceVerdict {
  kStrictlyDominates,
  kWeaklyDominates,
  kEqualPolynomials,
  kIncomparable,
};

std::string_view to_string(DominanceVerdict verdict);

/// Relation between g1 and g2 on the ray [t(g1), inf), decided exactly from
/// d(x) = m(g2, x) - m(g1, x):
///   strict     d > 0 on the closed ray
///   weak       d >= 0 on the ray with a zero somewhere on it
///   equal      d == 0
///   incomparable otherwise
DominanceVerdict dominance(const Graph& g1, const Graph& g2);
DominanceVerdict dominance(const IntPolynomial& m1, const IntPolynomial& m2);

/// True iff d(x) > 0 for every x > root.
bool positive_beyond(const IntPolynomial& d, const AlgebraicRoot& root);

}  // namespace oddcycle
