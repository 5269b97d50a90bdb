#pragma once

#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/polynomial.hpp"

namespace oddcycle {

/// Matching counts m_0, m_1, ..., m_{floor(n/2)}: m_k is the number of
/// k-edge matchings. Trailing zeros are kept so the length only depends on n.
struct MatchingProfile {
  std::vector<BigInt> counts;

  friend bool operator==(const MatchingProfile&, const MatchingProfile&) =
      default;
};

/// Counts matchings of g by expanding about a maximum-degree vertex,
///   M(S) = M(S - v) + sum over u in N(v) of y * M(S - u - v),
/// factoring over connected components and memoising on vertex subsets.
MatchingProfile matching_profile(const Graph& g);

/// Same, restricted to the subgraph induced by `active`.
MatchingProfile matching_profile(const Graph& g, VertexMask active);

/// m(G, x) = sum_k (-1)^k m_k x^{n - 2k}, with n the number of vertices.
IntPolynomial matching_polynomial(const MatchingProfile& profile, int order);
IntPolynomial matching_polynomial(const Graph& g);
IntPolynomial matching_polynomial(const Graph& g, VertexMask active);

/// m(G, x) == m(G - e, x) - m(G - u - v, x). Throws std::invalid_argument
/// if e is not an edge of g.
bool check_deletion_identity(const Graph& g, Edge e);

/// m(G_1 u ... u G_k, x) == prod m(G_i, x). Throws on an empty list.
bool check_union_identity(const std::vector<Graph>& parts);

}  // namespace oddcycle
