#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/polynomial.hpp"
#include "oddcycle/roots.hpp"

namespace oddcycle {

inline constexpr int kMaxSkewOrder = 24;
inline constexpr int kMaxOrientationEdges = 24;
inline constexpr int kMaxSpectralSweepEdges = 20;

/// A direction for every edge of a base graph. Edges are indexed in
/// lexicographic order (Graph::edges()); bit k set means the k-th edge
/// points from its lower endpoint to its higher one.
class Orientation {
 public:
  /// All edges pointing from lower to higher endpoint.
  explicit Orientation(Graph base);
  /// Edge k follows bit k of `mask`; requires at most 64 edges.
  Orientation(Graph base, std::uint64_t mask);
  Orientation(Graph base, std::vector<bool> lower_to_higher);

  const Graph& base() const noexcept { return base_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool lower_to_higher(std::size_t edge_index) const {
    return direction_[edge_index];
  }

  /// +1 if u -> v, -1 if v -> u, 0 if uv is not an edge.
  int arc(Vertex u, Vertex v) const;

  /// Skew-adjacency matrix S with S[u][v] = arc(u, v).
  std::vector<std::vector<int>> skew_matrix() const;

  /// Edge-order bitmask in lower-case hex, most significant digit first.
  std::string mask_hex() const;

 private:
  Graph base_;
  std::vector<Edge> edges_;
  std::vector<bool> direction_;
};

Orientation parse_orientation(const Graph& base, std::string_view hex);

/// det(xI - S) for the skew-adjacency matrix of o, exactly. Evaluates the
/// determinant at x = 0..n with fraction-free elimination and interpolates.
/// Throws SizeLimitError above kMaxSkewOrder vertices.
IntPolynomial skew_char_poly(const Orientation& o);

/// sum_k m_k(G) x^{n-2k}: the real-coefficient form of (-i)^n m(G, ix).
IntPolynomial matching_skew_form(const Graph& g);

/// True iff skew_char_poly(o) equals matching_skew_form(o.base()).
bool verify_identity(const Orientation& o);

/// Calls `visit` for each of the 2^m orientations, in mask order; stops
/// early if `visit` returns false. Throws SizeLimitError above
/// kMaxOrientationEdges edges.
void for_each_orientation(const Graph& g,
                          const std::function<bool(const Orientation&)>& visit);
std::vector<Orientation> all_orientations(const Graph& g);

/// Eigenvalues of a real skew-symmetric matrix are +-i*lambda. Given
/// phi(x) = sum a_{2k} x^{n-2k}, returns sum (-1)^k a_{2k} x^{n-2k}, whose
/// real roots are the lambdas.
IntPolynomial skew_to_real_spectrum(const IntPolynomial& char_poly);

/// Largest |eigenvalue| of a skew-adjacency matrix given its
/// characteristic polynomial.
AlgebraicRoot skew_spectral_radius(const IntPolynomial& char_poly,
                                   const Rational& eps);
AlgebraicRoot skew_spectral_radius(const Orientation& o, const Rational& eps);

/// Maximum of skew_spectral_radius over all orientations, compared exactly.
/// Throws SizeLimitError above kMaxSpectralSweepEdges edges.
AlgebraicRoot max_skew_spectral_radius(const Graph& g, const Rational& eps);

namespace detail {
// Exposed for tests: the two determinant back ends must agree.
IntPolynomial skew_char_poly_wide(const std::vector<std::vector<int>>& s);
IntPolynomial skew_char_poly_big(const std::vector<std::vector<int>>& s);
}  // namespace detail

}  // namespace oddcycle
