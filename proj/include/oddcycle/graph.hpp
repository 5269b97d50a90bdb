#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddcycle {

using Vertex = int;
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Each adjacency row is a single 64-bit word, so neighbourhood
/// intersections and subset tests are plain bit operations.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  VertexMask vertices() const noexcept { return low_mask(n_); }

  bool has_edge(Vertex u, Vertex v) const;
  VertexMask neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const noexcept;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Returns the graph with vertex `old` renamed to `perm[old]`.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 1;
  int m_ = 0;
  std::array<VertexMask, kMaxOrder> adj_{};
};

/// A subgraph together with the labels its vertices carry in the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, VertexMask keep);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_isolated(const Graph& g, int extra);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, centre 0
Graph path_graph(int n);       // 0-1-...-(n-1)
Graph cycle_graph(int n);      // 0-1-...-(n-1)-0, n >= 3

// ---- serialization -------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Edge-list text: a line "n <count>" followed by one "u v" per line.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

std::ostream& operator<<(std::ostream& os, const Graph& g);

// ---- structure -----------------------------------------------------------

VertexMask component_of(const Graph& g, Vertex v, VertexMask within);
bool is_connected(const Graph& g);
std::vector<Subgraph> connected_components(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;  // each block's edges, sorted
  VertexMask cut_vertices = 0;
};

BlockDecomposition block_decomposition(const Graph& g);

/// True iff g contains no cycle of even length, i.e. every block is a
/// bridge or an odd cycle.
bool is_odd_cycle_graph(const Graph& g);

/// A cycle written as its vertex sequence, starting at its smallest vertex
/// and continuing towards the smaller of that vertex's two cycle neighbours.
using Cycle = std::vector<Vertex>;

/// The odd cycles of length >= 5 of an odd-cycle graph, sorted
/// lexicographically. Throws PreconditionError if g has an even cycle.
std::vector<Cycle> long_odd_cycles(const Graph& g);

// ---- isomorphism ---------------------------------------------------------

inline constexpr int kMaxIsomorphismOrder = 12;

/// Colour-refinement invariant. Isomorphic graphs hash equal.
std::uint64_t refinement_hash(const Graph& g);

/// Exact isomorphism test by colour refinement and pruned permutation
/// search. Throws SizeLimitError above kMaxIsomorphismOrder vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace oddcycle
