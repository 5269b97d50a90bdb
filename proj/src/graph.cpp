#include "oddcycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddcycle/errors.hpp"

namespace oddcycle {

Graph::Graph(int order) : n_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw SizeLimitError("graph order must be in [1, 64], got " +
                         std::to_string(order));
  }
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

VertexMask Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const { return popcount(neighbors(v)); }

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, popcount(adj_[v]));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    VertexMask higher = adj_[u] & ~low_mask(u + 1);
    while (higher) {
      Vertex v = std::countr_zero(higher);
      higher &= higher - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if ((adj_[u] >> v) & 1U) return;
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!((adj_[u] >> v) & 1U)) return;
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --m_;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation size does not match order");
  }
  Graph out(n_);
  for (const Edge& e : edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && a.m_ == b.m_ &&
         std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Subgraph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  std::vector<Vertex> to_parent;
  std::array<Vertex, Graph::kMaxOrder> to_child{};
  for (VertexMask rest = keep; rest; rest &= rest - 1) {
    Vertex v = std::countr_zero(rest);
    to_child[v] = static_cast<Vertex>(to_parent.size());
    to_parent.push_back(v);
  }
  Graph sub(static_cast<int>(to_parent.size()));
  for (const Edge& e : g.edges()) {
    if ((keep & bit(e.u)) && (keep & bit(e.v))) {
      sub.add_edge(to_child[e.u], to_child[e.v]);
    }
  }
  return {std::move(sub), std::move(to_parent)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) {
    out.add_edge(e.u + a.order(), e.v + a.order());
  }
  return out;
}

Graph with_isolated(const Graph& g, int extra) {
  if (extra == 0) return g;
  return disjoint_union(g, empty_graph(extra));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

VertexMask component_of(const Graph& g, Vertex v, VertexMask within) {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  return component_of(g, 0, g.vertices()) == g.vertices();
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  VertexMask rest = g.vertices();
  while (rest) {
    VertexMask comp = component_of(g, std::countr_zero(rest), rest);
    out.push_back(induced_subgraph(g, comp));
    rest &= ~comp;
  }
  return out;
}

}  // namespace oddcycle
