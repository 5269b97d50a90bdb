#include <algorithm>
#include <array>
#include <bit>
#include <span>

#include "oddcycle/errors.hpp"
#include "oddcycle/graph.hpp"

namespace oddcycle {
namespace {

// Hopcroft-Tarjan biconnected components over an explicit edge stack.
// `visit(std::span<const Edge>)` is called once per block; returning false
// stops the search early.
template <typename Visit>
class BlockWalker {
 public:
  BlockWalker(const Graph& g, Visit& visit) : g_(g), visit_(visit) {}

  // Returns false if the visitor asked to stop.
  bool run() {
    for (Vertex r = 0; r < g_.order(); ++r) {
      if (disc_[r] == 0) {
        if (!dfs(r, -1)) return false;
      }
    }
    return true;
  }

  VertexMask cut_vertices() const { return cuts_; }

 private:
  bool dfs(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = ++clock_;
    int children = 0;
    for (VertexMask nb = g_.neighbors(u); nb; nb &= nb - 1) {
      Vertex w = std::countr_zero(nb);
      if (disc_[w] == 0) {
        ++children;
        stack_.push_back({u, w});
        if (!dfs(w, u)) return false;
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          if (parent >= 0 || children > 1) cuts_ |= bit(u);
          auto it = stack_.end();
          do {
            --it;
          } while (!(it->u == u && it->v == w));
          bool go_on = visit_(std::span<const Edge>(&*it, stack_.end() - it));
          stack_.erase(it, stack_.end());
          if (!go_on) return false;
        }
      } else if (w != parent && disc_[w] < disc_[u]) {
        stack_.push_back({u, w});
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
    return true;
  }

  const Graph& g_;
  Visit& visit_;
  std::array<int, Graph::kMaxOrder> disc_{};
  std::array<int, Graph::kMaxOrder> low_{};
  int clock_ = 0;
  VertexMask cuts_ = 0;
  std::vector<Edge> stack_;
};

VertexMask block_vertices(std::span<const Edge> block) {
  VertexMask vs = 0;
  for (const Edge& e : block) vs |= bit(e.u) | bit(e.v);
  return vs;
}

// A 2-connected block with as many edges as vertices is a cycle.
bool is_odd_cycle_block(std::span<const Edge> block) {
  if (block.size() == 1) return true;
  int k = popcount(block_vertices(block));
  return static_cast<int>(block.size()) == k && (k % 2 == 1);
}

Cycle trace_cycle(std::span<const Edge> block) {
  std::array<VertexMask, Graph::kMaxOrder> nb{};
  for (const Edge& e : block) {
    nb[e.u] |= bit(e.v);
    nb[e.v] |= bit(e.u);
  }
  Vertex start = std::countr_zero(block_vertices(block));
  Cycle cycle{start};
  Vertex prev = start;
  Vertex cur = std::countr_zero(nb[start]);  // smaller neighbour first
  while (cur != start) {
    cycle.push_back(cur);
    Vertex next = std::countr_zero(nb[cur] & ~bit(prev));
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition out;
  auto collect = [&](std::span<const Edge> block) {
    std::vector<Edge> edges;
    edges.reserve(block.size());
    for (Edge e : block) {
      if (e.u > e.v) std::swap(e.u, e.v);
      edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    out.blocks.push_back(std::move(edges));
    return true;
  };
  BlockWalker walker(g, collect);
  walker.run();
  out.cut_vertices = walker.cut_vertices();
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_odd_cycle_graph(const Graph& g) {
  // A connected odd-cycle graph has at most n + floor((n-1)/2) - 1 edges, so
  // any graph over floor(3(n-1)/2) edges fails without a search.
  if (g.size() > 3 * (g.order() - 1) / 2) return false;
  auto check = [](std::span<const Edge> block) {
    return is_odd_cycle_block(block);
  };
  BlockWalker walker(g, check);
  return walker.run();
}

std::vector<Cycle> long_odd_cycles(const Graph& g) {
  std::vector<Cycle> cycles;
  bool ok = true;
  auto collect = [&](std::span<const Edge> block) {
    if (!is_odd_cycle_block(block)) {
      ok = false;
      return false;
    }
    if (block.size() >= 5) cycles.push_back(trace_cycle(block));
    return true;
  };
  BlockWalker walker(g, collect);
  walker.run();
  if (!ok) {
    throw PreconditionError("long_odd_cycles: graph has an even cycle");
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace oddcycle
