#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <tuple>

#include "oddcycle/errors.hpp"
#include "oddcycle/graph.hpp"

namespace oddcycle {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Colours = std::array<std::uint64_t, Graph::kMaxOrder>;

// 1-dimensional Weisfeiler-Leman refinement run for exactly n rounds, which
// is always enough to reach the stable partition. The colour of a vertex
// depends only on the isomorphism type of the rooted graph, so colours are
// comparable between different graphs.
Colours refine(const Graph& g) {
  const int n = g.order();
  Colours colour{};
  for (Vertex v = 0; v < n; ++v) colour[v] = mix(g.degree(v));
  std::array<std::uint64_t, Graph::kMaxOrder> nb_colours{};
  for (int round = 0; round < n; ++round) {
    Colours next{};
    for (Vertex v = 0; v < n; ++v) {
      int k = 0;
      for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) {
        nb_colours[k++] = colour[std::countr_zero(nb)];
      }
      std::sort(nb_colours.begin(), nb_colours.begin() + k);
      std::uint64_t h = mix(colour[v]);
      for (int i = 0; i < k; ++i) h = mix(h ^ nb_colours[i]);
      next[v] = h;
    }
    colour = next;
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, const Colours& ca, const Colours& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb) {
    const int n = a.order();
    // Search rarest colour classes first, then stay adjacent to what is
    // already placed so adjacency checks prune early.
    std::array<int, Graph::kMaxOrder> class_size{};
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) class_size[v] += ca[v] == ca[w];
    }
    VertexMask placed = 0;
    while (static_cast<int>(order_.size()) < n) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        auto key = [&](Vertex x) {
          return std::make_tuple(-popcount(a.neighbors(x) & placed),
                                 class_size[x], x);
        };
        if (best < 0 || key(v) < key(best)) best = v;
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool search(int depth = 0) {
    if (depth == a_.order()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if ((used_ & bit(w)) || cb_[w] != ca_[v]) continue;
      bool consistent = true;
      for (int i = 0; i < depth && consistent; ++i) {
        Vertex pv = order_[i];
        consistent = a_.has_edge(v, pv) == b_.has_edge(w, image_[pv]);
      }
      if (!consistent) continue;
      image_[v] = w;
      used_ |= bit(w);
      if (search(depth + 1)) return true;
      used_ &= ~bit(w);
    }
    return false;
  }

 private:
  const Graph& a_;
  const Graph& b_;
  const Colours& ca_;
  const Colours& cb_;
  std::vector<Vertex> order_;
  std::array<Vertex, Graph::kMaxOrder> image_{};
  VertexMask used_ = 0;
};

}  // namespace

std::uint64_t refinement_hash(const Graph& g) {
  Colours c = refine(g);
  std::sort(c.begin(), c.begin() + g.order());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()) << 32 |
                        static_cast<std::uint64_t>(g.size()));
  for (int i = 0; i < g.order(); ++i) h = mix(h ^ c[i]);
  return h;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw SizeLimitError("is_isomorphic supports at most " +
                         std::to_string(kMaxIsomorphismOrder) + " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a == b) return true;
  Colours ca = refine(a);
  Colours cb = refine(b);
  Colours sa = ca;
  Colours sb = cb;
  std::sort(sa.begin(), sa.begin() + a.order());
  std::sort(sb.begin(), sb.begin() + b.order());
  if (!std::equal(sa.begin(), sa.begin() + a.order(), sb.begin())) {
    return false;
  }
  Matcher matcher(a, b, ca, cb);
  return matcher.search();
}

}  // namespace oddcycle
