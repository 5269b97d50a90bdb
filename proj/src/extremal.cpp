#include "oddcycle/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "oddcycle/errors.hpp"

namespace oddcycle {

Graph make_F(int n, int m) {
  if (!valid_F(n, m)) {
    throw std::invalid_argument("F(" + std::to_string(n) + ", " +
                                std::to_string(m) + ") does not exist");
  }
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  for (Vertex leaf = 1; g.size() < m; leaf += 2) g.add_edge(leaf, leaf + 1);
  return g;
}

Graph make_H(int n) { return make_F(n, max_odd_cycle_size(n)); }

// ---- labeled sweep -------------------------------------------------------

namespace {

class LabeledSweep {
 public:
  LabeledSweep(int n, bool connected_only, const GraphVisitor& visit,
               int shard, int shards)
      : n_(n),
        connected_only_(connected_only),
        visit_(visit),
        shard_(shard),
        shards_(shards),
        all_(complete_graph(n).edges()),
        g_(n) {}

  void run() { recurse(0, 0); }

 private:
  static constexpr int kSplitDepth = 2;

  void recurse(std::size_t start, int depth) {
    if (depth < kSplitDepth) {
      if (shard_ == 0) emit();
    } else if (depth == kSplitDepth) {
      if (counter_++ % shards_ != shard_) return;
      emit();
    } else {
      emit();
    }
    for (std::size_t i = start; i < all_.size(); ++i) {
      if (!can_add(all_[i])) continue;
      g_.add_edge(all_[i].u, all_[i].v);
      recurse(i + 1, depth + 1);
      g_.remove_edge(all_[i].u, all_[i].v);
    }
  }

  // A bridge never creates a cycle; otherwise test the whole graph.
  bool can_add(const Edge& e) {
    if (!(component_of(g_, e.u, g_.vertices()) & bit(e.v))) return true;
    g_.add_edge(e.u, e.v);
    const bool ok = is_odd_cycle_graph(g_);
    g_.remove_edge(e.u, e.v);
    return ok;
  }

  void emit() {
    if (connected_only_ && !is_connected(g_)) return;
    visit_(g_);
  }

  int n_;
  bool connected_only_;
  const GraphVisitor& visit_;
  int shard_;
  int shards_;
  std::vector<Edge> all_;
  Graph g_;
  long counter_ = 0;
};

void check_labeled_order(int n) {
  if (n < 1 || n > kMaxLabeledOrder) {
    throw SizeLimitError("labeled enumeration supports 1 <= n <= " +
                         std::to_string(kMaxLabeledOrder));
  }
}

// Attach a new odd cycle of length `len` through vertex r of g.
Graph attach_cycle(const Graph& g, Vertex r, int len) {
  const int n = g.order();
  Graph out = with_isolated(g, len - 1);
  Vertex prev = r;
  for (int i = 0; i < len - 1; ++i) {
    out.add_edge(prev, n + i);
    prev = n + i;
  }
  out.add_edge(prev, r);
  return out;
}

Graph attach_pendant(const Graph& g, Vertex r) {
  Graph out = with_isolated(g, 1);
  out.add_edge(r, g.order());
  return out;
}

class ClassSet {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[refinement_hash(g)];
    for (std::size_t idx : bucket) {
      if (is_isomorphic(reps_[idx], g)) return false;
    }
    bucket.push_back(reps_.size());
    reps_.push_back(g);
    return true;
  }

  std::vector<Graph> take() { return std::move(reps_); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<Graph> reps_;
};

void sort_canonically(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (Graph& g : graphs) {
    keyed.push_back({{g.size(), write_graph6(g)}, std::move(g)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [key, g] : keyed) graphs.push_back(std::move(g));
}

}  // namespace

void for_each_labeled_odd_cycle_graph(int n, bool connected_only,
                                      const GraphVisitor& visit, int shard,
                                      int shards) {
  check_labeled_order(n);
  if (shards < 1 || shard < 0 || shard >= shards) {
    throw std::invalid_argument("bad shard index");
  }
  LabeledSweep(n, connected_only, visit, shard, shards).run();
}

std::vector<Graph> structured_odd_cacti(int n) {
  if (n < 1 || n > kMaxStructuredOrder) {
    throw SizeLimitError("structured generation supports 1 <= n <= " +
                         std::to_string(kMaxStructuredOrder));
  }
  std::vector<std::vector<Graph>> levels(n + 1);
  levels[1] = {Graph(1)};
  for (int k = 2; k <= n; ++k) {
    ClassSet classes;
    for (const Graph& g : levels[k - 1]) {
      for (Vertex r = 0; r < g.order(); ++r) classes.insert(attach_pendant(g, r));
    }
    for (int len = 3; len - 1 <= k - 1; len += 2) {
      for (const Graph& g : levels[k - (len - 1)]) {
        for (Vertex r = 0; r < g.order(); ++r) {
          classes.insert(attach_cycle(g, r, len));
        }
      }
    }
    levels[k] = classes.take();
    sort_canonically(levels[k]);
  }
  return levels[n];
}

std::vector<Graph> enumerate_odd_cycle_graphs(int n, bool connected_only,
                                              EnumerationMode mode) {
  if (mode == EnumerationMode::kLabeled) {
    check_labeled_order(n);
    std::vector<Graph> out;
    for_each_labeled_odd_cycle_graph(
        n, connected_only, [&](const Graph& g) { out.push_back(g); });
    return out;
  }
  if (connected_only) return structured_odd_cacti(n);
  if (n < 1 || n > kMaxStructuredOrder) {
    throw SizeLimitError("structured generation supports 1 <= n <= " +
                         std::to_string(kMaxStructuredOrder));
  }
  // Disjoint unions of connected classes, chosen as non-increasing
  // (order, index) sequences so each multiset appears once.
  std::vector<std::vector<Graph>> connected(n + 1);
  for (int k = 1; k <= n; ++k) connected[k] = structured_odd_cacti(k);
  std::vector<Graph> out;
  std::vector<std::pair<int, std::size_t>> chosen;
  auto build = [&](auto&& self, int remaining, int max_order,
                   std::size_t max_index) -> void {
    if (remaining == 0) {
      Graph g = connected[chosen[0].first][chosen[0].second];
      for (std::size_t i = 1; i < chosen.size(); ++i) {
        g = disjoint_union(g, connected[chosen[i].first][chosen[i].second]);
      }
      out.push_back(std::move(g));
      return;
    }
    for (int k = std::min(remaining, max_order); k >= 1; --k) {
      const std::size_t limit =
          k == max_order ? max_index : connected[k].size() - 1;
      for (std::size_t i = 0; i <= limit && i < connected[k].size(); ++i) {
        chosen.push_back({k, i});
        self(self, remaining - k, k, i);
        chosen.pop_back();
      }
    }
  };
  build(build, n, n, connected[n].size() - 1);
  sort_canonically(out);
  return out;
}

void for_each_labeled_graph(int n, const GraphVisitor& visit, int shard,
                            int shards) {
  if (n < 1 || n > 7) {
    throw SizeLimitError("all-graph enumeration supports 1 <= n <= 7");
  }
  const std::vector<Edge> all = complete_graph(n).edges();
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = shard; mask < total; mask += shards) {
    Graph g(n);
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1U) g.add_edge(all[k].u, all[k].v);
    }
    visit(g);
  }
}

std::vector<Graph> isomorphism_classes(const std::vector<Graph>& graphs) {
  ClassSet classes;
  for (const Graph& g : graphs) classes.insert(g);
  return classes.take();
}

}  // namespace oddcycle
