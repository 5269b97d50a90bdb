#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

/// Largest size of an odd-cycle graph on n vertices: floor(3(n-1)/2).
inline constexpr int max_odd_cycle_size(int n) { return 3 * (n - 1) / 2; }

/// F(n, m) exists for n >= 1 and n-1 <= m <= floor(3(n-1)/2).
inline constexpr bool valid_F(int n, int m) {
  return n >= 1 && n <= Graph::kMaxOrder && m >= n - 1 &&
         m <= max_odd_cycle_size(n);
}

/// The star K_{1,n-1} centred at 0 plus the leaf matching (1,2), (3,4), ...
/// up to m edges in total. Throws std::invalid_argument outside valid_F.
Graph make_F(int n, int m);

/// F(n, floor(3(n-1)/2)).
Graph make_H(int n);

// ---- enumeration ---------------------------------------------------------

inline constexpr int kMaxLabeledOrder = 9;
inline constexpr int kMaxStructuredOrder = 11;

enum class EnumerationMode { kLabeled, kStructured };

using GraphVisitor = std::function<void(const Graph&)>;

/// Every labeled odd-cycle graph on n vertices, found by adding edges in
/// lexicographic order and pruning as soon as an even cycle appears (the
/// class is closed under edge deletion). Work below the second chosen edge
/// is split round-robin into `shards`; call once per shard index to cover
/// everything exactly once.
void for_each_labeled_odd_cycle_graph(int n, bool connected_only,
                                      const GraphVisitor& visit,
                                      int shard = 0, int shards = 1);

/// Connected odd cacti on n vertices up to isomorphism, grown from K1 by
/// attaching a pendant edge or an odd cycle at a vertex. Sorted by size,
/// then graph6.
std::vector<Graph> structured_odd_cacti(int n);

/// Labeled mode (n <= 9): all labeled graphs. Structured mode (n <= 11):
/// one representative per isomorphism class; disconnected classes are
/// unions of connected ones. Throws SizeLimitError past the limits.
std::vector<Graph> enumerate_odd_cycle_graphs(int n, bool connected_only,
                                              EnumerationMode mode);

/// Visits all 2^(n(n-1)/2) labeled graphs on n vertices whose edge-set
/// index is congruent to `shard` mod `shards`.
void for_each_labeled_graph(int n, const GraphVisitor& visit, int shard = 0,
                            int shards = 1);

/// Groups graphs into isomorphism classes; returns one representative per
/// class, in first-seen order.
std::vector<Graph> isomorphism_classes(const std::vector<Graph>& graphs);

// ---- verification --------------------------------------------------------

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct Witness {
  std::string label;
  std::string graph6;
  std::string value;
};

struct VerificationReport {
  std::string suite;
  std::string universe;
  std::int64_t checked = 0;
  std::int64_t counterexample_total = 0;
  std::vector<Counterexample> counterexamples;  // first few, in order
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return counterexample_total == 0; }
  void fail(std::string graph6, std::string detail);
};

struct VerifyOptions {
  int threads = 1;
};

/// Per-size classification of t-maximisers among odd-cycle graphs of
/// order n (labeled sweep, n <= 8).
VerificationReport verify_extremal_classification(int n,
                                                  const VerifyOptions& opts = {});

/// H_n is the unique t-maximiser among all odd-cycle graphs of order n.
VerificationReport verify_maximum_at_H(int n, const VerifyOptions& opts = {});

/// t(F(n,m)) < t(F(n,m+1)) and t(F(n,m)) < t(F(n+1,m)) over the grid
/// n <= n_max where both graphs exist.
VerificationReport verify_monotonicity(int n_max,
                                       const VerifyOptions& opts = {});

/// Every connected odd-cycle graph of order n reduces to F(n,m) within the
/// step bounds, with F(n,m) strictly dominating it when not isomorphic.
VerificationReport verify_reduction(int n, const VerifyOptions& opts = {});

/// Skew characteristic polynomial vs. matching polynomial over all labeled
/// graphs with n <= max_n, in both directions.
VerificationReport verify_skew_identity(int max_n,
                                        const VerifyOptions& opts = {});

/// Every orientation of every odd-cycle graph with n <= max_n has skew
/// spectral radius equal to t(G).
VerificationReport verify_orientation_independence(int max_n,
                                                   const VerifyOptions& opts = {});

/// For every connected labeled graph with n <= max_n and every ordered pair
/// (u, v), KT(G, u, v) dominates G, strictly unless isomorphic.
VerificationReport verify_kelmans_dominance(int max_n,
                                            const VerifyOptions& opts = {});

}  // namespace oddcycle
