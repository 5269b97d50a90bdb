#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/extremal.hpp"
#include "oddcycle/kelmans.hpp"
#include "oddcycle/matching.hpp"
#include "oddcycle/parallel.hpp"
#include "oddcycle/roots.hpp"
#include "oddcycle/skew.hpp"

namespace oddcycle {

void VerificationReport::fail(std::string graph6, std::string detail) {
  constexpr std::size_t kKept = 20;
  ++counterexample_total;
  if (counterexamples.size() < kKept) {
    counterexamples.push_back({std::move(graph6), std::move(detail)});
  }
}

namespace {

constexpr int kShards = 64;
constexpr int kReportDigits = 12;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

using PolySet = std::set<IntPolynomial, PolynomialLess>;
using PolyCounts = std::map<IntPolynomial, std::int64_t, PolynomialLess>;

// Largest real roots memoised per polynomial.
class RootCache {
 public:
  const AlgebraicRoot& get(const IntPolynomial& p) {
    auto it = roots_.find(p);
    if (it == roots_.end()) {
      std::optional<AlgebraicRoot> r = isolate_max_root(p);
      if (!r) throw std::domain_error("polynomial without real roots");
      it = roots_.emplace(p, std::move(*r)).first;
    }
    return it->second;
  }

 private:
  std::map<IntPolynomial, AlgebraicRoot, PolynomialLess> roots_;
};

struct PolyPairLess {
  bool operator()(const std::pair<IntPolynomial, IntPolynomial>& a,
                  const std::pair<IntPolynomial, IntPolynomial>& b) const {
    PolynomialLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

std::string describe(const AlgebraicRoot& r) {
  return r.to_decimal(kReportDigits);
}

void check_order(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw SizeLimitError(std::string(what) + " supports " + std::to_string(lo) +
                         " <= n <= " + std::to_string(hi));
  }
}

// Distinct matching polynomials of labeled odd-cycle graphs of order n,
// grouped by size.
std::map<int, PolyCounts> collect_polynomials(int n, int threads) {
  auto parts = run_shards<std::map<int, PolyCounts>>(kShards, threads, [&](int s) {
    std::map<int, PolyCounts> local;
    for_each_labeled_odd_cycle_graph(
        n, false,
        [&](const Graph& g) { ++local[g.size()][matching_polynomial(g)]; }, s,
        kShards);
    return local;
  });
  std::map<int, PolyCounts> merged;
  for (auto& part : parts) {
    for (auto& [m, counts] : part) {
      for (auto& [p, c] : counts) merged[m][p] += c;
    }
  }
  return merged;
}

// The polynomials among `polys` whose largest root is maximal.
PolySet maximisers(const PolyCounts& polys, RootCache& roots) {
  PolySet best;
  const AlgebraicRoot* top = nullptr;
  for (const auto& [p, count] : polys) {
    const AlgebraicRoot& r = roots.get(p);
    if (!top) {
      top = &r;
      best.insert(p);
      continue;
    }
    auto c = compare_roots(r, *top);
    if (c > 0) {
      best.clear();
      top = &r;
    }
    if (c >= 0) best.insert(p);
  }
  return best;
}

struct Claim {
  std::string label;
  std::vector<Graph> shapes;  // every maximiser is isomorphic to one of these
};

// Second pass over the labeled class: each graph whose polynomial is among
// the maximisers must match a claimed shape, and each shape must occur.
void check_maximiser_shapes(int n, int threads,
                            const std::map<int, PolySet>& best_by_group,
                            const std::map<int, Claim>& claims,
                            bool group_by_size, VerificationReport& report) {
  struct ShardResult {
    std::map<int, std::vector<std::int64_t>> hits;
    VerificationReport failures;
  };
  auto parts = run_shards<ShardResult>(kShards, threads, [&](int s) {
    ShardResult out;
    for_each_labeled_odd_cycle_graph(
        n, false,
        [&](const Graph& g) {
          const int group = group_by_size ? g.size() : -1;
          auto best = best_by_group.find(group);
          auto claim = claims.find(group);
          if (best == best_by_group.end() || claim == claims.end()) return;
          if (!best->second.contains(matching_polynomial(g))) return;
          auto& hits = out.hits[group];
          hits.resize(claim->second.shapes.size());
          for (std::size_t i = 0; i < claim->second.shapes.size(); ++i) {
            if (is_isomorphic(g, claim->second.shapes[i])) {
              ++hits[i];
              return;
            }
          }
          out.failures.fail(write_graph6(g),
                            claim->second.label +
                                ": maximiser outside the claimed shapes");
        },
        s, kShards);
    return out;
  });
  std::map<int, std::vector<std::int64_t>> hits;
  for (auto& part : parts) {
    for (auto& [group, h] : part.hits) {
      auto& total = hits[group];
      total.resize(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
    }
    for (auto& c : part.failures.counterexamples) {
      report.fail(c.graph6, c.detail);
    }
    report.counterexample_total +=
        part.failures.counterexample_total -
        static_cast<std::int64_t>(part.failures.counterexamples.size());
  }
  for (const auto& [group, claim] : claims) {
    const auto& h = hits[group];
    for (std::size_t i = 0; i < claim.shapes.size(); ++i) {
      if (i >= h.size() || h[i] == 0) {
        report.fail(write_graph6(claim.shapes[i]),
                    claim.label + ": claimed maximiser does not attain the maximum");
      }
    }
  }
}

Graph padded(const Graph& g, int n) { return with_isolated(g, n - g.order()); }

}  // namespace

VerificationReport verify_extremal_classification(int n,
                                                  const VerifyOptions& opts) {
  check_order(n, 1, kMaxLabeledOrder, "extremal classification");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "classification";
  report.universe = "labeled odd-cycle graphs of order " + std::to_string(n) +
                    ", grouped by size 1 <= m <= " +
                    std::to_string(max_odd_cycle_size(n));

  RootCache roots;
  std::map<int, PolyCounts> by_size = collect_polynomials(n, opts.threads);
  std::map<int, PolySet> best;
  std::map<int, Claim> claims;

  for (int m = 1; m <= max_odd_cycle_size(n); ++m) {
    Claim claim;
    claim.label = "m=" + std::to_string(m);
    if (m == 1) {
      claim.shapes = {padded(complete_graph(2), n)};
    } else if (m == 2) {
      claim.shapes = {padded(star_graph(2), n)};
    } else if (m == 3) {
      claim.shapes = {padded(complete_graph(3), n)};
      if (n >= 4) claim.shapes.push_back(padded(star_graph(3), n));
    } else if (m <= n - 2) {
      claim.shapes = {padded(make_F(m + 1, m), n)};
    } else {
      claim.shapes = {make_F(n, m)};
      if (m == n - 1) {
        // Both size regimes describe this case; they must name one graph.
        if (!is_isomorphic(make_F(m + 1, m), make_F(n, m))) {
          report.fail(write_graph6(make_F(n, m)),
                      claim.label + ": boundary cases disagree");
        }
        report.notes.push_back(claim.label +
                               ": F(m+1,m) and F(n,m) coincide at m = n-1");
      }
    }

    auto it = by_size.find(m);
    if (it == by_size.end()) {
      report.fail(write_graph6(claim.shapes.front()),
                  claim.label + ": no odd-cycle graph of this size found");
      continue;
    }
    for (const auto& [p, count] : it->second) report.checked += count;
    best[m] = maximisers(it->second, roots);

    const AlgebraicRoot& top = roots.get(*best[m].begin());
    const AlgebraicRoot& claimed = roots.get(matching_polynomial(claim.shapes.front()));
    if (compare_roots(top, claimed) != 0) {
      report.fail(write_graph6(claim.shapes.front()),
                  claim.label + ": maximum t is " + describe(top) +
                      ", claimed " + describe(claimed));
    }
    for (const Graph& shape : claim.shapes) {
      report.witnesses.push_back(
          {claim.label, write_graph6(shape), describe(claimed)});
    }
    claims.emplace(m, std::move(claim));
  }
  check_maximiser_shapes(n, opts.threads, best, claims, true, report);
  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_maximum_at_H(int n, const VerifyOptions& opts) {
  check_order(n, 1, kMaxLabeledOrder, "maximum-at-H check");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "maximum";
  report.universe =
      "labeled odd-cycle graphs of order " + std::to_string(n) + ", all sizes";

  RootCache roots;
  PolyCounts all;
  for (auto& [m, counts] : collect_polynomials(n, opts.threads)) {
    for (auto& [p, c] : counts) {
      all[p] += c;
      report.checked += c;
    }
  }
  std::map<int, PolySet> best{{-1, maximisers(all, roots)}};
  const Graph h = make_H(n);
  const AlgebraicRoot& top = roots.get(*best[-1].begin());
  const AlgebraicRoot& th = roots.get(matching_polynomial(h));
  if (compare_roots(top, th) != 0) {
    report.fail(write_graph6(h), "maximum t is " + describe(top) +
                                     ", t(H_n) is " + describe(th));
  }
  report.witnesses.push_back({"H_" + std::to_string(n), write_graph6(h), describe(th)});
  std::map<int, Claim> claims{{-1, Claim{"H_" + std::to_string(n), {h}}}};
  check_maximiser_shapes(n, opts.threads, best, claims, false, report);
  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_monotonicity(int n_max, const VerifyOptions&) {
  check_order(n_max, 2, 20, "monotonicity grid");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "monotonicity";
  report.universe = "F(n,m) for 2 <= n <= " + std::to_string(n_max);

  std::map<std::pair<int, int>, AlgebraicRoot> t;
  auto t_of = [&](int n, int m) -> const AlgebraicRoot& {
    auto it = t.find({n, m});
    if (it == t.end()) {
      it = t.emplace(std::pair{n, m}, *isolate_max_root(matching_polynomial(make_F(n, m))))
               .first;
    }
    return it->second;
  };
  auto label = [](int n, int m) {
    return "F(" + std::to_string(n) + "," + std::to_string(m) + ")";
  };

  for (int n = 2; n <= n_max; ++n) {
    for (int m = n - 1; m + 1 <= max_odd_cycle_size(n); ++m) {
      ++report.checked;
      if (compare_roots(t_of(n, m), t_of(n, m + 1)) >= 0) {
        report.fail(write_graph6(make_F(n, m)),
                    "t(" + label(n, m) + ") >= t(" + label(n, m + 1) + ")");
      }
    }
  }

  int skipped = 0;
  for (int m = 4; m <= max_odd_cycle_size(n_max); ++m) {
    // Literal range ceil((2m+1)/3) <= n <= m; only pairs where both F(n,m)
    // and F(n+1,m) exist and n+1 <= n_max are testable.
    for (int n = (2 * m + 1 + 2) / 3; n <= m; ++n) {
      if (n + 1 > n_max) break;
      if (!valid_F(n, m) || !valid_F(n + 1, m)) {
        ++skipped;
        continue;
      }
      ++report.checked;
      const bool ok = compare_roots(t_of(n, m), t_of(n + 1, m)) < 0;
      if (!ok) {
        report.fail(write_graph6(make_F(n, m)),
                    "t(" + label(n, m) + ") >= t(" + label(n + 1, m) + ")");
      }
      if (m == 4) {
        report.notes.push_back("m=4: t(" + label(n, m) + ") = " +
                               describe(t_of(n, m)) + (ok ? " < " : " >= ") +
                               "t(" + label(n + 1, m) + ") = " +
                               describe(t_of(n + 1, m)));
      }
    }
  }
  report.notes.push_back(std::to_string(skipped) +
                         " (n,m) pairs in the order-step range skipped because "
                         "F(n,m) does not exist");
  for (int n = 2; n <= n_max; ++n) {
    report.witnesses.push_back({"H_" + std::to_string(n), write_graph6(make_H(n)),
                                describe(t_of(n, max_odd_cycle_size(n)))});
  }
  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_reduction(int n, const VerifyOptions& opts) {
  check_order(n, 1, kMaxStructuredOrder, "reduction check");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "reduction";
  report.universe = "connected odd-cycle graphs of order " + std::to_string(n) +
                    " up to isomorphism (structured generation)";
  const std::vector<Graph> graphs = structured_odd_cacti(n);
  report.checked = static_cast<std::int64_t>(graphs.size());

  auto parts = run_shards<VerificationReport>(kShards, opts.threads, [&](int s) {
    VerificationReport local;
    for (std::size_t i = s; i < graphs.size(); i += kShards) {
      const Graph& g = graphs[i];
      const std::string g6 = write_graph6(g);
      const int m = g.size();
      if (!valid_F(n, m)) {
        local.fail(g6, "size outside the connected odd-cycle range");
        continue;
      }
      const Graph f = make_F(n, m);
      const ReductionTrace trace = reduce_to_F(g);

      Graph prev = g;
      for (const KelmansResult& step : trace.steps) {
        const KelmansResult replay = kelmans_transform(
            prev, step.step.beneficiary, step.step.co_beneficiary);
        if (!(replay.graph == step.graph) || replay.step.moved != step.step.moved) {
          local.fail(g6, "trace step does not replay");
        }
        const Graph& next = step.graph;
        if (next.order() != n || next.size() != m || !is_connected(next) ||
            !is_odd_cycle_graph(next)) {
          local.fail(g6, "intermediate graph " + write_graph6(next) +
                             " is not a connected odd-cycle graph of size m");
          break;
        }
        if (step.step.phase == ReductionPhase::kLongCycle) {
          auto before = long_odd_cycles(prev);
          auto after = long_odd_cycles(next);
          std::size_t eb = 0;
          std::size_t ea = 0;
          for (const auto& c : before) eb += c.size();
          for (const auto& c : after) ea += c.size();
          if (ea + 2 > eb) local.fail(g6, "long-cycle edges dropped by < 2");
          if (after.size() != before.size() && after.size() + 1 != before.size()) {
            local.fail(g6, "long-cycle count changed by more than one");
          }
        } else if (next.degree(step.step.beneficiary) <=
                   prev.degree(step.step.beneficiary)) {
          local.fail(g6, "beneficiary degree did not grow");
        }
        prev = next;
      }
      const int long_steps = trace.count(ReductionPhase::kLongCycle);
      const int lift_steps = trace.count(ReductionPhase::kDegreeLift);
      if (2 * long_steps >= m && long_steps > 0) {
        local.fail(g6, "long-cycle phase used " + std::to_string(long_steps) +
                           " steps, not < m/2");
      }
      if (lift_steps > n - 1) {
        local.fail(g6, "degree-lift phase used " + std::to_string(lift_steps) +
                           " steps, more than n-1");
      }
      if (!is_isomorphic(trace.final_graph(), f)) {
        local.fail(g6, "reduction ended at " + write_graph6(trace.final_graph()) +
                           ", not F(n,m)");
        continue;
      }
      if (!is_isomorphic(g, f)) {
        const IntPolynomial pf = matching_polynomial(f);
        const IntPolynomial pg = matching_polynomial(g);
        if (dominance(pf, pg) != DominanceVerdict::kStrictlyDominates) {
          local.fail(g6, "F(n,m) does not strictly dominate");
        }
        if (compare_roots(*isolate_max_root(pf), *isolate_max_root(pg)) <= 0) {
          local.fail(g6, "t(F(n,m)) <= t(G)");
        }
      } else if (!trace.steps.empty()) {
        local.fail(g6, "F(n,m) itself produced a non-empty trace");
      }
    }
    return local;
  });
  for (auto& part : parts) {
    for (auto& c : part.counterexamples) report.fail(c.graph6, c.detail);
    report.counterexample_total +=
        part.counterexample_total -
        static_cast<std::int64_t>(part.counterexamples.size());
  }
  report.witnesses.push_back(
      {"F(n,m) count", "", std::to_string(graphs.size()) + " graphs reduced"});
  report.seconds = clock.seconds();
  return report;
}

namespace {

void merge_into(VerificationReport& report, std::vector<VerificationReport>& parts) {
  for (auto& part : parts) {
    report.checked += part.checked;
    for (auto& c : part.counterexamples) report.fail(c.graph6, c.detail);
    report.counterexample_total +=
        part.counterexample_total -
        static_cast<std::int64_t>(part.counterexamples.size());
    for (auto& w : part.witnesses) {
      if (report.witnesses.size() < 8) report.witnesses.push_back(std::move(w));
    }
  }
}

}  // namespace

VerificationReport verify_skew_identity(int max_n, const VerifyOptions& opts) {
  check_order(max_n, 1, 7, "skew identity sweep");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "identity";
  report.universe = "all labeled graphs with n <= " + std::to_string(max_n) +
                    ", all orientations";
  auto parts = run_shards<VerificationReport>(kShards, opts.threads, [&](int s) {
    VerificationReport local;
    for (int n = 1; n <= max_n; ++n) {
      for_each_labeled_graph(
          n,
          [&](const Graph& g) {
            ++local.checked;
            const bool odd = is_odd_cycle_graph(g);
            const IntPolynomial target = matching_skew_form(g);
            std::optional<Orientation> violating;
            for_each_orientation(g, [&](const Orientation& o) {
              if (skew_char_poly(o) == target) return true;
              violating = o;
              return false;
            });
            if (odd && violating) {
              local.fail(write_graph6(g),
                         "odd-cycle graph, orientation " +
                             violating->mask_hex() + " breaks the identity");
            } else if (!odd && !violating) {
              local.fail(write_graph6(g),
                         "graph with an even cycle satisfies the identity "
                         "for every orientation");
            } else if (!odd && local.witnesses.empty()) {
              local.witnesses.push_back(
                  {"even-cycle graph, violating orientation", write_graph6(g),
                   violating->mask_hex()});
            }
          },
          s, kShards);
    }
    return local;
  });
  merge_into(report, parts);
  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_orientation_independence(int max_n,
                                                   const VerifyOptions& opts) {
  check_order(max_n, 1, kMaxLabeledOrder, "orientation independence sweep");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "radius";
  report.universe = "labeled odd-cycle graphs with n <= " +
                    std::to_string(max_n) + ", all orientations";
  auto parts = run_shards<VerificationReport>(kShards, opts.threads, [&](int s) {
    VerificationReport local;
    RootCache roots;
    std::map<std::pair<IntPolynomial, IntPolynomial>, bool, PolyPairLess> equal;
    for (int n = 1; n <= max_n; ++n) {
      for_each_labeled_odd_cycle_graph(
          n, false,
          [&](const Graph& g) {
            const IntPolynomial mg = matching_polynomial(g);
            for_each_orientation(g, [&](const Orientation& o) {
              ++local.checked;
              const IntPolynomial spectrum =
                  skew_to_real_spectrum(skew_char_poly(o));
              auto key = std::pair{spectrum, mg};
              auto it = equal.find(key);
              if (it == equal.end()) {
                bool same = compare_roots(roots.get(spectrum), roots.get(mg)) == 0;
                it = equal.emplace(std::move(key), same).first;
              }
              if (!it->second) {
                local.fail(write_graph6(g), "orientation " + o.mask_hex() +
                                                " has skew radius != t(G)");
              }
              return true;
            });
          },
          s, kShards);
    }
    return local;
  });
  merge_into(report, parts);
  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_kelmans_dominance(int max_n,
                                            const VerifyOptions& opts) {
  check_order(max_n, 1, 7, "Kelmans dominance sweep");
  Stopwatch clock;
  VerificationReport report;
  report.suite = "dominance";
  report.universe = "connected labeled graphs with n <= " +
                    std::to_string(max_n) + ", all ordered pairs (u, v)";
  struct Tally {
    VerificationReport report;
    std::map<DominanceVerdict, std::int64_t> verdicts;
  };
  auto parts = run_shards<Tally>(kShards, opts.threads, [&](int s) {
    Tally local;
    std::map<std::pair<IntPolynomial, IntPolynomial>, DominanceVerdict,
             PolyPairLess>
        cache;
    for (int n = 1; n <= max_n; ++n) {
      for_each_labeled_graph(
          n,
          [&](const Graph& g) {
            if (!is_connected(g)) return;
            const IntPolynomial pg = matching_polynomial(g);
            for (Vertex u = 0; u < n; ++u) {
              for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                ++local.report.checked;
                const Graph moved = kelmans_transform(g, u, v).graph;
                auto key = std::pair{matching_polynomial(moved), pg};
                auto it = cache.find(key);
                if (it == cache.end()) {
                  DominanceVerdict d = dominance(key.first, key.second);
                  it = cache.emplace(std::move(key), d).first;
                }
                const DominanceVerdict verdict = it->second;
                ++local.verdicts[verdict];
                const std::string tag = "KT(" + std::to_string(u) + "," +
                                        std::to_string(v) + ") gives " +
                                        std::string(to_string(verdict));
                if (verdict == DominanceVerdict::kIncomparable) {
                  local.report.fail(write_graph6(g), tag);
                } else if (verdict != DominanceVerdict::kStrictlyDominates &&
                           !is_isomorphic(moved, g)) {
                  local.report.fail(write_graph6(g),
                                    tag + " on a non-isomorphic result");
                }
              }
            }
          },
          s, kShards);
    }
    return local;
  });
  std::map<DominanceVerdict, std::int64_t> verdicts;
  std::vector<VerificationReport> reports;
  for (auto& part : parts) {
    for (auto& [v, c] : part.verdicts) verdicts[v] += c;
    reports.push_back(std::move(part.report));
  }
  merge_into(report, reports);
  for (auto& [v, c] : verdicts) {
    report.notes.push_back(std::string(to_string(v)) + ": " + std::to_string(c));
  }
  report.seconds = clock.seconds();
  return report;
}

}  // namespace oddcycle
