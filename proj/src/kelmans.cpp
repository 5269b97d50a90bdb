#include "oddcycle/kelmans.hpp"

#include <stdexcept>

#include "oddcycle/errors.hpp"
#include "oddcycle/matching.hpp"

namespace oddcycle {

std::string_view to_string(ReductionPhase phase) {
  switch (phase) {
    case ReductionPhase::kLongCycle:
      return "LongCycle";
    case ReductionPhase::kDegreeLift:
      return "DegreeLift";
  }
  return "?";
}

std::string_view to_string(DominanceVerdict verdict) {
  switch (verdict) {
    case DominanceVerdict::kStrictlyDominates:
      return "StrictlyDominates";
    case DominanceVerdict::kWeaklyDominates:
      return "WeaklyDominates";
    case DominanceVerdict::kEqualPolynomials:
      return "EqualPolynomials";
    case DominanceVerdict::kIncomparable:
      return "Incomparable";
  }
  return "?";
}

KelmansResult kelmans_transform(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("kelmans_transform: u == v");
  const VertexMask movable = g.neighbors(v) & ~g.neighbors(u) & ~bit(u);
  KelmansResult out{g, {u, v, {}, ReductionPhase::kDegreeLift}};
  for (VertexMask rest = movable; rest; rest &= rest - 1) {
    const Vertex w = std::countr_zero(rest);
    out.graph.remove_edge(v, w);
    out.graph.add_edge(u, w);
    out.step.moved.push_back(w);
  }
  return out;
}

int ReductionTrace::count(ReductionPhase phase) const {
  int c = 0;
  for (const KelmansResult& s : steps) c += s.step.phase == phase;
  return c;
}

ReductionTrace reduce_to_F(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("reduce_to_F: graph is disconnected");
  }
  if (!is_odd_cycle_graph(g)) {
    throw PreconditionError("reduce_to_F: graph has an even cycle");
  }
  ReductionTrace trace{g, {}};
  const int n = g.order();
  // Each phase is bounded well inside this; hitting it means a bug.
  const int step_cap = 2 * (n + g.size()) + 2;

  Graph current = g;
  while (true) {
    std::vector<Cycle> cycles = long_odd_cycles(current);
    if (cycles.empty()) break;
    const Cycle& c = cycles.front();
    KelmansResult r = kelmans_transform(current, c[0], c[2]);
    r.step.phase = ReductionPhase::kLongCycle;
    current = r.graph;
    trace.steps.push_back(std::move(r));
    if (static_cast<int>(trace.steps.size()) > step_cap) {
      throw std::logic_error("reduce_to_F: long-cycle phase did not finish");
    }
  }

  while (current.max_degree() < n - 1) {
    const int top = current.max_degree();
    Vertex u = 0;
    while (current.degree(u) != top) ++u;
    const VertexMask closed = current.neighbors(u) | bit(u);
    VertexMask second = 0;
    for (VertexMask nb = current.neighbors(u); nb; nb &= nb - 1) {
      second |= current.neighbors(std::countr_zero(nb));
    }
    second &= ~closed;
    if (second == 0) {
      throw std::logic_error("reduce_to_F: no vertex at distance 2");
    }
    const Vertex v = std::countr_zero(second);
    const Vertex w =
        std::countr_zero(current.neighbors(u) & current.neighbors(v));
    KelmansResult r = kelmans_transform(current, u, w);
    r.step.phase = ReductionPhase::kDegreeLift;
    current = r.graph;
    trace.steps.push_back(std::move(r));
    if (static_cast<int>(trace.steps.size()) > step_cap) {
      throw std::logic_error("reduce_to_F: degree-lift phase did not finish");
    }
  }
  return trace;
}

bool positive_beyond(const IntPolynomial& d, const AlgebraicRoot& root) {
  if (d.is_zero() || sgn(d.leading()) < 0) return false;
  std::optional<AlgebraicRoot> top = isolate_max_root(d);
  return !top || compare_roots(*top, root) <= 0;
}

DominanceVerdict dominance(const IntPolynomial& m1, const IntPolynomial& m2) {
  const IntPolynomial d = m2 - m1;
  if (d.is_zero()) return DominanceVerdict::kEqualPolynomials;
  if (sgn(d.leading()) < 0) return DominanceVerdict::kIncomparable;

  std::optional<AlgebraicRoot> t1 = isolate_max_root(m1);
  std::optional<AlgebraicRoot> top = isolate_max_root(d);
  if (!top) return DominanceVerdict::kStrictlyDominates;
  // With no real root of m1 the ray is the whole line, and d has a zero.
  if (t1 && compare_roots(*top, *t1) < 0) {
    return DominanceVerdict::kStrictlyDominates;
  }

  // d vanishes somewhere on the ray. It stays >= 0 there iff it never
  // changes sign past t1, i.e. no odd-multiplicity root lies beyond t1.
  std::optional<AlgebraicRoot> sign_change =
      isolate_max_root(odd_multiplicity_part(d));
  if (!sign_change) return DominanceVerdict::kWeaklyDominates;
  if (!t1) return DominanceVerdict::kIncomparable;
  return compare_roots(*sign_change, *t1) > 0 ? DominanceVerdict::kIncomparable
                                               : DominanceVerdict::kWeaklyDominates;
}

DominanceVerdict dominance(const Graph& g1, const Graph& g2) {
  return dominance(matching_polynomial(g1), matching_polynomial(g2));
}

}  // namespace oddcycle
