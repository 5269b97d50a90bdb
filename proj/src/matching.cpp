#include "oddcycle/matching.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace oddcycle {
namespace {

// Induced subgraphs of graphs up to this order are memoised in a flat table
// indexed by vertex mask; larger graphs use a hash map.
constexpr int kFlatMemoOrder = 14;

template <typename Count>
class ProfileEngine {
 public:
  using Counts = std::vector<Count>;

  explicit ProfileEngine(const Graph& g) : g_(g) {
    if (g.order() <= kFlatMemoOrder) {
      flat_.resize(std::size_t{1} << g.order());
      known_.resize(std::size_t{1} << g.order());
    }
  }

  Counts profile(VertexMask s) {
    if (popcount(s) <= 1) return Counts{Count(1)};
    if (const Counts* hit = lookup(s)) return *hit;

    Counts result;
    const VertexMask comp = component_of(g_, std::countr_zero(s), s);
    if (comp != s) {
      result = convolve(profile(comp), profile(s & ~comp));
    } else {
      const Vertex v = pivot(s);
      result = profile(s & ~bit(v));
      result.resize(popcount(s) / 2 + 1);
      for (VertexMask nb = g_.neighbors(v) & s; nb; nb &= nb - 1) {
        const Vertex u = std::countr_zero(nb);
        Counts rest = profile(s & ~bit(v) & ~bit(u));
        for (std::size_t k = 0; k < rest.size(); ++k) result[k + 1] += rest[k];
      }
    }
    store(s, result);
    return result;
  }

 private:
  // Maximum degree inside s, smallest index on ties.
  Vertex pivot(VertexMask s) const {
    Vertex best = -1;
    int best_degree = -1;
    for (VertexMask rest = s; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      int d = popcount(g_.neighbors(v) & s);
      if (d > best_degree) {
        best = v;
        best_degree = d;
      }
    }
    return best;
  }

  static Counts convolve(const Counts& a, const Counts& b) {
    Counts out(a.size() + b.size() - 1, Count(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  const Counts* lookup(VertexMask s) const {
    if (!flat_.empty()) return known_[s] ? &flat_[s] : nullptr;
    auto it = map_.find(s);
    return it == map_.end() ? nullptr : &it->second;
  }

  void store(VertexMask s, const Counts& c) {
    if (!flat_.empty()) {
      flat_[s] = c;
      known_[s] = 1;
    } else {
      map_.emplace(s, c);
    }
  }

  const Graph& g_;
  std::vector<Counts> flat_;
  std::vector<std::uint8_t> known_;
  std::unordered_map<VertexMask, Counts> map_;
};

}  // namespace

MatchingProfile matching_profile(const Graph& g, VertexMask active) {
  active &= g.vertices();
  const std::size_t width = popcount(active) / 2 + 1;
  MatchingProfile out;
  out.counts.reserve(width);

  int edges = 0;
  for (VertexMask rest = active; rest; rest &= rest - 1) {
    edges += popcount(g.neighbors(std::countr_zero(rest)) & active);
  }
  edges /= 2;

  // Every m_k is at most the number of edge subsets, 2^m.
  if (edges < 64) {
    ProfileEngine<std::uint64_t> engine(g);
    for (std::uint64_t c : engine.profile(active)) {
      BigInt big;
      mpz_import(big.get_mpz_t(), 1, -1, sizeof c, 0, 0, &c);
      out.counts.push_back(big);
    }
  } else {
    ProfileEngine<BigInt> engine(g);
    out.counts = engine.profile(active);
  }
  out.counts.resize(width);
  return out;
}

MatchingProfile matching_profile(const Graph& g) {
  return matching_profile(g, g.vertices());
}

IntPolynomial matching_polynomial(const MatchingProfile& profile, int order) {
  std::vector<BigInt> coeffs(order + 1);
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    const int power = order - 2 * static_cast<int>(k);
    if (power < 0) break;
    coeffs[power] = (k % 2 == 0) ? profile.counts[k] : BigInt(-profile.counts[k]);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial matching_polynomial(const Graph& g, VertexMask active) {
  active &= g.vertices();
  return matching_polynomial(matching_profile(g, active), popcount(active));
}

IntPolynomial matching_polynomial(const Graph& g) {
  return matching_polynomial(g, g.vertices());
}

bool check_deletion_identity(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("check_deletion_identity: not an edge");
  }
  Graph without = g;
  without.remove_edge(e.u, e.v);
  IntPolynomial lhs = matching_polynomial(g);
  IntPolynomial rhs =
      matching_polynomial(without) -
      matching_polynomial(g, g.vertices() & ~bit(e.u) & ~bit(e.v));
  return lhs == rhs;
}

bool check_union_identity(const std::vector<Graph>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("check_union_identity: no parts");
  }
  Graph whole = parts.front();
  IntPolynomial product = matching_polynomial(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    whole = disjoint_union(whole, parts[i]);
    product = product * matching_polynomial(parts[i]);
  }
  return matching_polynomial(whole) == product;
}

}  // namespace oddcycle
