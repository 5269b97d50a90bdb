#include "oddcycle/skew.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <type_traits>

#include "oddcycle/errors.hpp"
#include "oddcycle/matching.hpp"

namespace oddcycle {

// ---- Orientation ---------------------------------------------------------

Orientation::Orientation(Graph base)
    : base_(std::move(base)),
      edges_(base_.edges()),
      direction_(edges_.size(), true) {}

Orientation::Orientation(Graph base, std::uint64_t mask)
    : base_(std::move(base)), edges_(base_.edges()) {
  if (edges_.size() > 64) {
    throw SizeLimitError("orientation mask holds at most 64 edges");
  }
  if (edges_.size() < 64 && (mask >> edges_.size()) != 0) {
    throw std::invalid_argument("orientation mask has bits beyond edge count");
  }
  direction_.resize(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) direction_[k] = (mask >> k) & 1U;
}

Orientation::Orientation(Graph base, std::vector<bool> lower_to_higher)
    : base_(std::move(base)),
      edges_(base_.edges()),
      direction_(std::move(lower_to_higher)) {
  if (direction_.size() != edges_.size()) {
    throw std::invalid_argument("orientation needs one direction per edge");
  }
}

int Orientation::arc(Vertex u, Vertex v) const {
  if (!base_.has_edge(u, v)) return 0;
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  bool forward = direction_[it - edges_.begin()];
  // forward: lower -> higher
  return (forward == (u < v)) ? 1 : -1;
}

std::vector<std::vector<int>> Orientation::skew_matrix() const {
  const int n = base_.order();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto [u, v] = edges_[k];
    const int sign = direction_[k] ? 1 : -1;
    s[u][v] = sign;
    s[v][u] = -sign;
  }
  return s;
}

std::string Orientation::mask_hex() const {
  const std::size_t digits = std::max<std::size_t>(1, (edges_.size() + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      std::size_t k = 4 * d + b;
      if (k < edges_.size() && direction_[k]) nibble |= 1 << b;
    }
    out[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return out;
}

Orientation parse_orientation(const Graph& base, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t m = static_cast<std::size_t>(base.size());
  std::vector<bool> dir(m, false);
  if (hex.empty()) throw std::invalid_argument("empty orientation mask");
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char c = hex[hex.size() - 1 - d];
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw std::invalid_argument("bad hex digit in orientation mask");
    }
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      std::size_t k = 4 * d + b;
      if (k >= m) {
        throw std::invalid_argument("orientation mask has bits beyond edge count");
      }
      dir[k] = true;
    }
  }
  return Orientation(base, std::move(dir));
}

// ---- characteristic polynomial ------------------------------------------

namespace {

using Wide = __int128;

// Above this order the Bareiss intermediates of det(kI - S), k <= n, can
// exceed 128 bits; the Hadamard bound (n^2 + n)^(n/2) squared stays below
// 2^126 up to here.
constexpr int kWideOrder = 12;

BigInt to_big(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(mag >> 64);
  BigInt lo = static_cast<unsigned long>(mag & ~std::uint64_t{0});
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

template <typename T>
using Matrix = std::array<std::array<T, kMaxSkewOrder>, kMaxSkewOrder>;

template <typename T>
T exact_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, BigInt>) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    return a / b;
  }
}

// Fraction-free Gaussian elimination; every division is exact.
template <typename T>
T bareiss_det(Matrix<T>& a, int n) {
  T prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = exact_div<T>(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : T(-a[n - 1][n - 1]);
}

// Values f(0..n) of a degree-n integer polynomial -> its coefficients, via
// Newton's forward differences. Delta^j f(0) is divisible by j!.
template <typename T>
std::vector<BigInt> interpolate(std::vector<T> values) {
  const int n = static_cast<int>(values.size()) - 1;
  std::vector<T> newton(n + 1);
  T factorial = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) factorial *= j;
    newton[j] = exact_div<T>(values[0], factorial);
    for (int i = 0; i + 1 < static_cast<int>(values.size()); ++i) {
      values[i] = values[i + 1] - values[i];
    }
    values.pop_back();
  }
  // sum_j newton[j] * x(x-1)...(x-j+1), expanded by Horner in the falling
  // factorial basis.
  std::vector<T> poly{newton[n]};
  for (int j = n - 1; j >= 0; --j) {
    std::vector<T> next(poly.size() + 1, T(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * T(j);
    }
    next[0] += newton[j];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(poly.size());
  for (const T& c : poly) {
    if constexpr (std::is_same_v<T, BigInt>) {
      out.push_back(c);
    } else {
      out.push_back(to_big(c));
    }
  }
  return out;
}

template <typename T, typename Fill>
IntPolynomial char_poly(int n, Fill fill) {
  std::vector<T> values(n + 1);
  Matrix<T> a;
  for (int k = 0; k <= n; ++k) {
    fill(a, k);
    values[k] = bareiss_det<T>(a, n);
  }
  return IntPolynomial(interpolate<T>(std::move(values)));
}

template <typename T>
IntPolynomial char_poly_from_matrix(const std::vector<std::vector<int>>& s) {
  const int n = static_cast<int>(s.size());
  if (n > kMaxSkewOrder) {
    throw SizeLimitError("skew characteristic polynomial supports n <= 24");
  }
  return char_poly<T>(n, [&](Matrix<T>& a, int k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = T((i == j ? k : 0) - s[i][j]);
    }
  });
}

}  // namespace

namespace detail {

IntPolynomial skew_char_poly_wide(const std::vector<std::vector<int>>& s) {
  if (static_cast<int>(s.size()) > kWideOrder) {
    throw SizeLimitError("128-bit determinant path supports n <= 12");
  }
  return char_poly_from_matrix<Wide>(s);
}

IntPolynomial skew_char_poly_big(const std::vector<std::vector<int>>& s) {
  return char_poly_from_matrix<BigInt>(s);
}

}  // namespace detail

IntPolynomial skew_char_poly(const Orientation& o) {
  const int n = o.base().order();
  if (n > kMaxSkewOrder) {
    throw SizeLimitError("skew characteristic polynomial supports n <= 24");
  }
  auto fill = [&](auto& a, int k) {
    using T = std::remove_cvref_t<decltype(a[0][0])>;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = T(0);
      a[i][i] = T(k);
    }
    const auto& edges = o.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int sign = o.lower_to_higher(e) ? 1 : -1;
      a[edges[e].u][edges[e].v] = T(-sign);
      a[edges[e].v][edges[e].u] = T(sign);
    }
  };
  if (n <= kWideOrder) return char_poly<Wide>(n, fill);
  return char_poly<BigInt>(n, fill);
}

// (-i)^n m(G, ix) = (-i)^n sum_k (-1)^k m_k i^{n-2k} x^{n-2k}
//                 = sum_k (-1)^k m_k (-i * i)^n i^{-2k} x^{n-2k}
//                 = sum_k (-1)^k m_k (-1)^k x^{n-2k}
//                 = sum_k m_k x^{n-2k}.
IntPolynomial matching_skew_form(const Graph& g) {
  MatchingProfile profile = matching_profile(g);
  std::vector<BigInt> coeffs(g.order() + 1);
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    coeffs[g.order() - 2 * k] = profile.counts[k];
  }
  return IntPolynomial(std::move(coeffs));
}

bool verify_identity(const Orientation& o) {
  return skew_char_poly(o) == matching_skew_form(o.base());
}

void for_each_orientation(
    const Graph& g, const std::function<bool(const Orientation&)>& visit) {
  if (g.size() > kMaxOrientationEdges) {
    throw SizeLimitError("orientation enumeration supports m <= 24");
  }
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!visit(Orientation(g, mask))) return;
  }
}

std::vector<Orientation> all_orientations(const Graph& g) {
  std::vector<Orientation> out;
  for_each_orientation(g, [&](const Orientation& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

IntPolynomial skew_to_real_spectrum(const IntPolynomial& char_poly) {
  const int n = char_poly.degree();
  std::vector<BigInt> coeffs(n + 1);
  for (int power = n; power >= 0; power -= 2) {
    const int k = (n - power) / 2;
    coeffs[power] = (k % 2 == 0) ? char_poly.coeff(power)
                                 : BigInt(-char_poly.coeff(power));
  }
  return IntPolynomial(std::move(coeffs));
}

AlgebraicRoot skew_spectral_radius(const IntPolynomial& char_poly,
                                   const Rational& eps) {
  return max_real_root(skew_to_real_spectrum(char_poly), eps);
}

AlgebraicRoot skew_spectral_radius(const Orientation& o, const Rational& eps) {
  return skew_spectral_radius(skew_char_poly(o), eps);
}

AlgebraicRoot max_skew_spectral_radius(const Graph& g, const Rational& eps) {
  if (g.size() > kMaxSpectralSweepEdges) {
    throw SizeLimitError("maximum skew spectral radius supports m <= 20");
  }
  std::set<IntPolynomial, PolynomialLess> seen;
  for_each_orientation(g, [&](const Orientation& o) {
    seen.insert(skew_char_poly(o));
    return true;
  });
  std::optional<AlgebraicRoot> best;
  for (const IntPolynomial& poly : seen) {
    AlgebraicRoot r = skew_spectral_radius(poly, eps);
    if (!best || compare_roots(r, *best) > 0) best = std::move(r);
  }
  return *best;
}

}  // namespace oddcycle
