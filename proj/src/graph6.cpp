#include <charconv>
#include <ostream>
#include <sstream>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/graph.hpp"

namespace oddcycle {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

// graph6: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte, big-endian within each byte, each byte offset by 63.
Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) {
    throw ParseError(ParseErrorKind::kMalformedHeader, "graph6: empty input");
  }
  if (!printable(text[0])) {
    throw ParseError(ParseErrorKind::kMalformedHeader,
                     "graph6: invalid order byte");
  }

  long n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw ParseError(ParseErrorKind::kOrderOutOfRange,
                       "graph6: order exceeds 64 vertices");
    }
    if (text.size() < 4) {
      throw ParseError(ParseErrorKind::kMalformedHeader,
                       "graph6: truncated order field");
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!printable(text[i])) {
        throw ParseError(ParseErrorKind::kMalformedHeader,
                         "graph6: invalid order byte");
      }
      n = (n << 6) | (text[i] - 63);
    }
    if (n < 63) {
      throw ParseError(ParseErrorKind::kMalformedHeader,
                       "graph6: non-canonical order field");
    }
    pos = 4;
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw ParseError(ParseErrorKind::kOrderOutOfRange,
                     "graph6: order " + std::to_string(n) +
                         " outside [1, 64]");
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  std::string_view payload = text.substr(pos);
  if (payload.size() < bytes) {
    throw ParseError(ParseErrorKind::kTruncatedPayload,
                     "graph6: expected " + std::to_string(bytes) +
                         " payload bytes, got " +
                         std::to_string(payload.size()));
  }
  if (payload.size() > bytes) {
    throw ParseError(ParseErrorKind::kMalformedPayload,
                     "graph6: trailing bytes after payload");
  }
  for (char c : payload) {
    if (!printable(c)) {
      throw ParseError(ParseErrorKind::kMalformedPayload,
                       "graph6: invalid payload byte");
    }
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = payload[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < static_cast<long>(bytes) * 6; ++k) {
    int byte = payload[k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw ParseError(ParseErrorKind::kMalformedPayload,
                       "graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::istringstream fields{std::string(s)};
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n") {
        throw ParseError(ParseErrorKind::kMalformedHeader,
                         "edge list: expected 'n <count>' on line " +
                             std::to_string(line_no));
      }
      if (n < 1 || n > Graph::kMaxOrder) {
        throw ParseError(ParseErrorKind::kOrderOutOfRange,
                         "edge list: order " + std::to_string(n) +
                             " outside [1, 64]");
      }
      continue;
    }
    Edge e;
    std::string extra;
    if (!(fields >> e.u >> e.v) || (fields >> extra)) {
      throw ParseError(ParseErrorKind::kMalformedPayload,
                       "edge list: bad edge on line " +
                           std::to_string(line_no));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw ParseError(ParseErrorKind::kMalformedPayload,
                       "edge list: invalid endpoints on line " +
                           std::to_string(line_no));
    }
    edges.push_back(e);
  }
  if (n < 0) {
    throw ParseError(ParseErrorKind::kMalformedHeader,
                     "edge list: missing 'n <count>' line");
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  return os << write_graph6(g);
}

}  // namespace oddcycle
