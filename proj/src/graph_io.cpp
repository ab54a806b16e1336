#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string_view>

#include "wdom/ext_weight.hpp"
#include "wdom/graph.hpp"

namespace wdom {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kMalformedWeight: return "malformed weight";
    case ParseErrorKind::kWeightCountMismatch: return "weight count mismatch";
    case ParseErrorKind::kNonpositiveWeight: return "nonpositive weight";
    case ParseErrorKind::kMalformedEdge: return "malformed edge";
    case ParseErrorKind::kEdgeCountMismatch: return "edge count mismatch";
    case ParseErrorKind::kVertexOutOfRange: return "vertex id out of range";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kTrailingContent: return "trailing content";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Yields non-comment, non-blank lines together with their 1-based number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      std::string_view view(buffer_);
      std::size_t first = view.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || view[first] == '#') continue;
      tokens = split_ws(view);
      return true;
    }
    return false;
  }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;

  std::uint64_t n = 0, m = 0;
  if (!reader.next(tokens) || tokens.size() != 2 || !parse_number(tokens[0], n) ||
      !parse_number(tokens[1], m)) {
    throw ParseError(ParseErrorKind::kMalformedHeader, reader.line(), "expected '<n> <m>'");
  }
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(ParseErrorKind::kMalformedHeader, reader.line(), "vertex count too large");
  }

  std::vector<double> weights;
  weights.reserve(n);
  if (n > 0) {
    if (!reader.next(tokens)) {
      throw ParseError(ParseErrorKind::kWeightCountMismatch, reader.line(), "missing weight line");
    }
    if (tokens.size() != n) {
      throw ParseError(ParseErrorKind::kWeightCountMismatch, reader.line(),
                       "expected " + std::to_string(n) + ", got " + std::to_string(tokens.size()));
    }
    for (auto tok : tokens) {
      double w = 0;
      if (!parse_number(tok, w) || !std::isfinite(w)) {
        throw ParseError(ParseErrorKind::kMalformedWeight, reader.line(), std::string(tok));
      }
      if (w <= 0) {
        throw ParseError(ParseErrorKind::kNonpositiveWeight, reader.line(), std::string(tok));
      }
      weights.push_back(w);
    }
  }

  WeightedGraph g(std::move(weights));
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(tokens)) {
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, reader.line(),
                       "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    std::uint64_t u = 0, v = 0;
    if (tokens.size() != 2 || !parse_number(tokens[0], u) || !parse_number(tokens[1], v)) {
      throw ParseError(ParseErrorKind::kMalformedEdge, reader.line(), "expected '<u> <v>'");
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, reader.line(),
                       std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw ParseError(ParseErrorKind::kSelfLoop, reader.line(), std::to_string(u));
    auto a = static_cast<VertexId>(u), b = static_cast<VertexId>(v);
    if (g.has_edge(a, b)) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, reader.line(),
                       std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(a, b);
  }
  if (reader.next(tokens)) {
    throw ParseError(ParseErrorKind::kTrailingContent, reader.line(), "");
  }
  return g;
}

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out;
  out += std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (i > 0) out += ' ';
    out += format_weight(g.weight(static_cast<VertexId>(i)));
  }
  out += '\n';
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace wdom
