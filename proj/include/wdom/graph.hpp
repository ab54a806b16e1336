#ifndef WDOM_GRAPH_HPP
#define WDOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wdom {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph with strictly positive vertex weights.
///
/// Vertex ids are dense and 0-based. Neighbor order is insertion order and is
/// significant: it fixes the DFS visit order downstream.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<double> weights);

  /// Throws std::invalid_argument on out-of-range ids, self-loops and
  /// duplicate edges.
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return weights_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  double weight(VertexId v) const { return weights_.at(v); }
  std::span<const double> weights() const { return weights_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Edges with u < v, in the order they were added.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<double> weights_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::size_t edge_count_ = 0;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedWeight,
  kWeightCountMismatch,
  kNonpositiveWeight,
  kMalformedEdge,
  kEdgeCountMismatch,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kTrailingContent,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Reads the line-oriented text format:
///   <n> <m>
///   w_0 ... w_{n-1}
///   u v            (m lines)
/// Lines starting with '#' and blank lines are skipped.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);

std::string serialize_graph(const WeightedGraph& g);

struct CactusReport {
  bool is_cactus = false;
  bool is_connected = false;
  /// An edge of a biconnected component that is neither a bridge nor a
  /// simple cycle, i.e. an edge lying on two distinct cycles.
  std::optional<Edge> witness;
};

CactusReport validate_cactus(const WeightedGraph& g);

/// Thrown by algorithms that require a connected cactus.
class NotCactusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wdom

#endif  // WDOM_GRAPH_HPP
