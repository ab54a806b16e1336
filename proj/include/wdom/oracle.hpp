#ifndef WDOM_ORACLE_HPP
#define WDOM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdom/dom_params.hpp"
#include "wdom/graph.hpp"

namespace wdom {

inline constexpr std::size_t kOracleMaxVertices = 24;

struct OracleConstraints {
  std::vector<VertexId> must_include = {};
  std::vector<VertexId> must_exclude = {};
  /// Removed from the graph before enumeration, together with their edges.
  std::vector<VertexId> deleted = {};
};

struct OracleResult {
  /// Infinity iff no admissible set dominates G - deleted.
  ExtWeight gamma = ExtWeight::infinity();
  std::optional<std::vector<VertexId>> witness;
  std::uint64_t evaluated_subsets = 0;
};

/// Exhaustive minimum-weight domination of G - deleted over all sets that
/// contain must_include and avoid must_exclude. Ties keep the first set met
/// in Gray-code order. Throws std::invalid_argument when more than
/// kOracleMaxVertices vertices survive deletion or the constraint sets overlap.
OracleResult brute_force_gamma(const WeightedGraph& g, const OracleConstraints& constraints = {});

/// (g00, g1, g0, g) at v from four constrained enumerations.
DomParams brute_force_params(const WeightedGraph& g, VertexId v);

/// `gamma=..` plus `set=..` when a witness exists.
std::string format_oracle_result(const OracleResult& result);

}  // namespace wdom

#endif  // WDOM_ORACLE_HPP
