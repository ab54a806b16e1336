#ifndef WDOM_SOLVER_HPP
#define WDOM_SOLVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wdom/dfs_cactus.hpp"
#include "wdom/dom_params.hpp"
#include "wdom/graph.hpp"

namespace wdom {

class Derivation;

struct SolveOptions {
  /// Record every min branch so a minimum dominating set can be recovered.
  bool record_choices = false;
};

struct SolveResult {
  ExtWeight gamma;
  DomParams root_params;
  OpCounter counter;
  /// Present when the solve ran with record_choices.
  std::optional<std::vector<VertexId>> dominating_set;
  std::shared_ptr<const Derivation> derivation;
};

/// Bottom-up fold over a tree in reverse DFS order. Exactly 4(n-1) additions
/// and 3(n-1) mins. Throws std::invalid_argument if s shows a cycle.
SolveResult solve_tree(const WeightedGraph& g, const DfsStructure& s, const SolveOptions& opts = {});

/// Weighted domination number of a connected cactus.
///
/// Sweeps vertices by decreasing DFN. A vertex whose father edge is a bridge
/// is folded into its father with combine_edge. When the sweep reaches the
/// entry son of a cycle, every vertex of that cycle already carries its
/// hanging subcactus, so the cycle is resolved with cycle_like and glued to
/// the cycle root with merge_at_vertex.
SolveResult solve_cactus(const WeightedGraph& g, const DfsStructure& s, const SolveOptions& opts = {});

/// Builds the DFS structure from vertex 0 (or `root`) and solves.
SolveResult solve(const WeightedGraph& g, VertexId root = 0, const SolveOptions& opts = {});

/// Replays the recorded min branches top-down and returns a minimum-weight
/// dominating set, sorted by vertex id. Throws std::logic_error if the result
/// was computed without record_choices.
std::vector<VertexId> extract_dominating_set(const WeightedGraph& g, const SolveResult& result);

/// `gamma=..`, `additions=..`, `min_ops=..`, `blocks=..` and, when a set is
/// present, `set=..`, one per line.
std::string format_solve_result(const SolveResult& result, std::size_t block_count);

}  // namespace wdom

#endif  // WDOM_SOLVER_HPP
