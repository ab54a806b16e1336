#ifndef WDOM_DFS_CACTUS_HPP
#define WDOM_DFS_CACTUS_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wdom/graph.hpp"

namespace wdom {

/// DFS cactus data structure: the visit order plus the per-vertex arrays
/// father, root_of, orien and ind.
///
/// For a vertex v that is a non-root member of a cycle, root_of[v] is the
/// cycle vertex with the smallest DFN and orien[v] is the son of root_of[v]
/// through which the DFS entered the cycle. Every other vertex has
/// root_of[v] == orien[v] == v, including hinges that only root cycles.
struct DfsStructure {
  VertexId root = 0;
  std::vector<std::uint32_t> dfn;
  std::vector<VertexId> order;
  std::vector<VertexId> father;
  std::vector<VertexId> root_of;
  std::vector<VertexId> orien;
  std::vector<std::uint32_t> ind;

  std::size_t size() const { return order.size(); }
  bool on_cycle_below_root(VertexId v) const { return root_of[v] != v; }
  /// v is the son of a cycle root through which the DFS entered that cycle.
  bool is_cycle_entry(VertexId v) const { return root_of[v] != v && orien[v] == v; }
};

/// Work done while building the structure; bench reports it in verbose mode.
struct DfsStats {
  /// Adjacency entries inspected during the forward search.
  std::uint64_t edge_examinations = 0;
  /// Father steps taken while labelling cycles with their root and orientation.
  std::uint64_t cycle_walk_steps = 0;
};

/// Iterative DFS from `root` visiting neighbors in adjacency-list order.
/// Throws NotCactusError when the graph is disconnected or some edge lies on
/// two cycles, std::out_of_range when root is not a vertex.
DfsStructure build_dfs_structure(const WeightedGraph& g, VertexId root, DfsStats* stats = nullptr);

enum class VertexClass : std::uint8_t { C, G, H };

char to_char(VertexClass c);

/// Classifies v from the DFS arrays alone (plus adjacency to find sons).
VertexClass classify_vertex(const DfsStructure& s, const WeightedGraph& g, VertexId v);

struct CycleBlock {
  /// Cycle order starting at the cycle root, then following DFS order.
  std::vector<VertexId> vertices;
};

struct GraftBlock {
  /// Sorted by DFN.
  std::vector<VertexId> vertices;
};

using Block = std::variant<CycleBlock, GraftBlock>;

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::size_t cycle_count = 0;
  std::size_t graft_count = 0;

  std::size_t block_count() const { return blocks.size(); }
};

/// Cycles first (ordered by the DFN of their entry son), then grafts (ordered
/// by the DFN of their first vertex). A single isolated vertex forms one graft.
BlockDecomposition block_decomposition(const DfsStructure& s, const WeightedGraph& g);

struct SubcactusView {
  VertexId root = 0;
  std::uint32_t lo_dfn = 0;
  std::uint32_t hi_dfn = 0;
  std::span<const VertexId> vertices;
};

/// The vertices with DFN in [lo_dfn, hi_dfn], rooted at order[lo_dfn].
SubcactusView subcactus_interval(const DfsStructure& s, std::uint32_t lo_dfn, std::uint32_t hi_dfn);

}  // namespace wdom

#endif  // WDOM_DFS_CACTUS_HPP
