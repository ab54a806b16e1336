#ifndef WDOM_DOM_PARAMS_HPP
#define WDOM_DOM_PARAMS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wdom/ext_weight.hpp"

namespace wdom {

/// Domination parameters of a graph G rooted at v.
///
///   g00  minimum weight of a set dominating G - v
///   g1   minimum weight of a dominating set of G that contains v
///   g0   minimum weight of a dominating set of G that avoids v
///   g    min(g1, g0), the weighted domination number of G
///
/// Always g00 <= g0 and g1 <= w(v) + g00.
struct DomParams {
  ExtWeight g00;
  ExtWeight g1;
  ExtWeight g0 = ExtWeight::infinity();
  ExtWeight g;

  friend bool operator==(const DomParams&, const DomParams&) = default;
};

/// Branches taken by the counted mins inside one combinator call; bit i is
/// set when the i-th min picked its second operand.
struct MinTrace {
  std::uint8_t bits = 0;

  bool second(int i) const { return (bits >> i) & 1U; }
  void record(int i, bool second_operand) {
    if (second_operand) bits |= static_cast<std::uint8_t>(1U << i);
  }
};

/// Parameters of a single vertex of weight w: (0, w, inf, w).
DomParams init_params(double w);

/// Joins two rooted graphs by an edge between their roots, keeping the
/// parent's root. 4 additions, 3 mins.
///
/// Trace bits: 0 = g1 took child.g00, 1 = g0 took parent.g00 + child.g1,
/// 2 = g took g0.
DomParams combine_edge(const DomParams& parent, const DomParams& child, OpCounter& counter,
                       MinTrace* trace = nullptr);

/// Glues two rooted graphs at their common root of weight w0. 5 additions
/// (one of them the subtraction of w0), 2 mins.
///
/// Trace bits: 0 = g0 took p1.g00 + p2.g0, 1 = g took g0.
DomParams merge_at_vertex(const DomParams& p1, const DomParams& p2, double w0, OpCounter& counter,
                          MinTrace* trace = nullptr);

/// First step of a fold whose first vertex is forced into the dominating
/// set: `forced` holds the parameters of the forced end, `next` those of its
/// neighbor on the path. 3 additions, 1 min.
///
/// Trace bit 0 = g took g0.
DomParams combine_forced(const DomParams& next, const DomParams& forced, OpCounter& counter,
                         MinTrace* trace = nullptr);

/// Rooted graphs hung on a path v_1 .. v_k and folded from v_1 toward v_k; the
/// result is rooted at v_k. 4(k-1) additions, 3(k-1) mins.
///
/// When `trace` is given it receives one entry per combine_edge step.
DomParams path_like_fold(std::span<const DomParams> chain, OpCounter& counter,
                         std::vector<MinTrace>* trace = nullptr);

/// As path_like_fold, but every dominating set considered must contain v_1.
/// The first step uses combine_forced, the remaining ones combine_edge.
/// Requires k >= 2. 4k - 5 additions, 3k - 5 mins.
DomParams d_closed_path_like_fold(std::span<const DomParams> chain, OpCounter& counter,
                                  std::vector<MinTrace>* trace = nullptr);

/// Min-branches taken by each pass of cycle_like, for dominating-set recovery.
struct CycleTrace {
  /// Open fold over the non-root vertices, far end toward the entry vertex.
  std::vector<MinTrace> open_path;
  /// Closed fold over r', far end, ..., entry vertex, r.
  std::vector<MinTrace> closed_through_root;
  /// Closed fold over far end, ..., entry vertex with the far end forced.
  std::vector<MinTrace> closed_far_end;
  /// Bit 0 = g0 took the far-end term, bit 1 = g took g0.
  MinTrace result;
};

/// Parameters of a cycle rooted at a bare vertex r of weight `root_weight`,
/// with rooted graphs hanging at the other cycle vertices.
///
/// `chain[i]` holds the parameters of the graph hanging at the i-th non-root
/// vertex in DFS order: chain.front() is the son of r through which the DFS
/// entered the cycle, chain.back() is the vertex closing the cycle back to r.
/// Requires chain.size() >= 2. Uses 12k - 17 additions and 9k - 14 mins for a
/// cycle of k = chain.size() + 1 vertices.
///
/// Graphs already hanging at r itself are not part of the input; glue them on
/// with merge_at_vertex afterwards.
DomParams cycle_like(std::span<const DomParams> chain, double root_weight, OpCounter& counter,
                     CycleTrace* trace = nullptr);

}  // namespace wdom

#endif  // WDOM_DOM_PARAMS_HPP
