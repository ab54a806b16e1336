// Test-only graph builders and independent reference checks. Nothing here
// calls into the DFS structure or the solver.

#ifndef WDOM_TESTS_SUPPORT_HPP
#define WDOM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "wdom/dfs_cactus.hpp"
#include "wdom/generator.hpp"
#include "wdom/graph.hpp"

namespace wdom::testing {

inline WeightedGraph from_edges(std::vector<double> weights, const std::vector<Edge>& edges) {
  WeightedGraph g(std::move(weights));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline WeightedGraph path_graph(std::vector<double> weights) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i < weights.size(); ++i) edges.emplace_back(i - 1, i);
  return from_edges(std::move(weights), edges);
}

/// Vertex 0 is adjacent to 1 first, so a DFS from 0 walks 0, 1, 2, ...
inline WeightedGraph cycle_graph(std::vector<double> weights) {
  std::vector<Edge> edges;
  auto k = static_cast<VertexId>(weights.size());
  for (VertexId i = 1; i < k; ++i) edges.emplace_back(i - 1, i);
  edges.emplace_back(k - 1, 0);
  return from_edges(std::move(weights), edges);
}

inline WeightedGraph unit_graph(std::size_t n, const std::vector<Edge>& edges) {
  return from_edges(std::vector<double>(n, 1.0), edges);
}

/// Erdos-Renyi style graph, possibly disconnected.
inline WeightedGraph random_graph(std::uint64_t seed, std::size_t n, double p, int max_weight = 10) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wdist(1, max_weight);
  std::bernoulli_distribution coin(p);
  std::vector<double> weights(n);
  for (auto& w : weights) w = wdist(rng);
  WeightedGraph g(std::move(weights));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline bool connected_without(const WeightedGraph& g, VertexId from, VertexId to, Edge skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (x == to) return true;
    for (VertexId y : g.neighbors(x)) {
      if ((x == skip.first && y == skip.second) || (x == skip.second && y == skip.first)) continue;
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  return false;
}

/// An edge lies on a cycle iff its endpoints stay connected without it.
inline bool edge_on_cycle(const WeightedGraph& g, VertexId u, VertexId v) {
  return connected_without(g, u, v, {u, v});
}

inline bool vertex_on_cycle(const WeightedGraph& g, VertexId v) {
  for (VertexId u : g.neighbors(v)) {
    if (edge_on_cycle(g, v, u)) return true;
  }
  return false;
}

/// C: on a cycle with degree 2; G: on no cycle; H: on a cycle with degree >= 3.
inline VertexClass definitional_class(const WeightedGraph& g, VertexId v) {
  if (!vertex_on_cycle(g, v)) return VertexClass::G;
  return g.degree(v) == 2 ? VertexClass::C : VertexClass::H;
}

/// All simple cycles as sorted edge lists, each cycle reported once.
inline std::set<std::vector<Edge>> enumerate_simple_cycles(const WeightedGraph& g) {
  std::set<std::vector<Edge>> cycles;
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<VertexId> path;
  std::vector<bool> on_path(n, false);
  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId x) {
    for (VertexId y : g.neighbors(x)) {
      if (y < start) continue;
      if (y == start && path.size() >= 3) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < path.size(); ++i) {
          VertexId a = path[i], b = path[(i + 1) % path.size()];
          edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        cycles.insert(edges);
        continue;
      }
      if (on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      extend(start, y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return cycles;
}

inline bool is_connected(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.vertex_count();
}

inline bool dominates(const WeightedGraph& g, const std::vector<VertexId>& set) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (VertexId v : set) {
    covered[v] = true;
    for (VertexId u : g.neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

inline double set_weight(const WeightedGraph& g, const std::vector<VertexId>& set) {
  double w = 0;
  for (VertexId v : set) w += g.weight(v);
  return w;
}

inline WeightedGraph scaled(const WeightedGraph& g, double c) {
  std::vector<double> weights(g.weights().begin(), g.weights().end());
  for (auto& w : weights) w *= c;
  return from_edges(std::move(weights), g.edges());
}

/// Small cactus with integer weights in [1, 10].
inline WeightedGraph small_integer_cactus(std::uint64_t seed, std::size_t n_target, double cycle_fraction,
                                          std::size_t max_cycle_len = 6) {
  return generate_random_cactus({.seed = seed,
                                 .n_target = n_target,
                                 .cycle_fraction = cycle_fraction,
                                 .max_cycle_len = max_cycle_len,
                                 .weight_low = 1,
                                 .weight_high = 10,
                                 .integer_weights = true});
}

/// Vertices reachable from w without entering another vertex of `cycle`.
inline std::vector<VertexId> hanging_set(const WeightedGraph& g, VertexId w, const std::set<VertexId>& cycle) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{w}, out;
  seen[w] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (VertexId y : g.neighbors(x)) {
      if (seen[y] || cycle.count(y)) continue;
      seen[y] = true;
      stack.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// order[lo..hi], sorted by vertex id.
inline std::vector<VertexId> dfn_range(const DfsStructure& s, std::uint32_t lo, std::uint32_t hi) {
  std::vector<VertexId> out(s.order.begin() + lo, s.order.begin() + hi + 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool induces_connected(const WeightedGraph& g, std::span<const VertexId> vs) {
  std::set<VertexId> in(vs.begin(), vs.end());
  std::set<VertexId> seen{vs.front()};
  std::vector<VertexId> stack{vs.front()};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(x)) {
      if (in.count(y) && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen.size() == in.size();
}

struct Rooted {
  WeightedGraph g;
  VertexId root = 0;
};

inline Rooted random_rooted_cactus(std::uint64_t seed, std::size_t n_target, double cycle_fraction = 0.5) {
  auto g = small_integer_cactus(seed, n_target, cycle_fraction, 5);
  auto root = static_cast<VertexId>((seed * 2654435761ULL) % g.vertex_count());
  return {std::move(g), root};
}

/// Copies the graphs side by side; returns the id offset of each part.
inline std::pair<WeightedGraph, std::vector<VertexId>> disjoint_union(const std::vector<const WeightedGraph*>& parts,
                                                                      std::vector<double> extra = {}) {
  std::vector<double> weights = std::move(extra);
  std::vector<VertexId> offsets;
  for (auto* p : parts) {
    offsets.push_back(static_cast<VertexId>(weights.size()));
    weights.insert(weights.end(), p->weights().begin(), p->weights().end());
  }
  WeightedGraph g(std::move(weights));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i]->edges()) g.add_edge(u + offsets[i], v + offsets[i]);
  }
  return {std::move(g), offsets};
}

/// a and b joined by an edge between their roots, rooted at a's root.
inline Rooted join_by_edge(const Rooted& a, const Rooted& b) {
  auto [g, off] = disjoint_union({&a.g, &b.g});
  g.add_edge(a.root, b.root + off[1]);
  return {std::move(g), a.root};
}

/// a and b glued at their roots, which become one vertex carrying a's root weight.
inline Rooted glue_at_root(const Rooted& a, const Rooted& b) {
  std::vector<double> weights(a.g.weights().begin(), a.g.weights().end());
  std::vector<VertexId> map(b.g.vertex_count());
  for (VertexId v = 0; v < b.g.vertex_count(); ++v) {
    if (v == b.root) {
      map[v] = a.root;
    } else {
      map[v] = static_cast<VertexId>(weights.size());
      weights.push_back(b.g.weight(v));
    }
  }
  WeightedGraph g(std::move(weights));
  for (auto [u, v] : a.g.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.g.edges()) g.add_edge(map[u], map[v]);
  return {std::move(g), a.root};
}

/// Parts hung on a path of their roots, in order. Returns the graph and the
/// root ids along the path.
inline std::pair<WeightedGraph, std::vector<VertexId>> hang_on_path(const std::vector<Rooted>& parts) {
  std::vector<const WeightedGraph*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p.g);
  auto [g, off] = disjoint_union(ptrs);
  std::vector<VertexId> roots;
  for (std::size_t i = 0; i < parts.size(); ++i) roots.push_back(parts[i].root + off[i]);
  for (std::size_t i = 1; i < roots.size(); ++i) g.add_edge(roots[i - 1], roots[i]);
  return {std::move(g), roots};
}

/// A cycle through a bare vertex 0 of weight root_weight and the part roots
/// in order: 0, parts[0].root, ..., parts.back().root, back to 0.
inline WeightedGraph hang_on_cycle(double root_weight, const std::vector<Rooted>& parts) {
  std::vector<const WeightedGraph*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p.g);
  auto [g, off] = disjoint_union(ptrs, {root_weight});
  VertexId prev = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    g.add_edge(prev, parts[i].root + off[i]);
    prev = parts[i].root + off[i];
  }
  g.add_edge(prev, 0);
  return std::move(g);
}

}  // namespace wdom::testing

#endif  // WDOM_TESTS_SUPPORT_HPP
