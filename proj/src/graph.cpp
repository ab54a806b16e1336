#include "wdom/graph.hpp"

#include <algorithm>
#include <cmath>

namespace wdom {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<double> weights)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw std::invalid_argument("WeightedGraph: weights must be positive and finite");
    }
  }
}

void WeightedGraph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("WeightedGraph: vertex id out of range");
  }
  if (u == v) throw std::invalid_argument("WeightedGraph: self-loop");
  if (!edge_keys_.insert(edge_key(u, v)).second) {
    throw std::invalid_argument("WeightedGraph: duplicate edge");
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  ++edge_count_;
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  return edge_keys_.contains(edge_key(u, v));
}

// Iterative Tarjan biconnected components over an edge stack. A component is
// admissible in a cactus iff it is a single edge or |E| == |V| (a cycle).
CactusReport validate_cactus(const WeightedGraph& g) {
  CactusReport report;
  const std::size_t n = g.vertex_count();
  if (n == 0) return report;

  constexpr std::uint32_t kUnseen = 0;
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> next_index(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexId> call_stack;
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t timer = 0;
  std::uint32_t component_stamp = 0;
  std::size_t components = 0;

  auto close_component = [&](VertexId u, VertexId v) {
    ++component_stamp;
    std::size_t edges = 0, vertices = 0;
    Edge last{};
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      for (VertexId x : {e.first, e.second}) {
        if (stamp[x] != component_stamp) {
          stamp[x] = component_stamp;
          ++vertices;
        }
      }
      last = e;
      if (e == Edge{u, v}) break;
    }
    if (edges > 1 && edges != vertices && !report.witness) {
      report.witness = Edge{std::min(last.first, last.second), std::max(last.first, last.second)};
    }
  };

  for (VertexId start = 0; start < n; ++start) {
    if (disc[start] != kUnseen) continue;
    ++components;
    disc[start] = low[start] = ++timer;
    parent[start] = start;
    call_stack.push_back(start);
    while (!call_stack.empty()) {
      VertexId u = call_stack.back();
      auto nbrs = g.neighbors(u);
      if (next_index[u] < nbrs.size()) {
        VertexId v = nbrs[next_index[u]++];
        if (disc[v] == kUnseen) {
          edge_stack.emplace_back(u, v);
          parent[v] = u;
          disc[v] = low[v] = ++timer;
          call_stack.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          edge_stack.emplace_back(u, v);
          low[u] = std::min(low[u], disc[v]);
        }
        continue;
      }
      call_stack.pop_back();
      if (u == start) continue;
      VertexId p = parent[u];
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) close_component(p, u);
    }
  }

  report.is_connected = components == 1;
  report.is_cactus = report.is_connected && !report.witness;
  return report;
}

}  // namespace wdom
