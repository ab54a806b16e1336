#include "wdom/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdom {

// Every DomParams value produced during a recorded solve becomes a node; the
// node remembers its operands and the min branches it took, which is enough
// to expand any of its four states into states of its operands.
class Derivation {
 public:
  enum class Kind : std::uint8_t { kLeaf, kEdge, kMerge, kForced, kCycle };

  struct Node {
    Kind kind;
    MinTrace trace;
    std::uint32_t a = 0;  // leaf: the vertex
    std::uint32_t b = 0;
    std::uint32_t c = 0;
  };

  std::uint32_t leaf(VertexId v) { return push({Kind::kLeaf, {}, v}); }
  std::uint32_t edge(std::uint32_t parent, std::uint32_t child, MinTrace t) {
    return push({Kind::kEdge, t, parent, child});
  }
  std::uint32_t merge(std::uint32_t p1, std::uint32_t p2, MinTrace t) {
    return push({Kind::kMerge, t, p1, p2});
  }
  std::uint32_t forced(std::uint32_t next, std::uint32_t forced_end, MinTrace t) {
    return push({Kind::kForced, t, next, forced_end});
  }
  std::uint32_t cycle(std::uint32_t open, std::uint32_t closed, std::uint32_t far, MinTrace t) {
    return push({Kind::kCycle, t, open, closed, far});
  }

  void set_root(std::uint32_t node) { root_ = node; }

  std::vector<VertexId> expand(std::size_t vertex_count) const;

 private:
  std::uint32_t push(Node node) {
    nodes_.push_back(node);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
};

namespace {

enum class State : std::uint8_t { k00, k1, k0, kBest };

struct Request {
  std::uint32_t node;
  State state;
};

}  // namespace

std::vector<VertexId> Derivation::expand(std::size_t vertex_count) const {
  std::vector<bool> chosen(vertex_count, false);
  std::vector<Request> stack{{root_, State::kBest}};
  while (!stack.empty()) {
    auto [id, state] = stack.back();
    stack.pop_back();
    const Node& node = nodes_[id];
    const MinTrace t = node.trace;
    switch (node.kind) {
      case Kind::kLeaf:
        if (state == State::k0) throw std::logic_error("extract: leaf requested without its vertex");
        if (state != State::k00) chosen[node.a] = true;
        break;
      case Kind::kEdge:
        switch (state) {
          case State::k00: stack.push_back({node.a, State::k00}); stack.push_back({node.b, State::kBest}); break;
          case State::k1:
            stack.push_back({node.a, State::k1});
            stack.push_back({node.b, t.second(0) ? State::k00 : State::k1});
            break;
          case State::k0:
            if (t.second(1)) {
              stack.push_back({node.a, State::k00});
              stack.push_back({node.b, State::k1});
            } else {
              stack.push_back({node.a, State::k0});
              stack.push_back({node.b, State::kBest});
            }
            break;
          case State::kBest: stack.push_back({id, t.second(2) ? State::k0 : State::k1}); break;
        }
        break;
      case Kind::kMerge:
        switch (state) {
          case State::k00: stack.push_back({node.a, State::k00}); stack.push_back({node.b, State::k00}); break;
          case State::k1: stack.push_back({node.a, State::k1}); stack.push_back({node.b, State::k1}); break;
          case State::k0:
            if (t.second(0)) {
              stack.push_back({node.a, State::k00});
              stack.push_back({node.b, State::k0});
            } else {
              stack.push_back({node.a, State::k0});
              stack.push_back({node.b, State::k00});
            }
            break;
          case State::kBest: stack.push_back({id, t.second(1) ? State::k0 : State::k1}); break;
        }
        break;
      case Kind::kForced:
        switch (state) {
          case State::k1: stack.push_back({node.a, State::k1}); stack.push_back({node.b, State::k1}); break;
          case State::k00:
          case State::k0: stack.push_back({node.a, State::k00}); stack.push_back({node.b, State::k1}); break;
          case State::kBest: stack.push_back({id, t.second(0) ? State::k0 : State::k1}); break;
        }
        break;
      case Kind::kCycle:
        switch (state) {
          case State::k00: stack.push_back({node.a, State::kBest}); break;
          case State::k1: stack.push_back({node.b, State::k1}); break;
          case State::k0:
            if (t.second(0)) {
              stack.push_back({node.c, State::kBest});
            } else {
              stack.push_back({node.a, State::k1});
            }
            break;
          case State::kBest: stack.push_back({id, t.second(1) ? State::k0 : State::k1}); break;
        }
        break;
    }
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (chosen[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

namespace {

void check_structure(const WeightedGraph& g, const DfsStructure& s) {
  if (g.vertex_count() == 0) throw NotCactusError("not a cactus: empty graph");
  if (s.size() != g.vertex_count()) {
    throw std::invalid_argument("solver: DFS structure does not match the graph");
  }
}

SolveResult finish(const WeightedGraph& g, const DfsStructure& s, std::vector<DomParams>& params,
                   OpCounter counter, std::shared_ptr<Derivation> derivation,
                   const std::vector<std::uint32_t>& node_of) {
  SolveResult result;
  result.root_params = params[s.root];
  result.gamma = result.root_params.g;
  result.counter = counter;
  if (derivation) {
    derivation->set_root(node_of[s.root]);
    result.derivation = std::move(derivation);
    result.dominating_set = extract_dominating_set(g, result);
  }
  return result;
}

}  // namespace

SolveResult solve_tree(const WeightedGraph& g, const DfsStructure& s, const SolveOptions& opts) {
  check_structure(g, s);
  for (VertexId v : s.order) {
    if (s.on_cycle_below_root(v)) throw std::invalid_argument("solve_tree: input contains a cycle");
  }
  const std::size_t n = g.vertex_count();
  std::vector<DomParams> params(n);
  for (std::size_t v = 0; v < n; ++v) params[v] = init_params(g.weight(static_cast<VertexId>(v)));

  std::shared_ptr<Derivation> derivation;
  std::vector<std::uint32_t> node_of;
  if (opts.record_choices) {
    derivation = std::make_shared<Derivation>();
    node_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) node_of[v] = derivation->leaf(static_cast<VertexId>(v));
  }

  OpCounter counter;
  for (std::size_t pos = n; pos-- > 1;) {
    VertexId v = s.order[pos];
    VertexId w = s.father[v];
    MinTrace t;
    params[w] = combine_edge(params[w], params[v], counter, derivation ? &t : nullptr);
    if (derivation) node_of[w] = derivation->edge(node_of[w], node_of[v], t);
  }
  return finish(g, s, params, counter, std::move(derivation), node_of);
}

SolveResult solve_cactus(const WeightedGraph& g, const DfsStructure& s, const SolveOptions& opts) {
  check_structure(g, s);
  const std::size_t n = g.vertex_count();
  std::vector<DomParams> params(n);
  for (std::size_t v = 0; v < n; ++v) params[v] = init_params(g.weight(static_cast<VertexId>(v)));

  std::shared_ptr<Derivation> derivation;
  std::vector<std::uint32_t> node_of;
  if (opts.record_choices) {
    derivation = std::make_shared<Derivation>();
    node_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) node_of[v] = derivation->leaf(static_cast<VertexId>(v));
  }

  // Deepest (highest DFN) vertex of each cycle, keyed by the cycle's entry son.
  std::vector<VertexId> cycle_last(n);
  for (VertexId v : s.order) {
    if (s.on_cycle_below_root(v)) cycle_last[s.orien[v]] = v;
  }

  OpCounter counter;
  std::vector<VertexId> cycle_vertices;
  std::vector<DomParams> chain;
  CycleTrace cycle_trace;

  for (std::size_t pos = n; pos-- > 1;) {
    const VertexId v = s.order[pos];
    if (!s.on_cycle_below_root(v)) {
      const VertexId w = s.father[v];
      MinTrace t;
      params[w] = combine_edge(params[w], params[v], counter, derivation ? &t : nullptr);
      if (derivation) node_of[w] = derivation->edge(node_of[w], node_of[v], t);
      continue;
    }
    if (!s.is_cycle_entry(v)) continue;

    // Cycle table, from the last cycle vertex up the father links to the
    // entry son; reversed into DFS order for cycle_like.
    const VertexId r = s.father[v];
    cycle_vertices.clear();
    for (VertexId x = cycle_last[v];; x = s.father[x]) {
      cycle_vertices.push_back(x);
      if (x == v) break;
    }
    std::reverse(cycle_vertices.begin(), cycle_vertices.end());
    chain.clear();
    for (VertexId x : cycle_vertices) chain.push_back(params[x]);

    const double wr = g.weight(r);
    cycle_trace = CycleTrace{};
    DomParams cycle = cycle_like(chain, wr, counter, derivation ? &cycle_trace : nullptr);
    MinTrace t_merge;
    params[r] = merge_at_vertex(params[r], cycle, wr, counter, derivation ? &t_merge : nullptr);

    if (derivation) {
      Derivation& d = *derivation;
      const std::size_t last = cycle_vertices.size() - 1;
      auto node = [&](std::size_t i) { return node_of[cycle_vertices[i]]; };

      std::size_t k = 0;
      std::uint32_t open = node(last);
      for (std::size_t i = last; i-- > 0;) open = d.edge(node(i), open, cycle_trace.open_path[k++]);

      k = 0;
      std::uint32_t closed = d.forced(node(last), d.leaf(r), cycle_trace.closed_through_root[k++]);
      for (std::size_t i = last; i-- > 0;) {
        closed = d.edge(node(i), closed, cycle_trace.closed_through_root[k++]);
      }
      closed = d.edge(d.leaf(r), closed, cycle_trace.closed_through_root[k++]);

      k = 0;
      std::uint32_t far = d.forced(node(last - 1), node(last), cycle_trace.closed_far_end[k++]);
      for (std::size_t i = last - 1; i-- > 0;) {
        far = d.edge(node(i), far, cycle_trace.closed_far_end[k++]);
      }

      std::uint32_t cyc = d.cycle(open, closed, far, cycle_trace.result);
      node_of[r] = d.merge(node_of[r], cyc, t_merge);
    }
  }
  return finish(g, s, params, counter, std::move(derivation), node_of);
}

SolveResult solve(const WeightedGraph& g, VertexId root, const SolveOptions& opts) {
  if (g.vertex_count() == 0) throw NotCactusError("not a cactus: empty graph");
  DfsStructure s = build_dfs_structure(g, root);
  return solve_cactus(g, s, opts);
}

std::vector<VertexId> extract_dominating_set(const WeightedGraph& g, const SolveResult& result) {
  if (!result.derivation) {
    throw std::logic_error("extract_dominating_set: solve ran without record_choices");
  }
  return result.derivation->expand(g.vertex_count());
}

std::string format_solve_result(const SolveResult& result, std::size_t block_count) {
  std::string out = "gamma=" + format_weight(result.gamma) + "\n";
  out += "additions=" + std::to_string(result.counter.additions) + "\n";
  out += "min_ops=" + std::to_string(result.counter.min_ops) + "\n";
  out += "blocks=" + std::to_string(block_count) + "\n";
  if (result.dominating_set) {
    out += "set=";
    for (std::size_t i = 0; i < result.dominating_set->size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string((*result.dominating_set)[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace wdom
