#include "wdom/dfs_cactus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace wdom {

namespace {

constexpr std::uint32_t kUnvisited = UINT32_MAX;

[[noreturn]] void fail_not_cactus(VertexId v, VertexId w) {
  throw NotCactusError("not a cactus: tree edge above vertex " + std::to_string(v) +
                       " lies on a second cycle (closed by back edge to " + std::to_string(w) + ")");
}

}  // namespace

DfsStructure build_dfs_structure(const WeightedGraph& g, VertexId root, DfsStats* stats) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw std::out_of_range("build_dfs_structure: root out of range");

  DfsStructure s;
  s.root = root;
  s.dfn.assign(n, kUnvisited);
  s.order.reserve(n);
  s.father.resize(n);
  s.root_of.resize(n);
  s.orien.resize(n);
  std::iota(s.father.begin(), s.father.end(), VertexId{0});
  std::iota(s.root_of.begin(), s.root_of.end(), VertexId{0});
  std::iota(s.orien.begin(), s.orien.end(), VertexId{0});
  s.ind.assign(n, 0);

  DfsStats local;
  // Position of the next unexamined adjacency entry per vertex.
  std::vector<std::size_t> cursor(n, 0);

  s.dfn[root] = 0;
  s.order.push_back(root);
  VertexId v = root;
  while (true) {
    auto nbrs = g.neighbors(v);
    if (cursor[v] == nbrs.size()) {
      if (v == root) break;
      v = s.father[v];
      continue;
    }
    VertexId w = nbrs[cursor[v]++];
    ++local.edge_examinations;
    if (s.dfn[w] == kUnvisited) {
      s.dfn[w] = static_cast<std::uint32_t>(s.order.size());
      s.order.push_back(w);
      s.father[w] = v;
      ++s.ind[v];
      v = w;
      continue;
    }
    // Tree edge seen from below, or a back edge already handled from its
    // lower end.
    if (w == s.father[v] || s.dfn[w] > s.dfn[v]) continue;

    // Back edge v -> w closes a cycle: label the tree path below w.
    if (s.root_of[v] != v) fail_not_cactus(v, w);
    s.root_of[v] = w;
    VertexId entry = s.father[v];
    for (VertexId u = s.father[v]; u != w; u = s.father[u]) {
      ++local.cycle_walk_steps;
      if (s.root_of[u] != u) fail_not_cactus(u, w);
      s.root_of[u] = w;
      entry = u;
    }
    for (VertexId x = v; x != w; x = s.father[x]) {
      ++local.cycle_walk_steps;
      s.orien[x] = entry;
    }
  }

  if (s.order.size() != n) throw NotCactusError("not a cactus: graph is disconnected");
  if (stats) *stats = local;
  return s;
}

char to_char(VertexClass c) {
  switch (c) {
    case VertexClass::C: return 'C';
    case VertexClass::G: return 'G';
    case VertexClass::H: return 'H';
  }
  return '?';
}

VertexClass classify_vertex(const DfsStructure& s, const WeightedGraph& g, VertexId v) {
  if (v >= s.size()) throw std::out_of_range("classify_vertex: vertex out of range");

  std::uint32_t sons_rooted_here = 0;
  std::uint32_t sons_on_own_cycle = 0;
  for (VertexId u : g.neighbors(v)) {
    if (u == s.root || s.father[u] != v) continue;
    if (s.root_of[u] == v) ++sons_rooted_here;
    if (s.root_of[v] != v && s.root_of[u] == s.root_of[v]) ++sons_on_own_cycle;
  }

  if (v == s.root) {
    if (sons_rooted_here == 0) return VertexClass::G;
    if (s.ind[v] == 1) return VertexClass::C;
    return VertexClass::H;
  }
  if (s.root_of[v] != v) {
    // The last vertex of a cycle has no son on that cycle, every other
    // non-root cycle vertex has exactly one.
    return s.ind[v] == sons_on_own_cycle ? VertexClass::C : VertexClass::H;
  }
  return sons_rooted_here > 0 ? VertexClass::H : VertexClass::G;
}

BlockDecomposition block_decomposition(const DfsStructure& s, const WeightedGraph& /*g*/) {
  const std::size_t n = s.size();
  BlockDecomposition out;
  if (n == 0) return out;
  if (n == 1) {
    out.blocks.emplace_back(GraftBlock{{s.root}});
    out.graft_count = 1;
    return out;
  }

  std::vector<std::int64_t> cycle_of_entry(n, -1);
  std::vector<CycleBlock> cycles;
  for (VertexId v : s.order) {
    if (!s.on_cycle_below_root(v)) continue;
    if (s.is_cycle_entry(v)) {
      cycle_of_entry[v] = static_cast<std::int64_t>(cycles.size());
      cycles.push_back(CycleBlock{{s.father[v]}});
    }
    cycles[static_cast<std::size_t>(cycle_of_entry[s.orien[v]])].vertices.push_back(v);
  }

  // Union-find over bridge edges (tree edges not on any cycle).
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<bool> in_graft(n, false);
  for (VertexId v : s.order) {
    if (v == s.root || s.on_cycle_below_root(v)) continue;
    VertexId f = s.father[v];
    in_graft[v] = in_graft[f] = true;
    parent[find(v)] = find(f);
  }
  std::vector<std::int64_t> graft_of(n, -1);
  std::vector<GraftBlock> grafts;
  for (VertexId v : s.order) {
    if (!in_graft[v]) continue;
    VertexId rep = find(v);
    if (graft_of[rep] < 0) {
      graft_of[rep] = static_cast<std::int64_t>(grafts.size());
      grafts.emplace_back();
    }
    grafts[static_cast<std::size_t>(graft_of[rep])].vertices.push_back(v);
  }

  out.cycle_count = cycles.size();
  out.graft_count = grafts.size();
  out.blocks.reserve(cycles.size() + grafts.size());
  for (auto& c : cycles) out.blocks.emplace_back(std::move(c));
  for (auto& t : grafts) out.blocks.emplace_back(std::move(t));
  return out;
}

SubcactusView subcactus_interval(const DfsStructure& s, std::uint32_t lo_dfn, std::uint32_t hi_dfn) {
  if (lo_dfn > hi_dfn || hi_dfn >= s.size()) {
    throw std::out_of_range("subcactus_interval: DFN range out of bounds");
  }
  SubcactusView view;
  view.root = s.order[lo_dfn];
  view.lo_dfn = lo_dfn;
  view.hi_dfn = hi_dfn;
  view.vertices = std::span<const VertexId>(s.order).subspan(lo_dfn, hi_dfn - lo_dfn + 1);
  return view;
}

}  // namespace wdom
