#include <map>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace wdom;
using namespace wdom::testing;

namespace {

void check_structure_invariants(const WeightedGraph& g, const DfsStructure& s) {
  const auto n = g.vertex_count();
  REQUIRE(s.size() == n);
  CHECK(s.dfn[s.root] == 0);
  CHECK(s.father[s.root] == s.root);
  std::vector<std::uint32_t> sons(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    REQUIRE(s.order[s.dfn[v]] == v);
    if (v != s.root) {
      CHECK(s.dfn[s.father[v]] < s.dfn[v]);
      CHECK(g.has_edge(v, s.father[v]));
      ++sons[s.father[v]];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    CHECK(s.ind[v] == sons[v]);
    if (s.root_of[v] == v) {
      CHECK(s.orien[v] == v);
      continue;
    }
    VertexId r = s.root_of[v];
    CHECK(s.dfn[r] < s.dfn[v]);
    // Walking fathers from v reaches r, and orien[v] is the cycle vertex just below r.
    VertexId x = v, below = v;
    while (x != r) {
      REQUIRE(s.root_of[x] == r);
      below = x;
      x = s.father[x];
    }
    CHECK(s.orien[v] == below);
    CHECK(s.father[s.orien[v]] == r);
  }
}

}  // namespace

TEST_CASE("single vertex") {
  auto g = unit_graph(1, {});
  auto s = build_dfs_structure(g, 0);
  CHECK(s.dfn == std::vector<std::uint32_t>{0});
  CHECK(s.father == std::vector<VertexId>{0});
  CHECK(s.root_of == std::vector<VertexId>{0});
  CHECK(s.orien == std::vector<VertexId>{0});
  CHECK(s.ind == std::vector<std::uint32_t>{0});
  CHECK(classify_vertex(s, g, 0) == VertexClass::G);
  auto blocks = block_decomposition(s, g);
  CHECK(blocks.block_count() == 1);
  CHECK(blocks.graft_count == 1);
}

TEST_CASE("triangle rooted at 0") {
  auto g = cycle_graph({1, 1, 1});
  auto s = build_dfs_structure(g, 0);
  CHECK(s.dfn == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(s.father == std::vector<VertexId>{0, 0, 1});
  CHECK(s.root_of == std::vector<VertexId>{0, 0, 0});
  CHECK(s.orien == std::vector<VertexId>{0, 1, 1});
  CHECK(s.ind == std::vector<std::uint32_t>{1, 1, 0});
  CHECK(s.is_cycle_entry(1));
  CHECK_FALSE(s.is_cycle_entry(2));
  for (VertexId v = 0; v < 3; ++v) CHECK(classify_vertex(s, g, v) == VertexClass::C);

  auto blocks = block_decomposition(s, g);
  CHECK(blocks.block_count() == 1);
  REQUIRE(std::holds_alternative<CycleBlock>(blocks.blocks[0]));
  CHECK(std::get<CycleBlock>(blocks.blocks[0]).vertices == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("P3 rooted at 0") {
  auto g = unit_graph(3, {{0, 1}, {1, 2}});
  auto s = build_dfs_structure(g, 0);
  CHECK(s.root_of == std::vector<VertexId>{0, 1, 2});
  CHECK(s.orien == std::vector<VertexId>{0, 1, 2});
  CHECK(s.ind == std::vector<std::uint32_t>{1, 1, 0});
  CHECK(classify_vertex(s, g, 1) == VertexClass::G);
}

TEST_CASE("P5 is one graft") {
  auto g = path_graph({1, 1, 1, 1, 1});
  auto blocks = block_decomposition(build_dfs_structure(g, 2), g);
  CHECK(blocks.block_count() == 1);
  CHECK(blocks.graft_count == 1);
  CHECK(std::get<GraftBlock>(blocks.blocks[0]).vertices.size() == 5);
}

TEST_CASE("triangle with a pendant edge") {
  auto g = unit_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  for (VertexId root = 0; root < 4; ++root) {
    auto s = build_dfs_structure(g, root);
    CHECK(classify_vertex(s, g, 0) == VertexClass::H);
    CHECK(classify_vertex(s, g, 1) == VertexClass::C);
    CHECK(classify_vertex(s, g, 2) == VertexClass::C);
    CHECK(classify_vertex(s, g, 3) == VertexClass::G);
    auto blocks = block_decomposition(s, g);
    CHECK(blocks.block_count() == 2);
    CHECK(blocks.cycle_count == 1);
    CHECK(blocks.graft_count == 1);
  }
}

TEST_CASE("hinge rooting two cycles keeps root_of = self") {
  auto g = unit_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto s = build_dfs_structure(g, 0);
  CHECK(s.root_of[0] == 0);
  CHECK(s.root_of[1] == 0);
  CHECK(s.root_of[3] == 0);
  CHECK(s.orien[2] == 1);
  CHECK(s.orien[4] == 3);
  CHECK(classify_vertex(s, g, 0) == VertexClass::H);
  CHECK(block_decomposition(s, g).cycle_count == 2);
}

TEST_CASE("builder rejects what the validator rejects") {
  CHECK_THROWS_AS(build_dfs_structure(unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 0),
                  NotCactusError);
  CHECK_THROWS_AS(build_dfs_structure(unit_graph(3, {{0, 1}}), 0), NotCactusError);
  CHECK_THROWS_AS(build_dfs_structure(unit_graph(3, {{0, 1}}), 3), std::out_of_range);
  CHECK_THROWS_AS(classify_vertex(build_dfs_structure(unit_graph(1, {}), 0), unit_graph(1, {}), 1),
                  std::out_of_range);

  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = random_graph(seed, 2 + seed % 9, 0.2 + 0.05 * static_cast<double>(seed % 6));
    bool cactus = validate_cactus(g).is_cactus;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (cactus) {
        CHECK_NOTHROW(build_dfs_structure(g, root));
      } else {
        CHECK_THROWS_AS(build_dfs_structure(g, root), NotCactusError);
      }
    }
  }
}

TEST_CASE("structure invariants from every root") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = small_integer_cactus(seed, 1 + seed % 40, static_cast<double>(seed % 5) / 4.0);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      check_structure_invariants(g, build_dfs_structure(g, root));
    }
  }
}

TEST_CASE("vertex classes match the definitions") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto g = small_integer_cactus(seed, 1 + seed % 60, static_cast<double>(seed % 5) / 4.0);
    std::vector<VertexClass> expected;
    for (VertexId v = 0; v < g.vertex_count(); ++v) expected.push_back(definitional_class(g, v));
    for (VertexId root = 0; root < g.vertex_count(); root += 1 + seed % 3) {
      auto s = build_dfs_structure(g, root);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE_MESSAGE(classify_vertex(s, g, v) == expected[v],
                        "seed " << seed << " root " << root << " vertex " << v);
      }
    }
  }
}

TEST_CASE("the last DFS vertex on a cycle") {
  int on_cycle = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = small_integer_cactus(seed, 2 + seed % 50, 0.3 + 0.7 * static_cast<double>(seed % 3) / 2.0);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      auto s = build_dfs_structure(g, root);
      VertexId l = s.order.back();
      if (s.root_of[l] == l) continue;
      ++on_cycle;
      VertexId r = s.root_of[l];

      // The non-father neighbor of l on its cycle closes the cycle at its root.
      CHECK(g.has_edge(l, r));
      CHECK(classify_vertex(s, g, l) == VertexClass::C);

      // Each cycle vertex's hanging subcactus fills the DFN gap before the next cycle vertex.
      std::vector<VertexId> cycle{l};
      while (cycle.back() != r) cycle.push_back(s.father[cycle.back()]);
      std::reverse(cycle.begin(), cycle.end());
      std::set<VertexId> on(cycle.begin(), cycle.end());
      for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
        VertexId w = cycle[i], next = cycle[i + 1];
        CHECK(hanging_set(g, w, on) == dfn_range(s, s.dfn[w], s.dfn[next] - 1));
      }
      CHECK(hanging_set(g, l, on) == std::vector<VertexId>{l});
    }
  }
  CHECK(on_cycle > 1000);
}

TEST_CASE("blocks partition the edges") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = small_integer_cactus(seed, 1 + seed % 60, static_cast<double>(seed % 5) / 4.0);
    auto s = build_dfs_structure(g, static_cast<VertexId>(seed % g.vertex_count()));
    auto d = block_decomposition(s, g);
    CHECK(d.block_count() == d.cycle_count + d.graft_count);
    REQUIRE(d.block_count() >= 1);

    std::map<Edge, int> owner_count;
    std::size_t total_vertices = 0;
    std::vector<int> graft_of(g.vertex_count(), -1);
    int graft_id = 0;
    for (const auto& b : d.blocks) {
      if (auto* c = std::get_if<CycleBlock>(&b)) {
        REQUIRE(c->vertices.size() >= 3);
        total_vertices += c->vertices.size();
        for (std::size_t i = 0; i < c->vertices.size(); ++i) {
          VertexId a = c->vertices[i], z = c->vertices[(i + 1) % c->vertices.size()];
          REQUIRE(g.has_edge(a, z));
          ++owner_count[{std::min(a, z), std::max(a, z)}];
        }
      } else {
        const auto& vs = std::get<GraftBlock>(b).vertices;
        total_vertices += vs.size();
        CHECK(induces_connected(g, vs));
        for (std::size_t i = 1; i < vs.size(); ++i) CHECK(s.dfn[vs[i - 1]] < s.dfn[vs[i]]);
        for (VertexId v : vs) {
          if (graft_of[v] == -1) graft_of[v] = graft_id;
        }
        ++graft_id;
      }
    }
    std::size_t graft_edges = 0;
    for (auto e : g.edges()) {
      if (edge_on_cycle(g, e.first, e.second)) {
        CHECK(owner_count[e] == 1);
      } else {
        CHECK(owner_count[e] == 0);
        ++graft_edges;
      }
    }
    // Grafts are trees, so they account for exactly the bridges.
    std::size_t graft_vertex_sum = 0;
    for (const auto& b : d.blocks) {
      if (auto* gb = std::get_if<GraftBlock>(&b)) graft_vertex_sum += gb->vertices.size() - 1;
    }
    CHECK(graft_vertex_sum == graft_edges);
    CHECK(total_vertices - d.block_count() <= g.vertex_count());
  }
}

TEST_CASE("subcactus intervals") {
  auto g = unit_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto s = build_dfs_structure(g, 0);
  auto whole = subcactus_interval(s, 0, 3);
  CHECK(whole.vertices.size() == 4);
  CHECK(whole.root == 0);
  auto one = subcactus_interval(s, 2, 2);
  CHECK(one.vertices.size() == 1);
  CHECK(one.root == s.order[2]);
  CHECK_THROWS_AS(subcactus_interval(s, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(subcactus_interval(s, 0, 4), std::out_of_range);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto cg = small_integer_cactus(seed, 2 + seed % 50, 0.5);
    auto cs = build_dfs_structure(cg, 0);
    for (VertexId v = 0; v < cg.vertex_count(); ++v) {
      if (v == cs.root) continue;
      VertexId w = cs.father[v];
      auto view = subcactus_interval(cs, cs.dfn[w], cs.dfn[v] - 1);
      CHECK(view.root == w);
      CHECK(induces_connected(cg, view.vertices));
      for (VertexId x : view.vertices) {
        if (x != w) CHECK_FALSE(cg.has_edge(x, v));
      }
    }
  }
}

TEST_CASE("traversal statistics are linear in the graph size") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = small_integer_cactus(seed, 100 + seed * 20, 0.5);
    DfsStats stats;
    build_dfs_structure(g, 0, &stats);
    CHECK(stats.edge_examinations == 2 * g.edge_count());
    CHECK(stats.cycle_walk_steps <= 2 * (g.vertex_count() - 1));
  }
}
