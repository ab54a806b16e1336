#include "wdom/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace wdom {

OracleResult brute_force_gamma(const WeightedGraph& g, const OracleConstraints& constraints) {
  const std::size_t n = g.vertex_count();
  enum class Role : std::uint8_t { kFree, kIn, kOut, kDeleted };
  std::vector<Role> role(n, Role::kFree);
  auto assign = [&](const std::vector<VertexId>& ids, Role r) {
    for (VertexId v : ids) {
      if (v >= n) throw std::invalid_argument("oracle: constraint vertex out of range");
      if (role[v] != Role::kFree && role[v] != r) {
        throw std::invalid_argument("oracle: constraint sets overlap");
      }
      role[v] = r;
    }
  };
  assign(constraints.deleted, Role::kDeleted);
  assign(constraints.must_include, Role::kIn);
  assign(constraints.must_exclude, Role::kOut);

  // Compact indices over the surviving vertices.
  std::vector<VertexId> alive;
  std::vector<std::int32_t> index(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (role[v] == Role::kDeleted) continue;
    index[v] = static_cast<std::int32_t>(alive.size());
    alive.push_back(static_cast<VertexId>(v));
  }
  if (alive.size() > kOracleMaxVertices) {
    throw std::invalid_argument("oracle: more than 24 vertices to enumerate");
  }
  const std::size_t k = alive.size();

  // Closed neighborhoods restricted to surviving vertices.
  std::vector<std::uint32_t> closed(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    closed[i] = 1U << i;
    for (VertexId u : g.neighbors(alive[i])) {
      if (index[u] >= 0) closed[i] |= 1U << index[u];
    }
  }

  std::vector<std::size_t> free_vertices;
  std::uint32_t forced_mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Role r = role[alive[i]];
    if (r == Role::kFree) free_vertices.push_back(i);
    if (r == Role::kIn) forced_mask |= 1U << i;
  }

  // cover[i] counts chosen vertices whose closed neighborhood contains i.
  std::vector<std::uint32_t> cover(k, 0);
  std::size_t uncovered = k;
  auto toggle = [&](std::size_t i, bool on) {
    for (std::uint32_t m = closed[i]; m; m &= m - 1) {
      auto j = static_cast<std::size_t>(std::countr_zero(m));
      if (on) {
        if (cover[j]++ == 0) --uncovered;
      } else {
        if (--cover[j] == 0) ++uncovered;
      }
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (forced_mask & (1U << i)) toggle(i, true);
  }

  OracleResult result;
  std::uint32_t best_mask = 0;
  std::uint32_t current = forced_mask;
  auto consider = [&]() {
    ++result.evaluated_subsets;
    if (uncovered != 0) return;
    double w = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (current & (1U << i)) w += g.weight(alive[i]);
    }
    ExtWeight weight(w);
    if (weight < result.gamma) {
      result.gamma = weight;
      best_mask = current;
    }
  };

  consider();
  const std::uint64_t total = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: flip the free vertex at the lowest set bit of step.
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
    std::size_t i = free_vertices[bit];
    bool on = !(current & (1U << i));
    current ^= 1U << i;
    toggle(i, on);
    consider();
  }

  if (result.gamma.is_finite()) {
    std::vector<VertexId> witness;
    for (std::size_t i = 0; i < k; ++i) {
      if (best_mask & (1U << i)) witness.push_back(alive[i]);
    }
    result.witness = std::move(witness);
  }
  return result;
}

DomParams brute_force_params(const WeightedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("oracle: vertex out of range");
  DomParams p;
  p.g00 = brute_force_gamma(g, {.deleted = {v}}).gamma;
  p.g1 = brute_force_gamma(g, {.must_include = {v}}).gamma;
  p.g0 = brute_force_gamma(g, {.must_exclude = {v}}).gamma;
  p.g = brute_force_gamma(g).gamma;
  return p;
}

std::string format_oracle_result(const OracleResult& result) {
  std::string out = "gamma=" + format_weight(result.gamma) + "\n";
  if (result.witness) {
    out += "set=";
    for (std::size_t i = 0; i < result.witness->size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string((*result.witness)[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace wdom
