#include "wdom/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wdom {

WeightedGraph generate_random_cactus(const CactusGenParams& p) {
  if (p.n_target < 1) throw std::invalid_argument("generator: n_target must be >= 1");
  if (!(p.cycle_fraction >= 0.0 && p.cycle_fraction <= 1.0)) {
    throw std::invalid_argument("generator: cycle_fraction must lie in [0, 1]");
  }
  if (p.max_cycle_len < 3) throw std::invalid_argument("generator: max_cycle_len must be >= 3");
  if (!(p.weight_low > 0.0) || !std::isfinite(p.weight_high) || p.weight_low > p.weight_high) {
    throw std::invalid_argument("generator: weight range must satisfy 0 < low <= high");
  }
  double int_low = std::ceil(p.weight_low), int_high = std::floor(p.weight_high);
  if (p.integer_weights && int_low > int_high) {
    throw std::invalid_argument("generator: weight range contains no integer");
  }

  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution pick_cycle(p.cycle_fraction);
  std::uniform_int_distribution<std::size_t> cycle_len(3, p.max_cycle_len);

  std::size_t n = 1;
  std::vector<Edge> edges;
  while (n < p.n_target) {
    auto anchor = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    if (pick_cycle(rng)) {
      std::size_t len = cycle_len(rng);
      VertexId prev = anchor;
      for (std::size_t i = 1; i < len; ++i) {
        auto fresh = static_cast<VertexId>(n++);
        edges.emplace_back(prev, fresh);
        prev = fresh;
      }
      edges.emplace_back(prev, anchor);
    } else {
      auto fresh = static_cast<VertexId>(n++);
      edges.emplace_back(anchor, fresh);
    }
  }

  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<double> weights(n);
  if (p.integer_weights) {
    std::uniform_int_distribution<long long> dist(static_cast<long long>(int_low),
                                                  static_cast<long long>(int_high));
    for (auto& w : weights) w = static_cast<double>(dist(rng));
  } else {
    std::uniform_real_distribution<double> dist(p.weight_low, p.weight_high);
    for (auto& w : weights) w = p.weight_low == p.weight_high ? p.weight_low : dist(rng);
  }

  WeightedGraph g(std::move(weights));
  for (auto [u, v] : edges) g.add_edge(label[u], label[v]);
  return g;
}

}  // namespace wdom
