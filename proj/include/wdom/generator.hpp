#ifndef WDOM_GENERATOR_HPP
#define WDOM_GENERATOR_HPP

#include <cstdint>

#include "wdom/graph.hpp"

namespace wdom {

struct CactusGenParams {
  std::uint64_t seed = 1;
  std::size_t n_target = 1;
  /// Probability that a growth step attaches a cycle instead of a pendant edge.
  double cycle_fraction = 0.3;
  std::size_t max_cycle_len = 6;
  double weight_low = 1.0;
  double weight_high = 10.0;
  /// Draw integer weights uniformly from [ceil(low), floor(high)].
  bool integer_weights = false;
};

/// Grows a connected cactus one block at a time: each step picks a uniformly
/// random existing vertex and attaches either a pendant edge or a cycle of
/// length uniform in [3, max_cycle_len]. Vertex ids are then relabelled by a
/// seeded permutation and the edge list shuffled, so vertex 0 is not
/// systematically the first grown vertex.
///
/// The vertex count lands in [n_target, n_target + max_cycle_len - 2].
/// Output depends only on the parameters.
WeightedGraph generate_random_cactus(const CactusGenParams& params);

}  // namespace wdom

#endif  // WDOM_GENERATOR_HPP
