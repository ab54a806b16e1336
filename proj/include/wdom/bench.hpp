#ifndef WDOM_BENCH_HPP
#define WDOM_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdom/ext_weight.hpp"

namespace wdom {

struct BenchRow {
  std::size_t n = 0;
  std::size_t b = 0;
  std::uint64_t additions = 0;
  std::uint64_t min_ops = 0;
  std::uint64_t add_bound = 0;  // 12n + 5b
  std::uint64_t min_bound = 0;  // 9n + 2b
  std::chrono::nanoseconds wall_time{0};
  ExtWeight gamma;
  std::uint64_t generator_seed = 0;
  /// Adjacency examinations plus cycle labelling steps of the DFS build.
  std::uint64_t traversal_steps = 0;
};

struct BenchConfig {
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;
  double cycle_fraction = 0.3;
  std::size_t max_cycle_len = 8;
  std::size_t repetitions = 5;
};

/// A counter bound was exceeded; carries the generator seed for reproduction.
class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Seed of the instance generated for `size` under `base_seed`.
std::uint64_t bench_instance_seed(std::uint64_t base_seed, std::size_t size);

/// One generated cactus per size, solved `repetitions` times. wall_time is the
/// median over repetitions of DFS build plus solve. Throws BoundViolation if
/// a counter exceeds its bound and std::logic_error if the counters differ
/// between repetitions.
std::vector<BenchRow> run_scaling(const BenchConfig& config);

std::string format_bench_rows(const std::vector<BenchRow>& rows, bool csv, bool verbose);

}  // namespace wdom

#endif  // WDOM_BENCH_HPP
