#include "wdom/bench.hpp"

#include <algorithm>
#include <sstream>

#include "wdom/dfs_cactus.hpp"
#include "wdom/generator.hpp"
#include "wdom/solver.hpp"

namespace wdom {

std::uint64_t bench_instance_seed(std::uint64_t base_seed, std::size_t size) {
  // splitmix64 finalizer over (seed, size)
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(size) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<BenchRow> run_scaling(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("bench: sizes must be nonempty");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw std::invalid_argument("bench: sizes must be ascending");
  }
  if (config.repetitions == 0) throw std::invalid_argument("bench: repetitions must be >= 1");

  std::vector<BenchRow> rows;
  for (std::size_t size : config.sizes) {
    BenchRow row;
    row.generator_seed = bench_instance_seed(config.seed, size);
    WeightedGraph g = generate_random_cactus({.seed = row.generator_seed,
                                              .n_target = size,
                                              .cycle_fraction = config.cycle_fraction,
                                              .max_cycle_len = config.max_cycle_len});
    row.n = g.vertex_count();

    std::vector<std::chrono::nanoseconds> times;
    OpCounter first_counter;
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      DfsStats stats;
      auto start = std::chrono::steady_clock::now();
      DfsStructure s = build_dfs_structure(g, 0, &stats);
      SolveResult result = solve_cactus(g, s);
      auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start));

      if (rep == 0) {
        first_counter = result.counter;
        row.gamma = result.gamma;
        row.traversal_steps = stats.edge_examinations + stats.cycle_walk_steps;
        row.b = block_decomposition(s, g).block_count();
      } else if (!(result.counter == first_counter)) {
        throw std::logic_error("bench: counters differ between repetitions");
      }
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2),
                     times.end());
    row.wall_time = times[times.size() / 2];
    row.additions = first_counter.additions;
    row.min_ops = first_counter.min_ops;
    row.add_bound = 12 * row.n + 5 * row.b;
    row.min_bound = 9 * row.n + 2 * row.b;
    if (row.additions > row.add_bound || row.min_ops > row.min_bound) {
      throw BoundViolation("bench: counter bound exceeded at n=" + std::to_string(row.n) +
                               " (generator seed " + std::to_string(row.generator_seed) + ")",
                           row.generator_seed);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench_rows(const std::vector<BenchRow>& rows, bool csv, bool verbose) {
  const char sep = csv ? ',' : '\t';
  std::ostringstream out;
  if (csv) {
    out << "n,b,additions,min_ops,add_bound,min_bound,wall_time_ns,gamma";
    if (verbose) out << ",seed,traversal_steps";
    out << '\n';
  }
  for (const auto& r : rows) {
    out << r.n << sep << r.b << sep << r.additions << sep << r.min_ops << sep << r.add_bound << sep
        << r.min_bound << sep << r.wall_time.count() << sep << format_weight(r.gamma);
    if (verbose) out << sep << r.generator_seed << sep << r.traversal_steps;
    out << '\n';
  }
  return out.str();
}

}  // namespace wdom
