// Command-line front end: solve, validate, classify, oracle, gen, bench.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wdom/bench.hpp"
#include "wdom/dfs_cactus.hpp"
#include "wdom/generator.hpp"
#include "wdom/graph.hpp"
#include "wdom/oracle.hpp"
#include "wdom/solver.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

wdom::WeightedGraph load_graph(const std::string& path) {
  if (path == "-") return wdom::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return wdom::parse_graph(in);
}

wdom::VertexId checked_root(const wdom::WeightedGraph& g, std::uint64_t root) {
  if (root >= g.vertex_count()) throw InputError("--root " + std::to_string(root) + " is not a vertex");
  return static_cast<wdom::VertexId>(root);
}

void require_cactus(const wdom::WeightedGraph& g) {
  auto report = wdom::validate_cactus(g);
  if (!report.is_connected) throw InputError("input graph is not connected");
  if (!report.is_cactus) {
    throw InputError("input graph is not a cactus (edge " + std::to_string(report.witness->first) +
                     " " + std::to_string(report.witness->second) + " lies on two cycles)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted domination number of vertex-weighted cactus graphs"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t root = 0;
  bool emit_set = false;
  bool dump = false;

  auto* solve_cmd = app.add_subcommand("solve", "Compute the weighted domination number");
  solve_cmd->add_option("file", file, "Graph file, '-' for stdin")->required();
  solve_cmd->add_option("--root", root, "DFS root vertex");
  solve_cmd->add_flag("--set", emit_set, "Also print a minimum-weight dominating set");

  auto* validate_cmd = app.add_subcommand("validate", "Check whether the graph is a cactus");
  validate_cmd->add_option("file", file, "Graph file, '-' for stdin")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify vertices as C, G or H");
  classify_cmd->add_option("file", file, "Graph file, '-' for stdin")->required();
  classify_cmd->add_option("--root", root, "DFS root vertex");
  classify_cmd->add_flag("--dump", dump, "Print the DFS arrays, one vertex per line");

  wdom::OracleConstraints constraints;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive weighted domination (n <= 24)");
  oracle_cmd->add_option("file", file, "Graph file, '-' for stdin")->required();
  oracle_cmd->add_option("--include", constraints.must_include, "Vertices forced into the set");
  oracle_cmd->add_option("--exclude", constraints.must_exclude, "Vertices forced out of the set");
  oracle_cmd->add_option("--delete", constraints.deleted, "Vertices removed from the graph");

  wdom::CactusGenParams gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random cactus");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--n", gen.n_target, "Minimum vertex count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cycle-fraction", gen.cycle_fraction, "Probability of attaching a cycle")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-cycle-len", gen.max_cycle_len, "Longest attached cycle")
      ->check(CLI::Range(std::size_t{3}, std::numeric_limits<std::size_t>::max()));
  gen_cmd->add_option("--weight-low", gen.weight_low, "Lower weight bound");
  gen_cmd->add_option("--weight-high", gen.weight_high, "Upper weight bound");
  gen_cmd->add_flag("--integer-weights", gen.integer_weights, "Draw integer weights");

  wdom::BenchConfig bench;
  bool csv = false;
  bool verbose = false;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and timing over growing sizes");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--sizes", bench.sizes, "Ascending target sizes")->required();
  bench_cmd->add_option("--cycle-fraction", bench.cycle_fraction, "Probability of attaching a cycle")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--max-cycle-len", bench.max_cycle_len, "Longest attached cycle");
  bench_cmd->add_option("--reps", bench.repetitions, "Timing repetitions per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--csv", csv, "Comma-separated output with a header row");
  bench_cmd->add_flag("--verbose", verbose, "Add generator seed and DFS traversal steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "wdom: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*solve_cmd) {
      auto g = load_graph(file);
      require_cactus(g);
      auto s = wdom::build_dfs_structure(g, checked_root(g, root));
      auto result = wdom::solve_cactus(g, s, {.record_choices = emit_set});
      std::cout << wdom::format_solve_result(result, wdom::block_decomposition(s, g).block_count());
    } else if (*validate_cmd) {
      auto g = load_graph(file);
      auto report = wdom::validate_cactus(g);
      std::cout << "cactus=" << (report.is_cactus ? "yes" : "no") << "\n";
      if (!report.is_connected) std::cout << "connected=no\n";
      if (report.witness) {
        std::cout << "witness=" << report.witness->first << " " << report.witness->second << "\n";
      }
    } else if (*classify_cmd) {
      auto g = load_graph(file);
      require_cactus(g);
      auto s = wdom::build_dfs_structure(g, checked_root(g, root));
      if (dump) {
        for (wdom::VertexId v : s.order) {
          std::cout << s.dfn[v] << '\t' << v << '\t' << s.father[v] << '\t' << s.root_of[v] << '\t'
                    << s.orien[v] << '\t' << s.ind[v] << '\t'
                    << wdom::to_char(wdom::classify_vertex(s, g, v)) << '\n';
        }
      } else {
        std::size_t counts[3] = {0, 0, 0};
        for (wdom::VertexId v : s.order) ++counts[static_cast<int>(wdom::classify_vertex(s, g, v))];
        auto blocks = wdom::block_decomposition(s, g);
        std::cout << "C=" << counts[0] << "\nG=" << counts[1] << "\nH=" << counts[2]
                  << "\ncycles=" << blocks.cycle_count << "\ngrafts=" << blocks.graft_count
                  << "\nblocks=" << blocks.block_count() << "\n";
      }
    } else if (*oracle_cmd) {
      auto g = load_graph(file);
      std::cout << wdom::format_oracle_result(wdom::brute_force_gamma(g, constraints));
    } else if (*gen_cmd) {
      std::cout << wdom::serialize_graph(wdom::generate_random_cactus(gen));
    } else if (*bench_cmd) {
      std::cout << wdom::format_bench_rows(wdom::run_scaling(bench), csv, verbose);
    }
  } catch (const wdom::ParamAlgebraError& e) {
    std::cerr << "wdom: internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const wdom::BoundViolation& e) {
    std::cerr << "wdom: internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const wdom::ParseError& e) {
    std::cerr << "wdom: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "wdom: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "wdom: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "wdom: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "wdom: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return 0;
}
