#include <CLI11.hpp>

#include "wordeq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wordeq - word equation satisfiability solver"};
  app.require_subcommand(0, 1);

  wordeq::CliOptions solve_opt;
  app.add_option("file", solve_opt.file, "SMT-LIB2 input file ('-' for stdin)");
  app.add_option("--timeout", solve_opt.timeout, "time budget in seconds (default 10)");
  app.add_option("--max-depth", solve_opt.max_depth, "iterative deepening depth cap");
  app.add_option("--max-expansions", solve_opt.max_expansions, "node expansion budget (0 = off)");
  app.add_option("--probe-bound", solve_opt.probe_bound,
                 "value bound for nonlinear exponent probing");
  app.add_option("--max-pattern-len", solve_opt.max_pattern_len,
                 "maximum Parikh pattern length");
  app.add_option("--dump-dot", solve_opt.dump_dot, "write the proof graph as DOT");
  app.add_flag("--stats", solve_opt.stats, "print search statistics");
  app.add_flag("--model", solve_opt.model, "print a model for sat answers");
  app.add_option("--seed", solve_opt.seed, "random seed (recorded; search is deterministic)");
  app.add_flag("--no-dedup", solve_opt.no_dedup, "disable node deduplication");
  app.add_option("--strategy", solve_opt.strategy, "traversal: iterdeep or bfs")
      ->check(CLI::IsMember({"iterdeep", "bfs"}));

  wordeq::BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "run all .smt2 files under a directory");
  bench->add_option("dir", bench_opt.dir, "benchmark directory")->required();
  bench->add_option("--timeout", bench_opt.timeout, "per-file time budget in seconds");
  bench->add_option("--csv", bench_opt.csv, "write per-file results to a CSV file");
  bench->add_option("--seed", bench_opt.seed, "random seed");

  wordeq::OracleOptions oracle_opt;
  auto* oracle = app.add_subcommand("oracle", "bounded brute-force reference check");
  oracle->group("");  // hidden
  oracle->add_option("file", oracle_opt.file, "SMT-LIB2 input file")->required();
  oracle->add_option("--max-len", oracle_opt.max_len, "maximum word length per variable");
  oracle->add_option("--alphabet", oracle_opt.alphabet, "alphabet characters");

  CLI11_PARSE(app, argc, argv);

  if (bench->parsed()) return wordeq::run_bench(bench_opt, std::cout, std::cerr);
  if (oracle->parsed()) return wordeq::run_oracle(oracle_opt, std::cout, std::cerr);
  if (solve_opt.file.empty()) {
    std::cerr << app.help();
    return 1;
  }
  return wordeq::run_solve(solve_opt, std::cout, std::cerr);
}
