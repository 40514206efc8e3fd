#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wordeq/oracle.hpp"
#include "wordeq/smt2.hpp"
#include "wordeq/solver.hpp"

namespace wordeq {

struct CliOptions {
  std::string file;
  double timeout = 10.0;
  int max_depth = 1 << 24;
  int64_t probe_bound = 16;
  size_t max_pattern_len = 8;
  int64_t max_expansions = 0;
  std::string dump_dot;
  bool stats = false;
  bool model = false;
  bool no_dedup = false;
  uint64_t seed = 0;
  std::string strategy = "iterdeep";
};

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline SolverConfig solver_config(const CliOptions& o) {
  SolverConfig cfg;
  cfg.timeout_sec = o.timeout;
  cfg.max_depth = o.max_depth;
  cfg.int_limits.probe_bound = o.probe_bound;
  cfg.max_pattern_len = o.max_pattern_len;
  cfg.max_expansions = o.max_expansions;
  cfg.dedup = !o.no_dedup;
  cfg.seed = o.seed;
  cfg.strategy = o.strategy == "bfs" ? Strategy::Bfs : Strategy::IterDeep;
  return cfg;
}

inline const char* verdict_token(VerdictKind k) {
  switch (k) {
    case VerdictKind::Sat: return "sat";
    case VerdictKind::Unsat: return "unsat";
    default: return "unknown";
  }
}

// Solves one file; prints the verdict as the first output line.
// Exit status: 0 verdict, 1 parse/unsupported input, 2 internal error.
inline int run_solve(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  Problem p;
  try {
    p = parse_smt2(read_file(opt.file), opt.file);
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    Solver solver(p.pool, p.alphabet, solver_config(opt));
    Verdict v = solver.solve(p.assertions);
    out << verdict_token(v.kind) << "\n";
    if (v.kind == VerdictKind::Sat && (opt.model || p.wants_model) && v.model)
      out << smt2_model(p, *v.model);
    if (opt.stats) {
      out << solver.stats().summary();
      if (v.kind == VerdictKind::Unknown) out << "reason: " << v.reason << "\n";
    }
    if (!opt.dump_dot.empty()) {
      std::ofstream dot(opt.dump_dot);
      dot << solver.dot();
    }
    return 0;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

struct BenchOptions {
  std::string dir;
  double timeout = 10.0;
  std::string csv;
  uint64_t seed = 0;
};

struct BenchRow {
  std::string file;
  std::string verdict;
  double time_ms = 0;
  int64_t nodes = 0;
};

// Runs every .smt2 file under a directory; emits a per-file CSV and a
// per-track summary. A sat answer whose model fails verification aborts.
inline int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (!fs::exists(opt.dir)) {
    err << "error: no such directory '" << opt.dir << "'\n";
    return 1;
  }
  for (auto& entry : fs::recursive_directory_iterator(opt.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".smt2")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  std::map<std::string, std::map<std::string, int>> tracks;
  for (auto& f : files) {
    BenchRow row;
    row.file = f.string();
    try {
      Problem p = parse_smt2(read_file(f.string()), f.string());
      CliOptions co;
      co.timeout = opt.timeout;
      co.seed = opt.seed;
      Solver solver(p.pool, p.alphabet, solver_config(co));
      Verdict v = solver.solve(p.assertions);
      row.verdict = verdict_token(v.kind);
      row.time_ms = solver.stats().wall_ms;
      row.nodes = solver.stats().nodes_expanded;
      if (v.kind == VerdictKind::Sat && (!v.model || !verify_model(p.assertions, *v.model))) {
        err << "error: sat answer failed model verification on " << row.file << "\n";
        return 2;
      }
    } catch (const UnsupportedError&) {
      row.verdict = "unsupported";
    } catch (const ParseError&) {
      row.verdict = "parse-error";
    } catch (const std::exception& e) {
      err << "internal error on " << row.file << ": " << e.what() << "\n";
      return 2;
    }
    std::string track = fs::path(row.file).parent_path().filename().string();
    tracks[track][row.verdict]++;
    tracks[track]["total"]++;
    rows.push_back(std::move(row));
  }

  std::ostringstream csv;
  csv << "file,verdict,time_ms,nodes\n";
  for (auto& r : rows)
    csv << r.file << "," << r.verdict << "," << static_cast<int64_t>(r.time_ms) << "," << r.nodes
        << "\n";
  if (!opt.csv.empty()) {
    std::ofstream cf(opt.csv);
    cf << csv.str();
  } else {
    out << csv.str();
  }

  out << "track,solved,sat,unsat,unknown,total\n";
  for (auto& [track, counts] : tracks) {
    auto get = [&](const char* k) {
      auto it = counts.find(k);
      return it == counts.end() ? 0 : it->second;
    };
    int solved = get("sat") + get("unsat");
    out << track << "," << solved << "," << get("sat") << "," << get("unsat") << ","
        << get("unknown") << "," << get("total") << "\n";
  }
  return 0;
}

struct OracleOptions {
  std::string file;
  size_t max_len = 4;
  std::string alphabet;
};

// Hidden brute-force oracle subcommand, so acceptance runs are reproducible
// from the installed binary.
inline int run_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    Problem p = parse_smt2(read_file(opt.file), opt.file);
    std::vector<Chr> alphabet;
    if (opt.alphabet.empty())
      alphabet.assign(p.alphabet.begin(), p.alphabet.end());
    else
      for (char c : opt.alphabet) alphabet.push_back(static_cast<Chr>(c));
    BruteForce oracle(alphabet, opt.max_len);
    auto m = oracle.solve(p.assertions);
    if (m) {
      out << "sat\n" << smt2_model(p, *m);
    } else {
      out << "unsat-within-bounds\n";
    }
    return 0;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wordeq
