// Copyright 2026 The coppack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coppack/benchmarks.hpp"
#include "coppack/layout_render.hpp"
#include "coppack/oracle.hpp"
#include "coppack/pack_io.hpp"
#include "coppack/search.hpp"

namespace {

using namespace coppack;

constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnknown = 2;

struct CommonFlags {
  uint64_t node_limit = 0;
  double time_limit = 0.0;
  int jobs = 1;
  int log_level = 0;
  int branch_rule = 5;
  bool binary_search = false;

  SearchConfig to_config() const {
    SearchConfig config;
    config.node_limit = node_limit;
    config.time_limit_seconds = time_limit;
    config.jobs = jobs;
    config.log_level = log_level;
    config.branch_rule = branch_rule;
    config.binary_objective_search = binary_search;
    return config;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--node-limit", flags->node_limit,
                  "Abort a probe after this many branch nodes (0 = unlimited)");
  cmd->add_option("--time-limit", flags->time_limit,
                  "Wall-clock budget in seconds (0 = unlimited)");
  cmd->add_option("--jobs", flags->jobs, "Parallel objective probes")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--branch-rule", flags->branch_rule,
                  "Branch variable selection rule (0-5, 5 = conflict-driven default)");
  cmd->add_flag("--binary-search", flags->binary_search,
                "Bisect the objective instead of ascending probes");
  cmd->add_option("-v,--verbose", flags->log_level, "Log level (0-2)");
}

// The projection drawn by --svg/--ascii: first fixed dimension horizontal,
// first objective (or last) dimension vertical.
std::pair<int, int> projection_dims(const Instance& instance,
                                    const std::vector<int>& objective_dims) {
  const int d = instance.dims();
  int dim_y = objective_dims.empty() ? d - 1 : objective_dims.front();
  int dim_x = dim_y == 0 ? 1 : 0;
  return {dim_x, dim_y};
}

int run_solve(const std::string& path, std::string mode, const CommonFlags& flags,
              bool with_oracle, const std::string& svg_path, bool ascii) {
  Problem problem;
  try {
    problem = load_pack_file(path);
  } catch (const ParseError& e) {
    std::cerr << path << ':' << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  }

  if (mode == "auto") {
    mode = problem.objective_dims.empty() ? "opp"
           : problem.objective_dims.size() == 1 ? "cspp"
                                                : "bmp";
  }
  if (mode == "opp" && !problem.objective_dims.empty()) {
    std::cerr << "mode opp needs a fully sized container (no *)\n";
    return kExitInputError;
  }
  if (mode == "cspp" && problem.objective_dims.size() != 1) {
    std::cerr << "mode cspp needs exactly one * dimension\n";
    return kExitInputError;
  }
  if (mode == "bmp" && problem.objective_dims.empty()) {
    std::cerr << "mode bmp needs at least one * dimension\n";
    return kExitInputError;
  }

  const ValidationReport report = validate(problem.instance);
  if (!report.ok() && !(mode != "opp" && !report.has(IssueKind::kOversizeItem))) {
    // Objective-dimension placeholders can make items look oversize; any
    // other issue is fatal either way.
    bool fatal = false;
    for (const ValidationIssue& issue : report.issues) {
      if (mode != "opp" && issue.kind == IssueKind::kOversizeItem) continue;
      std::cerr << issue.message << '\n';
      fatal = true;
    }
    if (fatal) return kExitInputError;
  }

  ResultRecord record;
  record.mode = mode;
  int exit_code = kExitSolved;
  const SearchConfig config = flags.to_config();

  if (mode == "opp") {
    SolveResult r = solve_copp(problem.instance, config);
    record.verdict = r.verdict;
    record.placement = std::move(r.placement);
    record.stats = r.stats;
    if (r.verdict == Verdict::kFeasible) {
      record.find_seconds = r.stats.wall_seconds;
    } else {
      record.prove_seconds = r.stats.wall_seconds;
    }
    if (r.verdict == Verdict::kUnknown) exit_code = kExitUnknown;
    if (with_oracle) {
      const OracleVerdict oracle = oracle_opp(problem.instance);
      std::cout << "oracle " << (oracle.feasible ? "feasible" : "infeasible") << '\n';
      if (record.verdict != Verdict::kUnknown &&
          oracle.feasible != (record.verdict == Verdict::kFeasible)) {
        std::cerr << "oracle disagrees with the solver\n";
        exit_code = kExitInputError;
      }
    }
  } else {
    ObjectiveResult r = minimize_extent(problem.instance, problem.objective_dims, config);
    record.optimization = true;
    record.closed = r.closed();
    record.lower = r.lower_bound;
    record.upper = r.upper_bound;
    record.verdict = r.infeasible ? Verdict::kInfeasible
                     : r.closed() ? Verdict::kFeasible
                                  : Verdict::kUnknown;
    record.placement = r.placement;
    record.stats = r.total_stats;
    record.find_seconds = r.find_seconds;
    record.prove_seconds = r.prove_seconds;
    if (!r.closed() && !r.infeasible) exit_code = kExitUnknown;
    if (with_oracle && r.feasible) {
      Instance at_opt = problem.instance;
      for (int dim : problem.objective_dims) at_opt.container.sizes[dim] = r.upper_bound;
      const OracleVerdict oracle = oracle_opp(at_opt);
      std::cout << "oracle_at_upper " << (oracle.feasible ? "feasible" : "infeasible")
                << '\n';
      if (!oracle.feasible) {
        std::cerr << "oracle disagrees with the solver\n";
        exit_code = kExitInputError;
      }
    }
  }

  Instance sized = problem.instance;
  if (record.placement) {
    // Shrink objective dimensions to the achieved extent for rendering.
    for (int dim : problem.objective_dims) {
      int extent = 1;
      for (int v = 0; v < sized.size(); ++v) {
        extent = std::max(extent,
                          record.placement->coords[v][dim] + sized.width(v, dim));
      }
      sized.container.sizes[dim] = std::max(extent, record.upper);
    }
  }
  std::cout << format_record(sized, record);

  if (record.placement) {
    auto [dim_x, dim_y] = projection_dims(sized, problem.objective_dims);
    if (!svg_path.empty()) {
      std::ofstream out(svg_path);
      out << emit_svg(sized, *record.placement, dim_x, dim_y);
    }
    if (ascii) std::cout << emit_ascii(sized, *record.placement, dim_x, dim_y);
  }
  return exit_code;
}

int run_bench(const std::string& suite, const std::string& only,
              const CommonFlags& flags) {
  int exit_code = kExitSolved;
  std::printf("%-14s %-5s %-10s %-10s %9s %9s %12s  %s\n", "instance", "mode",
              "published", "result", "find_s", "prove_s", "nodes", "status");
  for (const Benchmark& bench : benchmarks()) {
    if (suite != "all" && bench.suite != suite) continue;
    if (!only.empty() && bench.name != only) continue;
    const SearchConfig config = flags.to_config();
    const ObjectiveResult r =
        minimize_extent(bench.problem.instance, bench.problem.objective_dims, config);

    std::string published = bench.open
        ? "[" + std::to_string(bench.published_lower) + "," +
              std::to_string(bench.published_upper) + "]"
        : std::to_string(bench.published_upper);
    std::string result = r.closed()
        ? std::to_string(r.upper_bound)
        : "[" + std::to_string(r.lower_bound) + "," + std::to_string(r.upper_bound) + "]";

    std::string status;
    if (r.closed()) {
      if (!bench.open && r.upper_bound == bench.published_upper) {
        status = "ok";
      } else if (bench.open && r.upper_bound >= bench.published_lower &&
                 r.upper_bound <= bench.published_upper) {
        status = "ok(closed)";
      } else {
        status = "MISMATCH";
        exit_code = kExitInputError;
      }
    } else if (bench.open && r.lower_bound >= bench.published_lower &&
               r.upper_bound <= bench.published_upper) {
      status = "ok(open)";
    } else {
      status = "unknown";
      if (exit_code == kExitSolved) exit_code = kExitUnknown;
    }
    std::printf("%-14s %-5s %-10s %-10s %9.2f %9.2f %12llu  %s\n", bench.name.c_str(),
                bench.mode.c_str(), published.c_str(), result.c_str(), r.find_seconds,
                r.prove_seconds,
                static_cast<unsigned long long>(r.total_stats.nodes), status.c_str());
    std::fflush(stdout);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for orthogonal packing with order constraints"};
  app.require_subcommand(1);

  std::string solve_file, solve_mode = "auto", svg_path;
  bool with_oracle = false, ascii = false;
  CommonFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Solve one .pack instance file");
  solve->add_option("file", solve_file, "Instance file")->required();
  solve->add_option("--mode", solve_mode, "opp | cspp | bmp | auto")
      ->check(CLI::IsMember({"auto", "opp", "cspp", "bmp"}));
  solve->add_flag("--oracle", with_oracle,
                  "Cross-check with the brute-force reference (small instances)");
  solve->add_option("--svg", svg_path, "Write the layout as SVG");
  solve->add_flag("--ascii", ascii, "Print a character-cell layout");
  add_common_flags(solve, &solve_flags);

  std::string suite = "all", only;
  CommonFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "Run the embedded benchmark instances");
  bench->add_option("--suite", suite, "okp17 | square21 | all")
      ->check(CLI::IsMember({"okp17", "square21", "all"}));
  bench->add_option("--instance", only, "Run a single named instance");
  add_common_flags(bench, &bench_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(solve_file, solve_mode, solve_flags, with_oracle, svg_path, ascii);
    }
    return run_bench(suite, only, bench_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
