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

// Acceptance suite: one numbered criterion per run (or all), one PASS/FAIL
// line each. Criteria 1-3 reproduce the published benchmark values; the
// rest are randomized property suites against brute-force references.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "coppack/axioms.hpp"
#include "coppack/benchmarks.hpp"
#include "coppack/moddecomp.hpp"
#include "coppack/oracle.hpp"
#include "coppack/orient.hpp"
#include "coppack/propagate.hpp"
#include "coppack/realize.hpp"
#include "coppack/search.hpp"
#include "../tests/test_util.hpp"

using namespace coppack;
using testutil::Rng;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double budget_seconds = 1700.0;  // per instance; the spec allows 30 minutes

SearchConfig bench_config() {
  SearchConfig config;
  config.time_limit_seconds = budget_seconds;
  return config;
}

void run_benchmark_criterion(int criterion, const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    const Benchmark* bench = find_benchmark(name);
    if (bench == nullptr) {
      report(criterion, false, name + " missing");
      continue;
    }
    const ObjectiveResult r = minimize_extent(bench->problem.instance,
                                              bench->problem.objective_dims,
                                              bench_config());
    char detail[160];
    if (bench->open) {
      // Published as an interval: achieved bounds must be at least as tight.
      const bool ok = r.feasible && r.lower_bound >= bench->published_lower &&
                      r.upper_bound <= bench->published_upper;
      std::snprintf(detail, sizeof detail,
                    "%s bounds [%d,%d] vs published [%d,%d]%s (find %.2fs, prove %.2fs)",
                    name.c_str(), r.lower_bound, r.upper_bound, bench->published_lower,
                    bench->published_upper, r.closed() ? " closed" : "",
                    r.find_seconds, r.prove_seconds);
      report(criterion, ok, detail);
    } else {
      const bool ok = r.closed() && r.upper_bound == bench->published_upper;
      std::snprintf(detail, sizeof detail,
                    "%s optimum %d expected %d (find %.2fs, prove %.2fs)", name.c_str(),
                    r.closed() ? r.upper_bound : -1, bench->published_upper,
                    r.find_seconds, r.prove_seconds);
      report(criterion, ok, detail);
    }
  }
}

void criterion_1() {
  run_benchmark_criterion(1, {"okp17-0", "okp17-1", "okp17-2", "okp17-3", "okp17-4"});
}

void criterion_2() {
  run_benchmark_criterion(2, {"square21-no", "square21-mat", "square21-tri"});
}

void criterion_3() { run_benchmark_criterion(3, {"square21-2mat"}); }

// Theorem round trip: accepted stores realize to valid placements; valid
// placements project to accepted stores.
void criterion_5() {
  Rng rng(20260810);
  int projected = 0, realized = 0, bad = 0;
  int attempts = 0;
  while ((projected < 200 || realized < 200) && attempts < 20000) {
    ++attempts;
    Instance inst = testutil::random_instance(rng, 6, 8, 0, 2);
    if (inst.size() == 0) continue;
    auto placement = testutil::random_placement(rng, inst);
    if (!placement) continue;
    const EdgeStore store = project_placement(inst, *placement);
    if (verify_packing_class(inst, store).has_value()) {
      ++bad;
      continue;
    }
    ++projected;
    const Placement again = realize(inst, store);
    if (!verify_placement(inst, again).empty()) {
      ++bad;
      continue;
    }
    ++realized;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "theorem round trip on %d projected / %d realized stores, %d failures",
                projected, realized, bad);
  report(5, bad == 0 && projected >= 200 && realized >= 200, detail);
}

void criterion_6() {
  Rng rng(424242);
  int cases = 0, mismatches = 0, feasible = 0;
  while (cases < 220) {
    const int n = testutil::pick(rng, 2, 8);
    const SimpleGraph g = testutil::random_graph(rng, n, testutil::pick(rng, 15, 95));
    std::vector<Arc> seeds;
    for (auto [u, v] : g.edges()) {
      const int coin = testutil::pick(rng, 0, 5);
      if (coin == 0) seeds.push_back({u, v});
      if (coin == 1) seeds.push_back({v, u});
    }
    ++cases;
    const TopResult top = top_feasible(g, seeds);
    const bool oracle_feasible = !oracle_orientations(g, seeds).empty();
    if (top.feasible != oracle_feasible) ++mismatches;
    feasible += oracle_feasible;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "orientation decision vs enumeration on %d graphs (%d extendable), "
                "%d mismatches",
                cases, feasible, mismatches);
  report(6, mismatches == 0 && feasible > 40 && feasible < 180, detail);
}

void criterion_7() {
  Rng rng(777);
  int graphs = 0, diffs = 0;
  while (graphs < 20) {
    const int n = testutil::pick(rng, 4, 8);
    const SimpleGraph g = testutil::random_graph(rng, n, 60);
    std::vector<Arc> seeds;
    for (auto [u, v] : g.edges()) {
      if (testutil::pick(rng, 0, 3) == 0) seeds.push_back({u, v});
    }
    if (seeds.empty()) continue;
    ++graphs;
    const TopResult base = top_feasible(g, seeds);
    std::vector<Arc> base_closure = base.closure;
    std::sort(base_closure.begin(), base_closure.end());
    for (uint64_t shuffle = 1; shuffle <= 50; ++shuffle) {
      const TopResult other = top_feasible(g, seeds, shuffle);
      if (other.feasible != base.feasible) {
        ++diffs;
        continue;
      }
      std::vector<Arc> closure = other.closure;
      std::sort(closure.begin(), closure.end());
      if (closure != base_closure) ++diffs;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "50 shuffled propagation orders on %d seeded graphs, %d deviations",
                graphs, diffs);
  report(7, diffs == 0, detail);
}

void criterion_8() {
  Rng rng(20260810);
  int cases = 0, mismatches = 0, feasible = 0, bad_placements = 0;
  while (cases < 220) {
    const Instance inst = testutil::random_instance(rng, 4, 5, 3);
    ++cases;
    const SolveResult r = solve_copp(inst);
    const OracleVerdict o = oracle_opp(inst);
    if (r.verdict == Verdict::kUnknown ||
        (r.verdict == Verdict::kFeasible) != o.feasible) {
      ++mismatches;
      continue;
    }
    if (o.feasible) {
      ++feasible;
      if (!verify_placement(inst, *r.placement).empty()) ++bad_placements;
      if (!verify_placement(inst, *o.placement).empty()) ++bad_placements;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "solver vs placement enumeration on %d instances (%d feasible), "
                "%d mismatches, %d invalid placements",
                cases, feasible, mismatches, bad_placements);
  report(8, mismatches == 0 && bad_placements == 0 && feasible > 30, detail);
}

void criterion_9() {
  // Geometry that embeds the orientation obstruction path 0-1-2-3 in the
  // height dimension: widths force the middle comparability edge {1,2} and
  // the helper edge {1,4}; height sums force the overlap {0,2}; the helper
  // stable set {1,3,4} forces the overlap {1,3}; the constraints seed the
  // outer arcs 0->1 and 3->2. Carrying out the implications then turns
  // 0->1 into 2->1 into 2->3 against the seed, so the refutation comes
  // from the orientation rules alone, before any branching.
  Instance inst;
  inst.container.sizes = {10, 100};
  inst.items.push_back({0, {1, 60}, "v1"});
  inst.items.push_back({1, {6, 10}, "v2"});
  inst.items.push_back({2, {5, 45}, "v3"});
  inst.items.push_back({3, {1, 55}, "v4"});
  inst.items.push_back({4, {5, 40}, "w"});
  inst.constraints = {{1, 0, 1}, {1, 3, 2}, {1, 3, 4}};
  const SolveResult r = solve_copp(inst);
  const bool ok = r.verdict == Verdict::kInfeasible && r.stats.root_conflict &&
                  r.stats.root_conflict_kind == ConflictKind::kP3Conflict &&
                  r.stats.nodes == 0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "obstruction refuted during initial propagation: verdict=%s "
                "root_conflict=%d kind=%s nodes=%llu",
                verdict_name(r.verdict), r.stats.root_conflict ? 1 : 0,
                conflict_kind_name(r.stats.root_conflict_kind),
                static_cast<unsigned long long>(r.stats.nodes));
  report(9, ok, detail);
}

void criterion_10() {
  SimpleGraph g(21);
  const std::vector<std::vector<int>> modules = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {20}, {10, 11}, {12, 13, 14, 15, 16, 17, 18, 19}};
  for (int a = 0; a <= 9; ++a) {
    for (int b = a + 1; b <= 9; ++b) g.add_edge(a, b);
  }
  g.add_edge(10, 11);
  for (size_t i = 0; i + 1 < modules.size(); ++i) {
    for (int a : modules[i]) {
      for (int b : modules[i + 1]) g.add_edge(a, b);
    }
  }
  const DecompositionTree tree = decompose(g);
  const DecompositionNode& root = tree.node(tree.root);
  bool ok = root.kind == DecompositionNode::Kind::kPrime && root.children.size() == 4;

  auto find_child = [&](const std::vector<int>& vertices) {
    for (size_t k = 0; k < root.children.size(); ++k) {
      if (tree.node(root.children[k]).vertices == vertices) return static_cast<int>(k);
    }
    return -1;
  };
  const int m1 = find_child(modules[0]), m2 = find_child(modules[1]),
            m3 = find_child(modules[2]), m4 = find_child(modules[3]);
  ok = ok && m1 >= 0 && m2 >= 0 && m3 >= 0 && m4 >= 0;
  if (ok) {
    ok = root.quotient.edge_count() == 3 && root.quotient.has_edge(m1, m2) &&
         root.quotient.has_edge(m2, m3) && root.quotient.has_edge(m3, m4);
  }
  // Definitional re-check of every node of the tree.
  int checked_nodes = 0;
  for (const DecompositionNode& node : tree.nodes) {
    const SimpleGraph sub = g.induced(node.vertices);
    for (int id : node.children) {
      std::vector<int> local;
      for (int v : tree.node(id).vertices) {
        local.push_back(static_cast<int>(
            std::lower_bound(node.vertices.begin(), node.vertices.end(), v) -
            node.vertices.begin()));
      }
      if (!is_module(sub, local)) ok = false;
      ++checked_nodes;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "root children {M1,M2,M3,M4}, quotient path, %d module re-checks",
                checked_nodes);
  report(10, ok, detail);
}

void criterion_11() {
  // Trail soundness.
  Rng rng(20260810);
  bool trail_ok = true;
  for (int round = 0; round < 200; ++round) {
    const int n = testutil::pick(rng, 2, 10);
    EdgeStore store(n, 2);
    std::vector<std::pair<size_t, EdgeStore>> snapshots;
    snapshots.push_back({store.trail_size(), store});
    for (int step = 0; step < 50; ++step) {
      const int action = testutil::pick(rng, 0, 9);
      if (action < 6) {
        store.assign(testutil::pick(rng, 0, 1),
                     testutil::pick(rng, 0, store.num_pairs() - 1),
                     static_cast<EdgeState>(testutil::pick(rng, 1, 4)));
      } else if (action < 8) {
        snapshots.push_back({store.trail_size(), store});
      } else if (snapshots.size() > 1) {
        const size_t k = rng() % snapshots.size();
        store.rollback_to(snapshots[k].first);
        trail_ok = trail_ok && store == snapshots[k].second;
        snapshots.erase(snapshots.begin() + k + 1, snapshots.end());
      }
    }
    store.rollback_to(snapshots.front().first);
    trail_ok = trail_ok && store == snapshots.front().second;
  }
  report(11, trail_ok, "trail soundness over 200 random assignment histories");

  // CSPP monotonicity across ascending probes.
  bool monotone_ok = true;
  int probes = 0;
  Rng rng2(1234);
  for (int round = 0; round < 60; ++round) {
    Instance inst = testutil::random_instance(rng2, 4, 4, 2);
    if (inst.size() == 0) continue;
    bool seen_feasible = false;
    for (int h = 1; h <= 8; ++h) {
      inst.container.sizes[1] = h;
      bool widths_fit = true;
      for (const Item& item : inst.items) widths_fit &= item.widths[1] <= h;
      if (!widths_fit) continue;
      const bool feasible = solve_copp(inst).verdict == Verdict::kFeasible;
      ++probes;
      if (seen_feasible && !feasible) monotone_ok = false;
      seen_feasible = seen_feasible || feasible;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "feasibility monotone across %d ascending probes", probes);
  report(11, monotone_ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;  // 0 = all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      criterion = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc) {
      budget_seconds = std::atof(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--budget SECONDS]\n");
      return 2;
    }
  }
  auto want = [&](int n) { return criterion == 0 || criterion == n; };
  if (want(1)) criterion_1();
  if (want(2)) criterion_2();
  if (want(3)) criterion_3();
  if (criterion == 0 || criterion == 4) {
    std::printf(
        "SKIP criterion 4: DE and video-codec tables are excluded (dependency "
        "graphs published only as figures)\n");
  }
  if (want(5)) criterion_5();
  if (want(6)) criterion_6();
  if (want(7)) criterion_7();
  if (want(8)) criterion_8();
  if (want(9)) criterion_9();
  if (want(10)) criterion_10();
  if (want(11)) criterion_11();
  if (failures > 0) std::printf("%d criterion check(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
