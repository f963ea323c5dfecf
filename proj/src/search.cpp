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

#include "coppack/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "coppack/axioms.hpp"
#include "coppack/moddecomp.hpp"
#include "coppack/orient.hpp"
#include "coppack/propagate.hpp"

namespace coppack {

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFeasible: return "feasible";
    case Verdict::kInfeasible: return "infeasible";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

uint64_t SearchStats::conflict_total() const {
  return std::accumulate(conflicts.begin(), conflicts.end(), uint64_t{0});
}

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  propagations += other.propagations;
  for (int k = 0; k < kNumConflictKinds; ++k) conflicts[k] += other.conflicts[k];
  max_depth = std::max(max_depth, other.max_depth);
  wall_seconds += other.wall_seconds;
}

namespace {

class CoppSearcher {
 public:
  CoppSearcher(const Instance& closed, const SearchConfig& config)
      : instance_(closed),
        config_(config),
        store_(closed.size(), closed.dims()),
        engine_(instance_, store_,
                {true, true, config.class_union_find, config.shuffle_seed}) {
    const int d = instance_.dims();
    const int pairs = store_.num_pairs();
    score_.resize(static_cast<size_t>(d) * pairs);
    for (int dim = 0; dim < d; ++dim) {
      for (int pair = 0; pair < pairs; ++pair) {
        auto [u, v] = store_.pair_vertices(pair);
        const int64_t wu = instance_.width(u, dim);
        const int64_t wv = instance_.width(v, dim);
        int64_t score = wu + wv;
        if (config.branch_rule == 3) {
          score = wu * wv;
        } else if (config.branch_rule == 4) {
          score = (wu + wv) * 4096 / instance_.container.sizes[dim];
        }
        score_[dim * pairs + pair] = score;
      }
    }
    if (config.branch_rule == 5) {
      activity_.assign(static_cast<size_t>(d) * pairs, 0.0);
    }
  }

  SolveResult solve() {
    start_ = Clock::now();
    if (config_.time_limit_seconds > 0) {
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(config_.time_limit_seconds));
      has_deadline_ = true;
    }
    SolveResult result;
    if (!engine_.seed()) {
      result.verdict = Verdict::kInfeasible;
      copy_stats(result.stats);
      result.stats.root_conflict = true;
      result.stats.root_conflict_kind = engine_.conflict().kind;
      result.stats.wall_seconds = seconds_since(start_);
      if (config_.log_level >= 1) {
        std::fprintf(stderr, "[root] %s\n", engine_.conflict().to_string().c_str());
      }
      return result;
    }
    switch (dfs(0)) {
      case Dfs::kFound:
        result.verdict = Verdict::kFeasible;
        result.placement = std::move(placement_);
        break;
      case Dfs::kExhausted:
        result.verdict = Verdict::kInfeasible;
        break;
      case Dfs::kAborted:
        result.verdict = Verdict::kUnknown;
        break;
    }
    copy_stats(result.stats);
    result.stats.wall_seconds = seconds_since(start_);
    return result;
  }

 private:
  enum class Dfs { kFound, kExhausted, kAborted };

  void copy_stats(SearchStats& out) const {
    out.nodes = nodes_;
    out.max_depth = max_depth_;
    out.propagations = engine_.stats().propagations;
    out.conflicts = engine_.stats().conflicts;
  }

  bool out_of_budget() {
    if (config_.node_limit > 0 && nodes_ >= config_.node_limit) return true;
    if (has_deadline_ && Clock::now() >= deadline_) return true;
    return false;
  }

  // Undecided slot preferred by the configured rule, ties to the least
  // (dim, u, v). Rule 0: largest combined width in the slot's dimension.
  // Rule 1: static dimension-major order. Rule 2: static pair-major order.
  // Rule 3: largest width product. Rule 4: combined width scaled by the
  // container size.
  int pick_slot() const {
    const int d = instance_.dims();
    const int pairs = store_.num_pairs();
    if (config_.branch_rule == 1) {
      for (int slot = 0; slot < d * pairs; ++slot) {
        if (store_.state(slot / pairs, slot % pairs) == EdgeState::kUnassigned) {
          return slot;
        }
      }
      return -1;
    }
    if (config_.branch_rule == 2) {
      for (int pair = 0; pair < pairs; ++pair) {
        for (int dim = 0; dim < d; ++dim) {
          if (store_.state(dim, pair) == EdgeState::kUnassigned) {
            return dim * pairs + pair;
          }
        }
      }
      return -1;
    }
    if (config_.branch_rule == 5) {
      int best = -1;
      double best_activity = -1.0;
      int64_t best_score = -1;
      for (int slot = 0; slot < d * pairs; ++slot) {
        if (store_.state(slot / pairs, slot % pairs) != EdgeState::kUnassigned) {
          continue;
        }
        if (activity_[slot] > best_activity ||
            (activity_[slot] == best_activity && score_[slot] > best_score)) {
          best_activity = activity_[slot];
          best_score = score_[slot];
          best = slot;
        }
      }
      return best;
    }
    int best = -1;
    int64_t best_score = -1;
    for (int dim = 0; dim < d; ++dim) {
      for (int pair = 0; pair < pairs; ++pair) {
        if (store_.state(dim, pair) != EdgeState::kUnassigned) continue;
        const int64_t score = score_[dim * pairs + pair];
        if (score > best_score) {
          best_score = score;
          best = dim * pairs + pair;
        }
      }
    }
    return best;
  }

  // Conflict-driven activity: slots between witness vertices of a conflict
  // gain weight, with a geometrically growing bump as implicit decay.
  void bump_activity(const Conflict& conflict) {
    const int pairs = store_.num_pairs();
    for (size_t i = 0; i < conflict.witness.size(); ++i) {
      for (size_t j = i + 1; j < conflict.witness.size(); ++j) {
        const int a = conflict.witness[i];
        const int b = conflict.witness[j];
        if (a == b) continue;
        const int pair = store_.pair_index(a, b);
        if (conflict.dim >= 0) {
          activity_[conflict.dim * pairs + pair] += bump_;
        } else {
          for (int dim = 0; dim < instance_.dims(); ++dim) {
            activity_[dim * pairs + pair] += bump_;
          }
        }
      }
    }
    bump_ *= 1.001;
    if (bump_ > 1e100) {
      for (double& a : activity_) a /= 1e100;
      bump_ /= 1e100;
    }
  }

  Dfs dfs(int depth) {
    max_depth_ = std::max(max_depth_, depth);
    const int slot = pick_slot();
    if (slot < 0) return leaf();
    const int pairs = store_.num_pairs();
    const int dim = slot / pairs;
    const int pair = slot % pairs;
    auto [u, v] = store_.pair_vertices(pair);

    static constexpr EdgeState kOrder[2] = {EdgeState::kComponent,
                                            EdgeState::kComparability};
    for (EdgeState target : kOrder) {
      if (out_of_budget()) return Dfs::kAborted;
      ++nodes_;
      const Propagator::Mark mark = engine_.mark();
      if (engine_.post(dim, pair, target, ConflictKind::kEmptyIntersection,
                       {u, v, -1, -1}) &&
          engine_.run()) {
        const Dfs sub = dfs(depth + 1);
        if (sub != Dfs::kExhausted) return sub;
      } else {
        if (!activity_.empty()) bump_activity(engine_.conflict());
        if (config_.log_level >= 2) {
          std::fprintf(stderr, "[conflict] depth=%d nodes=%llu %s\n", depth,
                       static_cast<unsigned long long>(nodes_),
                       engine_.conflict().to_string().c_str());
        }
      }
      engine_.rollback_to(mark);
    }
    return Dfs::kExhausted;
  }

  // Fully decided, cascade clean: complete the orientations per dimension,
  // realize, and verify. The full packing-class check is defensive; it can
  // reject only when class pruning is disabled.
  Dfs leaf() {
    if (auto bad = verify_packing_class(instance_, store_)) {
      ++engine_.stats().conflicts[static_cast<int>(bad->kind)];
      return Dfs::kExhausted;
    }
    const int d = instance_.dims();
    std::vector<std::vector<Arc>> arcs(d);
    for (int dim = 0; dim < d; ++dim) {
      const SimpleGraph g = comparability_graph(store_, dim);
      std::vector<Arc> seeds;
      for (int pair = 0; pair < store_.num_pairs(); ++pair) {
        const EdgeState s = store_.state(dim, pair);
        if (!is_oriented(s)) continue;
        auto [u, v] = store_.pair_vertices(pair);
        seeds.push_back(s == EdgeState::kForward ? Arc{u, v} : Arc{v, u});
      }
      auto extension = extend_orientation(g, seeds);
      if (!extension) {
        throw std::logic_error("conflict-free closure failed to extend");
      }
      arcs[dim] = std::move(*extension);
    }
    Placement placement = realize(instance_, arcs);
    if (!verify_placement(instance_, placement).empty()) {
      throw std::logic_error("realized placement failed verification");
    }
    placement_ = std::move(placement);
    return Dfs::kFound;
  }

  const Instance& instance_;
  SearchConfig config_;
  EdgeStore store_;
  Propagator engine_;
  std::vector<int64_t> score_;
  std::vector<double> activity_;
  double bump_ = 1.0;
  uint64_t nodes_ = 0;
  int max_depth_ = 0;
  std::optional<Placement> placement_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  bool has_deadline_ = false;
};

}  // namespace

SolveResult solve_copp(const Instance& instance, const SearchConfig& config) {
  const ValidationReport report = validate(instance);
  if (!report.ok()) {
    throw std::invalid_argument("invalid instance:\n" + report.to_string());
  }
  const Instance closed = transitive_closure(instance);
  CoppSearcher searcher(closed, config);
  return searcher.solve();
}

namespace {

// Longest-path start coordinates along one dimension's constraint arcs.
std::vector<int> chain_coords(const Instance& instance, int dim) {
  const int n = instance.size();
  std::vector<std::vector<int>> succs(n), preds(n);
  std::vector<int> indegree(n, 0);
  for (auto [a, b] : instance.arcs_in_dim(dim)) {
    succs[a].push_back(b);
    preds[b].push_back(a);
    ++indegree[b];
  }
  std::vector<int> ready, order;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : succs[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("constraint arcs are cyclic");
  }
  std::vector<int> coord(n, 0);
  for (int v : order) {
    for (int u : preds[v]) {
      coord[v] = std::max(coord[v], coord[u] + instance.width(u, dim));
    }
  }
  return coord;
}

int chain_extent(const Instance& instance, int dim) {
  const std::vector<int> coord = chain_coords(instance, dim);
  int extent = 0;
  for (int v = 0; v < instance.size(); ++v) {
    extent = std::max(extent, coord[v] + instance.width(v, dim));
  }
  return extent;
}

}  // namespace

int64_t lower_bound(const Instance& instance, const std::vector<int>& objective_dims) {
  const int d = instance.dims();
  std::vector<char> is_objective(d, 0);
  for (int dim : objective_dims) is_objective[dim] = 1;

  int64_t total_volume = 0;
  for (int v = 0; v < instance.size(); ++v) {
    int64_t volume = 1;
    for (int dim = 0; dim < d; ++dim) volume *= instance.width(v, dim);
    total_volume += volume;
  }
  int64_t fixed_product = 1;
  for (int dim = 0; dim < d; ++dim) {
    if (!is_objective[dim]) fixed_product *= instance.container.sizes[dim];
  }
  const int k = static_cast<int>(objective_dims.size());
  int64_t bound = 1;
  auto capacity = [&](int64_t s) {
    int64_t c = fixed_product;
    for (int i = 0; i < k; ++i) c *= s;
    return c;
  };
  while (capacity(bound) < total_volume) ++bound;

  for (int dim : objective_dims) {
    bound = std::max(bound, static_cast<int64_t>(chain_extent(instance, dim)));
  }
  return bound;
}

namespace {

bool placed_has(const std::vector<int>& placed, int v) {
  return std::find(placed.begin(), placed.end(), v) != placed.end();
}

}  // namespace

std::optional<Placement> greedy_pack(const Instance& instance,
                                     const std::vector<int>& objective_dims) {
  const int n = instance.size();
  const int d = instance.dims();

  // Scan order for candidate corners: objective dimensions first.
  std::vector<int> dim_order = objective_dims;
  for (int dim = 0; dim < d; ++dim) {
    if (std::find(dim_order.begin(), dim_order.end(), dim) == dim_order.end()) {
      dim_order.push_back(dim);
    }
  }

  // Topological item order over all constraint arcs, biggest volume first
  // among the available; falls back to volume order on cross-dimension
  // cycles (placement checks still enforce every constraint pairwise).
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succs(n);
  for (const PrecedenceConstraint& c : instance.constraints) {
    succs[c.before].push_back(c.after);
    ++indegree[c.after];
  }
  auto volume_of = [&](int v) {
    int64_t volume = 1;
    for (int dim = 0; dim < d; ++dim) volume *= instance.width(v, dim);
    return volume;
  };
  std::vector<int> order;
  std::vector<char> placed_flag(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (placed_flag[v] || indegree[v] > 0) continue;
      if (pick == -1 || volume_of(v) > volume_of(pick)) pick = v;
    }
    if (pick == -1) {
      for (int v = 0; v < n; ++v) {
        if (!placed_flag[v] && (pick == -1 || volume_of(v) > volume_of(pick))) pick = v;
      }
    }
    placed_flag[pick] = 1;
    order.push_back(pick);
    for (int w : succs[pick]) --indegree[w];
  }

  Placement placement;
  placement.coords.assign(n, std::vector<int>(d, 0));
  std::vector<int> placed;
  for (int q : order) {
    // Candidate coordinates per dimension: 0 and ends of placed items.
    std::vector<std::vector<int>> cands(d);
    for (int dim = 0; dim < d; ++dim) {
      std::set<int> values = {0};
      for (int p : placed) values.insert(placement.coords[p][dim] + instance.width(p, dim));
      for (int value : values) {
        if (value + instance.width(q, dim) <= instance.container.sizes[dim]) {
          cands[dim].push_back(value);
        }
      }
      if (cands[dim].empty()) return std::nullopt;
    }
    auto fits = [&](const std::vector<int>& pos) {
      for (int p : placed) {
        bool disjoint = false;
        for (int dim = 0; dim < d && !disjoint; ++dim) {
          const int qb = pos[dim], qe = qb + instance.width(q, dim);
          const int pb = placement.coords[p][dim], pe = pb + instance.width(p, dim);
          disjoint = qe <= pb || pe <= qb;
        }
        if (!disjoint) return false;
      }
      for (const PrecedenceConstraint& c : instance.constraints) {
        if (c.before == q && placed_has(placed, c.after)) {
          if (pos[c.dim] + instance.width(q, c.dim) >
              placement.coords[c.after][c.dim]) {
            return false;
          }
        } else if (c.after == q && placed_has(placed, c.before)) {
          if (placement.coords[c.before][c.dim] + instance.width(c.before, c.dim) >
              pos[c.dim]) {
            return false;
          }
        }
      }
      return true;
    };
    // Odometer over candidate corners, objective dimensions outermost.
    std::vector<size_t> index(d, 0);
    std::vector<int> pos(d);
    bool found = false;
    while (!found) {
      for (int dim = 0; dim < d; ++dim) pos[dim] = cands[dim][index[dim]];
      if (fits(pos)) {
        placement.coords[q] = pos;
        found = true;
        break;
      }
      int level = d - 1;
      while (level >= 0) {
        const int dim = dim_order[level];
        if (++index[dim] < cands[dim].size()) break;
        index[dim] = 0;
        --level;
      }
      if (level < 0) break;
    }
    if (!found) return std::nullopt;
    placed.push_back(q);
  }
  return placement;
}

namespace {

// Guaranteed-feasible layout: stack every item along the first objective
// dimension in topological order, longest-path coordinates elsewhere.
std::pair<int, Placement> stacked_layout(const Instance& instance,
                                         const std::vector<int>& objective_dims) {
  const int n = instance.size();
  const int d = instance.dims();
  const int stack_dim = objective_dims.front();
  std::vector<char> is_objective(d, 0);
  for (int dim : objective_dims) is_objective[dim] = 1;

  Placement placement;
  placement.coords.assign(n, std::vector<int>(d, 0));
  for (int dim = 0; dim < d; ++dim) {
    if (dim == stack_dim) continue;
    const std::vector<int> coord = chain_coords(instance, dim);
    for (int v = 0; v < n; ++v) placement.coords[v][dim] = coord[v];
  }
  // Topological order along the stacking dimension's own arcs.
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succs(n);
  for (auto [a, b] : instance.arcs_in_dim(stack_dim)) {
    succs[a].push_back(b);
    ++indegree[b];
  }
  std::vector<int> ready, order;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : succs[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  int running = 0;
  for (int v : order) {
    placement.coords[v][stack_dim] = running;
    running += instance.width(v, stack_dim);
  }
  int extent = std::max(running, 1);
  for (int dim : objective_dims) {
    if (dim == stack_dim) continue;
    for (int v = 0; v < n; ++v) {
      extent = std::max(extent, placement.coords[v][dim] + instance.width(v, dim));
    }
  }
  return {extent, placement};
}

int placement_extent(const Instance& instance, const Placement& placement,
                     const std::vector<int>& objective_dims) {
  int extent = 1;
  for (int dim : objective_dims) {
    for (int v = 0; v < instance.size(); ++v) {
      extent = std::max(extent, placement.coords[v][dim] + instance.width(v, dim));
    }
  }
  return extent;
}

Instance with_extent(const Instance& instance, const std::vector<int>& objective_dims,
                     int value) {
  Instance out = instance;
  for (int dim : objective_dims) out.container.sizes[dim] = value;
  return out;
}

}  // namespace

ObjectiveResult minimize_extent(const Instance& instance,
                                const std::vector<int>& objective_dims,
                                const SearchConfig& config) {
  if (objective_dims.empty()) {
    throw std::invalid_argument("need at least one objective dimension");
  }
  for (int dim : objective_dims) {
    if (dim < 0 || dim >= instance.dims()) {
      throw std::invalid_argument("objective dimension out of range");
    }
  }
  const Clock::time_point start = Clock::now();
  const Instance closed = transitive_closure(instance);
  {
    // Validate with the objective dimensions wide enough for any item, so
    // only genuine defects of the fixed dimensions surface.
    int widest = 1;
    for (int dim : objective_dims) {
      for (int v = 0; v < closed.size(); ++v) {
        widest = std::max(widest, closed.width(v, dim));
      }
    }
    const ValidationReport report =
        validate(with_extent(closed, objective_dims, widest));
    if (!report.ok()) {
      throw std::invalid_argument("invalid instance:\n" + report.to_string());
    }
  }

  ObjectiveResult result;
  // Constraint chains in fixed dimensions must fit no matter the extent.
  for (int dim = 0; dim < closed.dims(); ++dim) {
    if (std::find(objective_dims.begin(), objective_dims.end(), dim) !=
        objective_dims.end()) {
      continue;
    }
    if (chain_extent(closed, dim) > closed.container.sizes[dim]) {
      result.infeasible = true;
      return result;
    }
  }

  int lb = static_cast<int>(lower_bound(closed, objective_dims));
  auto [stack_value, stack_place] = stacked_layout(closed, objective_dims);
  int ub = stack_value;
  std::optional<Placement> witness = std::move(stack_place);
  // Greedy refinement: first-fit into the stacked extent, then ascending
  // first-fit probes from the lower bound.
  if (auto greedy = greedy_pack(with_extent(closed, objective_dims, ub),
                                objective_dims)) {
    const int extent = placement_extent(closed, *greedy, objective_dims);
    if (extent <= ub) {
      ub = extent;
      witness = std::move(*greedy);
    }
  }
  for (int value = lb; value < ub; ++value) {
    if (auto greedy = greedy_pack(with_extent(closed, objective_dims, value),
                                  objective_dims)) {
      ub = value;
      witness = std::move(*greedy);
      break;
    }
  }
  result.find_seconds = seconds_since(start);

  const double budget = config.time_limit_seconds;
  auto remaining = [&]() {
    if (budget <= 0) return 0.0;  // unlimited
    return std::max(budget - seconds_since(start), 0.001);
  };
  auto exhausted = [&]() { return budget > 0 && seconds_since(start) >= budget; };

  auto probe = [&](int value) {
    SearchConfig probe_config = config;
    probe_config.time_limit_seconds = remaining();
    const Clock::time_point probe_start = Clock::now();
    SolveResult r = solve_copp(with_extent(closed, objective_dims, value), probe_config);
    ProbeRecord record{value, r.verdict, seconds_since(probe_start), r.stats};
    if (config.log_level >= 1) {
      std::fprintf(stderr, "[probe] extent=%d verdict=%s nodes=%llu %.2fs\n", value,
                   verdict_name(r.verdict),
                   static_cast<unsigned long long>(r.stats.nodes), record.seconds);
    }
    result.total_stats.merge(r.stats);
    if (r.verdict == Verdict::kFeasible) {
      result.find_seconds += record.seconds;
    } else {
      result.prove_seconds += record.seconds;
    }
    result.probes.push_back(std::move(record));
    return r;
  };

  if (config.binary_objective_search) {
    while (lb < ub && !exhausted()) {
      const int mid = lb + (ub - lb) / 2;
      SolveResult r = probe(mid);
      if (r.verdict == Verdict::kFeasible) {
        ub = mid;
        witness = std::move(r.placement);
      } else if (r.verdict == Verdict::kInfeasible) {
        lb = mid + 1;
      } else {
        break;  // cannot bisect past an undecided probe
      }
    }
  } else {
    const int jobs = std::max(1, config.jobs);
    int value = lb;
    while (value < ub && !exhausted()) {
      const int batch = std::min(jobs, ub - value);
      std::vector<SolveResult> results(batch);
      if (batch == 1) {
        results[0] = probe(value);
      } else {
        std::vector<std::thread> workers;
        std::vector<Instance> probes_inst;
        probes_inst.reserve(batch);
        for (int i = 0; i < batch; ++i) {
          probes_inst.push_back(with_extent(closed, objective_dims, value + i));
        }
        SearchConfig probe_config = config;
        probe_config.time_limit_seconds = remaining();
        for (int i = 0; i < batch; ++i) {
          workers.emplace_back([&, i]() {
            results[i] = solve_copp(probes_inst[i], probe_config);
          });
        }
        for (std::thread& t : workers) t.join();
        for (int i = 0; i < batch; ++i) {
          result.probes.push_back(
              {value + i, results[i].verdict, results[i].stats.wall_seconds,
               results[i].stats});
          result.total_stats.merge(results[i].stats);
          if (results[i].verdict == Verdict::kFeasible) {
            result.find_seconds += results[i].stats.wall_seconds;
          } else {
            result.prove_seconds += results[i].stats.wall_seconds;
          }
        }
      }
      bool stop = false;
      for (int i = 0; i < batch && !stop; ++i) {
        const int probe_value = value + i;
        switch (results[i].verdict) {
          case Verdict::kFeasible:
            ub = probe_value;
            witness = std::move(results[i].placement);
            stop = true;
            break;
          case Verdict::kInfeasible:
            lb = probe_value + 1;
            break;
          case Verdict::kUnknown:
            break;  // bound stays open at this value
        }
      }
      if (stop) break;
      value = std::max(value + batch, lb);
    }
  }

  result.lower_bound = std::min(lb, ub);
  result.upper_bound = ub;
  result.feasible = witness.has_value();
  result.placement = std::move(witness);
  return result;
}

ObjectiveResult solve_cspp(const Instance& instance, int objective_dim,
                           const SearchConfig& config) {
  return minimize_extent(instance, {objective_dim}, config);
}

ObjectiveResult solve_bmp(const Instance& instance, const std::vector<int>& base_dims,
                          const SearchConfig& config) {
  return minimize_extent(instance, base_dims, config);
}

}  // namespace coppack
