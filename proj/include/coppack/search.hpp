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

#ifndef COPPACK_SEARCH_HPP_
#define COPPACK_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coppack/conflict.hpp"
#include "coppack/instance.hpp"
#include "coppack/realize.hpp"

namespace coppack {

struct SearchConfig {
  uint64_t node_limit = 0;          // 0 = unlimited
  double time_limit_seconds = 0.0;  // 0 = unlimited
  int branch_rule = 5;              // see CoppSearcher::pick_slot (5 = conflict-driven)
  bool class_union_find = true;     // incremental class-conflict pruning
  uint64_t shuffle_seed = 0;        // 0 = deterministic FIFO propagation
  bool binary_objective_search = false;
  int jobs = 1;                     // parallel objective probes
  int log_level = 0;
};

enum class Verdict { kFeasible, kInfeasible, kUnknown };

const char* verdict_name(Verdict verdict);

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t propagations = 0;
  std::array<uint64_t, kNumConflictKinds> conflicts{};
  int max_depth = 0;
  double wall_seconds = 0.0;
  bool root_conflict = false;  // refuted during initial propagation
  ConflictKind root_conflict_kind = ConflictKind::kEmptyIntersection;

  uint64_t conflict_total() const;
  void merge(const SearchStats& other);
};

struct SolveResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Placement> placement;  // set iff feasible
  SearchStats stats;
};

/// Decides one constrained orthogonal packing instance: seeds the
/// constraint closure, propagates to fixpoint, then branch-and-bound over
/// undecided slots (overlap tried first). Instance must validate.
SolveResult solve_copp(const Instance& instance, const SearchConfig& config = {});

/// Elementary bound on the common extent of the objective dimensions: the
/// container volume bound and, per objective dimension, the heaviest
/// constraint chain.
int64_t lower_bound(const Instance& instance, const std::vector<int>& objective_dims);

/// First-fit placement into the fixed container: items in topological
/// order, each at the lexicographically least feasible corner (objective
/// dims most significant). Fails when some item has no feasible corner.
std::optional<Placement> greedy_pack(const Instance& instance,
                                     const std::vector<int>& objective_dims = {});

struct ProbeRecord {
  int value = 0;
  Verdict verdict = Verdict::kUnknown;
  double seconds = 0.0;
  SearchStats stats;
};

struct ObjectiveResult {
  int lower_bound = 0;       // least value not proven infeasible
  int upper_bound = 0;       // least value with a known placement
  bool feasible = false;     // witness exists at upper_bound
  bool infeasible = false;   // no extent can satisfy the fixed dimensions
  std::optional<Placement> placement;
  std::vector<ProbeRecord> probes;
  double find_seconds = 0.0;   // spent discovering the final placement
  double prove_seconds = 0.0;  // spent refuting or attempting smaller values
  SearchStats total_stats;

  bool closed() const { return feasible && lower_bound == upper_bound; }
};

/// Minimizes the common size of the objective dimensions by ascending
/// feasibility probes between the elementary lower bound and a greedy
/// upper bound; the first feasible value is optimal. Sizes of objective
/// dimensions in `instance` are ignored.
ObjectiveResult minimize_extent(const Instance& instance,
                                const std::vector<int>& objective_dims,
                                const SearchConfig& config = {});

/// Strip packing: minimize one dimension for a fixed base.
ObjectiveResult solve_cspp(const Instance& instance, int objective_dim,
                           const SearchConfig& config = {});

/// Base minimization: the base dimensions share one minimized size.
ObjectiveResult solve_bmp(const Instance& instance, const std::vector<int>& base_dims,
                          const SearchConfig& config = {});

}  // namespace coppack

#endif  // COPPACK_SEARCH_HPP_
