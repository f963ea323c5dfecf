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

#ifndef COPPACK_PROPAGATE_HPP_
#define COPPACK_PROPAGATE_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "coppack/conflict.hpp"
#include "coppack/edge_store.hpp"
#include "coppack/instance.hpp"

namespace coppack {

/// Union-find over the two oriented literals of every comparability edge,
/// joined along P3 implications. An edge whose two literals fall into one
/// set is forced both ways: its implication class has no consistent
/// orientation. Union by size without path compression, so merges undo
/// exactly on backtracking.
class OrientationClassUnionFind {
 public:
  void reset(int dims, int pairs);

  size_t mark() const { return undo_.size(); }
  void rollback_to(size_t mark);

  /// Joins the implication between edges {x,c} and {y,c} (shared center c,
  /// outer pair {x,y} fixed as a component edge): both arcs point into c or
  /// both out of c. Returns false iff some edge is now forced both ways.
  bool link(const EdgeStore& store, int dim, int x, int y, int c);

 private:
  int find(int v) const;
  void unite(int a, int b);
  int literal(const EdgeStore& store, int dim, int from, int to) const;

  int pairs_ = 0;
  std::vector<int32_t> parent_;
  std::vector<int32_t> size_;
  std::vector<int32_t> undo_;
};

struct PropagatorOptions {
  bool axiom_rules = true;        // C2, C3, C4
  bool orientation_rules = true;  // D1, D2
  bool class_union_find = true;   // incremental class-conflict pruning
  uint64_t shuffle_seed = 0;      // 0 = FIFO queue, else random draws
};

struct PropagationStats {
  uint64_t propagations = 0;
  std::array<uint64_t, kNumConflictKinds> conflicts{};
};

/// Fixpoint engine over one EdgeStore: posted assignments are applied
/// immediately and their rule scans queued; run() drains the queue until
/// nothing is forced anymore or a rule reports a conflict.
class Propagator {
 public:
  Propagator(const Instance& instance, EdgeStore& store,
             PropagatorOptions options = {});

  struct Mark {
    size_t trail = 0;
    size_t uf = 0;
  };

  Mark mark() const;
  /// Restores store and union-find; drops pending events and any conflict.
  void rollback_to(const Mark& mark);

  /// Applies `target` to the slot and queues its consequences. Returns
  /// false on a contradictory reassignment; `source`/`why` describe the
  /// forcing rule for the conflict report.
  bool post(int dim, int pair, EdgeState target, ConflictKind source,
            std::array<int, 4> why);
  bool post_arc(int dim, int from, int to, ConflictKind source,
                std::array<int, 4> why);

  /// Posts the instance's constraint arcs (instance must be transitively
  /// closed) plus every pairwise overlap forced by item widths, then runs
  /// the cascade.
  bool seed();

  /// Drains the queue. False iff a conflict was found (see conflict()).
  bool run();

  bool in_conflict() const { return conflicted_; }
  const Conflict& conflict() const { return conflict_; }
  PropagationStats& stats() { return stats_; }
  const PropagationStats& stats() const { return stats_; }

 private:
  enum class EventKind : uint8_t { kComponent, kComparability, kOriented };
  struct Event {
    int32_t dim;
    int32_t pair;
    EventKind kind;
  };

  bool apply_outcome(PropagationOutcome&& outcome);
  void fail(Conflict conflict);
  bool scan(const Event& event);
  bool link_after_component(int dim, int pair);
  bool link_after_comparability(int dim, int pair);

  const Instance* instance_;
  EdgeStore* store_;
  PropagatorOptions options_;
  PropagationStats stats_;
  std::vector<Event> queue_;
  size_t head_ = 0;
  bool conflicted_ = false;
  Conflict conflict_;
  OrientationClassUnionFind uf_;
  std::mt19937_64 rng_;
};

}  // namespace coppack

#endif  // COPPACK_PROPAGATE_HPP_
