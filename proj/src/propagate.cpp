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

#include "coppack/propagate.hpp"

#include <bit>
#include <numeric>

#include "coppack/axioms.hpp"
#include "coppack/orient.hpp"

namespace coppack {

void OrientationClassUnionFind::reset(int dims, int pairs) {
  pairs_ = pairs;
  parent_.resize(static_cast<size_t>(dims) * pairs * 2);
  std::iota(parent_.begin(), parent_.end(), 0);
  size_.assign(parent_.size(), 1);
  undo_.clear();
}

int OrientationClassUnionFind::find(int v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

void OrientationClassUnionFind::unite(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return;
  if (size_[ra] > size_[rb]) std::swap(ra, rb);
  parent_[ra] = rb;
  size_[rb] += size_[ra];
  undo_.push_back(ra);
}

void OrientationClassUnionFind::rollback_to(size_t mark) {
  while (undo_.size() > mark) {
    const int child = undo_.back();
    undo_.pop_back();
    size_[parent_[child]] -= size_[child];
    parent_[child] = child;
  }
}

int OrientationClassUnionFind::literal(const EdgeStore& store, int dim, int from,
                                       int to) const {
  return 2 * (dim * pairs_ + store.pair_index(from, to)) + (from < to ? 0 : 1);
}

bool OrientationClassUnionFind::link(const EdgeStore& store, int dim, int x,
                                     int y, int c) {
  unite(literal(store, dim, x, c), literal(store, dim, y, c));
  unite(literal(store, dim, c, x), literal(store, dim, c, y));
  return find(literal(store, dim, x, c)) != find(literal(store, dim, c, x));
}

Propagator::Propagator(const Instance& instance, EdgeStore& store,
                       PropagatorOptions options)
    : instance_(&instance), store_(&store), options_(options),
      rng_(options.shuffle_seed) {
  if (options_.class_union_find) {
    uf_.reset(store.num_dims(), store.num_pairs());
  }
}

Propagator::Mark Propagator::mark() const {
  return {store_->trail_size(), uf_.mark()};
}

void Propagator::rollback_to(const Mark& mark) {
  store_->rollback_to(mark.trail);
  uf_.rollback_to(mark.uf);
  queue_.clear();
  head_ = 0;
  conflicted_ = false;
}

void Propagator::fail(Conflict conflict) {
  conflicted_ = true;
  ++stats_.conflicts[static_cast<int>(conflict.kind)];
  conflict_ = std::move(conflict);
}

bool Propagator::post(int dim, int pair, EdgeState target, ConflictKind source,
                      std::array<int, 4> why) {
  if (conflicted_) return false;
  const EdgeState before = store_->state(dim, pair);
  if (!store_->assign(dim, pair, target)) {
    Conflict conflict{source, dim, {}};
    for (int v : why) {
      if (v >= 0) conflict.witness.push_back(v);
    }
    fail(std::move(conflict));
    return false;
  }
  const EdgeState after = store_->state(dim, pair);
  if (after == before) return true;
  ++stats_.propagations;
  if (before == EdgeState::kUnassigned) {
    if (after == EdgeState::kComponent) {
      queue_.push_back({dim, pair, EventKind::kComponent});
    } else {
      queue_.push_back({dim, pair, EventKind::kComparability});
      if (is_oriented(after)) queue_.push_back({dim, pair, EventKind::kOriented});
    }
  } else {
    queue_.push_back({dim, pair, EventKind::kOriented});
  }
  return true;
}

bool Propagator::post_arc(int dim, int from, int to, ConflictKind source,
                          std::array<int, 4> why) {
  return post(dim, store_->pair_index(from, to),
              from < to ? EdgeState::kForward : EdgeState::kBackward, source, why);
}

bool Propagator::seed() {
  const int d = store_->num_dims();
  for (int dim = 0; dim < d; ++dim) {
    const int64_t capacity = instance_->container.sizes[dim];
    for (int pair = 0; pair < store_->num_pairs(); ++pair) {
      auto [u, v] = store_->pair_vertices(pair);
      if (instance_->width(u, dim) + instance_->width(v, dim) > capacity) {
        if (!post(dim, pair, EdgeState::kComponent,
                  ConflictKind::kOverweightStableSet, {u, v, -1, -1})) {
          return false;
        }
      }
    }
  }
  for (const PrecedenceConstraint& c : instance_->constraints) {
    if (!post_arc(c.dim, c.before, c.after, ConflictKind::kTransitivityConflict,
                  {c.before, c.after, -1, -1})) {
      return false;
    }
  }
  return run();
}

bool Propagator::apply_outcome(PropagationOutcome&& outcome) {
  if (outcome.violated) {
    fail(std::move(outcome.conflict));
    return false;
  }
  for (const ForcedAssign& f : outcome.forced) {
    if (!post(f.dim, f.pair, f.state, f.source, f.why)) return false;
  }
  return true;
}

bool Propagator::link_after_component(int dim, int pair) {
  const auto [a, b] = store_->pair_vertices(pair);
  for (uint64_t m = store_->comparability_adj(dim, a) & store_->comparability_adj(dim, b);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (!uf_.link(*store_, dim, a, b, z)) {
      fail({ConflictKind::kOddCycle, dim, {a, b, z}});
      return false;
    }
  }
  return true;
}

bool Propagator::link_after_comparability(int dim, int pair) {
  const auto [a, b] = store_->pair_vertices(pair);
  for (uint64_t m = store_->comparability_adj(dim, a) & store_->component_adj(dim, b);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (!uf_.link(*store_, dim, b, z, a)) {
      fail({ConflictKind::kOddCycle, dim, {b, z, a}});
      return false;
    }
  }
  for (uint64_t m = store_->comparability_adj(dim, b) & store_->component_adj(dim, a);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (!uf_.link(*store_, dim, a, z, b)) {
      fail({ConflictKind::kOddCycle, dim, {a, z, b}});
      return false;
    }
  }
  return true;
}

bool Propagator::scan(const Event& event) {
  switch (event.kind) {
    case EventKind::kComponent:
      if (options_.axiom_rules) {
        if (!apply_outcome(check_c3(*store_, event.pair))) return false;
        if (!apply_outcome(check_c4(*store_, event.dim, event.pair))) return false;
      }
      if (options_.orientation_rules) {
        if (options_.class_union_find &&
            !link_after_component(event.dim, event.pair)) {
          return false;
        }
        if (!apply_outcome(p3_link_scan(*store_, event.dim, event.pair))) return false;
      }
      return true;
    case EventKind::kComparability:
      if (options_.axiom_rules) {
        if (!apply_outcome(check_c4(*store_, event.dim, event.pair))) return false;
        if (!apply_outcome(check_c2(*store_, *instance_, event.dim, event.pair))) {
          return false;
        }
      }
      if (options_.orientation_rules) {
        if (options_.class_union_find &&
            !link_after_comparability(event.dim, event.pair)) {
          return false;
        }
        if (!apply_outcome(p3_onto_edge(*store_, event.dim, event.pair))) return false;
        if (!apply_outcome(transitivity_onto_edge(*store_, event.dim, event.pair))) {
          return false;
        }
      }
      return true;
    case EventKind::kOriented:
      if (options_.orientation_rules) {
        if (!apply_outcome(propagate_p3(*store_, event.dim, event.pair))) return false;
        if (!apply_outcome(propagate_transitivity(*store_, event.dim, event.pair))) {
          return false;
        }
      }
      return true;
  }
  return true;
}

bool Propagator::run() {
  if (conflicted_) return false;
  while (head_ < queue_.size()) {
    if (options_.shuffle_seed != 0) {
      const size_t pick =
          head_ + rng_() % (queue_.size() - head_);
      std::swap(queue_[head_], queue_[pick]);
    }
    const Event event = queue_[head_++];
    if (!scan(event)) {
      queue_.clear();
      head_ = 0;
      return false;
    }
  }
  queue_.clear();
  head_ = 0;
  return true;
}

}  // namespace coppack
