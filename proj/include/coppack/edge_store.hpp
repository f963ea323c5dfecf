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

#ifndef COPPACK_EDGE_STORE_HPP_
#define COPPACK_EDGE_STORE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coppack {

// Tri-state of a vertex pair in one dimension. Comparability edges carry a
// three-way orientation state; Forward/Backward are relative to the
// canonical pair (u, v) with u < v.
enum class EdgeState : uint8_t {
  kUnassigned = 0,
  kComponent = 1,      // projected intervals overlap
  kComparability = 2,  // disjoint, orientation open
  kForward = 3,        // disjoint, u before v
  kBackward = 4,       // disjoint, v before u
};

inline bool is_decided(EdgeState s) { return s != EdgeState::kUnassigned; }
inline bool is_comparability(EdgeState s) {
  return s == EdgeState::kComparability || s == EdgeState::kForward ||
         s == EdgeState::kBackward;
}
inline bool is_oriented(EdgeState s) {
  return s == EdgeState::kForward || s == EdgeState::kBackward;
}

const char* edge_state_name(EdgeState s);

/// Per-dimension tri-state edge assignments over all vertex pairs, plus a
/// chronological trail for exact backtracking. Adjacency of every decided
/// relation is mirrored in 64-bit masks so propagation scans stay cheap.
///
/// A state may only be refined (Unassigned -> decided, Comparability ->
/// oriented); anything else is reversed exclusively by trail rollback.
class EdgeStore {
 public:
  EdgeStore(int num_items, int num_dims);

  int num_items() const { return n_; }
  int num_dims() const { return d_; }
  int num_pairs() const { return pairs_; }

  int pair_index(int u, int v) const {
    return pair_index_[u * n_ + v];
  }
  std::pair<int, int> pair_vertices(int pair) const { return pair_uv_[pair]; }

  EdgeState state(int dim, int pair) const { return states_[dim * pairs_ + pair]; }
  EdgeState state_uv(int dim, int u, int v) const {
    return state(dim, pair_index(u, v));
  }

  /// True iff the pair {u,v} is an oriented comparability edge pointing
  /// u -> v ("u lies before v in this dimension").
  bool has_arc(int dim, int u, int v) const {
    return (succ_[dim * n_ + u] >> v) & 1u;
  }

  // Decided-adjacency masks (bit w set iff {v,w} has that relation).
  uint64_t comparability_adj(int dim, int v) const { return comp_[dim * n_ + v]; }
  uint64_t component_adj(int dim, int v) const { return over_[dim * n_ + v]; }
  uint64_t arc_successors(int dim, int v) const { return succ_[dim * n_ + v]; }
  uint64_t arc_predecessors(int dim, int v) const { return pred_[dim * n_ + v]; }

  /// Records `target` for the slot if it refines the current state (a
  /// no-op when the current state already subsumes it). Returns false on a
  /// contradictory reassignment and leaves the store untouched.
  bool assign(int dim, int pair, EdgeState target);

  /// Orients pair {from,to} as from -> to. Same contract as assign().
  bool orient(int dim, int from, int to);

  size_t trail_size() const { return trail_.size(); }

  /// Undoes all entries above `mark` in reverse order. `mark` must not
  /// exceed the current trail size.
  void rollback_to(size_t mark);

  int undecided_count() const;
  bool fully_decided() const;

  /// One line per (dim, u, v, state), dimension-major then pair order.
  std::string dump() const;

  friend bool operator==(const EdgeStore& a, const EdgeStore& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.states_ == b.states_;
  }

 private:
  void write_state(int dim, int pair, EdgeState next);

  int n_;
  int d_;
  int pairs_;
  std::vector<EdgeState> states_;
  std::vector<std::pair<int, int>> pair_uv_;
  std::vector<int> pair_index_;
  std::vector<uint64_t> comp_, over_, succ_, pred_;

  struct TrailEntry {
    uint16_t dim;
    uint16_t pair;
    EdgeState prev;
  };
  std::vector<TrailEntry> trail_;
};

}  // namespace coppack

#endif  // COPPACK_EDGE_STORE_HPP_
