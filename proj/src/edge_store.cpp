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

#include "coppack/edge_store.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "coppack/instance.hpp"

namespace coppack {

const char* edge_state_name(EdgeState s) {
  switch (s) {
    case EdgeState::kUnassigned: return "unassigned";
    case EdgeState::kComponent: return "component";
    case EdgeState::kComparability: return "comparability";
    case EdgeState::kForward: return "forward";
    case EdgeState::kBackward: return "backward";
  }
  return "?";
}

EdgeStore::EdgeStore(int num_items, int num_dims)
    : n_(num_items), d_(num_dims), pairs_(num_items * (num_items - 1) / 2) {
  if (n_ < 0 || n_ > kMaxItems) throw std::invalid_argument("item count out of range");
  if (d_ < 1) throw std::invalid_argument("need at least one dimension");
  states_.assign(static_cast<size_t>(d_) * pairs_, EdgeState::kUnassigned);
  pair_uv_.reserve(pairs_);
  pair_index_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      pair_index_[u * n_ + v] = static_cast<int>(pair_uv_.size());
      pair_index_[v * n_ + u] = static_cast<int>(pair_uv_.size());
      pair_uv_.emplace_back(u, v);
    }
  }
  comp_.assign(static_cast<size_t>(d_) * n_, 0);
  over_.assign(static_cast<size_t>(d_) * n_, 0);
  succ_.assign(static_cast<size_t>(d_) * n_, 0);
  pred_.assign(static_cast<size_t>(d_) * n_, 0);
}

namespace {

// A slot may move Unassigned -> any decided state, or Comparability -> an
// orientation. Equal or already-subsumed targets are accepted as no-ops.
bool refines(EdgeState current, EdgeState target) {
  if (current == target) return true;
  if (current == EdgeState::kUnassigned) return true;
  if (current == EdgeState::kComparability && is_oriented(target)) return true;
  if (is_oriented(current) && target == EdgeState::kComparability) return true;
  return false;
}

bool is_noop(EdgeState current, EdgeState target) {
  return current == target ||
         (is_oriented(current) && target == EdgeState::kComparability);
}

}  // namespace

void EdgeStore::write_state(int dim, int pair, EdgeState next) {
  auto [u, v] = pair_uv_[pair];
  const uint64_t ubit = uint64_t{1} << u;
  const uint64_t vbit = uint64_t{1} << v;
  uint64_t* comp = &comp_[dim * n_];
  uint64_t* over = &over_[dim * n_];
  uint64_t* succ = &succ_[dim * n_];
  uint64_t* pred = &pred_[dim * n_];

  // Clear everything the old state contributed, then set the new bits.
  comp[u] &= ~vbit; comp[v] &= ~ubit;
  over[u] &= ~vbit; over[v] &= ~ubit;
  succ[u] &= ~vbit; succ[v] &= ~ubit;
  pred[u] &= ~vbit; pred[v] &= ~ubit;

  switch (next) {
    case EdgeState::kUnassigned:
      break;
    case EdgeState::kComponent:
      over[u] |= vbit; over[v] |= ubit;
      break;
    case EdgeState::kComparability:
      comp[u] |= vbit; comp[v] |= ubit;
      break;
    case EdgeState::kForward:
      comp[u] |= vbit; comp[v] |= ubit;
      succ[u] |= vbit; pred[v] |= ubit;
      break;
    case EdgeState::kBackward:
      comp[u] |= vbit; comp[v] |= ubit;
      succ[v] |= ubit; pred[u] |= vbit;
      break;
  }
  states_[dim * pairs_ + pair] = next;
}

bool EdgeStore::assign(int dim, int pair, EdgeState target) {
  const EdgeState current = state(dim, pair);
  if (!refines(current, target)) return false;
  if (is_noop(current, target)) return true;
  trail_.push_back({static_cast<uint16_t>(dim), static_cast<uint16_t>(pair), current});
  write_state(dim, pair, target);
  return true;
}

bool EdgeStore::orient(int dim, int from, int to) {
  const int pair = pair_index(from, to);
  return assign(dim, pair,
                from < to ? EdgeState::kForward : EdgeState::kBackward);
}

void EdgeStore::rollback_to(size_t mark) {
  if (mark > trail_.size()) throw std::logic_error("rollback mark beyond trail");
  while (trail_.size() > mark) {
    const TrailEntry e = trail_.back();
    trail_.pop_back();
    write_state(e.dim, e.pair, e.prev);
  }
}

int EdgeStore::undecided_count() const {
  int count = 0;
  for (EdgeState s : states_) count += (s == EdgeState::kUnassigned);
  return count;
}

bool EdgeStore::fully_decided() const { return undecided_count() == 0; }

std::string EdgeStore::dump() const {
  std::ostringstream out;
  for (int dim = 0; dim < d_; ++dim) {
    for (int pair = 0; pair < pairs_; ++pair) {
      auto [u, v] = pair_uv_[pair];
      out << dim << ' ' << u << ' ' << v << ' '
          << edge_state_name(state(dim, pair)) << '\n';
    }
  }
  return out.str();
}

}  // namespace coppack
