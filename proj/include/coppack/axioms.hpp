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

#ifndef COPPACK_AXIOMS_HPP_
#define COPPACK_AXIOMS_HPP_

#include <optional>

#include "coppack/conflict.hpp"
#include "coppack/edge_store.hpp"
#include "coppack/instance.hpp"

namespace coppack {

/// Pair must be disjoint in at least one dimension: overlap everywhere is a
/// violation, overlap in all but one undecided dimension forces a
/// comparability edge there.
PropagationOutcome check_c3(const EdgeStore& store, int pair);

/// Fixed comparability edges are pairwise-disjoint item sets, i.e. stable
/// sets of the final component graph. Any such set heavier than the
/// container in `dim` is a violation; an undecided pair whose comparability
/// assignment would complete an overweight set is forced to overlap.
/// `pair` must have just been fixed as a comparability edge in `dim`.
PropagationOutcome check_c2(const EdgeStore& store, const Instance& instance,
                            int dim, int pair);

/// Scans induced chordless 4-cycles of component edges through `pair`
/// (both diagonals fixed comparability). A complete pattern is a violation;
/// a pattern open in exactly one slot forces that slot to the breaking
/// state. `pair` must have just been decided (either state).
PropagationOutcome check_c4(const EdgeStore& store, int dim, int pair);

/// Full non-incremental packing-class check of a fully decided store:
/// no induced component 4-cycle, comparability part transitively
/// orientable, every stable set admissible, and per-pair disjointness
/// somewhere. Returns the first violation found.
std::optional<Conflict> verify_packing_class(const Instance& instance,
                                             const EdgeStore& store);

/// True iff some clique of `adjacency` restricted to `candidates` brings
/// base_weight above `threshold`; the heaviest such clique's vertices are
/// appended to `witness` when given. Branch-and-bound with weight pruning.
bool clique_weight_exceeds(const uint64_t* adjacency, const int64_t* weights,
                           uint64_t candidates, int64_t base_weight,
                           int64_t threshold, std::vector<int>* witness);

}  // namespace coppack

#endif  // COPPACK_AXIOMS_HPP_
