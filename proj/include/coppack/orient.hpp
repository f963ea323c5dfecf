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

#ifndef COPPACK_ORIENT_HPP_
#define COPPACK_ORIENT_HPP_

#include <vector>

#include "coppack/conflict.hpp"
#include "coppack/edge_store.hpp"
#include "coppack/graph.hpp"

namespace coppack {

SimpleGraph comparability_graph(const EdgeStore& store, int dim);
SimpleGraph component_graph(const EdgeStore& store, int dim);

/// Orientations forced by the arc on `pair` (which must be oriented)
/// through P3 configurations: two comparability edges sharing a center
/// whose outer pair is a fixed component edge must both point into the
/// center or both out of it. Contradictions surface when the engine
/// applies the forced arc against the existing state.
PropagationOutcome propagate_p3(const EdgeStore& store, int dim, int pair);

/// Directed 2-chains through the arc on `pair` force the closing pair to
/// be a comparability edge with the composed orientation; a closing pair
/// that is a component edge or oriented the other way is a transitivity
/// conflict.
PropagationOutcome propagate_transitivity(const EdgeStore& store, int dim, int pair);

/// Orientations forced onto the freshly fixed comparability edge `pair` by
/// already-oriented neighbours (P3 configurations through either endpoint).
PropagationOutcome p3_onto_edge(const EdgeStore& store, int dim, int pair);

/// Orientations forced onto `pair` by directed 2-chains between its
/// endpoints.
PropagationOutcome transitivity_onto_edge(const EdgeStore& store, int dim, int pair);

/// P3 implications created by the freshly fixed component edge `pair`: each
/// comparability-edge pair it joins must agree relative to the shared
/// center. Reports a transitivity conflict for a directed chain that
/// crosses the new component edge.
PropagationOutcome p3_link_scan(const EdgeStore& store, int dim, int pair);

/// One P3 implication class of a dimension's comparability edges.
struct ImplicationClass {
  enum class Status { kUnoriented, kOrientedConsistently, kSelfConflicting };

  int id = 0;
  std::vector<int> edges;  // pair indices, ascending
  Status status = Status::kUnoriented;
};

/// Partition of the currently fixed comparability edges into P3 implication
/// classes (linking only across fixed component edges), each tagged by
/// trial-orienting a member and running the P3 closure inside the class.
/// Rebuilt on demand; not meant for the search's hot path.
std::vector<ImplicationClass> implication_classes(const EdgeStore& store, int dim);

/// Runs P3 implications over `g` from the seeds to fixpoint, extending
/// `arcs` in place. Returns false (and fills `conflict`) if some edge is
/// forced both ways.
bool p3_closure_on_graph(const SimpleGraph& g, std::vector<Arc>& arcs,
                         Conflict* conflict = nullptr);

struct TopResult {
  bool feasible = false;
  // Conflict-free closure of the seeds under D1/D2: classes touched by the
  // seeds are completely oriented, untouched classes stay unoriented.
  std::vector<Arc> closure;
  Conflict conflict;  // set when infeasible
};

/// Decides whether the seed arcs extend to a transitive orientation of `g`:
/// runs the D1/D2 closure, then trial-orients every untouched implication
/// class. `g` need not be a comparability graph; non-orientable classes are
/// reported as conflicts. Seeds must lie on edges of `g`.
/// `shuffle_seed` randomizes the implication processing order (0 = FIFO).
TopResult top_feasible(const SimpleGraph& g, const std::vector<Arc>& seeds,
                       uint64_t shuffle_seed = 0);

}  // namespace coppack

#endif  // COPPACK_ORIENT_HPP_
