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

#ifndef COPPACK_REALIZE_HPP_
#define COPPACK_REALIZE_HPP_

#include <string>
#include <vector>

#include "coppack/edge_store.hpp"
#include "coppack/graph.hpp"
#include "coppack/instance.hpp"

namespace coppack {

/// Integer lower-corner coordinates per item per dimension; the geometric
/// witness of feasibility.
struct Placement {
  std::vector<std::vector<int>> coords;  // [item][dim]
};

enum class PlacementIssueKind { kOutOfBounds, kOverlap, kPrecedence };

struct PlacementIssue {
  PlacementIssueKind kind;
  std::string message;
};

/// Leftmost (longest-path) placement from one full transitive orientation
/// per dimension: an item starts where its heaviest chain of predecessors
/// ends. Throws std::logic_error if some coordinate exceeds the container;
/// impossible for orientations of a verified packing class.
Placement realize(const Instance& instance,
                  const std::vector<std::vector<Arc>>& arcs_per_dim);

/// Same, reading the arcs of a fully decided, fully oriented store.
Placement realize(const Instance& instance, const EdgeStore& store);

/// Projects a placement back to the combinatorial state: overlapping
/// projections become component edges, disjoint ones oriented comparability
/// edges.
EdgeStore project_placement(const Instance& instance, const Placement& placement);

/// Exhaustive check of containment, pairwise disjointness, and precedence.
/// Empty result means the placement is feasible.
std::vector<PlacementIssue> verify_placement(const Instance& instance,
                                             const Placement& placement);

}  // namespace coppack

#endif  // COPPACK_REALIZE_HPP_
