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

#ifndef COPPACK_ORACLE_HPP_
#define COPPACK_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "coppack/graph.hpp"
#include "coppack/instance.hpp"
#include "coppack/realize.hpp"

namespace coppack {

/// Brute-force packing reference: enumerates all integer lower corners
/// (depth-first over items with pairwise pruning). Exact on integral
/// instances; refuses instances whose raw position space exceeds `guard`
/// by throwing std::invalid_argument.
struct OracleVerdict {
  bool feasible = false;
  std::optional<Placement> placement;
};

OracleVerdict oracle_opp(const Instance& instance, uint64_t guard = 1000000);

/// All transitive orientations of `g` that contain the seed arcs, by
/// orientation enumeration with definitional pruning. Vertex count must be
/// at most 10.
std::vector<std::vector<Arc>> oracle_orientations(const SimpleGraph& g,
                                                  const std::vector<Arc>& seeds);

}  // namespace coppack

#endif  // COPPACK_ORACLE_HPP_
