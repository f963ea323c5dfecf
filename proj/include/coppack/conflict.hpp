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

#ifndef COPPACK_CONFLICT_HPP_
#define COPPACK_CONFLICT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coppack/edge_store.hpp"

namespace coppack {

enum class ConflictKind : uint8_t {
  kEmptyIntersection = 0,   // pair overlaps in every dimension (C3)
  kFourCycle = 1,           // induced chordless 4-cycle of component edges (C1)
  kOverweightStableSet = 2, // stable set heavier than the container (C2)
  kOddCycle = 3,            // implication class forcing both orientations (C1)
  kP3Conflict = 4,          // violated P3 implication (D1)
  kTransitivityConflict = 5 // violated transitivity implication (D2)
};

inline constexpr int kNumConflictKinds = 6;

const char* conflict_kind_name(ConflictKind kind);

/// A violated rule with a concrete witness, re-checkable against the store.
struct Conflict {
  ConflictKind kind;
  int dim = -1;
  std::vector<int> witness;  // vertex ids of the forbidden substructure

  std::string to_string() const;
};

/// Result of one incremental rule scan: assignments the rule forces, or a
/// violation. `forced` entries are applied by the propagation engine; when
/// one contradicts the current state, `source` and `why` become the
/// conflict report.
struct ForcedAssign {
  int dim;
  int pair;
  EdgeState state;
  ConflictKind source;
  std::array<int, 4> why;  // witness vertices, -1 padded
};

struct PropagationOutcome {
  std::vector<ForcedAssign> forced;
  bool violated = false;
  Conflict conflict;

  static PropagationOutcome ok() { return {}; }
  static PropagationOutcome violation(Conflict c) {
    PropagationOutcome out;
    out.violated = true;
    out.conflict = std::move(c);
    return out;
  }
};

}  // namespace coppack

#endif  // COPPACK_CONFLICT_HPP_
