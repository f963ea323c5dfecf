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

#include "coppack/conflict.hpp"

#include <sstream>

namespace coppack {

const char* conflict_kind_name(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::kEmptyIntersection: return "empty_intersection";
    case ConflictKind::kFourCycle: return "four_cycle";
    case ConflictKind::kOverweightStableSet: return "overweight_stable_set";
    case ConflictKind::kOddCycle: return "odd_cycle";
    case ConflictKind::kP3Conflict: return "p3_conflict";
    case ConflictKind::kTransitivityConflict: return "transitivity_conflict";
  }
  return "?";
}

std::string Conflict::to_string() const {
  std::ostringstream out;
  out << conflict_kind_name(kind);
  if (dim >= 0) out << " dim=" << dim;
  out << " witness=[";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out << ',';
    out << witness[i];
  }
  out << ']';
  return out.str();
}

}  // namespace coppack
