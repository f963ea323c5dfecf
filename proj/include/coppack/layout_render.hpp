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

#ifndef COPPACK_LAYOUT_RENDER_HPP_
#define COPPACK_LAYOUT_RENDER_HPP_

#include <string>

#include "coppack/instance.hpp"
#include "coppack/realize.hpp"

namespace coppack {

/// Deterministic SVG of the placement projected onto two dimensions: one
/// labeled rectangle per item over a fixed palette keyed by item id, plus
/// the container outline. Byte-stable across runs.
std::string emit_svg(const Instance& instance, const Placement& placement,
                     int dim_x, int dim_y);

/// Character-cell rendering of the same projection, one grid cell per
/// character, downscaled to at most 120 columns. Debug aid.
std::string emit_ascii(const Instance& instance, const Placement& placement,
                       int dim_x, int dim_y);

}  // namespace coppack

#endif  // COPPACK_LAYOUT_RENDER_HPP_
