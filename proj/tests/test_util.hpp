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

#ifndef COPPACK_TESTS_TEST_UTIL_HPP_
#define COPPACK_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "coppack/graph.hpp"
#include "coppack/instance.hpp"
#include "coppack/realize.hpp"

namespace coppack::testutil {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline Instance random_instance(Rng& rng, int max_items, int max_side,
                                int max_arcs, int width_shrink = 1) {
  Instance inst;
  const int n = pick(rng, 0, max_items);
  const int d = 2;
  inst.container.sizes = {pick(rng, 1, max_side), pick(rng, 1, max_side)};
  for (int v = 0; v < n; ++v) {
    Item item;
    item.id = v;
    for (int dim = 0; dim < d; ++dim) {
      const int cap = std::max(1, inst.container.sizes[dim] / width_shrink);
      item.widths.push_back(pick(rng, 1, cap));
    }
    inst.items.push_back(item);
  }
  // Random acyclic arcs: only low id -> high id, random dimension.
  for (int k = 0; k < max_arcs && n >= 2; ++k) {
    if (pick(rng, 0, 1) == 0) continue;
    const int a = pick(rng, 0, n - 2);
    const int b = pick(rng, a + 1, n - 1);
    inst.constraints.push_back({pick(rng, 0, d - 1), a, b});
  }
  return inst;
}

inline SimpleGraph random_graph(Rng& rng, int n, int edge_percent) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pick(rng, 0, 99) < edge_percent) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random valid placement by rejection, or nullopt if none found quickly.
inline std::optional<Placement> random_placement(Rng& rng, const Instance& inst,
                                                 int tries = 200) {
  for (int attempt = 0; attempt < tries; ++attempt) {
    Placement p;
    p.coords.resize(inst.size());
    for (int v = 0; v < inst.size(); ++v) {
      for (int dim = 0; dim < inst.dims(); ++dim) {
        p.coords[v].push_back(
            pick(rng, 0, inst.container.sizes[dim] - inst.width(v, dim)));
      }
    }
    if (verify_placement(inst, p).empty()) return p;
  }
  return std::nullopt;
}

}  // namespace coppack::testutil

#endif  // COPPACK_TESTS_TEST_UTIL_HPP_
