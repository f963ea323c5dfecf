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

#include "coppack/realize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coppack {

namespace {

// Longest-path start times over one dimension's arcs.
std::vector<int> longest_path_coords(const Instance& instance, int dim,
                                     const std::vector<Arc>& arcs) {
  const int n = instance.size();
  std::vector<std::vector<int>> preds(n);
  std::vector<int> indegree(n, 0);
  for (const Arc& a : arcs) {
    preds[a.to].push_back(a.from);
    ++indegree[a.to];
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> outdeg_pending = indegree;
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<std::vector<int>> succs(n);
  for (const Arc& a : arcs) succs[a.from].push_back(a.to);
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : succs[v]) {
      if (--outdeg_pending[w] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::logic_error("orientation contains a directed cycle");
  }
  std::vector<int> coord(n, 0);
  for (int v : order) {
    for (int u : preds[v]) {
      coord[v] = std::max(coord[v], coord[u] + instance.width(u, dim));
    }
  }
  return coord;
}

}  // namespace

Placement realize(const Instance& instance,
                  const std::vector<std::vector<Arc>>& arcs_per_dim) {
  const int n = instance.size();
  const int d = instance.dims();
  if (static_cast<int>(arcs_per_dim.size()) != d) {
    throw std::invalid_argument("need one arc set per dimension");
  }
  Placement placement;
  placement.coords.assign(n, std::vector<int>(d, 0));
  for (int dim = 0; dim < d; ++dim) {
    const std::vector<int> coord = longest_path_coords(instance, dim, arcs_per_dim[dim]);
    for (int v = 0; v < n; ++v) {
      if (coord[v] + instance.width(v, dim) > instance.container.sizes[dim]) {
        throw std::logic_error("realized coordinate exceeds the container");
      }
      placement.coords[v][dim] = coord[v];
    }
  }
  return placement;
}

Placement realize(const Instance& instance, const EdgeStore& store) {
  const int d = store.num_dims();
  std::vector<std::vector<Arc>> arcs(d);
  for (int dim = 0; dim < d; ++dim) {
    for (int pair = 0; pair < store.num_pairs(); ++pair) {
      const EdgeState s = store.state(dim, pair);
      auto [u, v] = store.pair_vertices(pair);
      if (s == EdgeState::kForward) {
        arcs[dim].push_back({u, v});
      } else if (s == EdgeState::kBackward) {
        arcs[dim].push_back({v, u});
      } else if (s != EdgeState::kComponent) {
        throw std::invalid_argument("store is not fully decided and oriented");
      }
    }
  }
  return realize(instance, arcs);
}

EdgeStore project_placement(const Instance& instance, const Placement& placement) {
  const int n = instance.size();
  const int d = instance.dims();
  EdgeStore store(n, d);
  for (int dim = 0; dim < d; ++dim) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const int ub = placement.coords[u][dim];
        const int ue = ub + instance.width(u, dim);
        const int vb = placement.coords[v][dim];
        const int ve = vb + instance.width(v, dim);
        EdgeState s;
        if (ub < ve && vb < ue) {
          s = EdgeState::kComponent;
        } else {
          s = ue <= vb ? EdgeState::kForward : EdgeState::kBackward;
        }
        store.assign(dim, store.pair_index(u, v), s);
      }
    }
  }
  return store;
}

std::vector<PlacementIssue> verify_placement(const Instance& instance,
                                             const Placement& placement) {
  std::vector<PlacementIssue> issues;
  const int n = instance.size();
  const int d = instance.dims();
  if (static_cast<int>(placement.coords.size()) != n) {
    issues.push_back({PlacementIssueKind::kOutOfBounds, "coordinate row count mismatch"});
    return issues;
  }
  for (int v = 0; v < n; ++v) {
    for (int dim = 0; dim < d; ++dim) {
      const int c = placement.coords[v][dim];
      if (c < 0 || c + instance.width(v, dim) > instance.container.sizes[dim]) {
        std::ostringstream msg;
        msg << "item " << v << " leaves the container in dimension " << dim;
        issues.push_back({PlacementIssueKind::kOutOfBounds, msg.str()});
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool disjoint_somewhere = false;
      for (int dim = 0; dim < d && !disjoint_somewhere; ++dim) {
        const int ub = placement.coords[u][dim], ue = ub + instance.width(u, dim);
        const int vb = placement.coords[v][dim], ve = vb + instance.width(v, dim);
        disjoint_somewhere = ue <= vb || ve <= ub;
      }
      if (!disjoint_somewhere) {
        std::ostringstream msg;
        msg << "items " << u << " and " << v << " overlap";
        issues.push_back({PlacementIssueKind::kOverlap, msg.str()});
      }
    }
  }
  for (const PrecedenceConstraint& c : instance.constraints) {
    const int end = placement.coords[c.before][c.dim] + instance.width(c.before, c.dim);
    if (end > placement.coords[c.after][c.dim]) {
      std::ostringstream msg;
      msg << "constraint " << c.before << " -> " << c.after << " violated in dimension "
          << c.dim;
      issues.push_back({PlacementIssueKind::kPrecedence, msg.str()});
    }
  }
  return issues;
}

}  // namespace coppack
