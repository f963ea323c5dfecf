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

#include "coppack/orient.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coppack/propagate.hpp"

namespace coppack {

namespace {

EdgeState arc_state(const EdgeStore& store, int from, int to) {
  return from < to ? EdgeState::kForward : EdgeState::kBackward;
}

// Unpacks the arc carried by an oriented pair.
std::pair<int, int> oriented_pair(const EdgeStore& store, int dim, int pair) {
  auto [u, v] = store.pair_vertices(pair);
  const EdgeState s = store.state(dim, pair);
  if (s == EdgeState::kForward) return {u, v};
  if (s == EdgeState::kBackward) return {v, u};
  throw std::invalid_argument("pair carries no orientation");
}

}  // namespace

SimpleGraph comparability_graph(const EdgeStore& store, int dim) {
  SimpleGraph g(store.num_items());
  for (int pair = 0; pair < store.num_pairs(); ++pair) {
    if (is_comparability(store.state(dim, pair))) {
      auto [u, v] = store.pair_vertices(pair);
      g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph component_graph(const EdgeStore& store, int dim) {
  SimpleGraph g(store.num_items());
  for (int pair = 0; pair < store.num_pairs(); ++pair) {
    if (store.state(dim, pair) == EdgeState::kComponent) {
      auto [u, v] = store.pair_vertices(pair);
      g.add_edge(u, v);
    }
  }
  return g;
}

PropagationOutcome propagate_p3(const EdgeStore& store, int dim, int pair) {
  const auto [u, w] = oriented_pair(store, dim, pair);
  PropagationOutcome out;
  // Center w: {w,z} comparability, outer {u,z} overlaps. u->w points into
  // the center, so z->w.
  for (uint64_t m = store.comparability_adj(dim, w) & store.component_adj(dim, u);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (!store.has_arc(dim, z, w)) {
      out.forced.push_back({dim, store.pair_index(z, w), arc_state(store, z, w),
                            ConflictKind::kP3Conflict, {u, w, z, -1}});
    }
  }
  // Center u: {u,z} comparability, outer {w,z} overlaps. u->w points out of
  // the center, so u->z.
  for (uint64_t m = store.comparability_adj(dim, u) & store.component_adj(dim, w);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (!store.has_arc(dim, u, z)) {
      out.forced.push_back({dim, store.pair_index(u, z), arc_state(store, u, z),
                            ConflictKind::kP3Conflict, {u, w, z, -1}});
    }
  }
  return out;
}

PropagationOutcome propagate_transitivity(const EdgeStore& store, int dim, int pair) {
  const auto [u, w] = oriented_pair(store, dim, pair);
  PropagationOutcome out;
  for (uint64_t m = store.arc_successors(dim, w); m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (z == u || store.has_arc(dim, u, z)) continue;
    out.forced.push_back({dim, store.pair_index(u, z), arc_state(store, u, z),
                          ConflictKind::kTransitivityConflict, {u, w, z, -1}});
  }
  for (uint64_t m = store.arc_predecessors(dim, u); m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (z == w || store.has_arc(dim, z, w)) continue;
    out.forced.push_back({dim, store.pair_index(z, w), arc_state(store, z, w),
                          ConflictKind::kTransitivityConflict, {z, u, w, -1}});
  }
  return out;
}

PropagationOutcome p3_onto_edge(const EdgeStore& store, int dim, int pair) {
  const auto [a, b] = store.pair_vertices(pair);
  PropagationOutcome out;
  // Center a: partner edge {a,z}, outer {b,z} overlaps.
  for (uint64_t m = store.comparability_adj(dim, a) & store.component_adj(dim, b);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (store.has_arc(dim, a, z)) {
      out.forced.push_back({dim, pair, arc_state(store, a, b),
                            ConflictKind::kP3Conflict, {a, z, b, -1}});
    } else if (store.has_arc(dim, z, a)) {
      out.forced.push_back({dim, pair, arc_state(store, b, a),
                            ConflictKind::kP3Conflict, {a, z, b, -1}});
    }
  }
  // Center b: partner edge {b,z}, outer {a,z} overlaps.
  for (uint64_t m = store.comparability_adj(dim, b) & store.component_adj(dim, a);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    if (store.has_arc(dim, b, z)) {
      out.forced.push_back({dim, pair, arc_state(store, b, a),
                            ConflictKind::kP3Conflict, {b, z, a, -1}});
    } else if (store.has_arc(dim, z, b)) {
      out.forced.push_back({dim, pair, arc_state(store, a, b),
                            ConflictKind::kP3Conflict, {b, z, a, -1}});
    }
  }
  return out;
}

PropagationOutcome transitivity_onto_edge(const EdgeStore& store, int dim, int pair) {
  const auto [u, v] = store.pair_vertices(pair);
  PropagationOutcome out;
  for (uint64_t m = store.arc_successors(dim, u) & store.arc_predecessors(dim, v);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    out.forced.push_back({dim, pair, arc_state(store, u, v),
                          ConflictKind::kTransitivityConflict, {u, z, v, -1}});
  }
  for (uint64_t m = store.arc_successors(dim, v) & store.arc_predecessors(dim, u);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    out.forced.push_back({dim, pair, arc_state(store, v, u),
                          ConflictKind::kTransitivityConflict, {v, z, u, -1}});
  }
  return out;
}

PropagationOutcome p3_link_scan(const EdgeStore& store, int dim, int pair) {
  const auto [a, b] = store.pair_vertices(pair);
  PropagationOutcome out;
  for (uint64_t m = store.comparability_adj(dim, a) & store.comparability_adj(dim, b);
       m != 0; m &= m - 1) {
    const int z = std::countr_zero(m);
    const bool az = store.has_arc(dim, a, z), za = store.has_arc(dim, z, a);
    const bool bz = store.has_arc(dim, b, z), zb = store.has_arc(dim, z, b);
    if ((az && zb) || (bz && za)) {
      // Directed chain across the new component edge.
      return PropagationOutcome::violation(
          {ConflictKind::kTransitivityConflict, dim,
           az ? std::vector<int>{a, z, b} : std::vector<int>{b, z, a}});
    }
    if (az && !bz) {
      out.forced.push_back({dim, store.pair_index(b, z), arc_state(store, b, z),
                            ConflictKind::kP3Conflict, {a, b, z, -1}});
    } else if (bz && !az) {
      out.forced.push_back({dim, store.pair_index(a, z), arc_state(store, a, z),
                            ConflictKind::kP3Conflict, {a, b, z, -1}});
    } else if (za && !zb) {
      out.forced.push_back({dim, store.pair_index(z, b), arc_state(store, z, b),
                            ConflictKind::kP3Conflict, {a, b, z, -1}});
    } else if (zb && !za) {
      out.forced.push_back({dim, store.pair_index(z, a), arc_state(store, z, a),
                            ConflictKind::kP3Conflict, {a, b, z, -1}});
    }
  }
  return out;
}

namespace {

struct PairUnionFind {
  std::vector<int> parent;

  explicit PairUnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<ImplicationClass> implication_classes(const EdgeStore& store, int dim) {
  const int n = store.num_items();
  PairUnionFind uf(store.num_pairs());
  for (int center = 0; center < n; ++center) {
    const uint64_t nbrs = store.comparability_adj(dim, center);
    for (uint64_t ma = nbrs; ma != 0; ma &= ma - 1) {
      const int a = std::countr_zero(ma);
      for (uint64_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1) {
        const int b = std::countr_zero(mb);
        if (store.state_uv(dim, a, b) == EdgeState::kComponent) {
          uf.unite(store.pair_index(a, center), store.pair_index(b, center));
        }
      }
    }
  }

  std::map<int, ImplicationClass> by_root;
  for (int pair = 0; pair < store.num_pairs(); ++pair) {
    if (!is_comparability(store.state(dim, pair))) continue;
    by_root[uf.find(pair)].edges.push_back(pair);
  }

  std::vector<ImplicationClass> classes;
  for (auto& [root, cls] : by_root) {
    cls.id = static_cast<int>(classes.size());

    // Tag the class by running the P3 closure inside it, seeded with the
    // store's own orientations, or a trial orientation when untouched.
    // Orientation is tracked per pair: +1 forward, -1 backward, 0 open.
    std::vector<std::pair<int, int>> seeds;
    for (int pair : cls.edges) {
      if (is_oriented(store.state(dim, pair))) {
        seeds.emplace_back(pair, store.state(dim, pair) == EdgeState::kForward ? 1 : -1);
      }
    }
    const bool pre_oriented = !seeds.empty();
    if (!pre_oriented) seeds.emplace_back(cls.edges.front(), 1);

    std::vector<int> orientation(store.num_pairs(), 0);
    std::vector<int> queue;
    bool conflict = false;
    auto set_orientation = [&](int pair, int dir) {
      if (orientation[pair] == dir) return;
      if (orientation[pair] != 0) {
        conflict = true;
        return;
      }
      orientation[pair] = dir;
      queue.push_back(pair);
    };
    for (auto [pair, dir] : seeds) set_orientation(pair, dir);
    while (!queue.empty() && !conflict) {
      const int pair = queue.back();
      queue.pop_back();
      auto [pu, pv] = store.pair_vertices(pair);
      const int from = orientation[pair] > 0 ? pu : pv;
      const int to = orientation[pair] > 0 ? pv : pu;
      // Both P3 roles of the oriented edge, as in propagate_p3.
      for (uint64_t m = store.comparability_adj(dim, to) & store.component_adj(dim, from);
           m != 0 && !conflict; m &= m - 1) {
        const int z = std::countr_zero(m);
        const int partner = store.pair_index(z, to);
        set_orientation(partner, z < to ? 1 : -1);
      }
      for (uint64_t m = store.comparability_adj(dim, from) & store.component_adj(dim, to);
           m != 0 && !conflict; m &= m - 1) {
        const int z = std::countr_zero(m);
        const int partner = store.pair_index(from, z);
        set_orientation(partner, from < z ? 1 : -1);
      }
    }
    cls.status = conflict ? ImplicationClass::Status::kSelfConflicting
                 : pre_oriented ? ImplicationClass::Status::kOrientedConsistently
                                : ImplicationClass::Status::kUnoriented;
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool p3_closure_on_graph(const SimpleGraph& g, std::vector<Arc>& arcs,
                         Conflict* conflict) {
  const int n = g.size();
  std::vector<int8_t> dir(static_cast<size_t>(n) * n, 0);  // +1 arc, -1 reverse
  std::vector<Arc> queue;
  bool bad = false;
  Arc bad_arc{};
  auto set_arc = [&](int from, int to) {
    if (dir[from * n + to] == 1) return;
    if (dir[from * n + to] == -1) {
      bad = true;
      bad_arc = {from, to};
      return;
    }
    dir[from * n + to] = 1;
    dir[to * n + from] = -1;
    queue.push_back({from, to});
    arcs.push_back({from, to});
  };
  const std::vector<Arc> seeds = arcs;
  arcs.clear();
  for (const Arc& a : seeds) {
    if (!g.has_edge(a.from, a.to)) throw std::invalid_argument("seed arc off the graph");
    set_arc(a.from, a.to);
  }
  while (!queue.empty() && !bad) {
    const Arc arc = queue.back();
    queue.pop_back();
    for (uint64_t m = g.neighbors(arc.to) & ~g.neighbors(arc.from); m != 0 && !bad;
         m &= m - 1) {
      const int z = std::countr_zero(m);
      if (z != arc.from) set_arc(z, arc.to);
    }
    for (uint64_t m = g.neighbors(arc.from) & ~g.neighbors(arc.to); m != 0 && !bad;
         m &= m - 1) {
      const int z = std::countr_zero(m);
      if (z != arc.to) set_arc(arc.from, z);
    }
  }
  if (bad && conflict != nullptr) {
    *conflict = {ConflictKind::kP3Conflict, -1, {bad_arc.from, bad_arc.to}};
  }
  return !bad;
}

TopResult top_feasible(const SimpleGraph& g, const std::vector<Arc>& seeds,
                       uint64_t shuffle_seed) {
  const int n = g.size();
  for (const Arc& a : seeds) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n || !g.has_edge(a.from, a.to)) {
      throw std::invalid_argument("seed arc is not an edge of the graph");
    }
  }

  // Encode the graph as a single-dimension store: edges are comparability
  // edges, non-edges component edges. Only the orientation rules run.
  Instance shim;
  shim.container.sizes = {1};
  for (int v = 0; v < n; ++v) shim.items.push_back({v, {1}, ""});
  EdgeStore store(n, 1);
  PropagatorOptions options;
  options.axiom_rules = false;
  options.class_union_find = true;
  options.shuffle_seed = shuffle_seed;
  Propagator engine(shim, store, options);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int pair = store.pair_index(u, v);
      store.assign(0, pair,
                   g.has_edge(u, v) ? EdgeState::kComparability : EdgeState::kComponent);
    }
  }

  TopResult result;
  for (const Arc& a : seeds) {
    if (!engine.post_arc(0, a.from, a.to, ConflictKind::kP3Conflict,
                         {a.from, a.to, -1, -1})) {
      result.conflict = engine.conflict();
      return result;
    }
  }
  if (!engine.run()) {
    result.conflict = engine.conflict();
    return result;
  }

  // Classes untouched by the closure must still be orientable on their own.
  for (const ImplicationClass& cls : implication_classes(store, 0)) {
    if (cls.status == ImplicationClass::Status::kSelfConflicting) {
      auto [u, v] = store.pair_vertices(cls.edges.front());
      result.conflict = {ConflictKind::kP3Conflict, -1, {u, v}};
      return result;
    }
  }

  result.feasible = true;
  for (int pair = 0; pair < store.num_pairs(); ++pair) {
    if (is_oriented(store.state(0, pair))) {
      auto [u, v] = store.pair_vertices(pair);
      if (store.state(0, pair) == EdgeState::kForward) {
        result.closure.push_back({u, v});
      } else {
        result.closure.push_back({v, u});
      }
    }
  }
  return result;
}

}  // namespace coppack
