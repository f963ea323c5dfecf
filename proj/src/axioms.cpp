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

#include "coppack/axioms.hpp"

#include <bit>
#include <stdexcept>

#include "coppack/orient.hpp"

namespace coppack {

PropagationOutcome check_c3(const EdgeStore& store, int pair) {
  const int d = store.num_dims();
  int open_dim = -1;
  int open_count = 0;
  for (int dim = 0; dim < d; ++dim) {
    const EdgeState s = store.state(dim, pair);
    if (is_comparability(s)) return PropagationOutcome::ok();
    if (s == EdgeState::kUnassigned) {
      open_dim = dim;
      ++open_count;
    }
  }
  auto [u, v] = store.pair_vertices(pair);
  if (open_count == 0) {
    return PropagationOutcome::violation(
        {ConflictKind::kEmptyIntersection, -1, {u, v}});
  }
  PropagationOutcome out;
  if (open_count == 1) {
    out.forced.push_back({open_dim, pair, EdgeState::kComparability,
                          ConflictKind::kEmptyIntersection, {u, v, -1, -1}});
  }
  return out;
}

namespace {

struct CliqueSearch {
  const uint64_t* adj;
  const int64_t* weights;
  int64_t threshold;
  std::vector<int>* witness;
  std::vector<int> path;

  bool run(uint64_t candidates, int64_t base) {
    if (base > threshold) {
      if (witness) witness->insert(witness->end(), path.begin(), path.end());
      return true;
    }
    int64_t bound = base;
    int pick = -1;
    int64_t pick_weight = -1;
    for (uint64_t m = candidates; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      bound += weights[v];
      if (weights[v] > pick_weight) {
        pick_weight = weights[v];
        pick = v;
      }
    }
    if (bound <= threshold) return false;
    path.push_back(pick);
    if (run(candidates & adj[pick], base + weights[pick])) return true;
    path.pop_back();
    return run(candidates & ~(uint64_t{1} << pick), base);
  }
};

}  // namespace

bool clique_weight_exceeds(const uint64_t* adjacency, const int64_t* weights,
                           uint64_t candidates, int64_t base_weight,
                           int64_t threshold, std::vector<int>* witness) {
  CliqueSearch search{adjacency, weights, threshold, witness, {}};
  return search.run(candidates, base_weight);
}

PropagationOutcome check_c2(const EdgeStore& store, const Instance& instance,
                            int dim, int pair) {
  const int n = store.num_items();
  const int64_t capacity = instance.container.sizes[dim];
  int64_t weights[kMaxItems];
  uint64_t adj[kMaxItems];
  for (int v = 0; v < n; ++v) {
    weights[v] = instance.width(v, dim);
    adj[v] = store.comparability_adj(dim, v);
  }
  const auto [u, v] = store.pair_vertices(pair);
  const uint64_t common = adj[u] & adj[v];

  std::vector<int> clique;
  if (clique_weight_exceeds(adj, weights, common, weights[u] + weights[v],
                            capacity, &clique)) {
    clique.push_back(u);
    clique.push_back(v);
    return PropagationOutcome::violation(
        {ConflictKind::kOverweightStableSet, dim, std::move(clique)});
  }

  PropagationOutcome out;
  // An undecided pair sharing one endpoint with the new edge: would a
  // comparability edge there complete an overweight set through u and v?
  for (int side = 0; side < 2; ++side) {
    const int a = side == 0 ? u : v;
    const int b = side == 0 ? v : u;
    for (uint64_t m = adj[b] & ~(uint64_t{1} << a); m != 0; m &= m - 1) {
      const int z = std::countr_zero(m);
      if (store.state_uv(dim, a, z) != EdgeState::kUnassigned) continue;
      const uint64_t cand = common & adj[z];
      if (clique_weight_exceeds(adj, weights, cand,
                                weights[u] + weights[v] + weights[z], capacity,
                                nullptr)) {
        out.forced.push_back({dim, store.pair_index(a, z), EdgeState::kComponent,
                              ConflictKind::kOverweightStableSet, {u, v, z, -1}});
      }
    }
  }
  // Undecided pairs inside the common neighborhood of the new edge.
  for (uint64_t ma = common; ma != 0; ma &= ma - 1) {
    const int a = std::countr_zero(ma);
    for (uint64_t mb = common & ~(ma | (ma - 1)); mb != 0; mb &= mb - 1) {
      const int b = std::countr_zero(mb);
      if (store.state_uv(dim, a, b) != EdgeState::kUnassigned) continue;
      const uint64_t cand = common & adj[a] & adj[b];
      if (clique_weight_exceeds(
              adj, weights, cand,
              weights[u] + weights[v] + weights[a] + weights[b], capacity,
              nullptr)) {
        out.forced.push_back({dim, store.pair_index(a, b), EdgeState::kComponent,
                              ConflictKind::kOverweightStableSet, {u, v, a, b}});
      }
    }
  }
  return out;
}

PropagationOutcome check_c4(const EdgeStore& store, int dim, int pair) {
  const int n = store.num_items();
  const auto [u, v] = store.pair_vertices(pair);
  const EdgeState uv = store.state(dim, pair);
  const uint64_t all =
      (n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1) &
      ~((uint64_t{1} << u) | (uint64_t{1} << v));
  auto over = [&](int x) { return store.component_adj(dim, x) & all; };
  auto comp = [&](int x) { return store.comparability_adj(dim, x) & all; };
  auto open = [&](int x) { return all & ~over(x) & ~comp(x) & ~(uint64_t{1} << x); };
  PropagationOutcome out;
  auto force = [&](int a, int b, EdgeState state, int wz, int ww) {
    out.forced.push_back({dim, store.pair_index(a, b), state,
                          ConflictKind::kFourCycle, {u, v, wz, ww}});
  };

  if (is_comparability(uv)) {
    // {u,v} is a diagonal: induced cycle u-z-v-w with the second diagonal
    // {z,w}. z and w range over common overlap (or one open cycle slot).
    const uint64_t both = over(u) & over(v);
    const uint64_t open_u = open(u) & over(v);  // {u,x} open, {v,x} overlap
    const uint64_t open_v = over(u) & open(v);
    for (uint64_t mz = both; mz != 0; mz &= mz - 1) {
      const int z = std::countr_zero(mz);
      // Second diagonal decided comparability: complete forbidden cycle.
      const uint64_t hits = comp(z) & both & (mz - 1);
      if (hits != 0) {
        const int w = std::countr_zero(hits);
        return PropagationOutcome::violation(
            {ConflictKind::kFourCycle, dim, {u, z, v, w}});
      }
      // Second diagonal open: chord it.
      for (uint64_t mw = open(z) & both & (mz - 1); mw != 0; mw &= mw - 1) {
        force(z, std::countr_zero(mw), EdgeState::kComponent, z,
              std::countr_zero(mw));
      }
      // One open cycle slot {u,w} or {v,w}, diagonal {z,w} decided.
      for (uint64_t mw = comp(z) & open_u; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        force(u, w, EdgeState::kComparability, z, w);
      }
      for (uint64_t mw = comp(z) & open_v; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        force(v, w, EdgeState::kComparability, z, w);
      }
    }
  } else {
    // {u,v} is a cycle edge of u-v-z-w: cycle edges {v,z},{z,w},{w,u}
    // overlap, diagonals {v,w},{u,z} comparability.
    const uint64_t zc = over(v) & comp(u);   // both z-slots decided
    const uint64_t wc = over(u) & comp(v);   // both w-slots decided
    const uint64_t z_open_cycle = open(v) & comp(u);
    const uint64_t z_open_diag = over(v) & open(u);
    const uint64_t w_open_cycle = open(u) & comp(v);
    const uint64_t w_open_diag = over(u) & open(v);
    for (uint64_t mz = zc; mz != 0; mz &= mz - 1) {
      const int z = std::countr_zero(mz);
      const uint64_t closing_over = over(z) & ~(uint64_t{1} << z);
      const uint64_t hits = closing_over & wc;
      if (hits != 0) {
        const int w = std::countr_zero(hits);
        return PropagationOutcome::violation(
            {ConflictKind::kFourCycle, dim, {u, v, z, w}});
      }
      // Open closing cycle edge {z,w}.
      for (uint64_t mw = open(z) & wc; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        force(z, w, EdgeState::kComparability, z, w);
      }
      // Open far cycle edge {u,w} or far diagonal {v,w}.
      for (uint64_t mw = closing_over & w_open_cycle; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        force(u, w, EdgeState::kComparability, z, w);
      }
      for (uint64_t mw = closing_over & w_open_diag; mw != 0; mw &= mw - 1) {
        const int w = std::countr_zero(mw);
        force(v, w, EdgeState::kComponent, z, w);
      }
    }
    // Open near slots: {v,z} cycle edge or {u,z} diagonal, all w-side
    // decided and the closing edge {z,w} overlapping.
    for (uint64_t mz = z_open_cycle; mz != 0; mz &= mz - 1) {
      const int z = std::countr_zero(mz);
      if ((over(z) & wc) != 0) {
        force(v, z, EdgeState::kComparability, z, std::countr_zero(over(z) & wc));
      }
    }
    for (uint64_t mz = z_open_diag; mz != 0; mz &= mz - 1) {
      const int z = std::countr_zero(mz);
      if ((over(z) & wc) != 0) {
        force(u, z, EdgeState::kComponent, z, std::countr_zero(over(z) & wc));
      }
    }
  }
  return out;
}

std::optional<Conflict> verify_packing_class(const Instance& instance,
                                             const EdgeStore& store) {
  if (!store.fully_decided()) {
    throw std::invalid_argument("verify_packing_class needs a fully decided store");
  }
  const int n = store.num_items();
  const int d = store.num_dims();

  for (int dim = 0; dim < d; ++dim) {
    // Induced chordless component 4-cycles, by brute enumeration.
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          for (int e = c + 1; e < n; ++e) {
            const int quad[4] = {a, b, c, e};
            static constexpr int kMatchings[3][2][2] = {
                {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
            for (const auto& m : kMatchings) {
              const int d1a = quad[m[0][0]], d1b = quad[m[0][1]];
              const int d2a = quad[m[1][0]], d2b = quad[m[1][1]];
              if (!is_comparability(store.state_uv(dim, d1a, d1b)) ||
                  !is_comparability(store.state_uv(dim, d2a, d2b))) {
                continue;
              }
              if (store.state_uv(dim, d1a, d2a) == EdgeState::kComponent &&
                  store.state_uv(dim, d1a, d2b) == EdgeState::kComponent &&
                  store.state_uv(dim, d1b, d2a) == EdgeState::kComponent &&
                  store.state_uv(dim, d1b, d2b) == EdgeState::kComponent) {
                return Conflict{ConflictKind::kFourCycle, dim, {a, b, c, e}};
              }
            }
          }
        }
      }
    }

    // The comparability part must admit a transitive orientation.
    const SimpleGraph comp = comparability_graph(store, dim);
    for (const ImplicationClass& cls : implication_classes(store, dim)) {
      if (cls.status == ImplicationClass::Status::kSelfConflicting) {
        auto [u, v] = store.pair_vertices(cls.edges.front());
        Conflict conflict{ConflictKind::kOddCycle, dim, {u, v}};
        return conflict;
      }
    }

    // Every stable set of the component graph must fit the container.
    int64_t weights[kMaxItems];
    uint64_t adj[kMaxItems];
    for (int v = 0; v < n; ++v) {
      weights[v] = instance.width(v, dim);
      adj[v] = comp.neighbors(v);
    }
    const uint64_t all = n == 0 ? 0 : (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
    std::vector<int> witness;
    if (clique_weight_exceeds(adj, weights, all, 0,
                              instance.container.sizes[dim], &witness)) {
      return Conflict{ConflictKind::kOverweightStableSet, dim, std::move(witness)};
    }
  }

  for (int pair = 0; pair < store.num_pairs(); ++pair) {
    PropagationOutcome c3 = check_c3(store, pair);
    if (c3.violated) return c3.conflict;
  }
  return std::nullopt;
}

}  // namespace coppack
