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

#include <algorithm>

#include "doctest.h"

#include "coppack/axioms.hpp"
#include "coppack/benchmarks.hpp"
#include "coppack/propagate.hpp"
#include "coppack/realize.hpp"
#include "test_util.hpp"

using namespace coppack;
using testutil::Rng;

namespace {

Instance uniform_items(int n, std::vector<int> container,
                       std::vector<std::vector<int>> widths) {
  Instance inst;
  inst.container.sizes = std::move(container);
  for (int v = 0; v < n; ++v) inst.items.push_back({v, widths[v], ""});
  return inst;
}

}  // namespace

TEST_CASE("c3: the last undecided dimension is forced to a comparability edge") {
  EdgeStore store(2, 2);
  const int pair = store.pair_index(0, 1);
  store.assign(0, pair, EdgeState::kComponent);
  const PropagationOutcome out = check_c3(store, pair);
  CHECK_FALSE(out.violated);
  REQUIRE(out.forced.size() == 1);
  CHECK(out.forced[0].dim == 1);
  CHECK(out.forced[0].state == EdgeState::kComparability);
}

TEST_CASE("c3: nothing to do once a comparability dimension exists") {
  EdgeStore store(2, 3);
  const int pair = store.pair_index(0, 1);
  store.assign(0, pair, EdgeState::kComponent);
  store.assign(1, pair, EdgeState::kComponent);
  store.assign(2, pair, EdgeState::kComparability);
  const PropagationOutcome out = check_c3(store, pair);
  CHECK_FALSE(out.violated);
  CHECK(out.forced.empty());
}

TEST_CASE("c3: overlap in every dimension is a violation") {
  EdgeStore store(2, 2);
  const int pair = store.pair_index(0, 1);
  store.assign(0, pair, EdgeState::kComponent);
  store.assign(1, pair, EdgeState::kComponent);
  const PropagationOutcome out = check_c3(store, pair);
  REQUIRE(out.violated);
  CHECK(out.conflict.kind == ConflictKind::kEmptyIntersection);
}

TEST_CASE("c2: three width-4 items stacked into capacity 10 violate") {
  const Instance inst =
      uniform_items(3, {10, 10}, {{4, 4}, {4, 4}, {4, 4}});
  EdgeStore store(3, 2);
  store.assign(0, store.pair_index(0, 1), EdgeState::kComparability);
  store.assign(0, store.pair_index(0, 2), EdgeState::kComparability);
  store.assign(0, store.pair_index(1, 2), EdgeState::kComparability);
  const PropagationOutcome out = check_c2(store, inst, 0, store.pair_index(1, 2));
  REQUIRE(out.violated);
  CHECK(out.conflict.kind == ConflictKind::kOverweightStableSet);
  // The witness is the overweight set itself.
  auto witness = out.conflict.witness;
  std::sort(witness.begin(), witness.end());
  CHECK(witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("c2: a single too-heavy pair violates directly") {
  const Instance inst = uniform_items(2, {10, 10}, {{6, 1}, {6, 1}});
  EdgeStore store(2, 2);
  store.assign(0, store.pair_index(0, 1), EdgeState::kComparability);
  const PropagationOutcome out = check_c2(store, inst, 0, store.pair_index(0, 1));
  REQUIRE(out.violated);
}

TEST_CASE("c2: completing an overweight set is forced away") {
  // Items 0 and 1 each comparability-adjacent to 2; deciding {0,1} as a
  // comparability edge would stack 4+4+4 > 10, so it must overlap.
  const Instance inst = uniform_items(3, {10, 10}, {{4, 4}, {4, 4}, {4, 4}});
  EdgeStore store(3, 2);
  store.assign(0, store.pair_index(0, 2), EdgeState::kComparability);
  store.assign(0, store.pair_index(1, 2), EdgeState::kComparability);
  const PropagationOutcome out = check_c2(store, inst, 0, store.pair_index(1, 2));
  CHECK_FALSE(out.violated);
  REQUIRE(out.forced.size() == 1);
  CHECK(out.forced[0].pair == store.pair_index(0, 1));
  CHECK(out.forced[0].state == EdgeState::kComponent);
}

TEST_CASE("okp17 at height 168: too-tall pairs overlap after seeding") {
  const Benchmark* bench = find_benchmark("okp17-0");
  REQUIRE(bench != nullptr);
  Instance inst = bench->problem.instance;
  inst.container.sizes[1] = 168;
  EdgeStore store(inst.size(), 2);
  Propagator engine(inst, store, {});
  REQUIRE(engine.seed());
  // Brute-force reference: every pair summing above the candidate height in
  // the height dimension must already be a component edge there.
  int forced_pairs = 0;
  for (int u = 0; u < inst.size(); ++u) {
    for (int v = u + 1; v < inst.size(); ++v) {
      if (inst.width(u, 1) + inst.width(v, 1) > 168) {
        CHECK(store.state_uv(1, u, v) == EdgeState::kComponent);
        ++forced_pairs;
      }
    }
  }
  CHECK(forced_pairs == 3);  // 90+86, 90+81, 90+80
}

TEST_CASE("c4: the forbidden cycle itself violates") {
  // Cycle a-b-c-e overlapping, diagonals {a,c} and {b,e} comparability.
  EdgeStore store(4, 1);
  const int a = 0, b = 1, c = 2, e = 3;
  store.assign(0, store.pair_index(a, b), EdgeState::kComponent);
  store.assign(0, store.pair_index(b, c), EdgeState::kComponent);
  store.assign(0, store.pair_index(c, e), EdgeState::kComponent);
  store.assign(0, store.pair_index(e, a), EdgeState::kComponent);
  store.assign(0, store.pair_index(a, c), EdgeState::kComparability);
  store.assign(0, store.pair_index(b, e), EdgeState::kComparability);
  const PropagationOutcome out = check_c4(store, 0, store.pair_index(b, e));
  REQUIRE(out.violated);
  CHECK(out.conflict.kind == ConflictKind::kFourCycle);
}

TEST_CASE("c4: a single open slot is forced to break the pattern") {
  SUBCASE("open diagonal becomes a component edge") {
    EdgeStore store(4, 1);
    const int a = 0, b = 1, c = 2, e = 3;
    store.assign(0, store.pair_index(a, b), EdgeState::kComponent);
    store.assign(0, store.pair_index(b, c), EdgeState::kComponent);
    store.assign(0, store.pair_index(c, e), EdgeState::kComponent);
    store.assign(0, store.pair_index(e, a), EdgeState::kComponent);
    store.assign(0, store.pair_index(a, c), EdgeState::kComparability);
    const PropagationOutcome out = check_c4(store, 0, store.pair_index(a, c));
    CHECK_FALSE(out.violated);
    REQUIRE(!out.forced.empty());
    CHECK(out.forced[0].pair == store.pair_index(b, e));
    CHECK(out.forced[0].state == EdgeState::kComponent);
  }
  SUBCASE("open cycle edge becomes a comparability edge") {
    EdgeStore store(4, 1);
    const int a = 0, b = 1, c = 2, e = 3;
    store.assign(0, store.pair_index(a, b), EdgeState::kComponent);
    store.assign(0, store.pair_index(b, c), EdgeState::kComponent);
    store.assign(0, store.pair_index(c, e), EdgeState::kComponent);
    store.assign(0, store.pair_index(a, c), EdgeState::kComparability);
    store.assign(0, store.pair_index(b, e), EdgeState::kComparability);
    const PropagationOutcome out = check_c4(store, 0, store.pair_index(b, e));
    CHECK_FALSE(out.violated);
    REQUIRE(!out.forced.empty());
    CHECK(out.forced[0].pair == store.pair_index(e, a));
    CHECK(out.forced[0].state == EdgeState::kComparability);
  }
}

TEST_CASE("c4 agrees with exhaustive induced-cycle enumeration") {
  Rng rng(20260810);
  for (int round = 0; round < 400; ++round) {
    const int n = testutil::pick(rng, 4, 8);
    EdgeStore store(n, 1);
    for (int pair = 0; pair < store.num_pairs(); ++pair) {
      store.assign(0, pair, testutil::pick(rng, 0, 1) == 0
                                ? EdgeState::kComponent
                                : EdgeState::kComparability);
    }
    // Exhaustive reference over all 4-subsets and all three pairings.
    bool reference = false;
    for (int a = 0; a < n && !reference; ++a) {
      for (int b = a + 1; b < n && !reference; ++b) {
        for (int c = b + 1; c < n && !reference; ++c) {
          for (int e = c + 1; e < n && !reference; ++e) {
            const int quad[4] = {a, b, c, e};
            static constexpr int kPairings[3][2][2] = {
                {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
            for (const auto& m : kPairings) {
              const int d1a = quad[m[0][0]], d1b = quad[m[0][1]];
              const int d2a = quad[m[1][0]], d2b = quad[m[1][1]];
              if (is_comparability(store.state_uv(0, d1a, d1b)) &&
                  is_comparability(store.state_uv(0, d2a, d2b)) &&
                  store.state_uv(0, d1a, d2a) == EdgeState::kComponent &&
                  store.state_uv(0, d1a, d2b) == EdgeState::kComponent &&
                  store.state_uv(0, d1b, d2a) == EdgeState::kComponent &&
                  store.state_uv(0, d1b, d2b) == EdgeState::kComponent) {
                reference = true;
              }
            }
          }
        }
      }
    }
    bool incremental = false;
    for (int pair = 0; pair < store.num_pairs() && !incremental; ++pair) {
      incremental = check_c4(store, 0, pair).violated;
    }
    INFO("round ", round);
    CHECK(incremental == reference);
  }
}

TEST_CASE("verify accepts a five-box packing class built from a placement") {
  // A 10x10 tiling: full-width plate at the bottom, a split column on the
  // left, two stacked blocks on the right.
  const Instance inst = uniform_items(
      5, {10, 10}, {{4, 5}, {6, 4}, {6, 4}, {4, 3}, {10, 2}});
  Placement p;
  p.coords = {{0, 2}, {4, 2}, {4, 6}, {0, 7}, {0, 0}};
  REQUIRE(verify_placement(inst, p).empty());
  const EdgeStore store = project_placement(inst, p);
  CHECK_FALSE(verify_packing_class(inst, store).has_value());
}

TEST_CASE("verify of the empty instance succeeds") {
  Instance inst;
  inst.container.sizes = {3, 3};
  const EdgeStore store(0, 2);
  CHECK_FALSE(verify_packing_class(inst, store).has_value());
}

TEST_CASE("verify rejects exactly what the incremental c3 rejects") {
  const Instance inst = uniform_items(2, {4, 4}, {{1, 1}, {1, 1}});
  EdgeStore store(2, 2);
  store.assign(0, 0, EdgeState::kComponent);
  store.assign(1, 0, EdgeState::kComponent);
  const auto conflict = verify_packing_class(inst, store);
  REQUIRE(conflict.has_value());
  CHECK(conflict->kind == ConflictKind::kEmptyIntersection);
  CHECK(check_c3(store, 0).violated);
}

TEST_CASE("clique search matches subset enumeration") {
  Rng rng(9);
  for (int round = 0; round < 200; ++round) {
    const int n = testutil::pick(rng, 1, 10);
    const SimpleGraph g = testutil::random_graph(rng, n, 50);
    int64_t weights[kMaxItems];
    uint64_t adj[kMaxItems];
    for (int v = 0; v < n; ++v) {
      weights[v] = testutil::pick(rng, 1, 9);
      adj[v] = g.neighbors(v);
    }
    int64_t best = 0;
    for (uint64_t set = 0; set < (uint64_t{1} << n); ++set) {
      bool clique = true;
      int64_t weight = 0;
      for (int a = 0; a < n && clique; ++a) {
        if (!((set >> a) & 1)) continue;
        weight += weights[a];
        for (int b = a + 1; b < n && clique; ++b) {
          if (((set >> b) & 1) && !g.has_edge(a, b)) clique = false;
        }
      }
      if (clique) best = std::max(best, weight);
    }
    const uint64_t all = (uint64_t{1} << n) - 1;
    // The search answers a threshold query; probe around the optimum.
    CHECK(clique_weight_exceeds(adj, weights, all, 0, best - 1, nullptr));
    CHECK_FALSE(clique_weight_exceeds(adj, weights, all, 0, best, nullptr));
  }
}

TEST_CASE("incremental rules and the full verifier agree on decided stores") {
  Rng rng(31);
  int rejected = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = testutil::pick(rng, 2, 7);
    Instance inst;
    inst.container.sizes = {testutil::pick(rng, 2, 6), testutil::pick(rng, 2, 6)};
    for (int v = 0; v < n; ++v) {
      inst.items.push_back({v,
                            {testutil::pick(rng, 1, inst.container.sizes[0]),
                             testutil::pick(rng, 1, inst.container.sizes[1])},
                            ""});
    }
    EdgeStore store(n, 2);
    for (int dim = 0; dim < 2; ++dim) {
      for (int pair = 0; pair < store.num_pairs(); ++pair) {
        store.assign(dim, pair, testutil::pick(rng, 0, 1) == 0
                                    ? EdgeState::kComponent
                                    : EdgeState::kComparability);
      }
    }
    // Run every incremental axiom rule over the decided store.
    bool incremental = false;
    for (int pair = 0; pair < store.num_pairs() && !incremental; ++pair) {
      incremental = check_c3(store, pair).violated;
      for (int dim = 0; dim < 2 && !incremental; ++dim) {
        incremental = check_c4(store, dim, pair).violated;
        if (!incremental && is_comparability(store.state(dim, pair))) {
          incremental = check_c2(store, inst, dim, pair).violated;
        }
      }
    }
    const auto full = verify_packing_class(inst, store);
    INFO("round ", round);
    // The verifier additionally owns the odd-cycle (orientability) check,
    // which no incremental axiom rule claims.
    if (full.has_value() && full->kind != ConflictKind::kOddCycle) {
      CHECK(incremental);
    }
    if (!full.has_value()) CHECK_FALSE(incremental);
    rejected += full.has_value();
  }
  CHECK(rejected > 50);
}
