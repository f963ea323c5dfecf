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

#include "coppack/graph.hpp"

#include <bit>

namespace coppack {

int SimpleGraph::edge_count() const {
  int total = 0;
  for (uint64_t m : adj_) total += std::popcount(m);
  return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  SimpleGraph g(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<std::vector<int>> comps;
  uint64_t unseen = (n_ == 64) ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
  while (unseen) {
    const int root = std::countr_zero(unseen);
    uint64_t comp = uint64_t{1} << root;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      uint64_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[v];
      }
      frontier = next & unseen & ~comp;
      comp |= frontier;
    }
    unseen &= ~comp;
    std::vector<int> vertices;
    while (comp) {
      vertices.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    comps.push_back(std::move(vertices));
  }
  return comps;
}

bool is_transitive_orientation(const SimpleGraph& g, const std::vector<Arc>& arcs,
                               bool require_total) {
  const int n = g.size();
  std::vector<uint64_t> succ(n, 0);
  for (const Arc& a : arcs) {
    if (!g.has_edge(a.from, a.to)) return false;
    if ((succ[a.to] >> a.from) & 1u) return false;  // both directions
    succ[a.from] |= uint64_t{1} << a.to;
  }
  if (require_total && static_cast<int>(arcs.size()) != g.edge_count()) return false;
  for (int u = 0; u < n; ++u) {
    uint64_t vs = succ[u];
    while (vs) {
      const int v = std::countr_zero(vs);
      vs &= vs - 1;
      uint64_t ws = succ[v];
      while (ws) {
        const int w = std::countr_zero(ws);
        ws &= ws - 1;
        if (u == w || !((succ[u] >> w) & 1u)) return false;
      }
    }
  }
  return true;
}

}  // namespace coppack
