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

#ifndef COPPACK_GRAPH_HPP_
#define COPPACK_GRAPH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace coppack {

/// Directed edge u -> v.
struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Small undirected graph over vertices 0..n-1 with bitmask adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(n, 0) {}

  int size() const { return n_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  uint64_t neighbors(int v) const { return adj_[v]; }

  void add_edge(int u, int v) {
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
  }

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  SimpleGraph complement() const;

  /// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
  SimpleGraph induced(const std::vector<int>& vertices) const;

  /// Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<int>> components() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

/// Definitional transitivity check of `arcs` over `g`: every directed
/// 2-chain must be closed by an arc, and no edge may be oriented both ways.
bool is_transitive_orientation(const SimpleGraph& g, const std::vector<Arc>& arcs,
                               bool require_total = true);

}  // namespace coppack

#endif  // COPPACK_GRAPH_HPP_
