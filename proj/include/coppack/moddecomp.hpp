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

#ifndef COPPACK_MODDECOMP_HPP_
#define COPPACK_MODDECOMP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coppack/graph.hpp"

namespace coppack {

/// Node of the canonical (Gallai) modular decomposition tree. Children of
/// a parallel node are the connected components, of a series node the
/// co-components, of a prime node the maximal proper submodules.
struct DecompositionNode {
  enum class Kind { kLeaf, kParallel, kSeries, kPrime };

  Kind kind = Kind::kLeaf;
  std::vector<int> vertices;  // original vertex ids, ascending
  std::vector<int> children;  // indices into DecompositionTree::nodes
  SimpleGraph quotient;       // over children, in child order
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  int root = -1;

  const DecompositionNode& node(int id) const { return nodes[id]; }
  /// Indented text rendering, one node per line.
  std::string dump() const;
};

const char* node_kind_name(DecompositionNode::Kind kind);

/// Definitional module test: every outside vertex sees all of `m` or none.
bool is_module(const SimpleGraph& g, const std::vector<int>& m);

/// Canonical decomposition of a nonempty graph. Unique; children ordered by
/// least contained vertex.
DecompositionTree decompose(const SimpleGraph& g);

/// Completes a conflict-free D1/D2 closure to a full transitive orientation
/// of the comparability graph `g`, orienting each decomposition quotient
/// independently (series nodes by topological completion, prime nodes as a
/// single implication class) and descending module arcs to the vertices.
/// Returns nullopt only on inputs that violate the closure precondition.
std::optional<std::vector<Arc>> extend_orientation(const SimpleGraph& g,
                                                   const std::vector<Arc>& partial);

}  // namespace coppack

#endif  // COPPACK_MODDECOMP_HPP_
