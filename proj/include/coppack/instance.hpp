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

#ifndef COPPACK_INSTANCE_HPP_
#define COPPACK_INSTANCE_HPP_

#include <compare>
#include <string>
#include <vector>

namespace coppack {

// Largest vertex count the solver state supports (adjacency is kept in
// 64-bit masks). All shipped benchmarks have at most 21 items.
inline constexpr int kMaxItems = 64;

/// One axis-aligned box. Widths are per-dimension cell counts, >= 1.
struct Item {
  int id = 0;
  std::vector<int> widths;
  std::string label;  // optional display name; "" if unset
};

struct Container {
  std::vector<int> sizes;
};

/// Directed order constraint in one dimension: `before` must end at or
/// before `after` starts.
struct PrecedenceConstraint {
  int dim = 0;
  int before = 0;
  int after = 0;

  friend auto operator<=>(const PrecedenceConstraint&,
                          const PrecedenceConstraint&) = default;
};

struct Instance {
  std::vector<Item> items;
  Container container;
  std::vector<PrecedenceConstraint> constraints;

  int size() const { return static_cast<int>(items.size()); }
  int dims() const { return static_cast<int>(container.sizes.size()); }
  int width(int item, int dim) const { return items[item].widths[dim]; }

  /// Constraint arcs of one dimension as (before, after) pairs.
  std::vector<std::pair<int, int>> arcs_in_dim(int dim) const;
};

enum class IssueKind {
  kBadDimension,       // d < 2 or widths length mismatch
  kBadValue,           // non-positive width or container size
  kDuplicateId,        // item ids not dense 0..n-1
  kDuplicateLabel,
  kOversizeItem,       // item does not fit the container alone
  kBadConstraint,      // unknown item id, self-loop, bad dim
  kConstraintCycle,    // directed cycle within one dimension
  kTooManyItems,
};

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(IssueKind kind) const;
  std::string to_string() const;
};

ValidationReport validate(const Instance& instance);

/// Per-dimension transitive closure of the constraint arcs. Idempotent.
/// Throws std::invalid_argument naming the offending cycle if some
/// dimension's arcs are cyclic.
Instance transitive_closure(const Instance& instance);

}  // namespace coppack

#endif  // COPPACK_INSTANCE_HPP_
