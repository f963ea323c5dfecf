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

#include "coppack/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coppack {

std::vector<std::pair<int, int>> Instance::arcs_in_dim(int dim) const {
  std::vector<std::pair<int, int>> arcs;
  for (const PrecedenceConstraint& c : constraints) {
    if (c.dim == dim) arcs.emplace_back(c.before, c.after);
  }
  return arcs;
}

bool ValidationReport::has(IssueKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const ValidationIssue& i) { return i.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const ValidationIssue& issue : issues) out << issue.message << '\n';
  return out.str();
}

namespace {

// Finds one directed cycle among `arcs` over vertices 0..n-1, or returns an
// empty list. Ordinary colored DFS.
std::vector<int> find_cycle(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arcs) out[a].push_back(b);
  std::vector<int> color(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      if (color[v] == 0) {
        color[v] = 1;
        for (int w : out[v]) {
          if (color[w] == 1) {
            std::vector<int> cycle = {w};
            for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
            std::reverse(cycle.begin() + 1, cycle.end());
            return cycle;
          }
          if (color[w] == 0) {
            parent[w] = v;
            stack.push_back(w);
          }
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

std::string cycle_to_string(int dim, const std::vector<int>& cycle) {
  std::ostringstream out;
  out << "constraint cycle in dimension " << dim << ": ";
  for (int v : cycle) out << v << " -> ";
  out << cycle.front();
  return out.str();
}

}  // namespace

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  auto add = [&report](IssueKind kind, const std::string& msg) {
    report.issues.push_back({kind, msg});
  };

  const int d = instance.dims();
  const int n = instance.size();
  if (d < 2) {
    add(IssueKind::kBadDimension,
        "container must have at least 2 dimensions, got " + std::to_string(d));
  }
  if (n > kMaxItems) {
    add(IssueKind::kTooManyItems, "instance has " + std::to_string(n) +
                                      " items, solver supports at most " +
                                      std::to_string(kMaxItems));
  }
  for (int i = 0; i < d; ++i) {
    if (instance.container.sizes[i] < 1) {
      add(IssueKind::kBadValue,
          "container size in dimension " + std::to_string(i) + " must be >= 1");
    }
  }

  std::set<std::string> labels;
  for (int v = 0; v < n; ++v) {
    const Item& item = instance.items[v];
    if (item.id != v) {
      add(IssueKind::kDuplicateId, "item ids must be dense 0-based; position " +
                                       std::to_string(v) + " has id " +
                                       std::to_string(item.id));
    }
    if (static_cast<int>(item.widths.size()) != d) {
      add(IssueKind::kBadDimension,
          "item " + std::to_string(item.id) + " has " +
              std::to_string(item.widths.size()) + " widths, expected " +
              std::to_string(d));
      continue;
    }
    for (int i = 0; i < d; ++i) {
      if (item.widths[i] < 1) {
        add(IssueKind::kBadValue, "item " + std::to_string(item.id) +
                                      " has non-positive width in dimension " +
                                      std::to_string(i));
      } else if (i < d && item.widths[i] > instance.container.sizes[i]) {
        add(IssueKind::kOversizeItem,
            "item " + std::to_string(item.id) + " is wider than the container in dimension " +
                std::to_string(i) + " (" + std::to_string(item.widths[i]) + " > " +
                std::to_string(instance.container.sizes[i]) + ")");
      }
    }
    if (!item.label.empty() && !labels.insert(item.label).second) {
      add(IssueKind::kDuplicateLabel, "duplicate item label '" + item.label + "'");
    }
  }

  for (const PrecedenceConstraint& c : instance.constraints) {
    if (c.dim < 0 || c.dim >= d) {
      add(IssueKind::kBadConstraint,
          "constraint dimension " + std::to_string(c.dim) + " out of range");
      continue;
    }
    if (c.before < 0 || c.before >= n || c.after < 0 || c.after >= n) {
      add(IssueKind::kBadConstraint, "constraint references unknown item id");
      continue;
    }
    if (c.before == c.after) {
      add(IssueKind::kBadConstraint, "constraint " + std::to_string(c.before) +
                                         " -> " + std::to_string(c.after) +
                                         " is a self-loop");
    }
  }
  if (!report.has(IssueKind::kBadConstraint)) {
    for (int i = 0; i < d; ++i) {
      std::vector<int> cycle = find_cycle(n, instance.arcs_in_dim(i));
      if (!cycle.empty()) {
        add(IssueKind::kConstraintCycle, cycle_to_string(i, cycle));
      }
    }
  }
  return report;
}

Instance transitive_closure(const Instance& instance) {
  const int n = instance.size();
  const int d = instance.dims();
  Instance closed = instance;
  closed.constraints.clear();
  for (int dim = 0; dim < d; ++dim) {
    std::vector<int> cycle = find_cycle(n, instance.arcs_in_dim(dim));
    if (!cycle.empty()) {
      throw std::invalid_argument(cycle_to_string(dim, cycle));
    }
    // Warshall over an n*n reachability table; instances are tiny.
    std::vector<char> reach(static_cast<size_t>(n) * n, 0);
    for (auto [a, b] : instance.arcs_in_dim(dim)) reach[a * n + b] = 1;
    for (int k = 0; k < n; ++k) {
      for (int a = 0; a < n; ++a) {
        if (!reach[a * n + k]) continue;
        for (int b = 0; b < n; ++b) {
          if (reach[k * n + b]) reach[a * n + b] = 1;
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (reach[a * n + b]) closed.constraints.push_back({dim, a, b});
      }
    }
  }
  std::sort(closed.constraints.begin(), closed.constraints.end());
  return closed;
}

}  // namespace coppack
