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

#include "coppack/moddecomp.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "coppack/orient.hpp"

namespace coppack {

const char* node_kind_name(DecompositionNode::Kind kind) {
  switch (kind) {
    case DecompositionNode::Kind::kLeaf: return "leaf";
    case DecompositionNode::Kind::kParallel: return "parallel";
    case DecompositionNode::Kind::kSeries: return "series";
    case DecompositionNode::Kind::kPrime: return "prime";
  }
  return "?";
}

bool is_module(const SimpleGraph& g, const std::vector<int>& m) {
  uint64_t members = 0;
  for (int v : m) members |= uint64_t{1} << v;
  for (int z = 0; z < g.size(); ++z) {
    if ((members >> z) & 1u) continue;
    const uint64_t seen = g.neighbors(z) & members;
    if (seen != 0 && seen != members) return false;
  }
  return true;
}

namespace {

// Smallest module of `g` containing `start`, by closing under outside
// distinguishers.
uint64_t module_closure(const SimpleGraph& g, uint64_t start) {
  uint64_t m = start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int z = 0; z < g.size(); ++z) {
      if ((m >> z) & 1u) continue;
      const uint64_t seen = g.neighbors(z) & m;
      if (seen != 0 && seen != m) {
        m |= uint64_t{1} << z;
        grew = true;
      }
    }
  }
  return m;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

struct TreeBuilder {
  const SimpleGraph* g;  // the full graph, original ids
  DecompositionTree tree;

  int build(const std::vector<int>& vertices) {
    DecompositionNode node;
    node.vertices = vertices;
    if (vertices.size() == 1) {
      node.kind = DecompositionNode::Kind::kLeaf;
      tree.nodes.push_back(std::move(node));
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    const SimpleGraph sub = g->induced(vertices);
    std::vector<std::vector<int>> parts = sub.components();
    if (parts.size() > 1) {
      node.kind = DecompositionNode::Kind::kParallel;
    } else {
      parts = sub.complement().components();
      if (parts.size() > 1) {
        node.kind = DecompositionNode::Kind::kSeries;
      } else {
        node.kind = DecompositionNode::Kind::kPrime;
        parts = prime_children(sub);
      }
    }
    std::vector<std::vector<int>> child_vertices;
    for (const std::vector<int>& part : parts) {
      std::vector<int> original;
      for (int local : part) original.push_back(vertices[local]);
      child_vertices.push_back(std::move(original));
    }
    std::sort(child_vertices.begin(), child_vertices.end());

    node.quotient = SimpleGraph(static_cast<int>(child_vertices.size()));
    for (size_t i = 0; i < child_vertices.size(); ++i) {
      for (size_t j = i + 1; j < child_vertices.size(); ++j) {
        int edges = 0;
        for (int a : child_vertices[i]) {
          for (int b : child_vertices[j]) edges += g->has_edge(a, b);
        }
        if (edges > 0) {
          // Between two modules either all pairs are edges or none.
          if (edges != static_cast<int>(child_vertices[i].size() *
                                        child_vertices[j].size())) {
            throw std::logic_error("quotient adjacency is not all-or-none");
          }
          node.quotient.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(std::move(node));
    for (const std::vector<int>& child : child_vertices) {
      const int child_id = build(child);
      tree.nodes[id].children.push_back(child_id);
    }
    return id;
  }

  // Maximal proper modules of a connected, co-connected graph: for each
  // vertex, the union of all proper closures through it.
  static std::vector<std::vector<int>> prime_children(const SimpleGraph& sub) {
    const int n = sub.size();
    const uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<char> done(n, 0);
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      uint64_t best = uint64_t{1} << v;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        const uint64_t m =
            module_closure(sub, (uint64_t{1} << v) | (uint64_t{1} << w));
        if (m != all) best |= m;
      }
      for (int w : mask_to_vertices(best)) done[w] = 1;
      parts.push_back(mask_to_vertices(best));
    }
    return parts;
  }
};

}  // namespace

DecompositionTree decompose(const SimpleGraph& g) {
  if (g.size() == 0) throw std::invalid_argument("decompose needs a nonempty graph");
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  TreeBuilder builder{&g, {}};
  builder.tree.root = builder.build(all);
  return builder.tree;
}

namespace {

void dump_node(const DecompositionTree& tree, int id, int depth,
               std::ostringstream& out) {
  const DecompositionNode& node = tree.node(id);
  for (int i = 0; i < depth; ++i) out << "  ";
  out << node_kind_name(node.kind) << " {";
  for (size_t i = 0; i < node.vertices.size(); ++i) {
    if (i > 0) out << ',';
    out << node.vertices[i];
  }
  out << "}\n";
  for (int child : node.children) dump_node(tree, child, depth + 1, out);
}

}  // namespace

std::string DecompositionTree::dump() const {
  std::ostringstream out;
  if (root >= 0) dump_node(*this, root, 0, out);
  return out.str();
}

namespace {

struct Extender {
  const SimpleGraph* g;
  const DecompositionTree* tree;
  // dir[u*n+v] = 1 for an arc u->v, -1 for v->u, 0 undecided.
  std::vector<int8_t> dir;
  bool failed = false;

  int n() const { return g->size(); }
  int8_t get(int u, int v) const { return dir[u * n() + v]; }
  void set_arc(int u, int v) {
    dir[u * n() + v] = 1;
    dir[v * n() + u] = -1;
  }

  void orient_node(int id) {
    if (failed) return;
    const DecompositionNode& node = tree->node(id);
    if (node.kind == DecompositionNode::Kind::kLeaf) return;
    const int k = static_cast<int>(node.children.size());

    // Arcs between children induced by the partial orientation. All
    // vertex-level arcs between two children must agree on a direction.
    std::vector<int8_t> qdir(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k && !failed; ++i) {
      for (int j = i + 1; j < k && !failed; ++j) {
        if (!node.quotient.has_edge(i, j)) continue;
        int sign = 0;
        for (int a : tree->node(node.children[i]).vertices) {
          for (int b : tree->node(node.children[j]).vertices) {
            const int8_t s = get(a, b);
            if (s == 0) continue;
            if (sign == 0) sign = s;
            if (sign != s) {
              failed = true;  // closure oriented one class both ways
            }
          }
        }
        qdir[i * k + j] = static_cast<int8_t>(sign);
        qdir[j * k + i] = static_cast<int8_t>(-sign);
      }
    }
    if (failed) return;

    if (node.kind == DecompositionNode::Kind::kSeries) {
      // Complete quotient: topologically order the children around the
      // induced arcs, ties to the child with the smallest vertex.
      std::vector<int> indegree(k, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (qdir[i * k + j] == -1) ++indegree[i];
        }
      }
      std::vector<char> placed(k, 0);
      std::vector<int> order;
      for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int i = 0; i < k; ++i) {
          if (!placed[i] && indegree[i] == 0 && pick == -1) pick = i;
        }
        if (pick == -1) {
          failed = true;  // induced arcs on a series quotient are cyclic
          return;
        }
        placed[pick] = 1;
        order.push_back(pick);
        for (int j = 0; j < k; ++j) {
          if (!placed[j] && qdir[pick * k + j] == 1) --indegree[j];
        }
      }
      for (size_t a = 0; a < order.size(); ++a) {
        for (size_t b = a + 1; b < order.size(); ++b) {
          qdir[order[a] * k + order[b]] = 1;
          qdir[order[b] * k + order[a]] = -1;
        }
      }
    } else if (node.kind == DecompositionNode::Kind::kPrime) {
      // The quotient's edges form a single implication class: the induced
      // arcs (if any) spread to every edge by the P3 closure, otherwise a
      // trial orientation of the least edge does.
      std::vector<Arc> arcs;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (qdir[i * k + j] == 1) arcs.push_back({i, j});
          if (qdir[i * k + j] == -1) arcs.push_back({j, i});
        }
      }
      while (true) {
        if (!p3_closure_on_graph(node.quotient, arcs)) {
          failed = true;
          return;
        }
        std::vector<char> covered(static_cast<size_t>(k) * k, 0);
        for (const Arc& a : arcs) {
          covered[a.from * k + a.to] = covered[a.to * k + a.from] = 1;
        }
        int open_i = -1, open_j = -1;
        for (int i = 0; i < k && open_i < 0; ++i) {
          for (int j = i + 1; j < k && open_i < 0; ++j) {
            if (node.quotient.has_edge(i, j) && !covered[i * k + j]) {
              open_i = i;
              open_j = j;
            }
          }
        }
        if (open_i < 0) break;
        arcs.push_back({open_i, open_j});
      }
      for (const Arc& a : arcs) {
        qdir[a.from * k + a.to] = 1;
        qdir[a.to * k + a.from] = -1;
      }
    }

    // Descend the quotient orientation to all vertex pairs it covers.
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (!node.quotient.has_edge(i, j)) continue;
        const bool forward = qdir[i * k + j] == 1;
        for (int a : tree->node(node.children[i]).vertices) {
          for (int b : tree->node(node.children[j]).vertices) {
            if (forward) {
              set_arc(a, b);
            } else {
              set_arc(b, a);
            }
          }
        }
      }
    }
    for (int child : node.children) orient_node(child);
  }
};

}  // namespace

std::optional<std::vector<Arc>> extend_orientation(const SimpleGraph& g,
                                                   const std::vector<Arc>& partial) {
  const int n = g.size();
  if (n == 0) return std::vector<Arc>{};
  Extender ext{&g, nullptr, std::vector<int8_t>(static_cast<size_t>(n) * n, 0), false};
  for (const Arc& a : partial) {
    if (!g.has_edge(a.from, a.to)) {
      throw std::invalid_argument("partial orientation arc is not an edge");
    }
    if (ext.get(a.from, a.to) == -1) return std::nullopt;
    ext.set_arc(a.from, a.to);
  }
  DecompositionTree tree = decompose(g);
  ext.tree = &tree;
  ext.orient_node(tree.root);
  if (ext.failed) return std::nullopt;

  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const int8_t s = ext.get(u, v);
      if (s == 0) return std::nullopt;  // some edge never received a direction
      arcs.push_back(s == 1 ? Arc{u, v} : Arc{v, u});
    }
  }
  if (!is_transitive_orientation(g, arcs)) return std::nullopt;
  for (const Arc& a : partial) {
    if (ext.get(a.from, a.to) != 1) return std::nullopt;
  }
  return arcs;
}

}  // namespace coppack
