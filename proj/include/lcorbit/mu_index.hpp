// Copyright 2026 The lcorbit Authors
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

// The index k(G): bineighborhood space, class mu and |nu(G)^perp|.
//
// For a connected graph
//
//   k(G) = |nu(G)^perp| + 2   if G is in class mu,
//   k(G) = |nu(G)^perp|       otherwise,
//
// with |nu(G)^perp| = 2^(|V| - dim nu(G)). Both the orbit size and the
// Eulerian-vector count multiply over connected components, so k_index()
// applies the formula per component and returns the product.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf2.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

using BigInt = boost::multiprecision::cpp_int;

// nu(e) for the pair e = (u, v): indicator of N(u) intersect N(v).
inline BitVector bineighborhood(const LabelledGraph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("bineighborhood needs two distinct vertices, got " + std::to_string(u) + " twice");
  return g.neighbor_bits(u) & g.neighbor_bits(v);
}

// nu(E') = sum of nu(e) over e in E', for E' a set of vertex pairs.
inline BitVector nu_of_edgeset(const LabelledGraph& g, std::span<const Edge> pairs) {
  BitVector acc(g.size());
  for (const auto& e : pairs) acc ^= bineighborhood(g, e.u, e.v);
  return acc;
}

struct CycleBasis {
  // Each cycle is a sorted edge set with even degree at every vertex.
  std::vector<std::vector<Edge>> cycles;
};

namespace detail {

struct SpanningForest {
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::size_t> depth;
};

// BFS forest rooted at the lowest-index vertex of each component; children
// are discovered in index order.
inline SpanningForest bfs_forest(const LabelledGraph& g) {
  const std::size_t n = g.size();
  SpanningForest f{std::vector<std::optional<Vertex>>(n), std::vector<std::size_t>(n, 0)};
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = true;
        f.parent[y] = x;
        f.depth[y] = f.depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return f;
}

inline bool is_tree_edge(const SpanningForest& f, const Edge& e) {
  return f.parent[e.v] == e.u || f.parent[e.u] == e.v;
}

// Fundamental cycle of the non-tree edge e: tree paths from both ends to
// their common ancestor, plus e.
inline std::vector<Edge> fundamental_cycle(const SpanningForest& f, const Edge& e) {
  std::vector<Edge> cycle{e};
  Vertex a = e.u;
  Vertex b = e.v;
  while (a != b) {
    if (f.depth[a] >= f.depth[b]) {
      cycle.emplace_back(a, *f.parent[a]);
      a = *f.parent[a];
    } else {
      cycle.emplace_back(b, *f.parent[b]);
      b = *f.parent[b];
    }
  }
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace detail

// One fundamental cycle per non-tree edge of a BFS spanning forest.
inline CycleBasis cycle_basis(const LabelledGraph& g) {
  const auto forest = detail::bfs_forest(g);
  CycleBasis basis;
  for (const auto& e : g.edges()) {
    if (!detail::is_tree_edge(forest, e)) basis.cycles.push_back(detail::fundamental_cycle(forest, e));
  }
  return basis;
}

// Outcome of the class-mu test. On failure `condition` is 1, 2 or 3 and the
// matching field names the offending vertex, non-edge or basis cycle.
struct MuWitness {
  bool member = false;
  int condition = 0;
  std::optional<Vertex> vertex;
  std::optional<Edge> non_edge;
  std::optional<std::vector<Edge>> cycle;

  std::string describe() const {
    if (member) return "in class mu";
    switch (condition) {
      case 1:
        return "condition 1 violated: vertex " + std::to_string(*vertex) + " has even degree";
      case 2:
        return "condition 2 violated: non-edge (" + std::to_string(non_edge->u) + "," +
               std::to_string(non_edge->v) + ") has an odd common neighbourhood";
      case 3: {
        std::string s = "condition 3 violated: cycle {";
        for (std::size_t i = 0; i < cycle->size(); ++i) {
          if (i > 0) s += ",";
          s += std::to_string((*cycle)[i].u) + "-" + std::to_string((*cycle)[i].v);
        }
        return s + "} has |nu(C)| and |C| of different parity";
      }
      default:
        return "not in class mu";
    }
  }
};

// Condition 3 is checked on the cycle basis only; parity of |nu(C)| and of
// |C| are both linear in C over GF(2), so the basis decides all cycles.
inline MuWitness in_class_mu(const LabelledGraph& g) {
  const std::size_t n = g.size();
  MuWitness w;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0) {
      w.condition = 1;
      w.vertex = v;
      return w;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (bineighborhood(g, u, v).popcount() % 2 != 0) {
        w.condition = 2;
        w.non_edge = Edge(u, v);
        return w;
      }
    }
  }
  for (auto& c : cycle_basis(g).cycles) {
    if (nu_of_edgeset(g, c).popcount() % 2 != c.size() % 2) {
      w.condition = 3;
      w.cycle = std::move(c);
      return w;
    }
  }
  w.member = true;
  return w;
}

// nu(G): span of nu(e) over non-edges e and nu(C) over basis cycles C.
inline BinSubspace nu_space(const LabelledGraph& g) {
  const std::size_t n = g.size();
  BinSubspace space(n);
  for (Vertex u = 0; u < n && !space.full(); ++u) {
    for (Vertex v = u + 1; v < n && !space.full(); ++v) {
      if (!g.has_edge(u, v)) space.insert(bineighborhood(g, u, v));
    }
  }
  if (space.full()) return space;
  for (const auto& c : cycle_basis(g).cycles) {
    space.insert(nu_of_edgeset(g, c));
    if (space.full()) break;
  }
  return space;
}

inline BigInt pow2(std::size_t e) {
  BigInt out = 1;
  out <<= e;
  return out;
}

// |nu(G)^perp| = 2^(|V| - dim nu(G)).
inline BigInt nu_perp_size(const LabelledGraph& g) { return pow2(g.size() - nu_space(g).dim()); }

struct ComponentIndex {
  std::vector<Vertex> vertices;
  std::size_t nu_dim = 0;
  MuWitness mu;
  BigInt k;
};

struct KIndexReport {
  BigInt k = 1;
  std::vector<ComponentIndex> components;
};

// The index formula applied to g as a whole. Equals k(G) when g is
// connected.
inline BigInt k_index_formula(const LabelledGraph& g) {
  BigInt k = nu_perp_size(g);
  if (in_class_mu(g).member) k += 2;
  return k;
}

inline KIndexReport k_index_report(const LabelledGraph& g) {
  KIndexReport report;
  for (auto& comp : connected_components(g)) {
    const LabelledGraph sub = induced_subgraph(g, comp);
    ComponentIndex ci;
    ci.nu_dim = nu_space(sub).dim();
    ci.mu = in_class_mu(sub);
    ci.k = pow2(sub.size() - ci.nu_dim) + (ci.mu.member ? 2 : 0);
    if (ci.mu.vertex) ci.mu.vertex = comp[*ci.mu.vertex];
    if (ci.mu.non_edge) ci.mu.non_edge = Edge(comp[ci.mu.non_edge->u], comp[ci.mu.non_edge->v]);
    if (ci.mu.cycle) {
      for (auto& e : *ci.mu.cycle) e = Edge(comp[e.u], comp[e.v]);
      std::sort(ci.mu.cycle->begin(), ci.mu.cycle->end());
    }
    ci.vertices = std::move(comp);
    report.k *= ci.k;
    report.components.push_back(std::move(ci));
  }
  return report;
}

// k(G), the divisor in l(G) = e(G) / k(G).
inline BigInt k_index(const LabelledGraph& g) { return k_index_report(g).k; }

}  // namespace lcorbit
