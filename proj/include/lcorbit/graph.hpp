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

// Labelled simple graphs on [n] = {0..n-1} and local complementation.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf2.hpp"

namespace lcorbit {

using Vertex = std::size_t;

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Adjacency stored as n bit rows. Labels are significant: equality is
// bit-for-bit equality of the adjacency relation.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  explicit LabelledGraph(std::size_t n)
      : n_(n), words_per_row_(BitVector::word_count(n)), rows_(n * words_per_row_, 0) {}

  static LabelledGraph from_edges(std::size_t n, std::span<const Edge> edges) {
    LabelledGraph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
  }
  static LabelledGraph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static LabelledGraph complete(std::size_t n) {
    LabelledGraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
  }
  static LabelledGraph path(std::size_t n) {
    LabelledGraph g(n);
    for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
  }

  std::size_t size() const { return n_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return bit(u, v);
  }

  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
  void remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }
  void toggle_edge(Vertex u, Vertex v) { set_edge(u, v, !has_edge(u, v)); }

  void set_edge(Vertex u, Vertex v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u) + " in a simple graph");
    assign(u, v, present);
    assign(v, u, present);
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (auto w : row_words(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  // N(v) as an indicator vector over [n].
  BitVector neighbor_bits(Vertex v) const {
    check_vertex(v);
    BitVector out(n_);
    auto src = row_words(v);
    std::copy(src.begin(), src.end(), out.mutable_words().begin());
    return out;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    auto idx = neighbor_bits(v).set_indices();
    return {idx.begin(), idx.end()};
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (bit(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  // Raw row storage; used by the orbit search and the bineighborhood code.
  std::span<const std::uint64_t> row_words(Vertex v) const {
    return {rows_.data() + v * words_per_row_, words_per_row_};
  }
  std::size_t words_per_row() const { return words_per_row_; }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for graph on " +
                       std::to_string(n_) + " vertices");
    }
  }

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

  // In-place tau_v; the free function local_complement() is the pure form.
  void local_complement_in_place(Vertex v) {
    check_vertex(v);
    std::vector<std::uint64_t> nv(row_words(v).begin(), row_words(v).end());
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      std::uint64_t word = nv[w];
      while (word != 0) {
        const Vertex u = w * 64 + static_cast<Vertex>(std::countr_zero(word));
        word &= word - 1;
        std::uint64_t* row = rows_.data() + u * words_per_row_;
        for (std::size_t k = 0; k < words_per_row_; ++k) row[k] ^= nv[k];
        // Undo the toggle of the diagonal bit (u, u).
        row[u / 64] ^= std::uint64_t{1} << (u % 64);
      }
    }
  }

 private:
  bool bit(Vertex u, Vertex v) const {
    return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1u;
  }
  void assign(Vertex u, Vertex v, bool present) {
    std::uint64_t& word = rows_[u * words_per_row_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    word = present ? (word | mask) : (word & ~mask);
  }

  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline std::vector<Vertex> neighborhood(const LabelledGraph& g, Vertex v) { return g.neighbors(v); }

// Symmetric difference of N(x) over x in X.
template <typename Range>
std::vector<Vertex> neighborhood_symdiff(const LabelledGraph& g, const Range& xs) {
  BitVector acc(g.size());
  for (auto x : xs) acc ^= g.neighbor_bits(static_cast<Vertex>(x));
  auto idx = acc.set_indices();
  return {idx.begin(), idx.end()};
}

inline std::vector<Vertex> neighborhood_symdiff(const LabelledGraph& g,
                                                std::initializer_list<Vertex> xs) {
  return neighborhood_symdiff<std::initializer_list<Vertex>>(g, xs);
}

inline LabelledGraph complement(const LabelledGraph& g) {
  LabelledGraph out(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

// tau_v(G): toggles adjacency of every pair of distinct neighbours of v.
inline LabelledGraph local_complement(LabelledGraph g, Vertex v) {
  g.local_complement_in_place(v);
  return g;
}

// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const LabelledGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const LabelledGraph& g) {
  return g.size() <= 1 || connected_components(g).size() == 1;
}

// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
inline LabelledGraph induced_subgraph(const LabelledGraph& g, std::span<const Vertex> vertices) {
  LabelledGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace lcorbit
