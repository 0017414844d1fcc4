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

// 4-regular multigraphs, transition systems, Eulerian decompositions and
// tours, double-occurrence words and alternance graphs.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/gf4.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/isotropic.hpp"

namespace lcorbit {

// Edge e owns half-edges 2e (at its first endpoint) and 2e+1 (at its second).
using HalfEdge = std::size_t;

class MultiGraph4 {
 public:
  MultiGraph4() = default;

  // Validates 4-regularity; throws ValidationError listing offending
  // vertices. Incident half-edges are ordered by edge insertion order.
  static MultiGraph4 from_edges(std::size_t k, std::vector<std::pair<Vertex, Vertex>> edges) {
    MultiGraph4 f;
    f.k_ = k;
    f.edges_ = std::move(edges);
    f.incident_.assign(k, {});
    for (std::size_t e = 0; e < f.edges_.size(); ++e) {
      const auto [a, b] = f.edges_[e];
      if (a >= k || b >= k) {
        throw ValidationError("edge " + std::to_string(e) + " (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an endpoint outside [0," + std::to_string(k) + ")");
      }
      f.incident_[a].push_back(2 * e);
      f.incident_[b].push_back(2 * e + 1);
    }
    std::string bad;
    for (Vertex v = 0; v < k; ++v) {
      if (f.incident_[v].size() != 4) {
        if (!bad.empty()) bad += ", ";
        bad += std::to_string(v) + " (degree " + std::to_string(f.incident_[v].size()) + ")";
      }
    }
    if (!bad.empty()) throw ValidationError("multigraph is not 4-regular; offending vertices: " + bad);
    return f;
  }

  // "k m" followed by m lines "u v"; u == v is a loop.
  static MultiGraph4 parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
      if (token[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0) throw ParseError("multigraph: invalid token '" + token + "'");
      values.push_back(value);
    }
    if (values.size() < 2) throw ParseError("multigraph: missing \"k m\" header");
    const auto k = static_cast<std::size_t>(values[0]);
    const auto m = static_cast<std::size_t>(values[1]);
    if (values.size() != 2 + 2 * m) {
      throw ParseError("multigraph: header announces " + std::to_string(m) + " edges but " +
                       std::to_string(values.size() - 2) + " endpoint values follow");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i) {
      edges.emplace_back(static_cast<Vertex>(values[2 + 2 * i]), static_cast<Vertex>(values[3 + 2 * i]));
    }
    return from_edges(k, std::move(edges));
  }

  std::string to_text() const {
    std::string out = std::to_string(k_) + " " + std::to_string(edges_.size()) + "\n";
    for (const auto& [a, b] : edges_) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
  }

  std::size_t vertex_count() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  Vertex vertex_of(HalfEdge h) const { return (h & 1u) ? edges_[h / 2].second : edges_[h / 2].first; }
  static HalfEdge opposite(HalfEdge h) { return h ^ 1u; }
  static std::size_t edge_of(HalfEdge h) { return h / 2; }

  // The ordering T at v: its four half-edges e^1..e^4.
  const std::array<HalfEdge, 4> incident(Vertex v) const {
    const auto& in = incident_[v];
    return {in[0], in[1], in[2], in[3]};
  }

  std::size_t slot_of(HalfEdge h) const {
    const auto& in = incident_[vertex_of(h)];
    return static_cast<std::size_t>(std::find(in.begin(), in.end(), h) - in.begin());
  }

  bool is_connected() const {
    if (k_ <= 1) return true;
    std::vector<std::size_t> root(k_);
    std::iota(root.begin(), root.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return root[x] == x ? x : root[x] = find(root[x]);
    };
    std::size_t parts = k_;
    for (const auto& [a, b] : edges_) {
      const auto ra = find(a);
      const auto rb = find(b);
      if (ra != rb) {
        root[ra] = rb;
        --parts;
      }
    }
    return parts == 1;
  }

 private:
  std::size_t k_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<HalfEdge>> incident_;
};

// Pairing of slots {0,1,2,3} selected by a nonzero F4 element:
//   1   -> (e1,e2)(e3,e4)
//   w   -> (e1,e3)(e2,e4)
//   w^2 -> (e1,e4)(e2,e3)
inline std::size_t paired_slot(GF4 choice, std::size_t slot) {
  static constexpr std::array<std::array<std::size_t, 4>, 3> kPartner{{
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  switch (choice.bits()) {
    case 1:
      return kPartner[0][slot];
    case 2:
      return kPartner[1][slot];
    case 3:
      return kPartner[2][slot];
    default:
      throw InputError("transition choice must be nonzero");
  }
}

// Inverse of paired_slot: the F4 element pairing slots a and b.
inline GF4 pairing_element(std::size_t a, std::size_t b) {
  for (GF4 c : GF4::nonzero()) {
    if (paired_slot(c, a) == b) return c;
  }
  throw InputError("slots must be distinct");
}

// A closed trail given by its departing half-edges h_0..h_{m-1}. Step i
// leaves vertex_of(h_i) along edge_of(h_i) and arrives through
// opposite(h_i).
struct Tour {
  std::vector<HalfEdge> steps;

  std::size_t length() const { return steps.size(); }

  std::vector<Vertex> vertices(const MultiGraph4& f) const {
    std::vector<Vertex> out;
    for (auto h : steps) out.push_back(f.vertex_of(h));
    return out;
  }

  // Alternating vertex / edge-id rendering, closed at the start vertex:
  // "0 e0 1 e1 0".
  std::string render(const MultiGraph4& f) const {
    if (steps.empty()) return "";
    std::string out;
    for (auto h : steps) out += std::to_string(f.vertex_of(h)) + " e" + std::to_string(MultiGraph4::edge_of(h)) + " ";
    return out + std::to_string(f.vertex_of(steps.front()));
  }
};

struct EulerianDecomposition {
  std::vector<Tour> tours;
};

namespace detail {

inline void check_transition_vector(const MultiGraph4& f, const GF4Vector& v) {
  if (v.size() != f.vertex_count()) {
    throw InputError("transition vector has length " + std::to_string(v.size()) + ", multigraph has " +
                     std::to_string(f.vertex_count()) + " vertices");
  }
  if (!is_complete(v)) throw InputError("transition vector must be complete, got " + v.to_string());
}

inline HalfEdge transition_partner(const MultiGraph4& f, const GF4Vector& v, HalfEdge arriving) {
  const Vertex x = f.vertex_of(arriving);
  return f.incident(x)[paired_slot(v[x], f.slot_of(arriving))];
}

// Number of closed trails of D_T(v) without materializing them.
inline std::size_t trail_count(const MultiGraph4& f, const GF4Vector& v, std::vector<char>& used) {
  std::fill(used.begin(), used.end(), 0);
  std::size_t trails = 0;
  for (HalfEdge start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    ++trails;
    HalfEdge h = start;
    do {
      used[h] = used[MultiGraph4::opposite(h)] = 1;
      h = transition_partner(f, v, MultiGraph4::opposite(h));
    } while (h != start);
  }
  return trails;
}

}  // namespace detail

// D_T(v): follow the pairing at each vertex until every trail closes.
inline EulerianDecomposition decomposition_from_vector(const MultiGraph4& f, const GF4Vector& v) {
  detail::check_transition_vector(f, v);
  EulerianDecomposition d;
  std::vector<char> used(2 * f.edge_count(), 0);
  for (HalfEdge start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    Tour t;
    HalfEdge h = start;
    do {
      used[h] = used[MultiGraph4::opposite(h)] = 1;
      t.steps.push_back(h);
      h = detail::transition_partner(f, v, MultiGraph4::opposite(h));
    } while (h != start);
    d.tours.push_back(std::move(t));
  }
  return d;
}

// The transition system a tour passes through: at each visit the arriving
// and departing half-edges are paired.
inline GF4Vector transition_vector_of_tour(const MultiGraph4& f, const Tour& t) {
  const std::size_t k = f.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(k);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const HalfEdge arriving = MultiGraph4::opposite(t.steps[i]);
    const HalfEdge leaving = t.steps[(i + 1) % t.steps.size()];
    if (f.vertex_of(arriving) != f.vertex_of(leaving)) throw InputError("tour steps do not chain");
    pairs[f.vertex_of(leaving)].emplace_back(f.slot_of(arriving), f.slot_of(leaving));
  }
  GF4Vector v(k);
  for (Vertex x = 0; x < k; ++x) {
    if (pairs[x].size() != 2) throw InputError("tour does not pass vertex " + std::to_string(x) + " exactly twice");
    const GF4 a = pairing_element(pairs[x][0].first, pairs[x][0].second);
    const GF4 b = pairing_element(pairs[x][1].first, pairs[x][1].second);
    if (a != b) throw InputError("tour passes vertex " + std::to_string(x) + " through inconsistent pairings");
    v[x] = a;
  }
  return v;
}

// Throws InputError unless t is a closed trail using every edge once.
inline void validate_eulerian_tour(const MultiGraph4& f, const Tour& t) {
  if (t.steps.size() != f.edge_count()) {
    throw InputError("tour has " + std::to_string(t.steps.size()) + " steps, multigraph has " +
                     std::to_string(f.edge_count()) + " edges");
  }
  std::vector<char> seen(f.edge_count(), 0);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const HalfEdge h = t.steps[i];
    if (h >= 2 * f.edge_count()) throw InputError("tour references unknown half-edge " + std::to_string(h));
    if (seen[MultiGraph4::edge_of(h)]++) {
      throw InputError("tour reuses edge " + std::to_string(MultiGraph4::edge_of(h)));
    }
    const HalfEdge next = t.steps[(i + 1) % t.steps.size()];
    if (f.vertex_of(MultiGraph4::opposite(h)) != f.vertex_of(next)) {
      throw InputError("tour is not a closed trail at step " + std::to_string(i));
    }
  }
}

struct TourCountOptions {
  std::size_t max_n = kDefaultEulerianCap;
  unsigned jobs = 1;
};

// Number of transition systems whose decomposition is a single closed trail
// (Eulerian tours up to rotation and reversal). Disconnected multigraphs
// have none.
inline std::uint64_t count_eulerian_tours(const MultiGraph4& f, const TourCountOptions& options = {}) {
  const std::size_t k = f.vertex_count();
  if (k > options.max_n) throw ResourceError("transition-system enumeration size", options.max_n);
  if (k == 0 || !f.is_connected()) return 0;
  const auto nz = GF4::nonzero();
  return detail::sum_over_prefixes(k, options.jobs, [&](const std::vector<int>& prefix) {
    GF4Vector v(k);
    for (std::size_t i = 0; i < prefix.size(); ++i) v[i] = nz[static_cast<std::size_t>(prefix[i])];
    const std::size_t free = k - prefix.size();
    std::vector<int> digits(free, 0);
    for (std::size_t i = prefix.size(); i < k; ++i) v[i] = nz[0];
    std::vector<char> used(2 * f.edge_count());
    std::uint64_t total = 0;
    while (true) {
      if (detail::trail_count(f, v, used) == 1) ++total;
      std::size_t pos = 0;
      while (pos < free && digits[pos] == 2) {
        digits[pos] = 0;
        v[prefix.size() + pos] = nz[0];
        ++pos;
      }
      if (pos == free) break;
      ++digits[pos];
      v[prefix.size() + pos] = nz[static_cast<std::size_t>(digits[pos])];
    }
    return total;
  });
}

// Hierholzer's algorithm from vertex 0, always taking the unused half-edge
// with the lowest position in the ordering T. Throws ValidationError on a
// disconnected multigraph.
inline Tour find_eulerian_tour(const MultiGraph4& f) {
  if (f.vertex_count() == 0 || !f.is_connected()) {
    throw ValidationError("multigraph is disconnected; it has no Eulerian tour");
  }
  std::vector<char> used(f.edge_count(), 0);
  std::vector<std::size_t> next_slot(f.vertex_count(), 0);
  // Stack entries: (vertex, half-edge used to leave the previous vertex).
  std::vector<std::pair<Vertex, HalfEdge>> stack{{0, 0}};
  std::vector<HalfEdge> reversed;
  while (!stack.empty()) {
    const Vertex x = stack.back().first;
    auto& s = next_slot[x];
    while (s < 4 && used[MultiGraph4::edge_of(f.incident(x)[s])]) ++s;
    if (s < 4) {
      const HalfEdge h = f.incident(x)[s];
      used[MultiGraph4::edge_of(h)] = 1;
      stack.emplace_back(f.vertex_of(MultiGraph4::opposite(h)), h);
    } else {
      if (stack.size() > 1) reversed.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  Tour t;
  t.steps.assign(reversed.rbegin(), reversed.rend());
  validate_eulerian_tour(f, t);
  return t;
}

// A word in which every symbol 0..k-1 occurs exactly twice.
class DoubleOccurrenceWord {
 public:
  explicit DoubleOccurrenceWord(std::vector<Vertex> word) : word_(std::move(word)) {
    if (word_.size() % 2 != 0) throw InputError("double-occurrence word has odd length");
    const std::size_t k = word_.size() / 2;
    std::vector<int> count(k, 0);
    for (auto s : word_) {
      if (s >= k) throw InputError("symbol " + std::to_string(s) + " outside [0," + std::to_string(k) + ")");
      if (++count[s] > 2) throw InputError("symbol " + std::to_string(s) + " occurs more than twice");
    }
  }

  // Whitespace-separated tokens, or single characters when the text has no
  // whitespace. Symbols are numbered by first appearance.
  static DoubleOccurrenceWord parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string t;
    while (in >> t) tokens.push_back(t);
    if (tokens.size() == 1) {
      const std::string joined = tokens.front();
      tokens.clear();
      for (char c : joined) tokens.emplace_back(1, c);
    }
    std::map<std::string, Vertex> ids;
    std::vector<Vertex> word;
    for (const auto& tok : tokens) {
      auto [it, inserted] = ids.try_emplace(tok, ids.size());
      word.push_back(it->second);
    }
    return DoubleOccurrenceWord(std::move(word));
  }

  std::size_t symbol_count() const { return word_.size() / 2; }
  const std::vector<Vertex>& symbols() const { return word_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(word_[i]);
    }
    return out;
  }

  friend bool operator==(const DoubleOccurrenceWord&, const DoubleOccurrenceWord&) = default;

 private:
  std::vector<Vertex> word_;
};

// m(U): the vertex sequence of the tour, dropping the closing repeat.
inline DoubleOccurrenceWord double_occurrence_word(const MultiGraph4& f, const Tour& t) {
  validate_eulerian_tour(f, t);
  return DoubleOccurrenceWord(t.vertices(f));
}

// Edge (u,v) iff the occurrences interleave as ...u...v...u...v... or
// ...v...u...v...u....
inline LabelledGraph alternance_graph(const DoubleOccurrenceWord& w) {
  const std::size_t k = w.symbol_count();
  std::vector<std::array<std::size_t, 2>> pos(k, {0, 0});
  std::vector<int> seen(k, 0);
  for (std::size_t i = 0; i < w.symbols().size(); ++i) pos[w.symbols()[i]][seen[w.symbols()[i]]++] = i;
  LabelledGraph g(k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) {
      const bool first_inside = pos[u][0] < pos[v][0] && pos[v][0] < pos[u][1];
      const bool second_inside = pos[u][0] < pos[v][1] && pos[v][1] < pos[u][1];
      if (first_inside != second_inside) g.add_edge(u, v);
    }
  }
  return g;
}

// Every labelled 4-regular multigraph on k vertices, one per multiset of
// edges. Edges are listed as loops of vertex i, then (i,j) for j > i, in
// increasing order, with repeats.
inline std::vector<MultiGraph4> all_four_regular(std::size_t k) {
  std::vector<MultiGraph4> out;
  if (k == 0) return out;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i; j < k; ++j) pairs.emplace_back(i, j);
  }
  std::vector<int> degree(k, 0);
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == pairs.size()) {
      if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 4; })) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t q = 0; q < pairs.size(); ++q) {
          for (int r = 0; r < mult[q]; ++r) edges.push_back(pairs[q]);
        }
        out.push_back(MultiGraph4::from_edges(k, std::move(edges)));
      }
      return;
    }
    const auto [a, b] = pairs[p];
    // Once every pair touching a is decided, a must be saturated.
    for (int m = 0;; ++m) {
      const int add_a = a == b ? 2 * m : m;
      const int add_b = a == b ? 0 : m;
      if (degree[a] + add_a > 4 || degree[b] + add_b > 4) break;
      degree[a] += add_a;
      degree[b] += add_b;
      mult[p] = m;
      const bool last_for_a = b == k - 1;
      if (!last_for_a || degree[a] == 4) rec(p + 1);
      degree[a] -= add_a;
      degree[b] -= add_b;
    }
    mult[p] = 0;
  };
  rec(0);
  return out;
}

// Configuration model: 4k stubs paired uniformly at random.
template <typename Rng>
MultiGraph4 random_four_regular(std::size_t k, Rng& rng) {
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < k; ++v) stubs.insert(stubs.end(), 4, v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  return MultiGraph4::from_edges(k, std::move(edges));
}

template <typename Rng>
MultiGraph4 random_connected_four_regular(std::size_t k, Rng& rng) {
  while (true) {
    auto f = random_four_regular(k, rng);
    if (f.is_connected()) return f;
  }
}

}  // namespace lcorbit
