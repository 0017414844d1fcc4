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

// Local-complementation orbits by breadth-first closure over labelled graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

struct OrbitOptions {
  bool list_members = false;
  std::uint64_t cap = kDefaultOrbitCap;
};

struct OrbitReport {
  std::uint64_t size = 0;
  // BFS discovery order, present only when requested.
  std::optional<std::vector<LabelledGraph>> members;
  // Member with the lexicographically least graph6 encoding.
  LabelledGraph representative;
};

namespace detail {

// Upper-triangle bits in graph6 order, packed most-significant-bit first so
// that comparing keys compares the graph6 bit strings.
struct PackedKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const PackedKey&, const PackedKey&) = default;
  friend bool operator<(const PackedKey& a, const PackedKey& b) { return a.words < b.words; }
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    std::size_t h = 0;
    for (auto w : k.words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <typename Emit>
void for_each_triangle_bit(const LabelledGraph& g, Emit&& emit) {
  const std::size_t n = g.size();
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const auto row = g.row_words(u);
      if ((row[v / 64] >> (v % 64)) & 1u) emit(k);
    }
  }
}

// Graphs whose triangle fits in one word get a plain integer key.
struct SmallCodec {
  using Key = std::uint64_t;
  using Hash = std::hash<std::uint64_t>;
  static bool fits(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2 <= 64; }

  static Key encode(const LabelledGraph& g) {
    Key key = 0;
    for_each_triangle_bit(g, [&key](std::size_t k) { key |= std::uint64_t{1} << (63 - k); });
    return key;
  }
  static LabelledGraph decode(Key key, std::size_t n) {
    LabelledGraph g(n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u, ++k) {
        if ((key >> (63 - k)) & 1u) g.add_edge(u, v);
      }
    }
    return g;
  }
};

struct WideCodec {
  using Key = PackedKey;
  using Hash = PackedKeyHash;

  static Key encode(const LabelledGraph& g) {
    const std::size_t n = g.size();
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    Key key{std::vector<std::uint64_t>((bits + 63) / 64, 0)};
    for_each_triangle_bit(g, [&key](std::size_t k) { key.words[k / 64] |= std::uint64_t{1} << (63 - k % 64); });
    return key;
  }
  static LabelledGraph decode(const Key& key, std::size_t n) {
    LabelledGraph g(n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u, ++k) {
        if ((key.words[k / 64] >> (63 - k % 64)) & 1u) g.add_edge(u, v);
      }
    }
    return g;
  }
};

// Breadth-first closure under tau_0..tau_{n-1}, visiting vertices in index
// order. `on_edge(parent_index, v, child_index, is_new)` fires for every
// generated pair along with the child's key; returning true stops the
// search.
template <typename Codec, typename OnEdge>
std::vector<typename Codec::Key> bfs_closure(const LabelledGraph& start, std::uint64_t cap, OnEdge&& on_edge) {
  using Key = typename Codec::Key;
  const std::size_t n = start.size();
  std::vector<Key> order;
  std::unordered_map<Key, std::uint64_t, typename Codec::Hash> index;
  order.push_back(Codec::encode(start));
  index.emplace(order.back(), 0);
  if (cap < 1) throw ResourceError("orbit size", cap);
  for (std::uint64_t head = 0; head < order.size(); ++head) {
    const LabelledGraph current = Codec::decode(order[head], n);
    for (Vertex v = 0; v < n; ++v) {
      Key child = Codec::encode(local_complement(current, v));
      auto [it, inserted] = index.try_emplace(child, order.size());
      if (inserted) {
        if (order.size() >= cap) throw ResourceError("orbit size", cap);
        order.push_back(std::move(child));
      }
      if (on_edge(head, v, it->second, inserted, it->first)) return order;
    }
  }
  return order;
}

template <typename Codec>
OrbitReport enumerate_orbit_with(const LabelledGraph& g, const OrbitOptions& options) {
  auto order = bfs_closure<Codec>(g, options.cap, [](auto, auto, auto, bool, const auto&) { return false; });
  OrbitReport report;
  report.size = order.size();
  report.representative = Codec::decode(*std::min_element(order.begin(), order.end()), g.size());
  if (options.list_members) {
    std::vector<LabelledGraph> members;
    members.reserve(order.size());
    for (const auto& key : order) members.push_back(Codec::decode(key, g.size()));
    report.members = std::move(members);
  }
  return report;
}

template <typename Codec>
std::optional<std::vector<Vertex>> lc_path_with(const LabelledGraph& from, const LabelledGraph& to,
                                                std::uint64_t cap) {
  if (from == to) return std::vector<Vertex>{};
  const auto target = Codec::encode(to);
  std::vector<std::pair<std::uint64_t, Vertex>> parent{{0, 0}};
  std::optional<std::uint64_t> hit;
  detail::bfs_closure<Codec>(from, cap, [&](std::uint64_t p, Vertex v, std::uint64_t child, bool is_new,
                                            const auto& key) {
    if (!is_new) return false;
    parent.emplace_back(p, v);
    if (key == target) {
      hit = child;
      return true;
    }
    return false;
  });
  if (!hit) return std::nullopt;
  std::vector<Vertex> path;
  for (std::uint64_t at = *hit; at != 0; at = parent[at].first) path.push_back(parent[at].second);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// The labelled LC orbit of g, including g itself.
inline OrbitReport enumerate_orbit(const LabelledGraph& g, const OrbitOptions& options = {}) {
  if (detail::SmallCodec::fits(g.size())) return detail::enumerate_orbit_with<detail::SmallCodec>(g, options);
  return detail::enumerate_orbit_with<detail::WideCodec>(g, options);
}

// Vertices v_1..v_k with tau_{v_k}(...tau_{v_1}(from)) == to, shortest in the
// number of local complementations, or nullopt if the graphs are not LC
// equivalent.
inline std::optional<std::vector<Vertex>> lc_path(const LabelledGraph& from, const LabelledGraph& to,
                                                  std::uint64_t cap = kDefaultOrbitCap) {
  if (from.size() != to.size()) return std::nullopt;
  if (detail::SmallCodec::fits(from.size())) return detail::lc_path_with<detail::SmallCodec>(from, to, cap);
  return detail::lc_path_with<detail::WideCodec>(from, to, cap);
}

inline bool lc_equivalent(const LabelledGraph& a, const LabelledGraph& b, std::uint64_t cap = kDefaultOrbitCap) {
  return lc_path(a, b, cap).has_value();
}

}  // namespace lcorbit
