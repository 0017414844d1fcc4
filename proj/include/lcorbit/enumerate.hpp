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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

// Calls fn(g) for each of the 2^(n(n-1)/2) labelled graphs on n vertices.
// Bit k of the counter is the k-th pair in (0,1), (0,2), ..., (n-2,n-1).
template <typename Fn>
void for_each_labelled_graph(std::size_t n, Fn&& fn) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 30) throw ResourceError("exhaustive graph enumeration pair count", 30);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    LabelledGraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) g.add_edge(pairs[k].u, pairs[k].v);
    }
    fn(g);
  }
}

// Erdos-Renyi G(n, p).
template <typename Rng>
LabelledGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  LabelledGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace lcorbit
