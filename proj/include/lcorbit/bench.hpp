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

// Timing helpers for the scaling measurements.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lcorbit/enumerate.hpp"
#include "lcorbit/isotropic.hpp"
#include "lcorbit/multigraph.hpp"
#include "lcorbit/mu_index.hpp"
#include "lcorbit/orbit.hpp"

namespace lcorbit::bench {

struct TimingPoint {
  std::size_t n = 0;
  double seconds = 0;
  // Family-specific result (k, orbit size, tour count), for the report.
  std::string value;
};

template <typename Fn>
double seconds_of(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Least-squares slope of log(seconds) against log(n).
inline double loglog_slope(std::span<const TimingPoint> points) {
  if (points.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(std::max(p.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// k_index on G(n, 1/2), one seeded graph per size; the fastest of
// `repeats` runs is reported.
inline std::vector<TimingPoint> time_k_index(std::span<const std::size_t> sizes, std::uint64_t seed,
                                             int repeats = 3) {
  std::mt19937_64 rng(seed);
  std::vector<TimingPoint> out;
  for (auto n : sizes) {
    const LabelledGraph g = random_graph(n, 0.5, rng);
    TimingPoint p{n, 1e300, {}};
    for (int r = 0; r < repeats; ++r) {
      BigInt k;
      p.seconds = std::min(p.seconds, seconds_of([&] { k = k_index(g); }));
      p.value = k.str();
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Orbit sizes of labelled paths P_n; no scaling claim, report only.
inline std::vector<TimingPoint> time_path_orbits(std::span<const std::size_t> sizes, std::uint64_t cap) {
  std::vector<TimingPoint> out;
  for (auto n : sizes) {
    TimingPoint p{n, 0, {}};
    std::uint64_t size = 0;
    p.seconds = seconds_of([&] { size = enumerate_orbit(LabelledGraph::path(n), {.cap = cap}).size; });
    p.value = std::to_string(size);
    out.push_back(std::move(p));
  }
  return out;
}

// Reduction pipeline (tour, alternance graph, orbit, k) on seeded random
// connected 4-regular multigraphs with k vertices.
inline std::vector<TimingPoint> time_reduction(std::span<const std::size_t> sizes, std::uint64_t seed,
                                               std::uint64_t cap) {
  std::mt19937_64 rng(seed);
  std::vector<TimingPoint> out;
  for (auto k : sizes) {
    const MultiGraph4 f = random_connected_four_regular(k, rng);
    TimingPoint p{k, 0, {}};
    BigInt count;
    p.seconds = seconds_of([&] {
      const LabelledGraph g = alternance_graph(double_occurrence_word(f, find_eulerian_tour(f)));
      count = BigInt(enumerate_orbit(g, {.cap = cap}).size) * k_index(g);
    });
    p.value = count.str();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lcorbit::bench
