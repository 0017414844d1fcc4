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

#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <set>
#include <string>

#include "lcorbit/enumerate.hpp"
#include "lcorbit/graph_io.hpp"
#include "lcorbit/orbit.hpp"

namespace lcorbit {
namespace {

// Plain BFS keyed by edge-list strings, with tau written from scratch.
std::set<std::string> naive_orbit(const LabelledGraph& g) {
  auto tau = [](const LabelledGraph& h, Vertex v) {
    LabelledGraph out = h;
    const auto nv = h.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) out.toggle_edge(nv[i], nv[j]);
    }
    return out;
  };
  std::set<std::string> seen{to_edge_list(g)};
  std::deque<LabelledGraph> queue{g};
  while (!queue.empty()) {
    const auto h = queue.front();
    queue.pop_front();
    for (Vertex v = 0; v < h.size(); ++v) {
      auto t = tau(h, v);
      if (seen.insert(to_edge_list(t)).second) queue.push_back(std::move(t));
    }
  }
  return seen;
}

TEST(Orbit, SmallExamples) {
  EXPECT_EQ(enumerate_orbit(LabelledGraph::complete(2)).size, 1u);
  EXPECT_EQ(enumerate_orbit(LabelledGraph::path(3)).size, 4u);
  EXPECT_EQ(enumerate_orbit(LabelledGraph(2)).size, 1u);
  EXPECT_EQ(enumerate_orbit(LabelledGraph(0)).size, 1u);
}

TEST(Orbit, PathOrbitSizesMatchNaiveBfs) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto g = LabelledGraph::path(n);
    EXPECT_EQ(enumerate_orbit(g).size, naive_orbit(g).size()) << "n=" << n;
  }
  // Frozen after cross-checking with the naive search above.
  EXPECT_EQ(enumerate_orbit(LabelledGraph::path(4)).size, 11u);
  EXPECT_EQ(enumerate_orbit(LabelledGraph::path(6)).size, 82u);
  EXPECT_EQ(enumerate_orbit(LabelledGraph::path(8)).size, 612u);
}

TEST(Orbit, RandomGraphsMatchNaiveBfs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_graph(3 + trial % 5, 0.5, rng);
    const auto expected = naive_orbit(g);
    const auto report = enumerate_orbit(g, {.list_members = true});
    ASSERT_EQ(report.size, expected.size());
    std::set<std::string> got;
    for (const auto& m : *report.members) got.insert(to_edge_list(m));
    EXPECT_EQ(got, expected);
    EXPECT_EQ(report.members->front(), g);
  }
}

TEST(Orbit, WideCodecAgreesWithSmallCodec) {
  // n = 12 has 66 pairs, past the single-word key.
  const auto g = LabelledGraph::path(12);
  EXPECT_EQ(enumerate_orbit(g).size, 34096u);
}

TEST(Orbit, RepresentativeIsLeastGraph6) {
  const auto report = enumerate_orbit(LabelledGraph::path(3), {.list_members = true});
  std::string least = to_graph6(report.members->front());
  for (const auto& m : *report.members) least = std::min(least, to_graph6(m));
  EXPECT_EQ(to_graph6(report.representative), least);
}

TEST(Orbit, CapIsEnforced) {
  try {
    enumerate_orbit(LabelledGraph::path(8), {.cap = 100});
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 100u);
  }
}

TEST(Orbit, RerootingGivesTheSameOrbit) {
  const auto report = enumerate_orbit(LabelledGraph::path(5), {.list_members = true});
  for (const auto& m : *report.members) EXPECT_EQ(enumerate_orbit(m).size, report.size);
}

TEST(LcPath, ReplaysToTarget) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(6, 0.5, rng);
    const auto report = enumerate_orbit(g, {.list_members = true});
    const auto& target = report.members->back();
    const auto path = lc_path(g, target);
    ASSERT_TRUE(path.has_value());
    LabelledGraph h = g;
    for (Vertex v : *path) h = local_complement(h, v);
    EXPECT_EQ(h, target);
  }
}

TEST(LcPath, EquivalenceExamples) {
  EXPECT_TRUE(lc_equivalent(LabelledGraph::path(3), LabelledGraph::complete(3)));
  EXPECT_FALSE(lc_equivalent(LabelledGraph::path(3), LabelledGraph(3)));
  EXPECT_FALSE(lc_equivalent(LabelledGraph(2), LabelledGraph(3)));
  EXPECT_EQ(lc_path(LabelledGraph::path(3), LabelledGraph::path(3))->size(), 0u);
}

}  // namespace
}  // namespace lcorbit
