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

#include <map>
#include <random>
#include <set>
#include <string>

#include "lcorbit/isotropic.hpp"
#include "lcorbit/multigraph.hpp"
#include "lcorbit/mu_index.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/graph_io.hpp"
#include "lcorbit/verify.hpp"

namespace lcorbit {
namespace {

MultiGraph4 double_loop() { return MultiGraph4::parse("1 2\n0 0\n0 0\n"); }
MultiGraph4 parallel_pair() { return MultiGraph4::parse("2 4\n0 1\n0 1\n0 1\n0 1\n"); }

TEST(MultiGraph, ParseAndValidate) {
  const auto f = parallel_pair();
  EXPECT_EQ(f.vertex_count(), 2u);
  EXPECT_EQ(f.edge_count(), 4u);
  EXPECT_EQ(MultiGraph4::parse(f.to_text()).to_text(), f.to_text());
  EXPECT_THROW(MultiGraph4::parse("2 1\n0 1\n"), ValidationError);
  EXPECT_THROW(MultiGraph4::parse("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(MultiGraph4::parse("1 2\n0 0\n0 x\n"), ParseError);
  EXPECT_THROW(MultiGraph4::parse("1 2\n0 0\n0 3\n"), ValidationError);
  try {
    MultiGraph4::parse("3 3\n0 1\n1 2\n0 2\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("0 (degree 2)"), std::string::npos);
  }
}

TEST(MultiGraph, TransitionDecompositionsOfDoubleLoop) {
  const auto f = double_loop();
  EXPECT_EQ(decomposition_from_vector(f, GF4Vector::parse("1")).tours.size(), 2u);
  EXPECT_EQ(decomposition_from_vector(f, GF4Vector::parse("w")).tours.size(), 1u);
  EXPECT_EQ(decomposition_from_vector(f, GF4Vector::parse("W")).tours.size(), 1u);
  EXPECT_EQ(count_eulerian_tours(f), 2u);
  EXPECT_THROW(decomposition_from_vector(f, GF4Vector::parse("0")), InputError);
}

TEST(MultiGraph, ParallelPair) {
  const auto f = parallel_pair();
  EXPECT_EQ(count_eulerian_tours(f), 6u);
  EXPECT_EQ(verify::count_tours_by_walks(f), 6u);
  const auto t = find_eulerian_tour(f);
  EXPECT_EQ(double_occurrence_word(f, t).to_string(), "0 1 0 1");
  EXPECT_EQ(alternance_graph(double_occurrence_word(f, t)), LabelledGraph::complete(2));
}

// Every transition system partitions the edges into closed trails.
TEST(MultiGraph, DecompositionsPartitionEdges) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_four_regular(1 + trial % 5, rng);
    for (const auto& v : complete_vectors(f.vertex_count())) {
      std::multiset<std::size_t> edges;
      for (const auto& t : decomposition_from_vector(f, v).tours) {
        for (auto h : t.steps) edges.insert(MultiGraph4::edge_of(h));
      }
      ASSERT_EQ(edges.size(), f.edge_count());
      for (std::size_t e = 0; e < f.edge_count(); ++e) EXPECT_EQ(edges.count(e), 1u);
    }
  }
}

// A single-trail decomposition read back gives its own transition vector,
// so distinct vectors give distinct tours.
TEST(MultiGraph, TourToTransitionVectorRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = random_connected_four_regular(1 + trial % 5, rng);
    for (const auto& v : complete_vectors(f.vertex_count())) {
      const auto d = decomposition_from_vector(f, v);
      if (d.tours.size() != 1) continue;
      validate_eulerian_tour(f, d.tours.front());
      EXPECT_EQ(transition_vector_of_tour(f, d.tours.front()), v);
    }
    const auto t = find_eulerian_tour(f);
    validate_eulerian_tour(f, t);
    EXPECT_EQ(decomposition_from_vector(f, transition_vector_of_tour(f, t)).tours.size(), 1u);
  }
}

TEST(MultiGraph, DisconnectedHasNoTour) {
  const auto f = MultiGraph4::parse("2 4\n0 0\n0 0\n1 1\n1 1\n");
  EXPECT_FALSE(f.is_connected());
  EXPECT_EQ(count_eulerian_tours(f), 0u);
  EXPECT_THROW(find_eulerian_tour(f), ValidationError);
}

TEST(DoubleOccurrence, AlternanceGraphs) {
  EXPECT_EQ(alternance_graph(DoubleOccurrenceWord::parse("u v u v")), LabelledGraph::complete(2));
  EXPECT_EQ(alternance_graph(DoubleOccurrenceWord::parse("u u v v")), LabelledGraph(2));
  EXPECT_EQ(alternance_graph(DoubleOccurrenceWord::parse("abcabc")), LabelledGraph::complete(3));
  EXPECT_EQ(alternance_graph(DoubleOccurrenceWord::parse("abacbc")), LabelledGraph::path(3));
  EXPECT_THROW(DoubleOccurrenceWord::parse("aab"), InputError);
  EXPECT_THROW(DoubleOccurrenceWord::parse("aaab"), InputError);
}

TEST(FourRegular, EnumerationCounts) {
  EXPECT_EQ(all_four_regular(1).size(), 1u);
  EXPECT_EQ(all_four_regular(2).size(), 3u);
  std::size_t connected = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    for (const auto& f : all_four_regular(k)) connected += f.is_connected();
  }
  EXPECT_EQ(connected, 1387u);
}

// The alternance graphs of all Eulerian tours of F form one LC orbit, each
// graph reached by k of the tours.
TEST(FourRegular, AlternanceGraphsOfAllToursFormAnOrbit) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& f : all_four_regular(k)) {
      if (!f.is_connected()) continue;
      std::map<std::string, std::uint64_t> hits;
      std::uint64_t tours = 0;
      for (const auto& v : complete_vectors(k)) {
        const auto d = decomposition_from_vector(f, v);
        if (d.tours.size() != 1) continue;
        ++tours;
        ++hits[to_graph6(alternance_graph(double_occurrence_word(f, d.tours.front())))];
      }
      const auto g = alternance_graph(double_occurrence_word(f, find_eulerian_tour(f)));
      const auto orbit = enumerate_orbit(g, {.list_members = true});
      std::set<std::string> members;
      for (const auto& m : *orbit.members) members.insert(to_graph6(m));
      std::set<std::string> seen;
      for (const auto& [g6, c] : hits) {
        seen.insert(g6);
        EXPECT_EQ(BigInt(c), k_index(g));
      }
      EXPECT_EQ(seen, members) << f.to_text();
      EXPECT_EQ(tours, verify::count_tours_by_walks(f));
    }
  }
}

TEST(FourRegular, ThreadedCountMatches) {
  std::mt19937_64 rng(14);
  const auto f = random_connected_four_regular(8, rng);
  EXPECT_EQ(count_eulerian_tours(f, {.jobs = 4}), count_eulerian_tours(f));
}

}  // namespace
}  // namespace lcorbit
