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

#include <cmath>
#include <random>

#include "lcorbit/enumerate.hpp"
#include "lcorbit/isotropic.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/statevector.hpp"

namespace lcorbit::quantum {
namespace {

TEST(GraphState, K2Amplitudes) {
  const auto psi = graph_state(LabelledGraph::complete(2));
  EXPECT_NEAR(psi[0].real(), 0.5, kTolerance);
  EXPECT_NEAR(psi[1].real(), 0.5, kTolerance);
  EXPECT_NEAR(psi[2].real(), 0.5, kTolerance);
  EXPECT_NEAR(psi[3].real(), -0.5, kTolerance);
  EXPECT_NEAR(psi.norm(), 1.0, kTolerance);
}

TEST(GraphState, ClosedFormMatchesGates) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(1 + trial % 7, 0.5, rng);
    EXPECT_TRUE(approx_equal(graph_state(g), graph_state_by_gates(g)));
  }
}

TEST(GraphState, StabilizersFixTheState) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_labelled_graph(n, [](const LabelledGraph& g) { EXPECT_TRUE(check_stabilizer(g)); });
  }
}

TEST(GraphState, WrongGeneratorFails) {
  const auto g = LabelledGraph::path(3);
  const auto psi = graph_state(g);
  // X on the middle qubit with a Z missing on one neighbour.
  EXPECT_FALSE(approx_equal(apply_pauli(psi, PauliString::parse("IXZ")), psi));
  EXPECT_TRUE(approx_equal(apply_pauli(psi, PauliString::parse("ZXZ")), psi));
}

TEST(GraphState, QubitCap) { EXPECT_THROW(graph_state(LabelledGraph(kMaxQubits + 1)), ResourceError); }

TEST(LocalComplementUnitary, MapsToTauUpToPhase) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(2 + trial % 5, 0.5, rng);
    for (Vertex v = 0; v < g.size(); ++v) {
      EXPECT_TRUE(equal_up_to_phase(apply_lc_unitary(g, v), graph_state(local_complement(g, v))));
    }
  }
}

// Replaying an lc_path with the unitaries reaches the target state.
TEST(LocalComplementUnitary, PathReplay) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = random_graph(3 + trial % 4, 0.5, rng);
    const auto orbit = enumerate_orbit(g, {.list_members = true});
    const auto& target = orbit.members->back();
    const auto path = lc_path(g, target);
    ASSERT_TRUE(path.has_value());
    StateVector psi = graph_state(g);
    LabelledGraph h = g;
    for (Vertex v : *path) {
      psi = apply_lc_unitary(psi, h, v);
      h = local_complement(h, v);
    }
    EXPECT_TRUE(equal_up_to_phase(psi, graph_state(target)));
  }
}

TEST(OverlapTest, TwoRoutesAgree) {
  const auto o = overlap(LabelledGraph::complete(2), LabelledGraph(2));
  EXPECT_NEAR(o.direct.real(), 0.5, kTolerance);
  EXPECT_NEAR(o.direct.imag(), 0.0, kTolerance);
  EXPECT_NEAR(o.via_symmetric_difference, 0.5, kTolerance);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_graph(4, 0.5, rng);
    const auto b = random_graph(4, 0.5, rng);
    const auto ov = overlap(a, b);
    EXPECT_NEAR(ov.direct.real(), ov.via_symmetric_difference, kTolerance);
    EXPECT_EQ(std::abs(std::abs(ov.direct) - 1.0) < kTolerance, a == b);
  }
  EXPECT_THROW(overlap(LabelledGraph(2), LabelledGraph(3)), InputError);
}

// alpha of the canonical generators is exactly the stabilizer generator set.
TEST(AlphaImage, CanonicalGeneratorsAreStabilizers) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(1 + trial % 6, 0.5, rng);
    const auto gens = presentation_generators(canonical_presentation(g));
    for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(alpha(gens[v]), stabilizer_generator(g, v));
  }
}

TEST(EqualUpToPhase, DetectsPhaseAndMismatch) {
  auto psi = graph_state(LabelledGraph::path(3));
  auto rotated = psi;
  for (std::size_t i = 0; i < rotated.dimension(); ++i) rotated[i] *= Complex{0, 1};
  EXPECT_TRUE(equal_up_to_phase(rotated, psi));
  EXPECT_FALSE(approx_equal(rotated, psi));
  EXPECT_FALSE(equal_up_to_phase(graph_state(LabelledGraph(3)), psi));
}

}  // namespace
}  // namespace lcorbit::quantum
