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

// Cross-module consistency suites. Each check compares quantities computed
// along independent routes and reports the first disagreement.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lcorbit/enumerate.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/graph_io.hpp"
#include "lcorbit/isotropic.hpp"
#include "lcorbit/multigraph.hpp"
#include "lcorbit/mu_index.hpp"
#include "lcorbit/orbit.hpp"
#include "lcorbit/statevector.hpp"

namespace lcorbit::verify {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

struct VerifyOptions {
  std::size_t max_n = 4;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

namespace detail {

#ifdef LCORBIT_INJECT_FAULT
inline constexpr bool kInjectFault = true;
#else
inline constexpr bool kInjectFault = false;
#endif

// k(G) as seen by the suites; the fault build perturbs it so the harness
// can be shown to fail.
inline BigInt suite_k_index(const LabelledGraph& g) {
  BigInt k = k_index(g);
  if (kInjectFault && g.size() >= 2) k += 1;
  return k;
}

inline std::string describe(const LabelledGraph& g) { return "graph6 " + to_graph6(g); }

}  // namespace detail

// Class-mu membership with condition 3 checked on every cycle, found by
// enumerating all edge subsets with even degree everywhere.
inline bool in_class_mu_all_cycles(const LabelledGraph& g) {
  const std::size_t n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && bineighborhood(g, u, v).popcount() % 2 != 0) return false;
    }
  }
  const auto edges = g.edges();
  if (n > 64) throw ResourceError("all-cycles enumeration vertex count", 64);
  if (edges.size() > 24) throw ResourceError("all-cycles enumeration edge count", 24);
  std::vector<std::uint64_t> endpoint_mask;
  std::vector<std::uint64_t> nu_mask;
  for (const auto& e : edges) {
    endpoint_mask.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    nu_mask.push_back(bineighborhood(g, e.u, e.v).words()[0]);
  }
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t subset = 1; subset < total; ++subset) {
    std::uint64_t odd = 0;
    std::uint64_t nu = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((subset >> i) & 1u) {
        odd ^= endpoint_mask[i];
        nu ^= nu_mask[i];
      }
    }
    if (odd != 0) continue;
    if ((std::popcount(nu) & 1) != (std::popcount(subset) & 1)) return false;
  }
  return true;
}

// Eulerian circuits counted as half-edge sequences that start by leaving
// through half-edge 0. Every single-trail transition system yields exactly
// one such sequence, so this equals count_eulerian_tours on connected input.
inline std::uint64_t count_tours_by_walks(const MultiGraph4& f) {
  if (f.edge_count() == 0 || !f.is_connected()) return 0;
  std::vector<char> used(f.edge_count(), 0);
  const HalfEdge first = 0;
  used[MultiGraph4::edge_of(first)] = 1;
  std::uint64_t total = 0;
  auto walk = [&](auto&& self, HalfEdge arriving, std::size_t done) -> void {
    if (done == f.edge_count()) {
      // The closing transition pairs the last arrival with the first step.
      if (f.vertex_of(arriving) == f.vertex_of(first)) ++total;
      return;
    }
    const Vertex x = f.vertex_of(arriving);
    for (HalfEdge h : f.incident(x)) {
      if (h == arriving || used[MultiGraph4::edge_of(h)]) continue;
      used[MultiGraph4::edge_of(h)] = 1;
      self(self, MultiGraph4::opposite(h), done + 1);
      used[MultiGraph4::edge_of(h)] = 0;
    }
  };
  walk(walk, MultiGraph4::opposite(first), 1);
  return total;
}

// e(G) == l(G) * k(G), and k, e and the orbit size constant across each
// orbit. Exhaustive for n <= min(max_n, 5), 20 seeded random graphs per n
// above that.
inline std::vector<CheckResult> check_main_identity(const VerifyOptions& opt) {
  CheckResult identity{"main-identity e == l*k"};
  CheckResult invariance{"lc-invariance of k, e and orbit size"};
  auto check_orbit = [&](const LabelledGraph& g, std::unordered_set<std::string>* seen) {
    const auto orbit = enumerate_orbit(g, {.list_members = true});
    const BigInt k0 = detail::suite_k_index(g);
    const std::uint64_t e0 = e_of_graph(g, {.jobs = opt.jobs});
    for (const auto& m : *orbit.members) {
      if (seen != nullptr) seen->insert(to_graph6(m));
      ++identity.cases;
      const BigInt k = detail::suite_k_index(m);
      const std::uint64_t e = e_of_graph(m, {.jobs = opt.jobs});
      if (BigInt(orbit.size) * k != BigInt(e)) {
        identity.fail(detail::describe(m) + ": e=" + std::to_string(e) + " l=" + std::to_string(orbit.size) +
                      " k=" + k.str());
      }
      ++invariance.cases;
      if (k != k0 || e != e0) invariance.fail(detail::describe(m) + ": k or e differs from orbit root");
      const auto rerooted = enumerate_orbit(m).size;
      if (rerooted != orbit.size) {
        invariance.fail(detail::describe(m) + ": re-rooted orbit size " + std::to_string(rerooted) + " vs " +
                        std::to_string(orbit.size));
      }
    }
  };
  const std::size_t exhaustive = std::min<std::size_t>(opt.max_n, 5);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    std::unordered_set<std::string> seen;
    for_each_labelled_graph(n, [&](const LabelledGraph& g) {
      if (!seen.contains(to_graph6(g))) check_orbit(g, &seen);
    });
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = exhaustive + 1; n <= std::min<std::size_t>(opt.max_n, 8); ++n) {
    for (int i = 0; i < 20; ++i) check_orbit(random_graph(n, 0.5, rng), nullptr);
  }
  return {identity, invariance};
}

inline CheckResult check_mu_basis_reduction(const VerifyOptions& opt) {
  CheckResult r{"mu basis reduction == all cycles"};
  auto one = [&r](const LabelledGraph& g) {
    ++r.cases;
    const bool basis = in_class_mu(g).member;
    const bool brute = in_class_mu_all_cycles(g);
    if (basis != brute) r.fail(detail::describe(g) + ": basis says " + (basis ? "yes" : "no"));
  };
  const std::size_t exhaustive = std::min<std::size_t>(opt.max_n, 6);
  for (std::size_t n = 1; n <= exhaustive; ++n) for_each_labelled_graph(n, one);
  std::mt19937_64 rng(opt.seed + 1);
  for (std::size_t n = exhaustive + 1; n <= std::min<std::size_t>(opt.max_n, 9); ++n) {
    for (int i = 0; i < 50; ++i) {
      auto g = random_graph(n, 0.45, rng);
      if (g.edge_count() <= 20) one(g);
    }
  }
  return r;
}

// Transition-system tour count, walk enumeration, Eulerian vectors of the
// alternance graph's canonical system, and l*k of the alternance graph.
inline CheckResult check_tour_identities(std::size_t max_exhaustive_k, std::size_t random_count,
                                         std::size_t max_random_k, std::uint64_t seed, unsigned jobs = 1) {
  CheckResult r{"tour count == walks == e(alternance) == l*k"};
  auto one = [&](const MultiGraph4& f) {
    if (!f.is_connected()) return;
    ++r.cases;
    const std::uint64_t tours = count_eulerian_tours(f, {.jobs = jobs});
    const std::uint64_t walks = count_tours_by_walks(f);
    const LabelledGraph g = alternance_graph(double_occurrence_word(f, find_eulerian_tour(f)));
    const std::uint64_t e = e_of_graph(g, {.jobs = jobs});
    const BigInt lk = BigInt(enumerate_orbit(g).size) * detail::suite_k_index(g);
    if (tours != walks || BigInt(tours) != BigInt(e) || BigInt(e) != lk) {
      std::string text = f.to_text();
      std::replace(text.begin(), text.end(), '\n', ';');
      r.fail("multigraph [" + text + "]: tours=" + std::to_string(tours) + " walks=" + std::to_string(walks) +
             " e=" + std::to_string(e) + " l*k=" + lk.str());
    }
  };
  for (std::size_t k = 1; k <= max_exhaustive_k; ++k) {
    for (const auto& f : all_four_regular(k)) one(f);
  }
  std::mt19937_64 rng(seed + 2);
  if (max_random_k >= 1) {
    std::uniform_int_distribution<std::size_t> size(1, max_random_k);
    for (std::size_t i = 0; i < random_count; ++i) one(random_connected_four_regular(size(rng), rng));
  }
  return r;
}

inline std::vector<CheckResult> run_oracle_suite(const VerifyOptions& opt) {
  auto out = check_main_identity(opt);
  out.push_back(check_mu_basis_reduction(opt));
  out.push_back(check_tour_identities(std::min<std::size_t>(opt.max_n, 4), 50,
                                      std::min<std::size_t>(std::max<std::size_t>(opt.max_n, 1), 7), opt.seed,
                                      opt.jobs));
  return out;
}

// Stabilizer fixpoints, LC unitaries along every orbit edge, overlaps, and
// the alpha image of the canonical generators.
inline std::vector<CheckResult> run_quantum_suite(const VerifyOptions& opt) {
  using namespace quantum;
  CheckResult stab{"graph-state stabilizers fix |G>"};
  CheckResult lcu{"U_v|G> == |tau_v(G)> up to phase"};
  CheckResult ov{"overlap routes agree; |<G|G'>| < 1 iff G != G'"};
  CheckResult alpha_check{"alpha(canonical generators) == g_v"};

  auto stab_one = [&](const LabelledGraph& g) {
    ++stab.cases;
    bool ok = check_stabilizer(g);
    if (detail::kInjectFault && g.size() >= 2 && g.edge_count() > 0) {
      // A generator with one Z dropped no longer stabilizes the state.
      const Vertex v = g.edges().front().u;
      auto letters = stabilizer_generator(g, v).letters();
      letters[g.edges().front().v] = Pauli::I;
      ok = approx_equal(apply_pauli(graph_state(g), PauliString(letters)), graph_state(g));
    }
    if (!ok) stab.fail(detail::describe(g));
  };
  const std::size_t exhaustive = std::min<std::size_t>(opt.max_n, 5);
  for (std::size_t n = 1; n <= exhaustive; ++n) for_each_labelled_graph(n, stab_one);
  std::mt19937_64 rng(opt.seed + 3);
  for (std::size_t n = exhaustive + 1; n <= std::min<std::size_t>(opt.max_n, kMaxQubits); ++n) {
    for (int i = 0; i < 10; ++i) stab_one(random_graph(n, 0.5, rng));
  }

  for (std::size_t n = 1; n <= exhaustive; ++n) {
    std::unordered_set<std::string> seen;
    for_each_labelled_graph(n, [&](const LabelledGraph& g) {
      if (seen.contains(to_graph6(g))) return;
      const auto orbit = enumerate_orbit(g, {.list_members = true});
      for (const auto& m : *orbit.members) {
        seen.insert(to_graph6(m));
        for (Vertex v = 0; v < n; ++v) {
          ++lcu.cases;
          if (!equal_up_to_phase(apply_lc_unitary(m, v), graph_state(local_complement(m, v)))) {
            lcu.fail(detail::describe(m) + " at vertex " + std::to_string(v));
          }
        }
      }
    });
  }

  for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
    std::vector<LabelledGraph> graphs;
    for_each_labelled_graph(n, [&](const LabelledGraph& g) { graphs.push_back(g); });
    for (const auto& a : graphs) {
      for (const auto& b : graphs) {
        ++ov.cases;
        const auto o = overlap(a, b);
        const bool routes_agree = std::abs(o.direct - Complex(o.via_symmetric_difference, 0)) <= kTolerance;
        const double magnitude = std::abs(o.direct);
        const bool bijective = (a == b) ? std::abs(magnitude - 1.0) <= kTolerance : magnitude < 1.0 - kTolerance;
        if (!routes_agree || !bijective) ov.fail(detail::describe(a) + " vs " + detail::describe(b));
      }
    }
  }

  for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_n, 4); ++n) {
    for_each_labelled_graph(n, [&](const LabelledGraph& g) {
      const auto gens = presentation_generators(canonical_presentation(g));
      for (Vertex v = 0; v < n; ++v) {
        ++alpha_check.cases;
        const auto m1 = pauli_string_matrix(alpha(gens[v]));
        const auto m2 = pauli_string_matrix(stabilizer_generator(g, v));
        if (!phase_power_between(m1, m2)) alpha_check.fail(detail::describe(g) + " vertex " + std::to_string(v));
      }
    });
  }
  return {stab, lcu, ov, alpha_check};
}

}  // namespace lcorbit::verify
