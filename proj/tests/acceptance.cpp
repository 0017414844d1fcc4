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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances and limits are fixed below.

#include <cstdio>
#include <string>
#include <vector>

#include "lcorbit/bench.hpp"
#include "lcorbit/lcorbit.hpp"
#include "lcorbit/verify.hpp"

namespace {

using namespace lcorbit;

constexpr std::uint64_t kSeed = 2026;
constexpr double kIdentityTimeLimitSeconds = 120.0;
constexpr double kScalingSlopeLimit = 5.5;
constexpr double kScalingRunLimitSeconds = 60.0;
constexpr std::size_t kRandomMultigraphs = 50;
constexpr std::size_t kMaxExhaustiveK = 4;
constexpr std::size_t kMaxRandomK = 7;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string summary(const verify::CheckResult& r) {
  return std::to_string(r.cases) + " cases" + (r.passed ? "" : "; " + r.detail);
}

void tour_counts() {
  const auto r = verify::check_tour_identities(kMaxExhaustiveK, kRandomMultigraphs, kMaxRandomK, kSeed);
  report(1, "tour counts agree across all routes", r.passed && r.cases > 0, summary(r));
}

void main_identity() {
  std::vector<verify::CheckResult> results;
  const double seconds = bench::seconds_of([&] { results = verify::check_main_identity({.max_n = 5, .seed = kSeed}); });
  const auto& identity = results.front();
  // 1 + 2 + 8 + 64 + 1024 labelled graphs on 1..5 vertices.
  const bool complete = identity.cases == 1099;
  report(2, "e == l*k on every graph with n <= 5", identity.passed && complete && seconds < kIdentityTimeLimitSeconds,
         summary(identity) + ", " + std::to_string(seconds) + " s");
}

void micro_instances() {
  std::string bad;
  auto expect = [&bad](const std::string& what, const BigInt& got, const BigInt& want) {
    if (got != want) bad += what + "=" + got.str() + " (want " + want.str() + ") ";
  };
  expect("tours(double loop)", count_eulerian_tours(MultiGraph4::parse("1 2\n0 0\n0 0\n")), 2);
  expect("tours(parallel pair)", count_eulerian_tours(MultiGraph4::parse("2 4\n0 1\n0 1\n0 1\n0 1\n")), 6);
  const auto k2 = LabelledGraph::complete(2);
  expect("e(K2)", e_of_graph(k2), 6);
  expect("k(K2)", k_index(k2), 6);
  expect("l(K2)", enumerate_orbit(k2).size, 1);
  const auto p3 = LabelledGraph::path(3);
  expect("l(P3)", enumerate_orbit(p3).size, 4);
  expect("k(P3)", k_index(p3), 4);
  expect("e(P3)", e_of_graph(p3), 16);
  const LabelledGraph empty2(2);
  expect("e(empty2)", e_of_graph(empty2), 4);
  expect("k(empty2)", k_index(empty2), 4);
  expect("l(empty2)", enumerate_orbit(empty2).size, 1);
  report(3, "micro-instances", bad.empty(), bad.empty() ? "11 values" : bad);
}

void mu_reduction() {
  const auto r = verify::check_mu_basis_reduction({.max_n = 6, .seed = kSeed});
  report(4, "class-mu basis test == all-cycles test for n <= 6", r.passed, summary(r));
}

void invariance() {
  const auto results = verify::check_main_identity({.max_n = 7, .seed = kSeed});
  const auto& inv = results.back();
  report(5, "k, e and orbit size invariant under local complementation and re-rooting", inv.passed, summary(inv));
}

void quantum_checks() {
  const auto results = verify::run_quantum_suite({.max_n = 5, .seed = kSeed});
  bool ok = true;
  std::string detail;
  std::uint64_t cases = 0;
  for (const auto& r : results) {
    ok = ok && r.passed;
    cases += r.cases;
    if (!r.passed) detail += r.name + ": " + r.detail + "; ";
  }
  report(6, "statevector checks at tolerance 1e-9", ok, std::to_string(cases) + " cases" + (ok ? "" : "; " + detail));
}

void scaling() {
  const std::vector<std::size_t> sizes{50, 100, 200, 400};
  const auto points = bench::time_k_index(sizes, kSeed);
  bool within = true;
  std::string detail;
  for (const auto& p : points) {
    within = within && p.seconds <= kScalingRunLimitSeconds;
    detail += "n=" + std::to_string(p.n) + ":" + std::to_string(p.seconds) + "s ";
  }
  const double slope = bench::loglog_slope(points);
  detail += "slope=" + std::to_string(slope);
  report(7, "k index scaling on G(n,1/2)", within && slope <= kScalingSlopeLimit, detail);
}

}  // namespace

int main() {
  tour_counts();
  main_identity();
  micro_instances();
  mu_reduction();
  invariance();
  quantum_checks();
  scaling();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
