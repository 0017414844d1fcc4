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

// lcorbit command-line tool.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or validation
// error, 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lcorbit/bench.hpp"
#include "lcorbit/lcorbit.hpp"
#include "lcorbit/verify.hpp"

namespace {

using namespace lcorbit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

// "key: value" lines under a versioned schema.
class Report {
 public:
  explicit Report(const std::string& command) {
    add("schema", "1");
    add("command", command);
  }

  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, const BigInt& value) { add(key, value.str()); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct CommonOptions {
  std::string input = "-";
  std::string format = "auto";
  std::string out;
  std::uint64_t cap = kDefaultOrbitCap;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timings = false;
};

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "auto" picks graph6 when the input is a single whitespace-free token.
LabelledGraph read_graph(const CommonOptions& opt) {
  const std::string text = read_input(opt.input);
  std::string format = opt.format;
  if (format == "auto") {
    std::istringstream in(text);
    std::string first, second;
    in >> first >> second;
    const bool numeric = !first.empty() && first.find_first_not_of("0123456789") == std::string::npos;
    format = (second.empty() && !numeric) || first.rfind(">>graph6<<", 0) == 0 ? "graph6" : "edgelist";
  }
  if (format == "graph6") return parse_graph6(text);
  return parse_edge_list(text);
}

void emit(const Report& report, const CommonOptions& opt) {
  if (opt.out.empty()) return;
  std::ofstream out(opt.out);
  if (!out) throw ParseError("cannot open report file '" + opt.out + "'");
  out << report.str();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(6);
  o << std::fixed << s;
  return o.str();
}

int cmd_orbit(const CommonOptions& opt, bool list) {
  const LabelledGraph g = read_graph(opt);
  const OrbitReport orbit = enumerate_orbit(g, {.list_members = list, .cap = opt.cap});
  Report r("orbit");
  r.add("input", to_graph6(g));
  r.add("vertices", static_cast<std::uint64_t>(g.size()));
  r.add("orbit_size", orbit.size);
  r.add("representative", to_graph6(orbit.representative));
  std::cout << "orbit size: " << orbit.size << "\n"
            << "representative: " << to_graph6(orbit.representative) << "\n";
  if (orbit.members) {
    for (std::size_t i = 0; i < orbit.members->size(); ++i) {
      const std::string g6 = to_graph6((*orbit.members)[i]);
      r.add("member." + std::to_string(i), g6);
      std::cout << g6 << "\n";
    }
  }
  emit(r, opt);
  return kExitOk;
}

int cmd_k_index(const CommonOptions& opt) {
  const LabelledGraph g = read_graph(opt);
  const KIndexReport k = k_index_report(g);
  const MuWitness mu = in_class_mu(g);
  Report r("k-index");
  r.add("input", to_graph6(g));
  r.add("k", k.k);
  r.add("mu", mu.member);
  r.add("mu_witness", mu.describe());
  r.add("components", static_cast<std::uint64_t>(k.components.size()));
  std::cout << "k: " << k.k << "\n"
            << "mu: " << (mu.member ? "yes" : "no") << " (" << mu.describe() << ")\n";
  for (std::size_t i = 0; i < k.components.size(); ++i) {
    const auto& c = k.components[i];
    std::string verts;
    for (auto v : c.vertices) verts += (verts.empty() ? "" : ",") + std::to_string(v);
    const std::string p = "component." + std::to_string(i) + ".";
    r.add(p + "vertices", verts);
    r.add(p + "nu_dim", static_cast<std::uint64_t>(c.nu_dim));
    r.add(p + "mu", c.mu.member);
    r.add(p + "mu_witness", c.mu.describe());
    r.add(p + "k", c.k);
    if (k.components.size() > 1) {
      std::cout << "component {" << verts << "}: k=" << c.k << " dim nu=" << c.nu_dim << " mu "
                << (c.mu.member ? "yes" : "no") << "\n";
    }
  }
  emit(r, opt);
  return kExitOk;
}

int cmd_eulerian_vectors(const CommonOptions& opt) {
  const LabelledGraph g = read_graph(opt);
  const std::uint64_t e = e_of_graph(g, {.jobs = opt.jobs});
  Report r("eulerian-vectors");
  r.add("input", to_graph6(g));
  r.add("e", e);
  std::cout << "e: " << e << "\n";
  emit(r, opt);
  return kExitOk;
}

int cmd_count_tours(const CommonOptions& opt, const std::string& method) {
  const MultiGraph4 f = MultiGraph4::parse(read_input(opt.input));
  const bool connected = f.is_connected();
  const bool run_reduction = method != "brute";
  const bool run_brute = method != "reduction";
  Report r("count-tours");
  r.add("input", "4-regular multigraph, " + std::to_string(f.vertex_count()) + " vertices, " +
                     std::to_string(f.edge_count()) + " edges");
  r.add("method", method);
  r.add("connected", connected);
  if (!connected && run_reduction) {
    throw ValidationError("multigraph is disconnected; it has no Eulerian tour");
  }

  std::vector<std::pair<std::string, double>> timings;
  std::optional<BigInt> product;
  if (run_reduction) {
    Tour tour;
    LabelledGraph g;
    std::uint64_t l = 0;
    BigInt k;
    timings.emplace_back("tour", bench::seconds_of([&] { tour = find_eulerian_tour(f); }));
    timings.emplace_back("alternance", bench::seconds_of([&] {
                           g = alternance_graph(double_occurrence_word(f, tour));
                         }));
    timings.emplace_back("orbit", bench::seconds_of([&] { l = enumerate_orbit(g, {.cap = opt.cap}).size; }));
    timings.emplace_back("k_index", bench::seconds_of([&] { k = k_index(g); }));
    product = BigInt(l) * k;
    r.add("tour", tour.render(f));
    r.add("word", double_occurrence_word(f, tour).to_string());
    r.add("alternance_graph", to_graph6(g));
    r.add("l", l);
    r.add("k", k);
    r.add("l_times_k", *product);
    std::cout << "alternance graph: " << to_graph6(g) << "\n"
              << "l = " << l << ", k = " << k << ", l*k = " << *product << "\n";
  }
  bool matched = true;
  if (run_brute) {
    std::uint64_t tours = 0;
    timings.emplace_back("transition_systems", bench::seconds_of([&] {
                           tours = count_eulerian_tours(f, {.max_n = kDefaultEulerianCap, .jobs = opt.jobs});
                         }));
    r.add("transition_system_tours", tours);
    std::cout << "tours (transition systems): " << tours << "\n";
    if (product) {
      const bool m1 = BigInt(tours) == *product;
      r.add("transition_system_tours_match", m1);
      matched = matched && m1;
    }
    if (connected) {
      const LabelledGraph g = alternance_graph(double_occurrence_word(f, find_eulerian_tour(f)));
      std::uint64_t e = 0;
      timings.emplace_back("eulerian_vectors", bench::seconds_of([&] { e = e_of_graph(g, {.jobs = opt.jobs}); }));
      r.add("eulerian_vectors", e);
      std::cout << "Eulerian vectors of the alternance graph: " << e << "\n";
      const bool m2 = e == tours && (!product || BigInt(e) == *product);
      r.add("eulerian_vectors_match", m2);
      matched = matched && m2;
    }
  }
  r.add("status", matched ? "OK" : "FAILED");
  if (opt.timings) {
    for (const auto& [stage, s] : timings) r.add("seconds." + stage, fmt_seconds(s));
  }
  std::cout << "status: " << (matched ? "OK" : "FAILED") << "\n";
  emit(r, opt);
  return matched ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const CommonOptions& opt, const std::string& suite, std::size_t max_n) {
  verify::VerifyOptions vo{.max_n = max_n, .seed = opt.seed, .jobs = opt.jobs};
  std::vector<verify::CheckResult> results;
  if (suite == "oracles" || suite == "all") {
    auto part = verify::run_oracle_suite(vo);
    results.insert(results.end(), part.begin(), part.end());
  }
  if (suite == "quantum" || suite == "all") {
    auto part = verify::run_quantum_suite(vo);
    results.insert(results.end(), part.begin(), part.end());
  }
  Report r("verify");
  r.add("suite", suite);
  r.add("max_n", static_cast<std::uint64_t>(max_n));
  r.add("seed", opt.seed);
  bool all_passed = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i];
    all_passed = all_passed && c.passed;
    const std::string p = "check." + std::to_string(i) + ".";
    r.add(p + "name", c.name);
    r.add(p + "cases", c.cases);
    r.add(p + "passed", c.passed);
    if (!c.passed) r.add(p + "detail", c.detail);
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  r.add("status", all_passed ? "OK" : "FAILED");
  emit(r, opt);
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const CommonOptions& opt, const std::string& family, const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw InputError("--sizes needs at least one size");
  std::vector<bench::TimingPoint> points;
  if (family == "random-graph") {
    points = bench::time_k_index(sizes, opt.seed);
  } else if (family == "random-4regular") {
    points = bench::time_reduction(sizes, opt.seed, opt.cap);
  } else {
    points = bench::time_path_orbits(sizes, opt.cap);
  }
  Report r("bench");
  r.add("family", family);
  r.add("seed", opt.seed);
  std::cout << "n\tseconds\tvalue\n";
  for (const auto& p : points) {
    const std::string key = "n." + std::to_string(p.n);
    r.add(key + ".value", p.value);
    r.add(key + ".seconds", fmt_seconds(p.seconds));
    std::cout << p.n << "\t" << fmt_seconds(p.seconds) << "\t" << p.value << "\n";
  }
  if (family == "random-graph" && points.size() >= 2) {
    const double slope = bench::loglog_slope(points);
    r.add("loglog_slope", fmt_seconds(slope));
    std::cout << "log-log slope: " << slope << "\n";
  }
  emit(r, opt);
  return kExitOk;
}

void add_common(CLI::App* sub, CommonOptions& opt, bool graph_input) {
  sub->add_option("input", opt.input, "Input file, or - for standard input")->capture_default_str();
  if (graph_input) {
    sub->add_option("--format", opt.format, "Graph input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
        ->capture_default_str();
  }
  sub->add_option("--out", opt.out, "Write the structured report to this path");
  sub->add_option("--jobs", opt.jobs, "Worker threads for exhaustive counts")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-complementation orbits, isotropic systems and Eulerian tours"};
  app.require_subcommand(1);
  CommonOptions opt;

  bool list = false;
  auto* orbit = app.add_subcommand("orbit", "Size of the LC orbit of a graph");
  add_common(orbit, opt, true);
  orbit->add_flag("--list", list, "List every member in BFS order");
  orbit->add_option("--cap", opt.cap, "Maximum orbit size")->capture_default_str();

  auto* kidx = app.add_subcommand("k-index", "The index k(G) with its class-mu witness");
  add_common(kidx, opt, true);

  auto* ev = app.add_subcommand("eulerian-vectors", "Number of Eulerian vectors of the canonical system");
  add_common(ev, opt, true);

  std::string method = "reduction";
  auto* tours = app.add_subcommand("count-tours", "Eulerian tours of a 4-regular multigraph");
  add_common(tours, opt, false);
  tours->add_option("--method", method, "reduction, brute or both")
      ->check(CLI::IsMember({"reduction", "brute", "both"}))
      ->capture_default_str();
  tours->add_option("--cap", opt.cap, "Maximum orbit size")->capture_default_str();
  tours->add_flag("--timings", opt.timings, "Include per-stage timings in the report");

  std::string suite = "all";
  std::size_t max_n = 4;
  auto* ver = app.add_subcommand("verify", "Run the cross-check suites");
  ver->add_option("--suite", suite, "quantum, oracles or all")
      ->check(CLI::IsMember({"quantum", "oracles", "all"}))
      ->capture_default_str();
  ver->add_option("--max-n", max_n, "Largest graph size checked")->check(CLI::Range(1, 10))->capture_default_str();
  ver->add_option("--seed", opt.seed, "Seed for randomized cases")->capture_default_str();
  ver->add_option("--out", opt.out, "Write the structured report to this path");
  ver->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::string family = "random-graph";
  std::vector<std::size_t> sizes;
  auto* bench_cmd = app.add_subcommand("bench", "Timing tables");
  bench_cmd->add_option("--family", family, "random-graph (k index), random-4regular (reduction), path-orbit")
      ->check(CLI::IsMember({"random-graph", "random-4regular", "path-orbit"}))
      ->capture_default_str();
  bench_cmd->add_option("--sizes", sizes, "Sizes to measure")->required()->expected(1, 1 << 20)->delimiter(',');
  bench_cmd->add_option("--seed", opt.seed, "Seed for random instances")->capture_default_str();
  bench_cmd->add_option("--cap", opt.cap, "Maximum orbit size")->capture_default_str();
  bench_cmd->add_option("--out", opt.out, "Write the structured report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*orbit) return cmd_orbit(opt, list);
    if (*kidx) return cmd_k_index(opt);
    if (*ev) return cmd_eulerian_vectors(opt);
    if (*tours) return cmd_count_tours(opt, method);
    if (*ver) return cmd_verify(opt, suite, max_n);
    if (*bench_cmd) return cmd_bench(opt, family, sizes);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
