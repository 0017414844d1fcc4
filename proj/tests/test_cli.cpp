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

// Runs the built tool and checks exit codes, output and reports.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("lcorbit_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

Run run(const std::string& binary, const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = "'" + binary + "' " + args + " > '" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

Run cli(const std::string& args) { return run(LCORBIT_CLI, args); }

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli("--help").code, 0); }

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("no-such-command").code, 2);
  EXPECT_EQ(cli("bench --family random-graph").code, 2);
  EXPECT_EQ(cli("orbit --format dot x").code, 2);
}

TEST(Cli, OrbitFromFileAndStdin) {
  const auto g = write_file("p3.g6", "Bg\n");
  const auto r = cli("orbit '" + g.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("orbit size: 4"), std::string::npos);
  const auto s = cli("orbit --list < '" + g.string() + "'");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("Bw"), std::string::npos);
  const auto el = write_file("p3.txt", "3 2\n0 1\n1 2\n");
  EXPECT_NE(cli("orbit '" + el.string() + "'").out.find("orbit size: 4"), std::string::npos);
}

TEST(Cli, ReportFile) {
  const auto g = write_file("k2.g6", "A_\n");
  const auto report = scratch() / "report.txt";
  ASSERT_EQ(cli("k-index '" + g.string() + "' --out '" + report.string() + "'").code, 0);
  const auto text = slurp(report);
  EXPECT_EQ(text.rfind("schema: 1\n", 0), 0u);
  EXPECT_NE(text.find("k: 6\n"), std::string::npos);
  EXPECT_NE(text.find("mu: yes\n"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  const auto bad = write_file("bad.g6", "B\n");
  EXPECT_EQ(cli("orbit '" + bad.string() + "'").code, 2);
  EXPECT_EQ(cli("orbit /nonexistent/file").code, 2);
  const auto bad_multi = write_file("bad.mg", "3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(cli("count-tours '" + bad_multi.string() + "'").code, 2);
}

TEST(Cli, CapExitsThree) {
  const auto g = write_file("p8.txt", "8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
  EXPECT_EQ(cli("orbit --cap 10 '" + g.string() + "'").code, 3);
}

TEST(Cli, CountTours) {
  const auto f = write_file("pair.mg", "2 4\n0 1\n0 1\n0 1\n0 1\n");
  const auto r = cli("count-tours --method both '" + f.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("l*k = 6"), std::string::npos);
  EXPECT_NE(r.out.find("status: OK"), std::string::npos);
}

TEST(Cli, CountToursDisconnected) {
  const auto f = write_file("split.mg", "2 4\n0 0\n0 0\n1 1\n1 1\n");
  const auto report = scratch() / "split_report.txt";
  const auto r = cli("count-tours --method brute '" + f.string() + "' --out '" + report.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(slurp(report).find("connected: no"), std::string::npos);
  EXPECT_NE(slurp(report).find("transition_system_tours: 0"), std::string::npos);
  EXPECT_EQ(cli("count-tours --method reduction '" + f.string() + "'").code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto f = write_file("loop.mg", "1 2\n0 0\n0 0\n");
  const auto a = scratch() / "a.txt";
  const auto b = scratch() / "b.txt";
  ASSERT_EQ(cli("count-tours --method both '" + f.string() + "' --out '" + a.string() + "'").code, 0);
  ASSERT_EQ(cli("count-tours --method both '" + f.string() + "' --out '" + b.string() + "'").code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a).find("seconds."), std::string::npos);
}

TEST(Cli, VerifyPassesAndFaultyBuildFails) {
  EXPECT_EQ(cli("verify --suite all --max-n 3").code, 0);
  const auto faulty = run(LCORBIT_FAULTY_CLI, "verify --suite all --max-n 3");
  EXPECT_EQ(faulty.code, 1);
  EXPECT_NE(faulty.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Bench) {
  const auto r = cli("bench --family path-orbit --sizes 3,4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4\t"), std::string::npos);
}

}  // namespace
