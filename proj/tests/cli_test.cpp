// Copyright 2026 The Authors.
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

#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "maxdiv/cli.hpp"
#include "maxdiv/harness.hpp"
#include "maxdiv/instance_io.hpp"

using namespace maxdiv;
namespace fs = std::filesystem;

namespace {

const std::string kSamplePath = std::string(MAXDIV_TEST_DATA_DIR) + "/letor_sample.txt";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("maxdiv_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen then solve is deterministic end to end") {
  TempDir tmp;
  const std::string inst = tmp.file("inst.json");
  CHECK(cli_dispatch({"gen", "--n", "30", "--seed", "7", "--out", inst}) == 0);
  CHECK(cli_dispatch({"gen", "--n", "30", "--seed", "7", "--out", tmp.file("again.json")}) == 0);
  CHECK(slurp(inst) == slurp(tmp.file("again.json")));

  const std::string solve1 = tmp.file("s1.csv");
  const std::string solve2 = tmp.file("s2.csv");
  for (const std::string& out : {solve1, solve2})
    CHECK(cli_dispatch({"solve", inst, "--alg", "greedy-b", "--p", "5", "--format", "csv",
                        "--out", out}) == 0);
  CHECK(strip_time_columns(slurp(solve1)) == strip_time_columns(slurp(solve2)));
}

TEST_CASE("solve covers every algorithm and brute force agrees") {
  TempDir tmp;
  const std::string inst = tmp.file("inst.json");
  REQUIRE(cli_dispatch({"gen", "--n", "12", "--seed", "3", "--out", inst}) == 0);
  for (const std::string alg : {"greedy-a", "greedy-b", "local-search"}) {
    const std::string out = tmp.file(alg + ".csv");
    CHECK(cli_dispatch({"solve", inst, "--alg", alg, "--p", "4", "--format", "csv", "--out",
                        out}) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find(alg) != std::string::npos);
  }
  CHECK(cli_dispatch({"brute", inst, "--p", "4", "--format", "csv", "--out",
                      tmp.file("opt.csv")}) == 0);
  CHECK(slurp(tmp.file("opt.csv")).find("brute-force") != std::string::npos);
}

TEST_CASE("compare emits the frozen aggregate header") {
  TempDir tmp;
  const std::string out = tmp.file("cmp.csv");
  CHECK(cli_dispatch({"compare", "--n", "12", "--p", "3..4", "--trials", "2", "--opt",
                      "--algs", "greedy-a,greedy-b", "--format", "csv", "--out", out,
                      "--seed", "5"}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("n,lambda,trials,p,opt_mean,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 p rows
}

TEST_CASE("dynamics emits one row per repeat and step") {
  TempDir tmp;
  const std::string out = tmp.file("dyn.csv");
  CHECK(cli_dispatch({"dynamics", "--n", "10", "--p", "3", "--env", "mixed", "--steps", "3",
                      "--repeats", "2", "--format", "csv", "--out", out, "--seed", "11"}) == 0);
  const std::string csv = slurp(out);
  // header + repeats * (1 initial + steps).
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * (1 + 3));

  // A lambda grid stacks sections under one header.
  const std::string grid_out = tmp.file("grid.csv");
  CHECK(cli_dispatch({"dynamics", "--n", "10", "--p", "3", "--env", "vperturbation",
                      "--steps", "1", "--repeats", "1", "--lambda-grid", "0.2:0.4:0.1",
                      "--format", "csv", "--out", grid_out, "--seed", "11"}) == 0);
  const std::string grid_csv = slurp(grid_out);
  CHECK(std::count(grid_csv.begin(), grid_csv.end(), '\n') == 1 + 3 * 2);
}

TEST_CASE("ingest builds a loadable instance") {
  TempDir tmp;
  const std::string out = tmp.file("letor.json");
  CHECK(cli_dispatch({"ingest", kSamplePath, "--top-n", "20", "--lambda", "1.0", "--out",
                      out}) == 0);
  const InstanceFile file = read_instance(out);
  CHECK(file.instance.size() == 20);
  CHECK(file.instance.lambda() == 1.0);
  CHECK(cli_dispatch({"solve", out, "--alg", "greedy-b", "--p", "5", "--out",
                      tmp.file("sol.txt")}) == 0);

  // Specific query and angular mode.
  CHECK(cli_dispatch({"ingest", kSamplePath, "--query", "10", "--top-n", "4", "--mode",
                      "angular", "--out", tmp.file("q10.json")}) == 0);
  CHECK(read_instance(tmp.file("q10.json")).instance.size() == 4);
}

TEST_CASE("bad invocations exit nonzero") {
  CHECK(cli_dispatch({}) != 0);
  CHECK(cli_dispatch({"frobnicate"}) != 0);
  CHECK(cli_dispatch({"gen"}) != 0);                     // missing --n
  CHECK(cli_dispatch({"gen", "--n", "10", "--bogus"}) != 0);
  CHECK(cli_dispatch({"solve", "/nonexistent.json", "--alg", "greedy-b", "--p", "3"}) != 0);
  CHECK(cli_dispatch({"ingest", "/nonexistent.txt"}) != 0);
  TempDir tmp;
  const std::string inst = tmp.file("inst.json");
  REQUIRE(cli_dispatch({"gen", "--n", "6", "--seed", "1", "--out", inst}) == 0);
  CHECK(cli_dispatch({"solve", inst, "--alg", "quantum", "--p", "2"}) != 0);
  CHECK(cli_dispatch({"solve", inst, "--alg", "greedy-b", "--p", "9"}) != 0);
  CHECK(cli_dispatch({"brute", inst}) != 0);  // no p, no matroid
}

TEST_CASE("matroid-bearing files drive local search and brute force") {
  TempDir tmp;
  // Build the capped-pair fixture file by hand.
  const auto [inst, m] = appendix_fixture(4, 1.0);
  const std::string path = tmp.file("fixture.json");
  write_instance(path, inst, m);

  const std::string ls_out = tmp.file("ls.csv");
  CHECK(cli_dispatch({"solve", path, "--alg", "local-search", "--format", "csv", "--out",
                      ls_out}) == 0);
  const std::string brute_out = tmp.file("brute.csv");
  CHECK(cli_dispatch({"brute", path, "--matroid", "--format", "csv", "--out", brute_out}) == 0);
  // Local search reaches the matroid optimum on this fixture (pair sums may
  // differ in the last ulp because the selection orders differ).
  const std::string ls_csv = strip_time_columns(slurp(ls_out));
  const std::string brute_csv = strip_time_columns(slurp(brute_out));
  const auto value_of = [](const std::string& csv) {
    // objective is the 9th column
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    std::istringstream row(line);
    std::string cell;
    for (int i = 0; i < 9; ++i) std::getline(row, cell, ',');
    return std::stod(cell);
  };
  CHECK(value_of(ls_csv) == doctest::Approx(value_of(brute_csv)).epsilon(1e-12));
}

}  // TEST_SUITE
