// Copyright 2026 The Sponsored Assortment Authors
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

#include "assortment/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "assortment/instance_io.h"
#include "assortment/kernels.h"

namespace assortment {
namespace {

namespace fs = std::filesystem;

std::string Data(const std::string& name) {
  return std::string(ASSORTMENT_TEST_DATA_DIR) + "/" + name;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("assortment_cli_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

TEST(Cli, SolveExact) {
  const CliRun r = Cli({"solve", "--exact", Data("single_sponsored.json")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto doc = r.json();
  EXPECT_NEAR(doc["revenue"].get<double>(), 4.0, 1e-12);
  EXPECT_EQ(doc["problem"], "p0");
  EXPECT_EQ(doc["placement"][0]["product"], "s");
  EXPECT_TRUE(doc["dinkelbach"]["converged"].get<bool>());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SolveConstrainedMatchesCheck) {
  const CliRun r = Cli({"solve", "--constrained", Data("knapsack_small.json")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto doc = r.json();
  EXPECT_EQ(doc["problem"], "p2");
  EXPECT_EQ(doc["candidates"].size(), 2u);
  const std::string placement =
      WriteTemp("placement.json", nlohmann::json{{"placement", doc["placement"]}}.dump());
  const CliRun c = Cli({"check", Data("knapsack_small.json"), placement});
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_NEAR(c.json()["revenue"].get<double>(), doc["revenue"].get<double>(), 1e-12);
}

TEST(Cli, SolveNeedsExactlyOneMode) {
  EXPECT_EQ(Cli({"solve", Data("single_sponsored.json")}).code, 2);
  const CliRun both = Cli({"solve", "--exact", "--constrained", Data("single_sponsored.json")});
  EXPECT_EQ(both.code, 2);
  EXPECT_TRUE(both.json().contains("error"));
}

TEST(Cli, CheckVerdicts) {
  const CliRun ok = Cli({"check", Data("knapsack_small.json"), Data("placement_feasible.json")});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_TRUE(ok.json()["feasible"].get<bool>());

  const CliRun bad = Cli({"check", Data("knapsack_small.json"), Data("placement_infeasible.json")});
  EXPECT_EQ(bad.code, 1);
  const auto doc = bad.json();
  EXPECT_FALSE(doc["feasible"].get<bool>());
  std::set<std::string> kinds;
  for (const auto& v : doc["violations"]) kinds.insert(v["kind"]);
  EXPECT_TRUE(kinds.count("sponsored_unplaced"));
  EXPECT_TRUE(kinds.count("organic_constraint"));
}

TEST(Cli, ParseErrorsExitTwo) {
  const std::string broken = WriteTemp("broken.json", "{\"products\": [");
  const CliRun r = Cli({"solve", "--exact", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["error"]["code"], "ParseError");

  const CliRun missing = Cli({"solve", "--exact", "/nonexistent/instance.json"});
  EXPECT_EQ(missing.code, 2);

  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"--tolerance", "-1", "solve", "--exact", Data("single_sponsored.json")}).code, 2);
}

TEST(Cli, OracleBudgetExitsThree) {
  const CliRun r = Cli({"oracle", Data("knapsack_small.json"), "--max-products", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json()["error"]["code"], "BudgetExceeded");

  const CliRun p2 = Cli({"oracle", Data("knapsack_small.json"), "--problem", "p2"});
  ASSERT_EQ(p2.code, 0) << p2.out;
  const CliRun p0 = Cli({"oracle", Data("knapsack_small.json")});
  ASSERT_EQ(p0.code, 0);
  EXPECT_LE(p2.json()["revenue"].get<double>(), p0.json()["revenue"].get<double>() + 1e-12);
}

TEST(Cli, InfeasibleSponsoredExitsOne) {
  const std::string text = R"({
    "products": [{"id": "s1", "kind": "sponsored", "revenue": 1},
                 {"id": "s2", "kind": "sponsored", "revenue": 1}],
    "positions": [{"slot": 1, "kind": "reserved"}, {"slot": 2, "kind": "reserved"}],
    "weights": [], "w0": 1,
    "valid_positions": {"s1": [2], "s2": [2]}})";
  const std::string path = WriteTemp("infeasible.json", text);
  EXPECT_EQ(Cli({"solve", "--exact", path}).code, 1);
  EXPECT_EQ(Cli({"solve", "--constrained", path}).code, 1);
}

TEST(Cli, BenchReproducibleAndSeedOverride) {
  const std::vector<std::string> args = {"bench", "--config", Data("bench_small.json"),
                                         "--trials", "25"};
  const CliRun a = Cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(Cli(args).out, a.out);
  std::vector<std::string> jobs = args;
  jobs.insert(jobs.end(), {"--jobs", "3"});
  EXPECT_EQ(Cli(jobs).out, a.out);
  std::vector<std::string> reseeded = {"--seed", "5"};
  reseeded.insert(reseeded.end(), args.begin(), args.end());
  EXPECT_NE(Cli(reseeded).out, a.out);
  EXPECT_EQ(a.json()["summary"]["trials"], 25);
}

TEST(Cli, GenerateEmitsParsableInstance) {
  const CliRun r = Cli({"--seed", "3", "generate", "--config", Data("bench_small.json")});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NO_THROW(parse_instance(r.out));
  EXPECT_EQ(Cli({"--seed", "3", "generate", "--config", Data("bench_small.json")}).out, r.out);
}

TEST(Cli, KernelSelection) {
  const kernels::Backend before = kernels::active_backend();
  const CliRun r = Cli({"--kernels", "scalar", "solve", "--exact", Data("single_sponsored.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("kernels=scalar"), std::string::npos);
  kernels::set_backend(before);
}

TEST(Cli, Help) {
  const CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

TEST(ExitCodeFor, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::kParseError), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::kConfigError), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::kInvalidPlacement), 1);
  EXPECT_EQ(exit_code_for(ErrorCode::kBudgetExceeded), 3);
  EXPECT_EQ(exit_code_for(ErrorCode::kConvergenceFailure), 3);
}

}  // namespace
}  // namespace assortment
