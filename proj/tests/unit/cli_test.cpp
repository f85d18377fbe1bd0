/*
   Copyright 2026 The opcons Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include "gtest/gtest.h"

#include "golden_cases.hpp"
#include "opcons/error.hpp"

#include <json.hpp>

#include <fstream>

namespace opcons {
namespace {

using testing::run_cli;
using Json = nlohmann::json;

TEST(Cli, ClassifyMomentumJson) {
  const auto r = run_cli({"classify", "--expr", "-i*hbar*D1", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"kind\":\"Beta\",\"constant\":\"hbar\"}\n");
}

TEST(Cli, SolveCaseTwoPointwise) {
  const auto r = run_cli({"solve-case", "--k", "2", "--mode", "pointwise"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("condition: B2 = A\n"), std::string::npos);
  EXPECT_NE(r.out.find("operator: -i*A*D1\n"), std::string::npos);
  EXPECT_NE(r.out.find("kind: Beta\n"), std::string::npos);
}

TEST(Cli, ExpectOscillating) {
  const auto r = run_cli({"expect", "--expr", "E(3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "expectation: 0\n");
}

TEST(Cli, ReadsOperatorFromStdin) {
  const auto r = run_cli({"reduce", "--json"}, "2*D1 + D3 + 4*D5\n");
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["a0"], "0");
  EXPECT_EQ(j["b1"], "5");
  EXPECT_EQ(j["b2"], "0");
}

TEST(Cli, ExpectNumericReportsDifference) {
  const auto r = run_cli({"expect", "--expr", "-i*A*D1", "--numeric", "--bind", "A=-7/3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["expectation"], "A");
  EXPECT_NEAR(j["numeric"]["re"].get<double>(), -7.0 / 3.0, 1e-10);
  EXPECT_LT(j["abs_diff"].get<double>(), 1e-10);
}

TEST(Cli, ProbeDeltaAndEnsemble) {
  auto r = run_cli({"probe", "--expr", "A", "--delta", "D2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["delta_expectation"], "-1");

  r = run_cli({"probe", "--expr", "1", "--trials", "50", "--seed", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(Json::parse(r.out)["detected_fraction"].get<double>(), 0.5);

  r = run_cli({"probe", "--expr", "1"});
  EXPECT_EQ(r.code, cli::kDomain);
}

TEST(Cli, PhysForms) {
  EXPECT_EQ(run_cli({"phys", "--expr", "A"}).out, "kind: Alpha\nconstant: A\nform: hbar\n");
  const auto beta = run_cli({"phys", "--expr", "-i*hbar*D1", "--json"});
  EXPECT_EQ(Json::parse(beta.out)["form"], "-i*hbar*d/dx");
  const auto gamma = run_cli({"phys", "--expr", "A*D2", "--var", "y", "--const", "h", "--json"});
  EXPECT_EQ(Json::parse(gamma.out)["form"], "h*d^2/dy^2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"classify", "--expr", "A*D1*B"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"classify", "--expr", "D-1"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"expect", "--expr", "A", "--numeric"}).code, cli::kBinding);
  EXPECT_EQ(run_cli({"expect", "--expr", "A", "--numeric", "--bind", "A=x"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"phys", "--expr", "D1 + D2"}).code, cli::kDomain);
  EXPECT_EQ(run_cli({"solve-case", "--k", "7"}).code, cli::kDomain);
  EXPECT_EQ(run_cli({"solve-case", "--k", "2", "--mode", "sideways"}).code, cli::kDomain);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kParse);
  EXPECT_EQ(run_cli({}).code, cli::kParse);
}

TEST(Cli, DiagnosticsGoToStandardError) {
  const auto r = run_cli({"classify", "--expr", "A +"});
  EXPECT_EQ(r.code, cli::kParse);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("1:4"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  const auto r = run_cli({"verify", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["passed"].get<int>(), 200);
}

TEST(Cli, ParseBinding) {
  const auto [name, value] = cli::parse_binding("hbar=-3/4");
  EXPECT_EQ(name, "hbar");
  EXPECT_EQ(value, Rational(-3, 4));
  EXPECT_THROW(cli::parse_binding("=3"), ParseError);
  EXPECT_THROW(cli::parse_binding("A=1/0"), ParseError);
}

TEST(CliGolden, OutputsMatchPinnedFiles) {
  for (const auto& c : testing::golden_cases()) {
    SCOPED_TRACE(c.file);
    const auto first = run_cli(c.args);
    const auto second = run_cli(c.args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
    if (testing::update_golden()) {
      std::ofstream(testing::golden_path(c.file), std::ios::binary) << first.out;
      continue;
    }
    EXPECT_EQ(first.out, testing::read_file(testing::golden_path(c.file)));
  }
}

TEST(CliGolden, SchemaKeys) {
  const std::set<std::string> allowed = {"kind",  "constant", "a0",       "b1",      "b2",        "expectation",
                                         "numeric", "abs_diff", "delta_expectation", "trials", "seed",
                                         "family_only", "max_abs_delta", "detected_fraction", "case", "mode",
                                         "template", "condition", "operator", "form"};
  for (const auto& c : testing::golden_cases()) {
    const Json j = Json::parse(run_cli(c.args).out);
    for (const auto& [key, value] : j.items()) EXPECT_TRUE(allowed.count(key)) << c.file << ": " << key;
  }
}

}  // namespace
}  // namespace opcons
