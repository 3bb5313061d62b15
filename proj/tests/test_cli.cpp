// Copyright 2026 The qos_guard Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qos_guard/cli.hpp"

namespace qos_guard
{
namespace
{

const std::string kFixtures = QOS_GUARD_FIXTURE_DIR;

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "qos_guard");
  std::vector<const char *> argv;
  for (const auto & a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string & name) {return kFixtures + "/" + name;}

TEST(Cli, ExitCodeMatrix)
{
  EXPECT_EQ(cli({"check", fixture("clean.xml")}).code, kExitClean);
  EXPECT_EQ(cli({"check", fixture("conditional_only.xml")}).code, kExitClean);
  EXPECT_EQ(cli({"check", fixture("critical.xml")}).code, kExitViolations);
  EXPECT_EQ(cli({"check", fixture("clean.xml"), "--fail-on", "warning"}).code, kExitClean);
  EXPECT_EQ(
    cli({"check", fixture("conditional_only.xml"), "--fail-on", "warning"}).code, kExitViolations);
  EXPECT_EQ(cli({"check", fixture("critical.xml"), "--fail-on", "warning"}).code, kExitViolations);
}

TEST(Cli, RxoMismatchReportsOneError)
{
  const auto run = cli({"check", fixture("rxo_mismatch.xml")});
  EXPECT_EQ(run.code, kExitViolations);
  EXPECT_NE(run.out.find("ERROR [rule 21 RELIAB↔RELIAB]"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("summary: 1 error, 0 warnings, 0 infos"), std::string::npos) << run.out;
}

TEST(Cli, UsageAndLoadErrorsExitTwo)
{
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"check"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", fixture("clean.xml"), "--format", "yaml"}).code, kExitUsage);
  const auto missing = cli({"check", fixture("does_not_exist.xml")});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(cli({"check", fixture("clean.xml"), "--pair", "status_sub:status_pub"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", fixture("clean.xml"), "--env", fixture("clean.xml")}).code, kExitUsage);
}

TEST(Cli, EnvironmentFileEnablesDynamicRules)
{
  const auto without = cli({"check", fixture("critical.xml"), "--show-skipped"});
  EXPECT_NE(without.out.find("SKIP [rule 29"), std::string::npos);
  const auto with = cli({"check", fixture("critical.xml"), "--env", fixture("env.json")});
  // depth 10 against 100ms / 50ms + 2: above the threshold, so rule 39 fires.
  EXPECT_NE(with.out.find("[rule 39 "), std::string::npos) << with.out;
  EXPECT_EQ(with.out.find("[rule 29 "), std::string::npos) << with.out;
}

TEST(Cli, DirectoryInputAndDeterministicJson)
{
  const auto a = cli({"check", fixture("multi"), "--format", "json", "--pair", "cmd_pub:logger"});
  const auto b = cli({"check", fixture("multi"), "--format", "json", "--pair", "cmd_pub:logger"});
  EXPECT_EQ(a.code, kExitViolations);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  const auto inputs = a.out.find("\"inputs\"");
  EXPECT_LT(a.out.find("a_sensors.xml", inputs), a.out.find("b_control.xml", inputs));
  EXPECT_NE(a.out.find("\"origin\": \"directive\""), std::string::npos);
}

TEST(Cli, RulesAndGraph)
{
  const auto rules = cli({"rules", "--format", "json"});
  EXPECT_EQ(rules.code, kExitClean);
  EXPECT_NE(rules.out.find("\"id\": 41"), std::string::npos);
  const auto graph = cli({"graph"});
  EXPECT_EQ(graph.code, kExitClean);
  EXPECT_EQ(graph.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(cli({"graph", "--format", "json"}).code, kExitClean);
}

TEST(Cli, ColorFlag)
{
  const auto on = cli({"check", fixture("critical.xml"), "--color", "on"});
  EXPECT_NE(on.out.find("\033[31m"), std::string::npos);
  const auto automatic = cli({"check", fixture("critical.xml")});
  EXPECT_EQ(automatic.out.find("\033["), std::string::npos);
}

}  // namespace
}  // namespace qos_guard
