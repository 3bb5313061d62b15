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

#include "qos_guard/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qos_guard/chain_graph.hpp"
#include "qos_guard/pipeline.hpp"

namespace qos_guard
{

namespace
{

namespace fs = std::filesystem;

struct CheckOptions
{
  std::vector<std::string> inputs;
  std::string env_path;
  std::vector<std::string> pairs;
  std::string format = "human";
  std::string fail_on = "error";
  std::string color = "auto";
  bool show_skipped = false;
};

/// Files as given; directories contribute their *.xml files, sorted.
std::vector<std::string> expand_inputs(const std::vector<std::string> & inputs)
{
  std::vector<std::string> files;
  for (const auto & in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<std::string> found;
      for (const auto & entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && entry.path().extension() == ".xml") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

bool use_color(const std::string & mode, const std::ostream & out)
{
  if (mode == "on") {
    return true;
  }
  if (mode == "off") {
    return false;
  }
  const char * no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && *no_color != '\0') {
    return false;
  }
  return &out == &std::cout && ::isatty(STDOUT_FILENO) != 0;
}

bool fails(const ReportSummary & s, const std::string & threshold)
{
  if (threshold == "info") {
    return s.errors + s.warnings + s.infos > 0;
  }
  if (threshold == "warning") {
    return s.errors + s.warnings > 0;
  }
  return s.errors > 0;
}

int run_check(const CheckOptions & opts, std::ostream & out, std::ostream & err)
{
  try {
    const auto files = expand_inputs(opts.inputs);
    if (files.empty()) {
      err << "qos_guard: no profile documents found\n";
      return kExitUsage;
    }
    std::vector<ProfileDocument> docs;
    docs.reserve(files.size());
    for (const auto & f : files) {
      docs.push_back(read_document(f));
    }
    const auto set = parse_profiles(docs);

    EnvironmentModel env;
    if (!opts.env_path.empty()) {
      const auto env_doc = read_document(opts.env_path);
      env = parse_environment(env_doc.text, env_doc.path);
      for (const auto & [profile, pp] : env.per_profile_publish_period) {
        if (set.find(profile) == nullptr) {
          throw LoadError("publish_period_ms names unknown profile '" + profile + "'", env_doc.path);
        }
      }
    }

    std::vector<std::pair<std::string, std::string>> directives;
    for (const auto & p : opts.pairs) {
      directives.push_back(parse_pair_directive(p));
    }
    const auto plan = build_pairing_plan(set, directives);

    auto report = run_pipeline(set, env, plan);
    report.inputs = files;
    const auto format = opts.format == "json" ? OutputFormat::Json : OutputFormat::Human;
    out << render_report(report, format, {use_color(opts.color, out), opts.show_skipped});
    return fails(report.summary, opts.fail_on) ? kExitViolations : kExitClean;
  } catch (const LoadError & e) {
    err << "qos_guard: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Static checker for DDS QoS profile dependency chains", "qos_guard"};
  app.set_version_flag("--version", std::string{kToolVersion});
  app.require_subcommand(1);

  CheckOptions check;
  auto * check_cmd = app.add_subcommand("check", "Validate QoS profile documents");
  check_cmd->add_option("inputs", check.inputs, "Profile XML files or directories")->required();
  check_cmd->add_option("--env", check.env_path, "Environment JSON (rtt_ms, publish periods)");
  check_cmd->add_option("--pair", check.pairs, "Extra writer:reader pair to check");
  check_cmd->add_option("--format", check.format, "Output format")
  ->check(CLI::IsMember({"human", "json"}));
  check_cmd->add_option("--fail-on", check.fail_on, "Lowest level that sets exit code 1")
  ->check(CLI::IsMember({"error", "warning", "info"}));
  check_cmd->add_option("--color", check.color, "Colorize human output")
  ->check(CLI::IsMember({"auto", "on", "off"}));
  check_cmd->add_flag("--show-skipped", check.show_skipped, "List skipped rules in human output");

  std::string rules_format = "human";
  auto * rules_cmd = app.add_subcommand("rules", "Print the rule catalog");
  rules_cmd->add_option("--format", rules_format, "Output format")
  ->check(CLI::IsMember({"human", "json"}));

  std::string graph_format = "dot";
  auto * graph_cmd = app.add_subcommand("graph", "Export the policy dependency chain");
  graph_cmd->add_option("--format", graph_format, "Output format")
  ->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  if (check_cmd->parsed()) {
    return run_check(check, out, err);
  }
  if (rules_cmd->parsed()) {
    out << render_catalog(rules_format == "json" ? OutputFormat::Json : OutputFormat::Human);
    return kExitClean;
  }
  out << export_chain_graph(graph_format == "json" ? GraphFormat::Json : GraphFormat::Dot);
  return kExitClean;
}

}  // namespace qos_guard
