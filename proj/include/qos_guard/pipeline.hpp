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

#ifndef QOS_GUARD__PIPELINE_HPP_
#define QOS_GUARD__PIPELINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qos_guard/profile_ingest.hpp"
#include "qos_guard/rule_engine.hpp"

namespace qos_guard
{

inline constexpr std::string_view kToolName = "qos_guard";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// Deployment environment for the dynamic rules. Every duration present is
/// finite and positive.
struct EnvironmentModel
{
  std::optional<Duration> rtt;
  std::optional<Duration> default_publish_period;
  std::map<std::string, Duration> per_profile_publish_period;

  /// Per-profile override, else the default, else nullopt.
  std::optional<Duration> publish_period_for(const std::string & profile) const;
  EnvSnapshot snapshot_for(const std::string & profile) const;

  bool operator==(const EnvironmentModel &) const = default;
};

/// Parse the environment JSON document:
///   {"rtt_ms": 100, "default_publish_period_ms": 20,
///    "publish_period_ms": {"profile": 10}}
/// All keys optional. Throws LoadError on bad values or unknown keys.
EnvironmentModel parse_environment(std::string_view json_text, const std::string & origin = {});

enum class PairOrigin { TopicIndex, ExplicitDirective };

struct EndpointPair
{
  std::string writer;
  std::string reader;
  PairOrigin origin = PairOrigin::TopicIndex;
  bool operator==(const EndpointPair &) const = default;
};

struct PairingPlan
{
  std::vector<EndpointPair> pairs;
};

/// Parse a "writer:reader" directive. Throws LoadError if malformed.
std::pair<std::string, std::string> parse_pair_directive(std::string_view text);

/// Topic cross products first (topics in name order), then directives in
/// the given order, deduplicated. Throws LoadError for unknown profiles or
/// a directive that is not writer:reader.
PairingPlan build_pairing_plan(
  const ProfileSet & set, const std::vector<std::pair<std::string, std::string>> & directives);

/// Per-subject outcome tallies, for accounting checks.
struct EvaluationTally
{
  int applicable = 0;
  int violations = 0;
  int clean = 0;
  int skipped = 0;
};

struct ReportSummary
{
  int errors = 0;
  int warnings = 0;
  int infos = 0;
  int skipped = 0;
  bool operator==(const ReportSummary &) const = default;
};

struct Report
{
  std::vector<std::string> inputs;
  EnvironmentModel environment;
  PairingPlan plan;
  std::vector<ParseDiagnostic> parse_diagnostics;
  std::vector<Violation> diagnostics;
  std::vector<SkippedRule> skipped;
  ReportSummary summary;
  /// Keyed by profile name for endpoints and "writer|reader" for pairs.
  std::map<std::string, EvaluationTally> tallies;
};

/// Stage 1 (rules 1-19) per endpoint, stage 2 (20-27) per pair, stage 3
/// (28-41) per endpoint. All stages always run.
Report run_pipeline(
  const ProfileSet & set, const EnvironmentModel & env, const PairingPlan & plan);

enum class OutputFormat { Human, Json };

struct RenderOptions
{
  bool color = false;
  bool show_skipped = false;
};

std::string render_report(const Report & report, OutputFormat format, RenderOptions opts = {});

/// Rule catalog as an aligned text table or JSON array.
std::string render_catalog(OutputFormat format);

}  // namespace qos_guard

#endif  // QOS_GUARD__PIPELINE_HPP_
