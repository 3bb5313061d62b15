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

#include "qos_guard/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace qos_guard
{

using nlohmann::json;

std::optional<Duration> EnvironmentModel::publish_period_for(const std::string & profile) const
{
  if (const auto it = per_profile_publish_period.find(profile);
    it != per_profile_publish_period.end())
  {
    return it->second;
  }
  return default_publish_period;
}

EnvSnapshot EnvironmentModel::snapshot_for(const std::string & profile) const
{
  return {rtt, publish_period_for(profile)};
}

namespace
{

Duration millis_to_duration(const json & value, const std::string & key, const std::string & origin)
{
  if (!value.is_number()) {
    throw LoadError(key + ": expected a number of milliseconds", origin);
  }
  const double ms = value.get<double>();
  if (!std::isfinite(ms) || ms <= 0.0) {
    throw LoadError(key + ": must be finite and positive", origin);
  }
  const double ns = std::round(ms * 1e6);
  if (ns >= static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
    throw LoadError(key + ": value too large", origin);
  }
  if (ns < 1.0) {
    throw LoadError(key + ": must be at least 1 ns", origin);
  }
  return Duration::from_nanos(static_cast<std::int64_t>(ns));
}

}  // namespace

EnvironmentModel parse_environment(std::string_view json_text, const std::string & origin)
{
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error & e) {
    throw LoadError(std::string{"malformed environment JSON: "} + e.what(), origin);
  }
  if (!doc.is_object()) {
    throw LoadError("environment must be a JSON object", origin);
  }
  EnvironmentModel env;
  for (const auto & [key, value] : doc.items()) {
    if (key == "rtt_ms") {
      env.rtt = millis_to_duration(value, key, origin);
    } else if (key == "default_publish_period_ms") {
      env.default_publish_period = millis_to_duration(value, key, origin);
    } else if (key == "publish_period_ms") {
      if (!value.is_object()) {
        throw LoadError("publish_period_ms: expected an object of profile -> milliseconds", origin);
      }
      for (const auto & [profile, ms] : value.items()) {
        env.per_profile_publish_period.emplace(
          profile, millis_to_duration(ms, "publish_period_ms." + profile, origin));
      }
    } else {
      throw LoadError("unknown environment key '" + key + "'", origin);
    }
  }
  return env;
}

std::pair<std::string, std::string> parse_pair_directive(std::string_view text)
{
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size() ||
    text.find(':', colon + 1) != std::string_view::npos)
  {
    throw LoadError("malformed pair directive '" + std::string{text} + "' (expected writer:reader)");
  }
  return {std::string{text.substr(0, colon)}, std::string{text.substr(colon + 1)}};
}

PairingPlan build_pairing_plan(
  const ProfileSet & set, const std::vector<std::pair<std::string, std::string>> & directives)
{
  PairingPlan plan;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto & [topic, bucket] : set.topic_index()) {
    for (const auto & w : bucket.writers) {
      for (const auto & r : bucket.readers) {
        seen.emplace(w, r);
        plan.pairs.push_back({w, r, PairOrigin::TopicIndex});
      }
    }
  }
  for (const auto & [w, r] : directives) {
    const auto * writer = set.find(w);
    const auto * reader = set.find(r);
    if (writer == nullptr || reader == nullptr) {
      throw LoadError("pair directive " + w + ":" + r + " names unknown profile '" +
              (writer == nullptr ? w : r) + "'");
    }
    if (!writer->is_writer() || !reader->is_reader()) {
      throw LoadError("pair directive " + w + ":" + r + ": pair must be writer:reader");
    }
    if (seen.emplace(w, r).second) {
      plan.pairs.push_back({w, r, PairOrigin::ExplicitDirective});
    }
  }
  return plan;
}

namespace
{

struct Collector
{
  Report & report;

  void record(RuleOutcome outcome, EvaluationTally & tally)
  {
    ++tally.applicable;
    if (auto * v = std::get_if<Violation>(&outcome)) {
      ++tally.violations;
      report.diagnostics.push_back(std::move(*v));
    } else if (auto * s = std::get_if<SkippedRule>(&outcome)) {
      ++tally.skipped;
      report.skipped.push_back(std::move(*s));
    } else {
      ++tally.clean;
    }
  }
};

void run_endpoint_stage(
  int stage, const ProfileSet & set, const EnvironmentModel & env, Collector & sink)
{
  for (const auto & [name, ep] : set.endpoints()) {
    auto & tally = sink.report.tallies[name];
    const auto ctx = EvalContext::for_endpoint(ep, env.snapshot_for(name));
    for (const auto & rule : rule_catalog()) {
      if (rule.stage == stage && rule.applies_to(ep.kind)) {
        sink.record(evaluate_rule(rule, ctx), tally);
      }
    }
  }
}

template<typename T>
auto order_key(const T & item)
{
  const auto & first = item.entities.empty() ? std::string{} : item.entities.front().profile_name;
  const auto & second = item.entities.size() > 1 ? item.entities[1].profile_name : std::string{};
  return std::make_tuple(item.stage, item.rule_id, first, item.topic_name.value_or(""), second);
}

}  // namespace

Report run_pipeline(const ProfileSet & set, const EnvironmentModel & env, const PairingPlan & plan)
{
  Report report;
  report.environment = env;
  report.plan = plan;
  report.parse_diagnostics = set.diagnostics();
  Collector sink{report};

  run_endpoint_stage(1, set, env, sink);

  for (const auto & pair : plan.pairs) {
    const auto * w = set.find(pair.writer);
    const auto * r = set.find(pair.reader);
    if (w == nullptr || r == nullptr) {
      throw LoadError("pairing plan references unknown profile " + pair.writer + ":" + pair.reader);
    }
    auto & tally = report.tallies[pair.writer + "|" + pair.reader];
    const auto ctx = EvalContext::for_pair(*w, *r, env.snapshot_for(pair.writer));
    for (const auto & rule : rule_catalog()) {
      if (rule.stage == 2) {
        sink.record(evaluate_rule(rule, ctx), tally);
      }
    }
  }

  run_endpoint_stage(3, set, env, sink);

  const auto by_key = [](const auto & a, const auto & b) {return order_key(a) < order_key(b);};
  std::stable_sort(report.diagnostics.begin(), report.diagnostics.end(), by_key);
  std::stable_sort(report.skipped.begin(), report.skipped.end(), by_key);

  for (const auto & v : report.diagnostics) {
    switch (report_level(v.severity)) {
      case ReportLevel::Error: ++report.summary.errors; break;
      case ReportLevel::Warning: ++report.summary.warnings; break;
      case ReportLevel::Info: ++report.summary.infos; break;
    }
  }
  report.summary.skipped = static_cast<int>(report.skipped.size());
  return report;
}

namespace
{

json duration_json(const std::optional<Duration> & d)
{
  if (!d) {
    return nullptr;
  }
  if (d->is_infinite()) {
    return "infinite";
  }
  return d->nanos();
}

json entities_json(const std::vector<EntityRef> & entities)
{
  json out = json::array();
  for (const auto & e : entities) {
    out.push_back(
      {{"profile", e.profile_name}, {"kind", to_string(e.kind)},
        {"file", e.location.document}, {"line", e.location.line}});
  }
  return out;
}

std::string_view origin_name(PairOrigin o)
{
  return o == PairOrigin::TopicIndex ? "topic" : "directive";
}

json report_json(const Report & report)
{
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["inputs"] = report.inputs;

  json env;
  env["rtt_ns"] = duration_json(report.environment.rtt);
  env["default_publish_period_ns"] = duration_json(report.environment.default_publish_period);
  env["publish_period_ns"] = json::object();
  for (const auto & [profile, d] : report.environment.per_profile_publish_period) {
    env["publish_period_ns"][profile] = d.nanos();
  }
  j["environment"] = env;

  j["assumptions"] = json::array(
  {
    {{"parameter", "reliability.max_blocking_time"},
      {"default_ns", kAssumedMaxBlockingTimeMs * 1'000'000},
      {"source", "tool-assumed"}}});

  json pairs = json::array();
  for (const auto & p : report.plan.pairs) {
    pairs.push_back({{"writer", p.writer}, {"reader", p.reader}, {"origin", origin_name(p.origin)}});
  }
  j["pairs"] = pairs;

  json parse = json::array();
  for (const auto & d : report.parse_diagnostics) {
    parse.push_back(
      {{"level", d.level == ParseLevel::Info ? "info" : "warning"},
        {"file", d.location.document}, {"line", d.location.line}, {"message", d.message}});
  }
  j["parse_diagnostics"] = parse;

  json diags = json::array();
  for (const auto & v : report.diagnostics) {
    const auto & rule = rule_by_id(v.rule_id);
    diags.push_back(
      {{"rule_id", v.rule_id}, {"identifier", rule.identifier}, {"stage", v.stage},
        {"severity", to_string(v.severity)}, {"level", to_string(report_level(v.severity))},
        {"entities", entities_json(v.entities)},
        {"topic", v.topic_name ? json(*v.topic_name) : json(nullptr)},
        {"message", v.message}, {"suggestion", v.suggestion}});
  }
  j["diagnostics"] = diags;

  json skipped = json::array();
  for (const auto & s : report.skipped) {
    const auto & rule = rule_by_id(s.rule_id);
    skipped.push_back(
      {{"rule_id", s.rule_id}, {"identifier", rule.identifier}, {"stage", s.stage},
        {"entities", entities_json(s.entities)},
        {"topic", s.topic_name ? json(*s.topic_name) : json(nullptr)},
        {"reason", to_string(s.reason)}});
  }
  j["skipped"] = skipped;

  j["summary"] = {
    {"errors", report.summary.errors}, {"warnings", report.summary.warnings},
    {"infos", report.summary.infos}, {"skipped", report.summary.skipped}};
  return j;
}

constexpr std::string_view kStageTitles[] = {
  "", "Stage 1: intra-entity consistency", "Stage 2: writer/reader RxO compatibility",
  "Stage 3: environment-dependent checks"};

std::string entity_text(const std::vector<EntityRef> & entities)
{
  std::string out;
  for (const auto & e : entities) {
    out += out.empty() ? "" : " -> ";
    out += e.profile_name + "@" + e.location.to_string();
  }
  return out;
}

std::string_view skip_text(SkipReason r)
{
  switch (r) {
    case SkipReason::MissingEnvRTT: return "no RTT in environment";
    case SkipReason::MissingEnvPP: return "no publish period in environment";
    case SkipReason::InfiniteLifespanExemption: return "lifespan is infinite";
  }
  return "";
}

std::string plural(int n, std::string_view word)
{
  return std::to_string(n) + " " + std::string{word} + (n == 1 ? "" : "s");
}

std::string human(const Report & report, RenderOptions opts)
{
  std::ostringstream os;
  const auto paint = [&](ReportLevel level) {
      const std::string word{to_string(level)};
      if (!opts.color) {
        return word;
      }
      const char * code = level == ReportLevel::Error ? "\033[31m" :
        level == ReportLevel::Warning ? "\033[33m" : "\033[36m";
      return code + word + "\033[0m";
    };

  for (const auto & d : report.parse_diagnostics) {
    os << "note: " << d.location.to_string() << ": " << d.message << "\n";
  }

  if (report.diagnostics.empty()) {
    os << "no violations found\n";
  }
  int current_stage = 0;
  for (const auto & v : report.diagnostics) {
    if (v.stage != current_stage) {
      current_stage = v.stage;
      os << kStageTitles[current_stage] << "\n";
    }
    const auto & rule = rule_by_id(v.rule_id);
    os << "  " << paint(report_level(v.severity)) << " [rule " << v.rule_id << " " <<
      rule.identifier << "] " << entity_text(v.entities) << " — " << v.message << "; " <<
      v.suggestion << "\n";
  }
  if (opts.show_skipped && !report.skipped.empty()) {
    os << "Skipped\n";
    for (const auto & s : report.skipped) {
      os << "  SKIP [rule " << s.rule_id << " " << rule_by_id(s.rule_id).identifier << "] " <<
        entity_text(s.entities) << " — " << skip_text(s.reason) << "\n";
    }
  }
  const auto & sm = report.summary;
  os << "summary: " << plural(sm.errors, "error") << ", " << plural(sm.warnings, "warning") <<
    ", " << plural(sm.infos, "info") << ", " << sm.skipped << " skipped\n";
  return os.str();
}

/// Display width in code points, enough for the catalog's UTF-8 arrows.
std::size_t width(std::string_view s)
{
  return static_cast<std::size_t>(
    std::count_if(s.begin(), s.end(), [](char c) {return (c & 0xC0) != 0x80;}));
}

std::string pad(std::string_view s, std::size_t w)
{
  std::string out{s};
  const auto n = width(s);
  if (n < w) {
    out.append(w - n, ' ');
  }
  return out;
}

std::string env_text(EnvNeeds e)
{
  if (e.rtt && e.pp) {
    return "RTT,PP";
  }
  return e.rtt ? "RTT" : (e.pp ? "PP" : "-");
}

}  // namespace

std::string render_report(const Report & report, OutputFormat format, RenderOptions opts)
{
  if (format == OutputFormat::Json) {
    return report_json(report).dump(2) + "\n";
  }
  return human(report, opts);
}

std::string render_catalog(OutputFormat format)
{
  if (format == OutputFormat::Json) {
    json rules = json::array();
    for (const auto & r : rule_catalog()) {
      json env = json::array();
      if (r.requires_env.rtt) {
        env.push_back("RTT");
      }
      if (r.requires_env.pp) {
        env.push_back("PP");
      }
      rules.push_back(
        {{"id", r.id}, {"identifier", r.identifier}, {"stage", r.stage},
          {"severity", to_string(r.severity)}, {"level", to_string(report_level(r.severity))},
          {"scope", to_string(r.scope)}, {"requires_env", env}, {"condition", r.condition}});
    }
    return rules.dump(2) + "\n";
  }
  std::ostringstream os;
  os << pad("ID", 4) << pad("Identifier", 18) << pad("Stage", 7) << pad("Dependency", 13) <<
    pad("Scope", 12) << pad("Env", 8) << "Condition\n";
  for (const auto & r : rule_catalog()) {
    os << pad(std::to_string(r.id), 4) << pad(r.identifier, 18) <<
      pad(std::to_string(r.stage), 7) << pad(to_string(r.severity), 13) <<
      pad(to_string(r.scope), 12) << pad(env_text(r.requires_env), 8) << r.condition << "\n";
  }
  return os.str();
}

}  // namespace qos_guard
