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

#ifndef QOS_GUARD__RULE_ENGINE_HPP_
#define QOS_GUARD__RULE_ENGINE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qos_guard/endpoint.hpp"

namespace qos_guard
{

enum class Severity { Critical, Conditional, Incidental };
enum class ReportLevel { Error, Warning, Info };

/// Critical -> Error, Conditional -> Warning, Incidental -> Info.
constexpr ReportLevel report_level(Severity s)
{
  switch (s) {
    case Severity::Critical: return ReportLevel::Error;
    case Severity::Conditional: return ReportLevel::Warning;
    case Severity::Incidental: return ReportLevel::Info;
  }
  return ReportLevel::Info;
}

enum class RuleScope { DataWriter, DataReader, Either, Pair };

struct EnvNeeds
{
  bool rtt = false;
  bool pp = false;
  bool operator==(const EnvNeeds &) const = default;
};

/// RTT and publish period as seen by one evaluation.
struct EnvSnapshot
{
  std::optional<Duration> rtt;
  std::optional<Duration> publish_period;
  bool operator==(const EnvSnapshot &) const = default;
};

struct EvalContext
{
  const EndpointProfile * writer = nullptr;
  const EndpointProfile * reader = nullptr;
  EnvSnapshot env;

  static EvalContext for_endpoint(const EndpointProfile & ep, EnvSnapshot env = {});
  static EvalContext for_pair(
    const EndpointProfile & writer, const EndpointProfile & reader, EnvSnapshot env = {});
};

struct EntityRef
{
  std::string profile_name;
  EndpointKind kind = EndpointKind::DataWriter;
  SourceLocation location;
  bool operator==(const EntityRef &) const = default;
};

/// Values a predicate looked at, kept so fix suggestions can compute
/// concrete bounds after the fact.
struct ViolationFacts
{
  std::optional<QosProfile> writer;
  std::optional<QosProfile> reader;
  EnvSnapshot env;
  bool operator==(const ViolationFacts &) const = default;
};

struct Violation
{
  int rule_id = 0;
  int stage = 0;
  Severity severity = Severity::Critical;
  std::vector<EntityRef> entities;
  std::optional<std::string> topic_name;
  std::string message;
  std::string suggestion;
  ViolationFacts facts;
  bool operator==(const Violation &) const = default;
};

enum class SkipReason { MissingEnvRTT, MissingEnvPP, InfiniteLifespanExemption };

struct SkippedRule
{
  int rule_id = 0;
  int stage = 0;
  std::vector<EntityRef> entities;
  std::optional<std::string> topic_name;
  SkipReason reason = SkipReason::MissingEnvRTT;
  bool operator==(const SkippedRule &) const = default;
};

struct Clean
{
  int rule_id = 0;
  bool operator==(const Clean &) const = default;
};

using RuleOutcome = std::variant<Violation, Clean, SkippedRule>;

/// Internal verdict of a predicate before entities are attached.
struct Verdict
{
  enum class Kind { Clean, Violated, Exempt } kind = Kind::Clean;
  std::string message;

  static Verdict clean() {return {};}
  static Verdict violated(std::string msg) {return {Kind::Violated, std::move(msg)};}
  static Verdict exempt() {return {Kind::Exempt, {}};}
};

/// Predicate inputs after scope and environment checks. Single-endpoint
/// rules see `self`; pair rules see `writer` and `reader`. Env values are
/// present whenever the rule declared them in requires_env.
struct PredicateInput
{
  const QosProfile * self = nullptr;
  const QosProfile * writer = nullptr;
  const QosProfile * reader = nullptr;
  std::optional<Duration> rtt;
  std::optional<Duration> pp;
};

using Predicate = Verdict (*)(const PredicateInput &);

struct Rule
{
  int id = 0;
  std::string_view identifier;
  int stage = 0;
  Severity severity = Severity::Critical;
  RuleScope scope = RuleScope::Either;
  EnvNeeds requires_env;
  std::string_view condition;
  Predicate predicate = nullptr;

  bool applies_to(EndpointKind kind) const;
};

/// All 41 rules in id order.
std::span<const Rule> rule_catalog();

/// Throws std::out_of_range for ids outside 1..41.
const Rule & rule_by_id(int id);

/// Evaluate one rule. Throws std::logic_error when the context does not
/// match the rule's scope (a caller bug, not a diagnostic).
RuleOutcome evaluate_rule(const Rule & rule, const EvalContext & ctx);

/// Rules 20-27 over one writer/reader pair.
std::vector<RuleOutcome> evaluate_pair_rules(
  const EndpointProfile & writer, const EndpointProfile & reader);

/// Rule-specific corrective suggestion with concrete bounds where the
/// violating values allow it.
std::string suggest_fix(const Violation & v);

/// Exact test of `value < rtt / pp + 2` by cross-multiplication.
bool below_rtt_threshold(std::int64_t value, Duration rtt, Duration pp);
/// Exact test of `value > rtt / pp + 2`.
bool above_rtt_threshold(std::int64_t value, Duration rtt, Duration pp);
/// Smallest integer n with n >= rtt / pp + 2, i.e. ceil(rtt / pp) + 2.
std::int64_t min_depth_for(Duration rtt, Duration pp);
/// Largest integer n with n <= rtt / pp + 2, i.e. floor(rtt / pp) + 2.
std::int64_t max_depth_for(Duration rtt, Duration pp);

std::string_view to_string(Severity s);
std::string_view to_string(ReportLevel l);
std::string_view to_string(RuleScope s);
std::string_view to_string(SkipReason r);

}  // namespace qos_guard

#endif  // QOS_GUARD__RULE_ENGINE_HPP_
