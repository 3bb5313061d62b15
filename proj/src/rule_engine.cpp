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

#include "qos_guard/rule_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace qos_guard
{

namespace
{

__extension__ using Wide = __int128;

Wide ns(Duration d) {return static_cast<Wide>(d.nanos());}

void require_positive(Duration rtt, Duration pp)
{
  if (!rtt.is_finite() || !pp.is_positive()) {
    throw std::invalid_argument("RTT must be finite and PP finite and positive");
  }
}

EntityRef ref(const EndpointProfile & ep)
{
  return {ep.profile_name, ep.kind, ep.location};
}

void check_scope(const Rule & rule, const EvalContext & ctx)
{
  if (ctx.writer != nullptr && !ctx.writer->is_writer()) {
    throw std::logic_error("evaluation context writer slot holds a DataReader");
  }
  if (ctx.reader != nullptr && !ctx.reader->is_reader()) {
    throw std::logic_error("evaluation context reader slot holds a DataWriter");
  }
  const bool w = ctx.writer != nullptr;
  const bool r = ctx.reader != nullptr;
  bool ok = false;
  switch (rule.scope) {
    case RuleScope::Pair: ok = w && r; break;
    case RuleScope::DataWriter: ok = w && !r; break;
    case RuleScope::DataReader: ok = r && !w; break;
    case RuleScope::Either: ok = w != r; break;
  }
  if (!ok) {
    throw std::logic_error(
      "rule " + std::to_string(rule.id) + " has scope " + std::string{to_string(rule.scope)} +
      " but the evaluation context does not match it");
  }
}

}  // namespace

bool below_rtt_threshold(std::int64_t value, Duration rtt, Duration pp)
{
  require_positive(rtt, pp);
  // value < rtt/pp + 2  <=>  value * pp < rtt + 2 * pp   (pp > 0)
  return static_cast<Wide>(value) * ns(pp) < ns(rtt) + 2 * ns(pp);
}

bool above_rtt_threshold(std::int64_t value, Duration rtt, Duration pp)
{
  require_positive(rtt, pp);
  return static_cast<Wide>(value) * ns(pp) > ns(rtt) + 2 * ns(pp);
}

std::int64_t min_depth_for(Duration rtt, Duration pp)
{
  require_positive(rtt, pp);
  return static_cast<std::int64_t>((ns(rtt) + ns(pp) - 1) / ns(pp) + 2);
}

std::int64_t max_depth_for(Duration rtt, Duration pp)
{
  require_positive(rtt, pp);
  return static_cast<std::int64_t>(ns(rtt) / ns(pp) + 2);
}

bool Rule::applies_to(EndpointKind kind) const
{
  switch (scope) {
    case RuleScope::Either: return true;
    case RuleScope::DataWriter: return kind == EndpointKind::DataWriter;
    case RuleScope::DataReader: return kind == EndpointKind::DataReader;
    case RuleScope::Pair: return false;
  }
  return false;
}

EvalContext EvalContext::for_endpoint(const EndpointProfile & ep, EnvSnapshot env)
{
  EvalContext ctx;
  (ep.is_writer() ? ctx.writer : ctx.reader) = &ep;
  ctx.env = env;
  return ctx;
}

EvalContext EvalContext::for_pair(
  const EndpointProfile & writer, const EndpointProfile & reader, EnvSnapshot env)
{
  return {&writer, &reader, env};
}

RuleOutcome evaluate_rule(const Rule & rule, const EvalContext & ctx)
{
  check_scope(rule, ctx);

  std::vector<EntityRef> entities;
  std::optional<std::string> topic;
  if (ctx.writer != nullptr) {
    entities.push_back(ref(*ctx.writer));
    topic = ctx.writer->topic_name;
  }
  if (ctx.reader != nullptr) {
    entities.push_back(ref(*ctx.reader));
    if (!topic) {
      topic = ctx.reader->topic_name;
    }
  }

  const auto skip = [&](SkipReason reason) -> RuleOutcome {
      return SkippedRule{rule.id, rule.stage, std::move(entities), std::move(topic), reason};
    };
  if (rule.requires_env.rtt && !ctx.env.rtt) {
    return skip(SkipReason::MissingEnvRTT);
  }
  if (rule.requires_env.pp && !ctx.env.publish_period) {
    return skip(SkipReason::MissingEnvPP);
  }

  PredicateInput in;
  if (rule.scope == RuleScope::Pair) {
    in.writer = &ctx.writer->qos;
    in.reader = &ctx.reader->qos;
  } else {
    in.self = ctx.writer != nullptr ? &ctx.writer->qos : &ctx.reader->qos;
  }
  if (rule.requires_env.rtt) {
    in.rtt = ctx.env.rtt;
  }
  if (rule.requires_env.pp) {
    in.pp = ctx.env.publish_period;
  }

  auto verdict = rule.predicate(in);
  switch (verdict.kind) {
    case Verdict::Kind::Clean:
      return Clean{rule.id};
    case Verdict::Kind::Exempt:
      return skip(SkipReason::InfiniteLifespanExemption);
    case Verdict::Kind::Violated:
      break;
  }

  Violation v;
  v.rule_id = rule.id;
  v.stage = rule.stage;
  v.severity = rule.severity;
  v.entities = std::move(entities);
  v.topic_name = std::move(topic);
  v.message = std::move(verdict.message);
  if (ctx.writer != nullptr) {
    v.facts.writer = ctx.writer->qos;
  }
  if (ctx.reader != nullptr) {
    v.facts.reader = ctx.reader->qos;
  }
  v.facts.env.rtt = in.rtt;
  v.facts.env.publish_period = in.pp;
  v.suggestion = suggest_fix(v);
  return v;
}

std::vector<RuleOutcome> evaluate_pair_rules(
  const EndpointProfile & writer, const EndpointProfile & reader)
{
  std::vector<RuleOutcome> out;
  const auto ctx = EvalContext::for_pair(writer, reader);
  for (const auto & rule : rule_catalog()) {
    if (rule.scope == RuleScope::Pair) {
      out.push_back(evaluate_rule(rule, ctx));
    }
  }
  return out;
}

std::string_view to_string(Severity s)
{
  switch (s) {
    case Severity::Critical: return "Critical";
    case Severity::Conditional: return "Conditional";
    case Severity::Incidental: return "Incidental";
  }
  return "?";
}

std::string_view to_string(ReportLevel l)
{
  switch (l) {
    case ReportLevel::Error: return "ERROR";
    case ReportLevel::Warning: return "WARNING";
    case ReportLevel::Info: return "INFO";
  }
  return "?";
}

std::string_view to_string(RuleScope s)
{
  switch (s) {
    case RuleScope::DataWriter: return "DataWriter";
    case RuleScope::DataReader: return "DataReader";
    case RuleScope::Either: return "-";
    case RuleScope::Pair: return "Pair";
  }
  return "?";
}

std::string_view to_string(SkipReason r)
{
  switch (r) {
    case SkipReason::MissingEnvRTT: return "MissingEnvRTT";
    case SkipReason::MissingEnvPP: return "MissingEnvPP";
    case SkipReason::InfiniteLifespanExemption: return "InfiniteLifespanExemption";
  }
  return "?";
}

}  // namespace qos_guard
