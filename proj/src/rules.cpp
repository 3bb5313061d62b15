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

// Rule catalog: one entry per dependency-violation rule, with the predicate
// that decides it. Notes on infinity sentinels sit next to the affected
// predicates.

#include <array>
#include <sstream>
#include <stdexcept>

#include "qos_guard/rule_engine.hpp"

namespace qos_guard
{

namespace
{

template<typename ... Ts>
std::string cat(const Ts &... parts)
{
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

std::string str(Duration d) {return d.to_string();}
std::string str(Count c) {return c.to_string();}

bool at_least_transient_local(const QosProfile & q)
{
  return kind_ge(q.durability.kind, DurabilityKind::TransientLocal);
}

// "x > 0" on a duration means finite and positive: an infinite deadline or
// purge delay means the mechanism is disabled.
bool enabled(Duration d) {return d.is_positive();}

std::string partitions(const QosProfile & q)
{
  std::string out = "[";
  for (std::size_t i = 0; i < q.partition.names.size(); ++i) {
    out += (i ? ", \"" : "\"") + q.partition.names[i] + "\"";
  }
  return out + "]";
}

// Stage 1: intra-entity consistency.

Verdict r01(const PredicateInput & in)
{
  const auto & q = *in.self;
  const auto limit = q.resource_limits.max_samples_per_instance;
  if (q.history.kind == HistoryKind::KeepLast && Count::of(q.history.depth) > limit) {
    return Verdict::violated(
      cat(
        "history.kind=keep_last with history.depth=", q.history.depth,
        " exceeds resource_limits.max_samples_per_instance=", str(limit)));
  }
  return Verdict::clean();
}

Verdict r02(const PredicateInput & in)
{
  const auto & rl = in.self->resource_limits;
  if (rl.max_samples < rl.max_samples_per_instance) {
    return Verdict::violated(
      cat(
        "resource_limits.max_samples=", str(rl.max_samples),
        " is below resource_limits.max_samples_per_instance=", str(rl.max_samples_per_instance)));
  }
  return Verdict::clean();
}

Verdict r03(const PredicateInput & in)
{
  const auto & q = *in.self;
  // An infinite deadline disables monitoring, so nothing can be missed.
  if (q.deadline.period.is_finite() && q.lifespan.duration < q.deadline.period) {
    return Verdict::violated(
      cat(
        "lifespan.duration=", str(q.lifespan.duration), " is shorter than deadline.period=",
        str(q.deadline.period)));
  }
  return Verdict::clean();
}

Verdict r04(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.destination_order.kind == DestinationOrderKind::BySourceTimestamp &&
    q.history.kind == HistoryKind::KeepLast && q.history.depth == 1)
  {
    return Verdict::violated(
      "destination_order.kind=by_source_timestamp with history.kind=keep_last and history.depth=1");
  }
  return Verdict::clean();
}

Verdict r05(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.destination_order.kind == DestinationOrderKind::BySourceTimestamp &&
    q.history.kind == HistoryKind::KeepAll &&
    q.resource_limits.max_samples_per_instance == Count::of(1))
  {
    return Verdict::violated(
      "destination_order.kind=by_source_timestamp with history.kind=keep_all and "
      "resource_limits.max_samples_per_instance=1");
  }
  return Verdict::clean();
}

std::string threshold_text(Duration rtt, Duration pp)
{
  return cat("(RTT=", str(rtt), " / PP=", str(pp), ") + 2");
}

Verdict r06(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (at_least_transient_local(q) && q.history.kind == HistoryKind::KeepLast &&
    below_rtt_threshold(q.history.depth, *in.rtt, *in.pp))
  {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind),
        " with history.kind=keep_last and history.depth=", q.history.depth, " < ",
        threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r07(const PredicateInput & in)
{
  const auto & q = *in.self;
  const auto limit = q.resource_limits.max_samples_per_instance;
  if (at_least_transient_local(q) && q.history.kind == HistoryKind::KeepAll &&
    limit.is_finite() && below_rtt_threshold(limit.value(), *in.rtt, *in.pp))
  {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind),
        " with history.kind=keep_all and resource_limits.max_samples_per_instance=", str(limit),
        " < ", threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r08(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (at_least_transient_local(q) && q.lifespan.duration < *in.rtt) {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind), " with lifespan.duration=",
        str(q.lifespan.duration), " shorter than RTT=", str(*in.rtt)));
  }
  return Verdict::clean();
}

// Rules 9 and 10 target finite lifespans that outlive the cache; an
// infinite lifespan means no expiry was intended and is exempted.
Verdict lifespan_vs_cache(
  const QosProfile & q, Count slots, Duration pp, std::string_view slot_field)
{
  if (q.lifespan.duration.is_infinite()) {
    return Verdict::exempt();
  }
  const auto window = checked_mul(pp, slots);
  if (!window || q.lifespan.duration <= *window) {
    return Verdict::clean();
  }
  return Verdict::violated(
    cat(
      "history.kind=", to_string(q.history.kind), " with lifespan.duration=",
      str(q.lifespan.duration), " > ", slot_field, "=", str(slots), " x PP=", str(pp), " (",
      str(*window), ")"));
}

Verdict r09(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.history.kind != HistoryKind::KeepLast) {
    return Verdict::clean();
  }
  return lifespan_vs_cache(q, Count::of(q.history.depth), *in.pp, "history.depth");
}

Verdict r10(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.history.kind != HistoryKind::KeepAll) {
    return Verdict::clean();
  }
  return lifespan_vs_cache(
    q, q.resource_limits.max_samples_per_instance, *in.pp,
    "resource_limits.max_samples_per_instance");
}

Verdict r11(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.ownership.kind == OwnershipKind::Exclusive && q.deadline.period.is_infinite()) {
    return Verdict::violated("ownership.kind=exclusive with deadline.period=infinite");
  }
  return Verdict::clean();
}

Verdict r12(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.ownership.kind == OwnershipKind::Exclusive && q.liveliness.lease_duration.is_infinite()) {
    return Verdict::violated("ownership.kind=exclusive with liveliness.lease_duration=infinite");
  }
  return Verdict::clean();
}

Verdict r13(const PredicateInput & in)
{
  const auto & q = *in.self;
  const auto delay = q.reader_data_lifecycle.autopurge_no_writer_samples_delay;
  if (enabled(delay) && q.liveliness.lease_duration.is_infinite()) {
    return Verdict::violated(
      cat(
        "reader_data_lifecycle.autopurge_no_writer_samples_delay=", str(delay),
        " with liveliness.lease_duration=infinite"));
  }
  return Verdict::clean();
}

Verdict r14(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (kind_ge(q.durability.kind, DurabilityKind::Transient) &&
    q.reader_data_lifecycle.autopurge_disposed_samples_delay == Duration{})
  {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind),
        " with reader_data_lifecycle.autopurge_disposed_samples_delay=0s"));
  }
  return Verdict::clean();
}

Verdict r15(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.durability.kind == DurabilityKind::Volatile &&
    !q.entity_factory.autoenable_created_entities)
  {
    return Verdict::violated(
      "durability.kind=volatile with entity_factory.autoenable_created_entities=false");
  }
  return Verdict::clean();
}

// "PART.names is not empty" means a non-default partition is configured;
// the resolved list always holds at least the default "".
Verdict r16(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (at_least_transient_local(q) && q.partition.has_explicit_names()) {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind), " with partition.names=",
        partitions(q)));
  }
  return Verdict::clean();
}

Verdict r17(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (enabled(q.deadline.period) && q.partition.has_explicit_names()) {
    return Verdict::violated(
      cat("deadline.period=", str(q.deadline.period), " with partition.names=", partitions(q)));
  }
  return Verdict::clean();
}

Verdict r18(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.liveliness.kind == LivelinessKind::ManualByTopic && q.partition.has_explicit_names()) {
    return Verdict::violated(
      cat("liveliness.kind=manual_by_topic with partition.names=", partitions(q)));
  }
  return Verdict::clean();
}

Verdict r19(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.writer_data_lifecycle.autodispose_unregistered_instances &&
    q.ownership.kind == OwnershipKind::Exclusive)
  {
    return Verdict::violated(
      "writer_data_lifecycle.autodispose_unregistered_instances=true with ownership.kind=exclusive");
  }
  return Verdict::clean();
}

// Stage 2: RxO compatibility of a writer/reader pair.

Verdict r20(const PredicateInput & in)
{
  for (const auto & w : in.writer->partition.names) {
    for (const auto & r : in.reader->partition.names) {
      if (w == r) {
        return Verdict::clean();
      }
    }
  }
  return Verdict::violated(
    cat(
      "writer partition.names=", partitions(*in.writer), " and reader partition.names=",
      partitions(*in.reader), " share no name"));
}

template<typename K>
Verdict kind_mismatch(K offered, K requested, std::string_view field)
{
  if (kind_ge(offered, requested)) {
    return Verdict::clean();
  }
  return Verdict::violated(
    cat(
      "writer offers ", field, "=", to_string(offered), " below reader request ", field, "=",
      to_string(requested)));
}

Verdict r21(const PredicateInput & in)
{
  return kind_mismatch(in.writer->reliability.kind, in.reader->reliability.kind, "reliability.kind");
}

Verdict r22(const PredicateInput & in)
{
  return kind_mismatch(in.writer->durability.kind, in.reader->durability.kind, "durability.kind");
}

Verdict r23(const PredicateInput & in)
{
  const auto w = in.writer->deadline.period;
  const auto r = in.reader->deadline.period;
  if (w > r) {
    return Verdict::violated(
      cat(
        "writer deadline.period=", str(w), " is longer than reader deadline.period=", str(r)));
  }
  return Verdict::clean();
}

Verdict r24(const PredicateInput & in)
{
  const auto & w = in.writer->liveliness;
  const auto & r = in.reader->liveliness;
  std::string msg;
  if (!kind_ge(w.kind, r.kind)) {
    msg = cat(
      "writer offers liveliness.kind=", to_string(w.kind), " below reader request liveliness.kind=",
      to_string(r.kind));
  }
  if (w.lease_duration > r.lease_duration) {
    msg += msg.empty() ? "" : "; ";
    msg += cat(
      "writer liveliness.lease_duration=", str(w.lease_duration),
      " is longer than reader liveliness.lease_duration=", str(r.lease_duration));
  }
  return msg.empty() ? Verdict::clean() : Verdict::violated(std::move(msg));
}

Verdict r25(const PredicateInput & in)
{
  const auto w = in.writer->ownership.kind;
  const auto r = in.reader->ownership.kind;
  if (w != r) {
    return Verdict::violated(
      cat("writer ownership.kind=", to_string(w), " differs from reader ownership.kind=", to_string(r)));
  }
  return Verdict::clean();
}

Verdict r26(const PredicateInput & in)
{
  return kind_mismatch(
    in.writer->destination_order.kind, in.reader->destination_order.kind, "destination_order.kind");
}

Verdict r27(const PredicateInput & in)
{
  const auto delay = in.reader->reader_data_lifecycle.autopurge_disposed_samples_delay;
  if (!in.writer->writer_data_lifecycle.autodispose_unregistered_instances && enabled(delay)) {
    return Verdict::violated(
      cat(
        "writer writer_data_lifecycle.autodispose_unregistered_instances=false with reader "
        "reader_data_lifecycle.autopurge_disposed_samples_delay=", str(delay)));
  }
  return Verdict::clean();
}

// Stage 3: environment-dependent dynamic checks.

Verdict r28(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (at_least_transient_local(q) && q.reliability.kind == ReliabilityKind::BestEffort) {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind), " with reliability.kind=best_effort"));
  }
  return Verdict::clean();
}

Verdict r29(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.reliability.kind == ReliabilityKind::Reliable && q.history.kind == HistoryKind::KeepLast &&
    below_rtt_threshold(q.history.depth, *in.rtt, *in.pp))
  {
    return Verdict::violated(
      cat(
        "reliability.kind=reliable with history.kind=keep_last and history.depth=",
        q.history.depth, " < ", threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r30(const PredicateInput & in)
{
  const auto & q = *in.self;
  const auto limit = q.resource_limits.max_samples_per_instance;
  if (q.reliability.kind == ReliabilityKind::Reliable && q.history.kind == HistoryKind::KeepAll &&
    limit.is_finite() && below_rtt_threshold(limit.value(), *in.rtt, *in.pp))
  {
    return Verdict::violated(
      cat(
        "reliability.kind=reliable with history.kind=keep_all and "
        "resource_limits.max_samples_per_instance=", str(limit), " < ",
        threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r31(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.reliability.kind == ReliabilityKind::Reliable && q.lifespan.duration < *in.rtt) {
    return Verdict::violated(
      cat(
        "reliability.kind=reliable with lifespan.duration=", str(q.lifespan.duration),
        " shorter than RTT=", str(*in.rtt)));
  }
  return Verdict::clean();
}

Verdict r32(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.ownership.kind == OwnershipKind::Exclusive &&
    q.reliability.kind == ReliabilityKind::BestEffort)
  {
    return Verdict::violated("ownership.kind=exclusive with reliability.kind=best_effort");
  }
  return Verdict::clean();
}

Verdict r33(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (enabled(q.deadline.period) && q.reliability.kind == ReliabilityKind::BestEffort) {
    return Verdict::violated(
      cat("deadline.period=", str(q.deadline.period), " with reliability.kind=best_effort"));
  }
  return Verdict::clean();
}

Verdict r34(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (enabled(q.deadline.period) && q.liveliness.lease_duration < q.deadline.period) {
    return Verdict::violated(
      cat(
        "liveliness.lease_duration=", str(q.liveliness.lease_duration),
        " is shorter than deadline.period=", str(q.deadline.period)));
  }
  return Verdict::clean();
}

Verdict r35(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.liveliness.kind == LivelinessKind::ManualByTopic &&
    q.reliability.kind == ReliabilityKind::BestEffort)
  {
    return Verdict::violated("liveliness.kind=manual_by_topic with reliability.kind=best_effort");
  }
  return Verdict::clean();
}

// value < 2 x PP; a doubled PP beyond 64-bit nanoseconds exceeds every
// finite value.
bool shorter_than_two_periods(Duration value, Duration pp)
{
  const auto twice = checked_mul(pp, std::uint64_t{2});
  return twice ? value < *twice : value.is_finite();
}

Verdict r36(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.ownership.kind == OwnershipKind::Exclusive &&
    shorter_than_two_periods(q.deadline.period, *in.pp))
  {
    return Verdict::violated(
      cat(
        "ownership.kind=exclusive with deadline.period=", str(q.deadline.period),
        " < 2 x PP=", str(*in.pp)));
  }
  return Verdict::clean();
}

Verdict r37(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.ownership.kind == OwnershipKind::Exclusive &&
    shorter_than_two_periods(q.liveliness.lease_duration, *in.pp))
  {
    return Verdict::violated(
      cat(
        "ownership.kind=exclusive with liveliness.lease_duration=",
        str(q.liveliness.lease_duration), " < 2 x PP=", str(*in.pp)));
  }
  return Verdict::clean();
}

Verdict r38(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (q.writer_data_lifecycle.autodispose_unregistered_instances &&
    q.reliability.kind == ReliabilityKind::BestEffort)
  {
    return Verdict::violated(
      "writer_data_lifecycle.autodispose_unregistered_instances=true with "
      "reliability.kind=best_effort");
  }
  return Verdict::clean();
}

Verdict r39(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (at_least_transient_local(q) && q.history.kind == HistoryKind::KeepLast &&
    above_rtt_threshold(q.history.depth, *in.rtt, *in.pp))
  {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind),
        " with history.kind=keep_last and history.depth=", q.history.depth, " > ",
        threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r40(const PredicateInput & in)
{
  const auto & q = *in.self;
  const auto limit = q.resource_limits.max_samples_per_instance;
  if (at_least_transient_local(q) && q.history.kind == HistoryKind::KeepAll &&
    (limit.is_unlimited() || above_rtt_threshold(limit.value(), *in.rtt, *in.pp)))
  {
    return Verdict::violated(
      cat(
        "durability.kind=", to_string(q.durability.kind),
        " with history.kind=keep_all and resource_limits.max_samples_per_instance=", str(limit),
        " > ", threshold_text(*in.rtt, *in.pp)));
  }
  return Verdict::clean();
}

Verdict r41(const PredicateInput & in)
{
  const auto & q = *in.self;
  if (enabled(q.deadline.period) && at_least_transient_local(q)) {
    return Verdict::violated(
      cat(
        "deadline.period=", str(q.deadline.period), " with durability.kind=",
        to_string(q.durability.kind)));
  }
  return Verdict::clean();
}

using S = Severity;
using Sc = RuleScope;
constexpr EnvNeeds kNone{};
constexpr EnvNeeds kRtt{true, false};
constexpr EnvNeeds kPp{false, true};
constexpr EnvNeeds kBoth{true, true};

const std::array<Rule, 41> kRules{{
  {1, "HIST↔RESLIM", 1, S::Critical, Sc::Either, kNone,
    "HIST.kind = keep_last ∧ HIST.depth > RESLIM.max_samples_per_instance", r01},
  {2, "RESLIM↔RESLIM", 1, S::Critical, Sc::Either, kNone,
    "RESLIM.max_samples < RESLIM.max_samples_per_instance", r02},
  {3, "LFSPAN→DEADLN", 1, S::Critical, Sc::Either, kNone,
    "LFSPAN.duration < DEADLN.period", r03},
  {4, "HIST→DESTORD", 1, S::Conditional, Sc::DataReader, kNone,
    "DESTORD.kind = by_source_timestamp ∧ HIST.kind = keep_last ∧ HIST.depth = 1", r04},
  {5, "RESLIM→DESTORD", 1, S::Conditional, Sc::DataReader, kNone,
    "DESTORD.kind = by_source_timestamp ∧ HIST.kind = keep_all ∧ "
    "RESLIM.max_samples_per_instance = 1", r05},
  {6, "HIST→DURABL", 1, S::Conditional, Sc::DataWriter, kBoth,
    "DURABL.kind ≥ transient_local ∧ HIST.kind = keep_last ∧ HIST.depth < (RTT / PP) + 2", r06},
  {7, "RESLIM→DURABL", 1, S::Conditional, Sc::DataWriter, kBoth,
    "DURABL.kind ≥ transient_local ∧ HIST.kind = keep_all ∧ "
    "RESLIM.max_samples_per_instance < (RTT / PP) + 2", r07},
  {8, "LFSPAN→DURABL", 1, S::Conditional, Sc::DataWriter, kRtt,
    "DURABL.kind ≥ transient_local ∧ LFSPAN.duration < RTT", r08},
  {9, "HIST↔LFSPAN", 1, S::Conditional, Sc::DataWriter, kPp,
    "HIST.kind = keep_last ∧ LFSPAN.duration > HIST.depth × PP", r09},
  {10, "RESLIM↔LFSPAN", 1, S::Conditional, Sc::DataWriter, kPp,
    "HIST.kind = keep_all ∧ LFSPAN.duration > RESLIM.max_samples_per_instance × PP", r10},
  {11, "DEADLN→OWNST", 1, S::Conditional, Sc::DataReader, kNone,
    "OWNST.kind = exclusive ∧ DEADLN.period = ∞", r11},
  {12, "LIVENS→OWNST", 1, S::Conditional, Sc::DataReader, kNone,
    "OWNST.kind = exclusive ∧ LIVENS.lease_duration = ∞", r12},
  {13, "LIVENS→RDLIFE", 1, S::Conditional, Sc::DataReader, kNone,
    "RDLIFE.autopurge_no_writer_samples_delay > 0 ∧ LIVENS.lease_duration = ∞", r13},
  {14, "RDLIFE→DURABL", 1, S::Incidental, Sc::DataReader, kNone,
    "DURABL.kind ≥ transient ∧ RDLIFE.autopurge_disposed_samples_delay = 0", r14},
  {15, "ENTFAC→DURABL", 1, S::Incidental, Sc::Either, kNone,
    "DURABL.kind = volatile ∧ ENTFAC.autoenable_created_entities = false", r15},
  {16, "PART→DURABL", 1, S::Incidental, Sc::Either, kNone,
    "DURABL.kind ≥ transient_local ∧ PART.names ≠ ∅", r16},
  {17, "PART→DEADLN", 1, S::Incidental, Sc::Either, kNone,
    "DEADLN.period > 0 ∧ PART.names ≠ ∅", r17},
  {18, "PART→LIVENS", 1, S::Incidental, Sc::DataReader, kNone,
    "LIVENS.kind = manual_by_topic ∧ PART.names ≠ ∅", r18},
  {19, "OWNST→WDLIFE", 1, S::Incidental, Sc::DataWriter, kNone,
    "WDLIFE.autodispose_unregistered_instances = true ∧ OWNST.kind = exclusive", r19},
  {20, "PART↔PART", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.PART.names ∩ DataReader.PART.names = ∅", r20},
  {21, "RELIAB↔RELIAB", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.RELIAB.kind < DataReader.RELIAB.kind", r21},
  {22, "DURABL↔DURABL", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.DURABL.kind < DataReader.DURABL.kind", r22},
  {23, "DEADLN↔DEADLN", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.DEADLN.period > DataReader.DEADLN.period", r23},
  {24, "LIVENS↔LIVENS", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.LIVENS.kind < DataReader.LIVENS.kind ∨ "
    "DataWriter.LIVENS.lease_duration > DataReader.LIVENS.lease_duration", r24},
  {25, "OWNST↔OWNST", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.OWNST.kind ≠ DataReader.OWNST.kind", r25},
  {26, "DESTORD↔DESTORD", 2, S::Critical, Sc::Pair, kNone,
    "DataWriter.DESTORD.kind < DataReader.DESTORD.kind", r26},
  {27, "WDLIFE→RDLIFE", 2, S::Conditional, Sc::Pair, kNone,
    "WDLIFE.autodispose_unregistered_instances = false ∧ "
    "RDLIFE.autopurge_disposed_samples_delay > 0", r27},
  {28, "RELIAB→DURABL", 3, S::Critical, Sc::Either, kNone,
    "DURABL.kind ≥ transient_local ∧ RELIAB.kind = best_effort", r28},
  {29, "HIST→RELIAB", 3, S::Conditional, Sc::DataWriter, kBoth,
    "RELIAB.kind = reliable ∧ HIST.kind = keep_last ∧ HIST.depth < (RTT / PP) + 2", r29},
  {30, "RESLIM→RELIAB", 3, S::Conditional, Sc::DataWriter, kBoth,
    "RELIAB.kind = reliable ∧ HIST.kind = keep_all ∧ "
    "RESLIM.max_samples_per_instance < (RTT / PP) + 2", r30},
  {31, "LFSPAN→RELIAB", 3, S::Conditional, Sc::DataWriter, kRtt,
    "RELIAB.kind = reliable ∧ LFSPAN.duration < RTT", r31},
  {32, "RELIAB→OWNST", 3, S::Conditional, Sc::Either, kNone,
    "OWNST.kind = exclusive ∧ RELIAB.kind = best_effort", r32},
  {33, "RELIAB→DEADLN", 3, S::Conditional, Sc::Either, kNone,
    "DEADLN.period > 0 ∧ RELIAB.kind = best_effort", r33},
  {34, "LIVENS→DEADLN", 3, S::Conditional, Sc::DataReader, kNone,
    "DEADLN.period > 0 ∧ LIVENS.lease_duration < DEADLN.period", r34},
  {35, "RELIAB→LIVENS", 3, S::Conditional, Sc::Either, kNone,
    "LIVENS.kind = manual_by_topic ∧ RELIAB.kind = best_effort", r35},
  {36, "DEADLN→OWNST", 3, S::Conditional, Sc::DataReader, kPp,
    "OWNST.kind = exclusive ∧ DEADLN.period < 2 × PP", r36},
  {37, "LIVENS→OWNST", 3, S::Conditional, Sc::DataReader, kPp,
    "OWNST.kind = exclusive ∧ LIVENS.lease_duration < 2 × PP", r37},
  {38, "RELIAB→WDLIFE", 3, S::Conditional, Sc::DataWriter, kNone,
    "WDLIFE.autodispose_unregistered_instances = true ∧ RELIAB.kind = best_effort", r38},
  {39, "HIST→DURABL", 3, S::Incidental, Sc::DataWriter, kBoth,
    "DURABL.kind ≥ transient_local ∧ HIST.kind = keep_last ∧ HIST.depth > (RTT / PP) + 2", r39},
  {40, "RESLIM→DURABL", 3, S::Incidental, Sc::DataWriter, kBoth,
    "DURABL.kind ≥ transient_local ∧ HIST.kind = keep_all ∧ "
    "RESLIM.max_samples_per_instance > (RTT / PP) + 2", r40},
  {41, "DURABL→DEADLN", 3, S::Incidental, Sc::Either, kNone,
    "DEADLN.period > 0 ∧ DURABL.kind ≥ transient_local", r41},
}};

}  // namespace

std::span<const Rule> rule_catalog()
{
  return kRules;
}

const Rule & rule_by_id(int id)
{
  if (id < 1 || id > static_cast<int>(kRules.size())) {
    throw std::out_of_range("no rule with id " + std::to_string(id));
  }
  return kRules[static_cast<std::size_t>(id - 1)];
}

}  // namespace qos_guard
