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

#include "qos_guard/qos.hpp"

#include <algorithm>

#include "qos_guard/endpoint.hpp"

namespace qos_guard
{

bool PartitionPolicy::has_explicit_names() const
{
  return std::any_of(names.begin(), names.end(), [](const auto & n) {return !n.empty();});
}

std::string SourceLocation::to_string() const
{
  if (document.empty()) {
    return "<memory>";
  }
  return line > 0 ? document + ":" + std::to_string(line) : document;
}

namespace
{
template<typename T>
void overlay(std::optional<T> & dst, const std::optional<T> & src)
{
  if (src) {
    dst = src;
  }
}
}  // namespace

PartialQos merge(const PartialQos & base, const PartialQos & top)
{
  PartialQos r = base;
  overlay(r.autoenable_created_entities, top.autoenable_created_entities);
  overlay(r.partition_names, top.partition_names);
  overlay(r.user_data, top.user_data);
  overlay(r.group_data, top.group_data);
  overlay(r.topic_data, top.topic_data);
  overlay(r.reliability_kind, top.reliability_kind);
  overlay(r.max_blocking_time, top.max_blocking_time);
  overlay(r.durability_kind, top.durability_kind);
  overlay(r.deadline_period, top.deadline_period);
  overlay(r.liveliness_kind, top.liveliness_kind);
  overlay(r.lease_duration, top.lease_duration);
  overlay(r.history_kind, top.history_kind);
  overlay(r.history_depth, top.history_depth);
  overlay(r.max_samples, top.max_samples);
  overlay(r.max_instances, top.max_instances);
  overlay(r.max_samples_per_instance, top.max_samples_per_instance);
  overlay(r.lifespan, top.lifespan);
  overlay(r.ownership_kind, top.ownership_kind);
  overlay(r.ownership_strength, top.ownership_strength);
  overlay(r.destination_order_kind, top.destination_order_kind);
  overlay(r.autodispose_unregistered_instances, top.autodispose_unregistered_instances);
  overlay(r.autopurge_disposed_samples_delay, top.autopurge_disposed_samples_delay);
  overlay(r.autopurge_no_writer_samples_delay, top.autopurge_no_writer_samples_delay);
  return r;
}

PartialQos to_partial(const QosProfile & q)
{
  PartialQos p;
  p.autoenable_created_entities = q.entity_factory.autoenable_created_entities;
  p.partition_names = q.partition.names;
  p.user_data = q.user_data.value;
  p.group_data = q.group_data.value;
  p.topic_data = q.topic_data.value;
  p.reliability_kind = q.reliability.kind;
  p.max_blocking_time = q.reliability.max_blocking_time;
  p.durability_kind = q.durability.kind;
  p.deadline_period = q.deadline.period;
  p.liveliness_kind = q.liveliness.kind;
  p.lease_duration = q.liveliness.lease_duration;
  p.history_kind = q.history.kind;
  p.history_depth = q.history.depth;
  p.max_samples = q.resource_limits.max_samples;
  p.max_instances = q.resource_limits.max_instances;
  p.max_samples_per_instance = q.resource_limits.max_samples_per_instance;
  p.lifespan = q.lifespan.duration;
  p.ownership_kind = q.ownership.kind;
  p.ownership_strength = q.ownership_strength.value;
  p.destination_order_kind = q.destination_order.kind;
  p.autodispose_unregistered_instances = q.writer_data_lifecycle.autodispose_unregistered_instances;
  p.autopurge_disposed_samples_delay = q.reader_data_lifecycle.autopurge_disposed_samples_delay;
  p.autopurge_no_writer_samples_delay = q.reader_data_lifecycle.autopurge_no_writer_samples_delay;
  return p;
}

QosProfile resolve_defaults(const PartialQos & p, EndpointKind kind)
{
  QosProfile q;
  q.entity_factory.autoenable_created_entities = p.autoenable_created_entities.value_or(true);
  if (p.partition_names && !p.partition_names->empty()) {
    q.partition.names = *p.partition_names;
  } else {
    q.partition.names = {""};
  }
  q.user_data.value = p.user_data.value_or(Bytes{});
  q.group_data.value = p.group_data.value_or(Bytes{});
  q.topic_data.value = p.topic_data.value_or(Bytes{});
  q.reliability.kind = p.reliability_kind.value_or(
    kind == EndpointKind::DataWriter ? ReliabilityKind::Reliable : ReliabilityKind::BestEffort);
  q.reliability.max_blocking_time =
    p.max_blocking_time.value_or(Duration::from_millis(kAssumedMaxBlockingTimeMs));
  q.durability.kind = p.durability_kind.value_or(DurabilityKind::Volatile);
  q.deadline.period = p.deadline_period.value_or(Duration::infinite());
  q.liveliness.kind = p.liveliness_kind.value_or(LivelinessKind::Automatic);
  q.liveliness.lease_duration = p.lease_duration.value_or(Duration::infinite());
  q.history.kind = p.history_kind.value_or(HistoryKind::KeepLast);
  q.history.depth = p.history_depth.value_or(1);
  q.resource_limits.max_samples = p.max_samples.value_or(Count::unlimited());
  q.resource_limits.max_instances = p.max_instances.value_or(Count::unlimited());
  q.resource_limits.max_samples_per_instance =
    p.max_samples_per_instance.value_or(Count::unlimited());
  q.lifespan.duration = p.lifespan.value_or(Duration::infinite());
  q.ownership.kind = p.ownership_kind.value_or(OwnershipKind::Shared);
  q.ownership_strength.value = p.ownership_strength.value_or(0);
  q.destination_order.kind =
    p.destination_order_kind.value_or(DestinationOrderKind::ByReceptionTimestamp);
  q.writer_data_lifecycle.autodispose_unregistered_instances =
    p.autodispose_unregistered_instances.value_or(true);
  q.reader_data_lifecycle.autopurge_disposed_samples_delay =
    p.autopurge_disposed_samples_delay.value_or(Duration::infinite());
  q.reader_data_lifecycle.autopurge_no_writer_samples_delay =
    p.autopurge_no_writer_samples_delay.value_or(Duration::infinite());
  return q;
}

std::string_view to_string(ReliabilityKind k)
{
  return k == ReliabilityKind::Reliable ? "reliable" : "best_effort";
}

std::string_view to_string(DurabilityKind k)
{
  switch (k) {
    case DurabilityKind::Volatile: return "volatile";
    case DurabilityKind::TransientLocal: return "transient_local";
    case DurabilityKind::Transient: return "transient";
    case DurabilityKind::Persistent: return "persistent";
  }
  return "?";
}

std::string_view to_string(LivelinessKind k)
{
  switch (k) {
    case LivelinessKind::Automatic: return "automatic";
    case LivelinessKind::ManualByParticipant: return "manual_by_participant";
    case LivelinessKind::ManualByTopic: return "manual_by_topic";
  }
  return "?";
}

std::string_view to_string(DestinationOrderKind k)
{
  return k == DestinationOrderKind::BySourceTimestamp ? "by_source_timestamp" :
         "by_reception_timestamp";
}

std::string_view to_string(OwnershipKind k)
{
  return k == OwnershipKind::Exclusive ? "exclusive" : "shared";
}

std::string_view to_string(HistoryKind k)
{
  return k == HistoryKind::KeepAll ? "keep_all" : "keep_last";
}

std::string_view to_string(EndpointKind k)
{
  return k == EndpointKind::DataWriter ? "DataWriter" : "DataReader";
}

}  // namespace qos_guard
