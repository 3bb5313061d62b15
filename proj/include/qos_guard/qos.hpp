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

#ifndef QOS_GUARD__QOS_HPP_
#define QOS_GUARD__QOS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "qos_guard/duration.hpp"

namespace qos_guard
{

// Ordered kinds. Enumerator order is the offered/requested order used by
// RxO matching; do not reorder.
enum class ReliabilityKind { BestEffort, Reliable };
enum class DurabilityKind { Volatile, TransientLocal, Transient, Persistent };
enum class LivelinessKind { Automatic, ManualByParticipant, ManualByTopic };
enum class DestinationOrderKind { ByReceptionTimestamp, BySourceTimestamp };

// Unordered kinds: equality only.
enum class OwnershipKind { Shared, Exclusive };
enum class HistoryKind { KeepLast, KeepAll };

enum class EndpointKind { DataWriter, DataReader };

template<typename T>
concept OrderedKind =
  std::is_same_v<T, ReliabilityKind> || std::is_same_v<T, DurabilityKind> ||
  std::is_same_v<T, LivelinessKind> || std::is_same_v<T, DestinationOrderKind>;

/// True iff offered >= requested in the kind's order.
template<OrderedKind K>
constexpr bool kind_ge(K offered, K requested)
{
  return static_cast<int>(offered) >= static_cast<int>(requested);
}

using Bytes = std::vector<std::uint8_t>;

struct EntityFactoryPolicy
{
  bool autoenable_created_entities = true;
  bool operator==(const EntityFactoryPolicy &) const = default;
};

struct PartitionPolicy
{
  std::vector<std::string> names{""};
  bool operator==(const PartitionPolicy &) const = default;

  /// At least one name other than the default empty string.
  bool has_explicit_names() const;
};

struct DataPolicy
{
  Bytes value;
  bool operator==(const DataPolicy &) const = default;
};

struct ReliabilityPolicy
{
  ReliabilityKind kind = ReliabilityKind::BestEffort;
  Duration max_blocking_time = Duration::from_millis(100);
  bool operator==(const ReliabilityPolicy &) const = default;
};

struct DurabilityPolicy
{
  DurabilityKind kind = DurabilityKind::Volatile;
  bool operator==(const DurabilityPolicy &) const = default;
};

struct DeadlinePolicy
{
  Duration period = Duration::infinite();
  bool operator==(const DeadlinePolicy &) const = default;
};

struct LivelinessPolicy
{
  LivelinessKind kind = LivelinessKind::Automatic;
  Duration lease_duration = Duration::infinite();
  bool operator==(const LivelinessPolicy &) const = default;
};

struct HistoryPolicy
{
  HistoryKind kind = HistoryKind::KeepLast;
  std::int32_t depth = 1;
  bool operator==(const HistoryPolicy &) const = default;
};

struct ResourceLimitsPolicy
{
  Count max_samples = Count::unlimited();
  Count max_instances = Count::unlimited();
  Count max_samples_per_instance = Count::unlimited();
  bool operator==(const ResourceLimitsPolicy &) const = default;
};

struct LifespanPolicy
{
  Duration duration = Duration::infinite();
  bool operator==(const LifespanPolicy &) const = default;
};

struct OwnershipPolicy
{
  OwnershipKind kind = OwnershipKind::Shared;
  bool operator==(const OwnershipPolicy &) const = default;
};

struct OwnershipStrengthPolicy
{
  std::int32_t value = 0;
  bool operator==(const OwnershipStrengthPolicy &) const = default;
};

struct DestinationOrderPolicy
{
  DestinationOrderKind kind = DestinationOrderKind::ByReceptionTimestamp;
  bool operator==(const DestinationOrderPolicy &) const = default;
};

struct WriterDataLifecyclePolicy
{
  bool autodispose_unregistered_instances = true;
  bool operator==(const WriterDataLifecyclePolicy &) const = default;
};

struct ReaderDataLifecyclePolicy
{
  Duration autopurge_disposed_samples_delay = Duration::infinite();
  Duration autopurge_no_writer_samples_delay = Duration::infinite();
  bool operator==(const ReaderDataLifecyclePolicy &) const = default;
};

/// Fully resolved bundle of the 16 supported policies for one endpoint.
///
/// A default-constructed profile carries the DataReader defaults; use
/// resolve_defaults() to obtain the side-specific values.
struct QosProfile
{
  EntityFactoryPolicy entity_factory;
  PartitionPolicy partition;
  DataPolicy user_data;
  DataPolicy group_data;
  DataPolicy topic_data;
  ReliabilityPolicy reliability;
  DurabilityPolicy durability;
  DeadlinePolicy deadline;
  LivelinessPolicy liveliness;
  HistoryPolicy history;
  ResourceLimitsPolicy resource_limits;
  LifespanPolicy lifespan;
  OwnershipPolicy ownership;
  OwnershipStrengthPolicy ownership_strength;
  DestinationOrderPolicy destination_order;
  WriterDataLifecyclePolicy writer_data_lifecycle;
  ReaderDataLifecyclePolicy reader_data_lifecycle;

  bool operator==(const QosProfile &) const = default;
};

/// Field-level partial profile as read from a document. Absent fields are
/// filled by resolve_defaults().
struct PartialQos
{
  std::optional<bool> autoenable_created_entities;
  std::optional<std::vector<std::string>> partition_names;
  std::optional<Bytes> user_data;
  std::optional<Bytes> group_data;
  std::optional<Bytes> topic_data;
  std::optional<ReliabilityKind> reliability_kind;
  std::optional<Duration> max_blocking_time;
  std::optional<DurabilityKind> durability_kind;
  std::optional<Duration> deadline_period;
  std::optional<LivelinessKind> liveliness_kind;
  std::optional<Duration> lease_duration;
  std::optional<HistoryKind> history_kind;
  std::optional<std::int32_t> history_depth;
  std::optional<Count> max_samples;
  std::optional<Count> max_instances;
  std::optional<Count> max_samples_per_instance;
  std::optional<Duration> lifespan;
  std::optional<OwnershipKind> ownership_kind;
  std::optional<std::int32_t> ownership_strength;
  std::optional<DestinationOrderKind> destination_order_kind;
  std::optional<bool> autodispose_unregistered_instances;
  std::optional<Duration> autopurge_disposed_samples_delay;
  std::optional<Duration> autopurge_no_writer_samples_delay;

  bool operator==(const PartialQos &) const = default;
};

/// Overlay: fields present in `top` win, the rest come from `base`.
PartialQos merge(const PartialQos & base, const PartialQos & top);

/// Every field of `q` marked present.
PartialQos to_partial(const QosProfile & q);

/// Fill every absent field with the OMG default. Only the reliability kind
/// differs by side: Reliable for DataWriter, BestEffort for DataReader.
QosProfile resolve_defaults(const PartialQos & partial, EndpointKind kind);

/// Default value of reliability.max_blocking_time. Not given by the
/// standard's policy description; marked tool-assumed in reports.
inline constexpr std::int64_t kAssumedMaxBlockingTimeMs = 100;

std::string_view to_string(ReliabilityKind k);
std::string_view to_string(DurabilityKind k);
std::string_view to_string(LivelinessKind k);
std::string_view to_string(DestinationOrderKind k);
std::string_view to_string(OwnershipKind k);
std::string_view to_string(HistoryKind k);
std::string_view to_string(EndpointKind k);

}  // namespace qos_guard

#endif  // QOS_GUARD__QOS_HPP_
