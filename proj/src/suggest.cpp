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

#include <cctype>
#include <sstream>

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

std::string upper(std::string_view s)
{
  std::string out{s};
  for (auto & c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

__extension__ using Wide = __int128;

/// ceil(a / b) for finite a and positive b.
std::int64_t ceil_div(Duration a, Duration b)
{
  const Wide n = a.nanos();
  const Wide d = b.nanos();
  return static_cast<std::int64_t>((n + d - 1) / d);
}

std::string window(Duration pp, Count slots)
{
  const auto w = checked_mul(pp, slots);
  return w ? w->to_string() : std::string{"the cache window"};
}

template<typename K>
std::string rxo_fix(std::string_view field, K writer, K reader)
{
  return cat(
    "writer offers ", field, "=", upper(to_string(writer)), ", reader requests ",
    upper(to_string(reader)), "; the writer's kind must be >= the reader's: raise the writer to ",
    upper(to_string(reader)), " or lower the reader to ", upper(to_string(writer)));
}

}  // namespace

std::string suggest_fix(const Violation & v)
{
  const auto & f = v.facts;
  const QosProfile * self = f.writer ? &*f.writer : (f.reader ? &*f.reader : nullptr);
  const QosProfile * w = f.writer ? &*f.writer : nullptr;
  const QosProfile * r = f.reader ? &*f.reader : nullptr;
  const auto rtt = f.env.rtt;
  const auto pp = f.env.publish_period;
  if (self == nullptr) {
    return {};
  }
  const auto & q = *self;
  const auto spi = q.resource_limits.max_samples_per_instance;

  switch (v.rule_id) {
    case 1:
      return cat(
        "raise resource_limits.max_samples_per_instance to ≥ ", q.history.depth,
        " or lower history.depth to ≤ ", spi.to_string());
    case 2:
      return cat(
        "raise resource_limits.max_samples to ≥ ", spi.to_string(),
        " or lower resource_limits.max_samples_per_instance to ≤ ",
        q.resource_limits.max_samples.to_string());
    case 3:
      return cat(
        "raise lifespan.duration to ≥ ", q.deadline.period.to_string(),
        " or shorten deadline.period to ≤ ", q.lifespan.duration.to_string());
    case 4:
      return "raise history.depth above 1 so samples can be reordered by source timestamp, "
             "or use BY_RECEPTION_TIMESTAMP";
    case 5:
      return "raise resource_limits.max_samples_per_instance above 1 so samples can be reordered "
             "by source timestamp, or use BY_RECEPTION_TIMESTAMP";
    case 6:
    case 29:
      return cat("raise history.depth to ≥ ", min_depth_for(*rtt, *pp));
    case 7:
    case 30:
      return cat("raise resource_limits.max_samples_per_instance to ≥ ", min_depth_for(*rtt, *pp));
    case 8:
      return cat(
        "raise lifespan.duration to ≥ ", rtt->to_string(),
        " so retained samples survive long enough for late joiners");
    case 9:
      return cat(
        "lower lifespan.duration to ≤ ", window(*pp, Count::of(q.history.depth)),
        " or raise history.depth to ≥ ", ceil_div(q.lifespan.duration, *pp));
    case 10:
      return cat(
        "lower lifespan.duration to ≤ ", window(*pp, spi),
        " or raise resource_limits.max_samples_per_instance to ≥ ",
        ceil_div(q.lifespan.duration, *pp));
    case 11:
      return "set a finite deadline.period so exclusive ownership can fail over on missed deadlines";
    case 12:
      return "set a finite liveliness.lease_duration so exclusive ownership can fail over when "
             "the owner is lost";
    case 13:
      return "set a finite liveliness.lease_duration; with an infinite lease writer loss is never "
             "detected and the no-writer purge delay never starts";
    case 14:
      return "raise reader_data_lifecycle.autopurge_disposed_samples_delay above 0s so "
             "late-arriving durable samples are not purged immediately";
    case 15:
      return "use TRANSIENT_LOCAL durability or set entity_factory.autoenable_created_entities=true "
             "so samples published before enable() are not lost";
    case 16:
      return "keep partitions fixed at runtime or use VOLATILE durability; each rematch replays "
             "historical samples to the new match";
    case 17:
      return "keep partitions fixed at runtime; each rematch resets deadline timers and may raise "
             "transient deadline misses";
    case 18:
      return "keep partitions fixed at runtime or use AUTOMATIC liveliness; rematching drops "
             "liveliness until the next manual assertion";
    case 19:
      return "set writer_data_lifecycle.autodispose_unregistered_instances=false and dispose "
             "explicitly from the owning writer";
    case 20:
      return "add a common partition name to both sides";
    case 21:
      return rxo_fix("reliability.kind", w->reliability.kind, r->reliability.kind);
    case 22:
      return rxo_fix("durability.kind", w->durability.kind, r->durability.kind);
    case 23:
      return cat(
        "writer deadline.period=", w->deadline.period.to_string(),
        " must be ≤ reader deadline.period=", r->deadline.period.to_string(),
        ": shorten the writer's period or lengthen the reader's");
    case 24:
      if (!kind_ge(w->liveliness.kind, r->liveliness.kind)) {
        return rxo_fix("liveliness.kind", w->liveliness.kind, r->liveliness.kind);
      }
      return cat(
        "writer liveliness.lease_duration=", w->liveliness.lease_duration.to_string(),
        " must be ≤ reader liveliness.lease_duration=", r->liveliness.lease_duration.to_string(),
        ": shorten the writer's lease or lengthen the reader's");
    case 25:
      return "set both OWNERSHIP kinds identical";
    case 26:
      return rxo_fix("destination_order.kind", w->destination_order.kind, r->destination_order.kind);
    case 27:
      return "set writer_data_lifecycle.autodispose_unregistered_instances=true or dispose "
             "explicitly; otherwise the reader's autopurge_disposed_samples_delay never applies";
    case 28:
      return "set reliability.kind=RELIABLE or lower durability.kind to VOLATILE";
    case 31:
      return cat("raise lifespan.duration above ", rtt->to_string());
    case 32:
      return "set reliability.kind=RELIABLE when using EXCLUSIVE ownership";
    case 33:
      return "set reliability.kind=RELIABLE so lost samples do not raise false deadline misses";
    case 34:
      return cat("raise liveliness.lease_duration to ≥ ", q.deadline.period.to_string());
    case 35:
      return "set reliability.kind=RELIABLE when using MANUAL_BY_TOPIC liveliness";
    case 36:
      return cat("raise deadline.period to ≥ ", window(*pp, Count::of(2)));
    case 37:
      return cat("raise liveliness.lease_duration to ≥ ", window(*pp, Count::of(2)));
    case 38:
      return "set reliability.kind=RELIABLE, or set autodispose_unregistered_instances=false and "
             "dispose explicitly";
    case 39:
      return cat(
        "lower history.depth to ≤ ", max_depth_for(*rtt, *pp),
        " to bound late-join retransmission bursts");
    case 40:
      return cat(
        "lower resource_limits.max_samples_per_instance to ≤ ", max_depth_for(*rtt, *pp),
        " to bound late-join retransmission bursts");
    case 41:
      return "historical-sample retransmission can reset deadline timers; confirm the deadline "
             "still reflects live latency";
    default:
      return {};
  }
}

}  // namespace qos_guard
