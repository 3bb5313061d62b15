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

#include "qos_guard/duration.hpp"

#include <limits>
#include <stdexcept>

namespace qos_guard
{

namespace
{
constexpr std::int64_t kNsPerMs = 1'000'000;
constexpr std::int64_t kNsPerSec = 1'000'000'000;
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
}  // namespace

Duration Duration::from_nanos(std::int64_t ns)
{
  if (ns < 0) {
    throw std::out_of_range("duration must be nonnegative");
  }
  return Duration{ns};
}

Duration Duration::from_millis(std::int64_t ms)
{
  if (ms < 0 || ms > kMax / kNsPerMs) {
    throw std::out_of_range("duration out of range");
  }
  return Duration{ms * kNsPerMs};
}

Duration Duration::from_seconds(std::int64_t s)
{
  if (s < 0 || s > kMax / kNsPerSec) {
    throw std::out_of_range("duration out of range");
  }
  return Duration{s * kNsPerSec};
}

std::int64_t Duration::nanos() const
{
  if (is_infinite()) {
    throw std::logic_error("nanos() on infinite duration");
  }
  return ns_;
}

std::string Duration::to_string() const
{
  if (is_infinite()) {
    return "infinite";
  }
  if (ns_ == 0) {
    return "0s";
  }
  if (ns_ % kNsPerSec == 0) {
    return std::to_string(ns_ / kNsPerSec) + "s";
  }
  if (ns_ % kNsPerMs == 0) {
    return std::to_string(ns_ / kNsPerMs) + "ms";
  }
  if (ns_ % 1000 == 0) {
    return std::to_string(ns_ / 1000) + "us";
  }
  return std::to_string(ns_) + "ns";
}

Count Count::of(std::int64_t n)
{
  if (n < 0) {
    throw std::out_of_range("count must be nonnegative");
  }
  return Count{n};
}

std::int64_t Count::value() const
{
  if (is_unlimited()) {
    throw std::logic_error("value() on unlimited count");
  }
  return n_;
}

std::string Count::to_string() const
{
  return is_unlimited() ? "UNLIMITED" : std::to_string(n_);
}

Ordering compare_duration(Duration a, Duration b)
{
  const auto c = a <=> b;
  if (c < 0) {
    return Ordering::Less;
  }
  if (c > 0) {
    return Ordering::Greater;
  }
  return Ordering::Equal;
}

std::optional<Duration> checked_mul(Duration d, std::uint64_t n)
{
  if (n == 0) {
    return Duration{};
  }
  if (d.is_infinite()) {
    return Duration::infinite();
  }
  const auto ns = static_cast<std::uint64_t>(d.nanos());
  if (ns != 0 && n > static_cast<std::uint64_t>(kMax) / ns) {
    return std::nullopt;
  }
  return Duration::from_nanos(static_cast<std::int64_t>(ns * n));
}

std::optional<Duration> checked_mul(Duration d, Count n)
{
  if (n.is_unlimited()) {
    return d == Duration{} ? Duration{} : Duration::infinite();
  }
  return checked_mul(d, static_cast<std::uint64_t>(n.value()));
}

Duration operator*(Duration d, std::uint64_t n)
{
  auto r = checked_mul(d, n);
  if (!r) {
    throw std::overflow_error("duration multiplication overflows 64-bit nanoseconds");
  }
  return *r;
}

}  // namespace qos_guard
