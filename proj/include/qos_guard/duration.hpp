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

#ifndef QOS_GUARD__DURATION_HPP_
#define QOS_GUARD__DURATION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qos_guard
{

/// Nonnegative time quantity in nanoseconds, or the Infinite sentinel.
///
/// Infinite is the unique maximum of the total order. Finite values are
/// stored as 64-bit nanoseconds so rule predicates compare exactly.
class Duration
{
public:
  /// Zero duration.
  constexpr Duration() = default;

  /// Throws std::out_of_range for negative values.
  static Duration from_nanos(std::int64_t ns);
  static Duration from_millis(std::int64_t ms);
  static Duration from_seconds(std::int64_t s);
  static constexpr Duration infinite() {return Duration{kInfinite};}

  constexpr bool is_infinite() const {return ns_ == kInfinite;}
  constexpr bool is_finite() const {return ns_ != kInfinite;}
  /// Finite and strictly greater than zero.
  constexpr bool is_positive() const {return is_finite() && ns_ > 0;}

  /// Nanosecond count; precondition: is_finite().
  std::int64_t nanos() const;

  friend constexpr bool operator==(Duration a, Duration b) = default;
  friend constexpr std::strong_ordering operator<=>(Duration a, Duration b)
  {
    // kInfinite is -1, so ordering cannot use the raw value.
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.ns_ <=> b.ns_;
  }

  /// Human-readable form: "infinite", "1500ms", "2s", "250us", "7ns".
  std::string to_string() const;

private:
  static constexpr std::int64_t kInfinite = -1;
  constexpr explicit Duration(std::int64_t ns)
  : ns_(ns) {}

  std::int64_t ns_ = 0;
};

/// Sample/instance count, or the Unlimited sentinel (top of the order).
class Count
{
public:
  constexpr Count() = default;

  /// Throws std::out_of_range for negative values.
  static Count of(std::int64_t n);
  static constexpr Count unlimited() {return Count{kUnlimited};}

  constexpr bool is_unlimited() const {return n_ == kUnlimited;}
  constexpr bool is_finite() const {return n_ != kUnlimited;}

  /// Precondition: is_finite().
  std::int64_t value() const;

  friend constexpr bool operator==(Count a, Count b) = default;
  friend constexpr std::strong_ordering operator<=>(Count a, Count b)
  {
    if (a.is_unlimited() || b.is_unlimited()) {
      return static_cast<int>(a.is_unlimited()) <=> static_cast<int>(b.is_unlimited());
    }
    return a.n_ <=> b.n_;
  }

  /// "UNLIMITED" or the decimal value.
  std::string to_string() const;

private:
  static constexpr std::int64_t kUnlimited = -1;
  constexpr explicit Count(std::int64_t n)
  : n_(n) {}

  std::int64_t n_ = 0;
};

enum class Ordering { Less, Equal, Greater };

Ordering compare_duration(Duration a, Duration b);

/// Duration scaled by a nonnegative integer. Infinite x n is Infinite for
/// n >= 1 and anything x 0 is zero. Returns nullopt when the finite product
/// does not fit in 64-bit nanoseconds.
std::optional<Duration> checked_mul(Duration d, std::uint64_t n);

/// Duration scaled by a Count; Unlimited behaves like Infinite.
std::optional<Duration> checked_mul(Duration d, Count n);

/// Throws std::overflow_error where checked_mul would return nullopt.
Duration operator*(Duration d, std::uint64_t n);

}  // namespace qos_guard

#endif  // QOS_GUARD__DURATION_HPP_
