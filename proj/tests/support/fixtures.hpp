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

#ifndef QOS_GUARD_TESTS__FIXTURES_HPP_
#define QOS_GUARD_TESTS__FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qos_guard/pipeline.hpp"

namespace qos_guard::testing
{

// Snippet builders for the <qos> body of one endpoint. Durations are in
// milliseconds; a negative value means DURATION_INFINITY.
std::string kind(std::string_view policy, std::string_view token);
std::string reliable();
std::string best_effort();
std::string durability(std::string_view token);
std::string keep_last(int depth);
std::string keep_all();
std::string resource_limits(std::int64_t max_samples, std::int64_t per_instance);
std::string per_instance(std::int64_t per_instance);
std::string deadline(std::int64_t ms);
std::string lifespan(std::int64_t ms);
std::string liveliness(std::string_view token, std::int64_t lease_ms);
std::string lease(std::int64_t lease_ms);
std::string exclusive();
std::string destination(std::string_view token);
std::string partition(std::string_view name);
std::string autodispose(bool on);
std::string autoenable(bool on);
std::string purge_disposed(std::int64_t ms);
std::string purge_no_writer(std::int64_t ms);

/// Writer "w" and reader "r" sharing topic "t".
struct Sides
{
  std::string writer;
  std::string reader;
};

std::string pair_document(const Sides & sides);

struct RuleFixture
{
  int rule;
  std::string env;  // JSON, empty for none
  Sides violating;
  Sides twin;
};

/// One violating/twin fixture per rule, ids 1..41 in order.
const std::vector<RuleFixture> & rule_fixtures();

/// Parse, pair by topic and evaluate one in-memory document.
Report evaluate_document(const std::string & xml, const std::string & env_json = {});

struct Check
{
  bool ok = true;
  std::string detail;
};

/// The violating side reports the rule at its catalog level, the twin
/// evaluates it to Clean, and the flip changes no other rule's verdict.
Check check_rule_fixture(const RuleFixture & f);

/// Random profile document with `endpoints` endpoints over a few topics,
/// random policy subsets, optional topic layers.
std::string random_document(std::mt19937_64 & rng, int endpoints);

/// `topics` topics each with one writer and one reader.
std::string synthesized_document(int topics);

}  // namespace qos_guard::testing

#endif  // QOS_GUARD_TESTS__FIXTURES_HPP_
