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

#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"

namespace qos_guard::testing
{

namespace
{

std::string duration_xml(std::string_view tag, std::int64_t ms)
{
  std::ostringstream os;
  os << "<" << tag << ">";
  if (ms < 0) {
    os << "DURATION_INFINITY";
  } else {
    os << "<sec>" << ms / 1000 << "</sec><nanosec>" << (ms % 1000) * 1'000'000 << "</nanosec>";
  }
  os << "</" << tag << ">";
  return os.str();
}

std::string wrap(std::string_view policy, const std::string & body)
{
  return "<" + std::string{policy} + ">" + body + "</" + std::string{policy} + ">";
}

}  // namespace

std::string kind(std::string_view policy, std::string_view token)
{
  return wrap(policy, "<kind>" + std::string{token} + "</kind>");
}

std::string reliable() {return kind("reliability", "RELIABLE");}
std::string best_effort() {return kind("reliability", "BEST_EFFORT");}
std::string durability(std::string_view token) {return kind("durability", token);}
std::string exclusive() {return kind("ownership", "EXCLUSIVE");}
std::string destination(std::string_view token) {return kind("destination_order", token);}
std::string keep_all() {return kind("history", "KEEP_ALL");}

std::string keep_last(int depth)
{
  return wrap("history", "<kind>KEEP_LAST</kind><depth>" + std::to_string(depth) + "</depth>");
}

std::string resource_limits(std::int64_t max_samples, std::int64_t per_instance)
{
  return wrap(
    "resource_limits", "<max_samples>" + std::to_string(max_samples) +
    "</max_samples><max_samples_per_instance>" + std::to_string(per_instance) +
    "</max_samples_per_instance>");
}

std::string per_instance(std::int64_t n)
{
  return wrap(
    "resource_limits",
    "<max_samples_per_instance>" + std::to_string(n) + "</max_samples_per_instance>");
}

std::string deadline(std::int64_t ms) {return wrap("deadline", duration_xml("period", ms));}
std::string lifespan(std::int64_t ms) {return wrap("lifespan", duration_xml("duration", ms));}

std::string liveliness(std::string_view token, std::int64_t lease_ms)
{
  return wrap(
    "liveliness", "<kind>" + std::string{token} + "</kind>" +
    duration_xml("lease_duration", lease_ms));
}

std::string lease(std::int64_t lease_ms)
{
  return wrap("liveliness", duration_xml("lease_duration", lease_ms));
}

std::string partition(std::string_view name)
{
  return wrap("partition", "<names><name>" + std::string{name} + "</name></names>");
}

std::string autodispose(bool on)
{
  return wrap(
    "writer_data_lifecycle", std::string{"<autodispose_unregistered_instances>"} +
    (on ? "true" : "false") + "</autodispose_unregistered_instances>");
}

std::string autoenable(bool on)
{
  return wrap(
    "entity_factory", std::string{"<autoenable_created_entities>"} + (on ? "true" : "false") +
    "</autoenable_created_entities>");
}

std::string purge_disposed(std::int64_t ms)
{
  return wrap("reader_data_lifecycle", duration_xml("autopurge_disposed_samples_delay", ms));
}

std::string purge_no_writer(std::int64_t ms)
{
  return wrap("reader_data_lifecycle", duration_xml("autopurge_no_writer_samples_delay", ms));
}

std::string pair_document(const Sides & sides)
{
  return "<?xml version=\"1.0\"?>\n<dds><profiles>\n"
         "<data_writer profile_name=\"w\"><topic><name>t</name></topic><qos>" + sides.writer +
         "</qos></data_writer>\n"
         "<data_reader profile_name=\"r\"><topic><name>t</name></topic><qos>" + sides.reader +
         "</qos></data_reader>\n"
         "</profiles></dds>\n";
}

const std::vector<RuleFixture> & rule_fixtures()
{
  const std::string both = R"({"rtt_ms": 100, "default_publish_period_ms": 20})";
  const std::string rtt = R"({"rtt_ms": 100})";
  const std::string pp = R"({"default_publish_period_ms": 20})";
  const auto quiet_excl = exclusive() + autodispose(false);
  const auto tl = durability("TRANSIENT_LOCAL");

  static const std::vector<RuleFixture> fixtures{
    {1, "", {keep_last(5) + per_instance(3), ""}, {keep_last(3) + per_instance(3), ""}},
    {2, "", {resource_limits(2, 4), ""}, {resource_limits(4, 4), ""}},
    {3, "", {lifespan(50) + deadline(100), ""}, {lifespan(200) + deadline(100), ""}},
    {4, "",
      {destination("BY_SOURCE_TIMESTAMP"), destination("BY_SOURCE_TIMESTAMP")},
      {destination("BY_SOURCE_TIMESTAMP"), destination("BY_SOURCE_TIMESTAMP") + keep_last(2)}},
    {5, "",
      {destination("BY_SOURCE_TIMESTAMP"),
        destination("BY_SOURCE_TIMESTAMP") + keep_all() + per_instance(1)},
      {destination("BY_SOURCE_TIMESTAMP"),
        destination("BY_SOURCE_TIMESTAMP") + keep_all() + per_instance(2)}},
    {6, both, {tl + keep_last(3), ""}, {keep_last(3), ""}},
    {7, both, {tl + keep_all() + per_instance(3), ""}, {keep_all() + per_instance(3), ""}},
    {8, rtt, {tl + lifespan(50), ""}, {lifespan(50), ""}},
    {9, pp, {keep_last(2) + lifespan(100), ""}, {keep_last(2) + lifespan(40), ""}},
    {10, pp,
      {keep_all() + per_instance(2) + lifespan(100), ""},
      {keep_all() + per_instance(2) + lifespan(40), ""}},
    {11, "",
      {quiet_excl + deadline(100) + lease(1000), reliable() + exclusive() + lease(1000)},
      {quiet_excl + deadline(100) + lease(1000),
        reliable() + exclusive() + lease(1000) + deadline(100)}},
    {12, "",
      {quiet_excl + deadline(100) + lease(1000), reliable() + exclusive() + deadline(100)},
      {quiet_excl + deadline(100) + lease(1000),
        reliable() + exclusive() + deadline(100) + lease(1000)}},
    {13, "",
      {lease(1000), purge_no_writer(1000)},
      {lease(1000), purge_no_writer(1000) + lease(1000)}},
    {14, "",
      {durability("TRANSIENT"), reliable() + durability("TRANSIENT") + purge_disposed(0)},
      {durability("TRANSIENT"), reliable() + durability("TRANSIENT") + purge_disposed(1000)}},
    {15, "", {autoenable(false), ""}, {autoenable(true), ""}},
    {16, "", {tl + partition("A"), partition("A")}, {partition("A"), partition("A")}},
    {17, "", {deadline(100) + partition("A"), partition("A")}, {partition("A"), partition("A")}},
    {18, "",
      {liveliness("MANUAL_BY_TOPIC", -1) + partition("A"),
        reliable() + liveliness("MANUAL_BY_TOPIC", -1) + partition("A")},
      {liveliness("MANUAL_BY_TOPIC", -1) + partition("A"), reliable() + partition("A")}},
    {19, "",
      {exclusive(), reliable() + exclusive()},
      {quiet_excl, reliable() + exclusive()}},
    {20, "", {partition("A"), partition("B")}, {partition("A"), partition("A")}},
    {21, "",
      {best_effort() + autodispose(false), reliable()},
      {reliable() + autodispose(false), reliable()}},
    {22, "", {"", reliable() + tl}, {tl, reliable() + tl}},
    {23, "",
      {deadline(200), reliable() + deadline(100)},
      {deadline(100), reliable() + deadline(100)}},
    {24, "",
      {liveliness("AUTOMATIC", -1), liveliness("MANUAL_BY_PARTICIPANT", -1)},
      {liveliness("MANUAL_BY_PARTICIPANT", -1), liveliness("MANUAL_BY_PARTICIPANT", -1)}},
    {25, "", {quiet_excl, ""}, {autodispose(false), ""}},
    {26, "",
      {"", destination("BY_SOURCE_TIMESTAMP") + keep_last(2)},
      {destination("BY_SOURCE_TIMESTAMP"), destination("BY_SOURCE_TIMESTAMP") + keep_last(2)}},
    {27, "", {autodispose(false), purge_disposed(1000)}, {"", purge_disposed(1000)}},
    {28, "",
      {tl + best_effort() + autodispose(false), ""},
      {tl + autodispose(false), ""}},
    {29, both, {keep_last(6), ""}, {keep_last(7), ""}},
    {30, both, {keep_all() + per_instance(6), ""}, {keep_all() + per_instance(7), ""}},
    {31, rtt, {lifespan(50), ""}, {lifespan(200), ""}},
    {32, "", {quiet_excl, exclusive()}, {quiet_excl, exclusive() + reliable()}},
    {33, "", {deadline(100), deadline(100)}, {deadline(100), deadline(100) + reliable()}},
    {34, "",
      {deadline(100) + lease(50), reliable() + deadline(100) + lease(50)},
      {deadline(100) + lease(50), reliable() + deadline(100) + lease(200)}},
    {35, "",
      {liveliness("MANUAL_BY_TOPIC", -1) + best_effort() + autodispose(false), ""},
      {liveliness("MANUAL_BY_TOPIC", -1) + autodispose(false), ""}},
    {36, pp,
      {quiet_excl + deadline(30) + lease(1000),
        reliable() + exclusive() + deadline(30) + lease(1000)},
      {quiet_excl + deadline(30) + lease(1000),
        reliable() + exclusive() + deadline(40) + lease(1000)}},
    {37, pp,
      {quiet_excl + deadline(1000) + lease(30),
        reliable() + exclusive() + deadline(1000) + lease(30)},
      {quiet_excl + deadline(1000) + lease(30),
        reliable() + exclusive() + deadline(1000) + lease(40)}},
    {38, "", {best_effort(), ""}, {reliable(), ""}},
    {39, both, {tl + keep_last(8), ""}, {tl + keep_last(7), ""}},
    {40, both, {tl + keep_all() + per_instance(8), ""}, {tl + keep_all() + per_instance(7), ""}},
    {41, "", {deadline(100) + tl, ""}, {deadline(100), ""}},
  };
  return fixtures;
}

Report evaluate_document(const std::string & xml, const std::string & env_json)
{
  const auto set = parse_profiles({{"fixture.xml", xml}});
  const auto env = env_json.empty() ? EnvironmentModel{} : parse_environment(env_json);
  return run_pipeline(set, env, build_pairing_plan(set, {}));
}

namespace
{

std::set<int> fired(const Report & r)
{
  std::set<int> ids;
  for (const auto & v : r.diagnostics) {
    ids.insert(v.rule_id);
  }
  return ids;
}

std::string_view expected_level(std::string_view severity)
{
  if (severity == "Critical") {
    return "ERROR";
  }
  return severity == "Conditional" ? "WARNING" : "INFO";
}

}  // namespace

Check check_rule_fixture(const RuleFixture & f)
{
  const auto & row = oracle::kRuleTable.at(static_cast<std::size_t>(f.rule - 1));
  const auto bad = evaluate_document(pair_document(f.violating), f.env);
  const auto good = evaluate_document(pair_document(f.twin), f.env);

  std::ostringstream why;
  const auto hit = std::find_if(
    bad.diagnostics.begin(), bad.diagnostics.end(),
    [&](const Violation & v) {return v.rule_id == f.rule;});
  if (hit == bad.diagnostics.end()) {
    why << "violating fixture did not report rule " << f.rule;
    return {false, why.str()};
  }
  if (to_string(report_level(hit->severity)) != expected_level(row.severity)) {
    why << "rule " << f.rule << " reported at " << to_string(report_level(hit->severity));
    return {false, why.str()};
  }
  for (const auto & s : good.skipped) {
    if (s.rule_id == f.rule) {
      why << "twin skipped rule " << f.rule << " (" << to_string(s.reason) << ")";
      return {false, why.str()};
    }
  }
  const auto bad_ids = fired(bad);
  const auto good_ids = fired(good);
  if (good_ids.count(f.rule) != 0) {
    why << "twin still reports rule " << f.rule;
    return {false, why.str()};
  }
  std::vector<int> diff;
  std::set_symmetric_difference(
    bad_ids.begin(), bad_ids.end(), good_ids.begin(), good_ids.end(), std::back_inserter(diff));
  if (diff != std::vector<int>{f.rule}) {
    why << "flip for rule " << f.rule << " also changed rules:";
    for (int id : diff) {
      if (id != f.rule) {
        why << " " << id;
      }
    }
    return {false, why.str()};
  }
  return {};
}

namespace
{

template<typename T>
const T & pick(std::mt19937_64 & rng, const std::vector<T> & items)
{
  return items[std::uniform_int_distribution<std::size_t>{0, items.size() - 1}(rng)];
}

bool coin(std::mt19937_64 & rng, double p = 0.5)
{
  return std::bernoulli_distribution{p}(rng);
}

std::int64_t between(std::mt19937_64 & rng, std::int64_t lo, std::int64_t hi)
{
  return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

std::string random_duration(std::mt19937_64 & rng, std::string_view tag)
{
  std::ostringstream os;
  os << "<" << tag << ">";
  switch (between(rng, 0, 3)) {
    case 0: os << "DURATION_INFINITY"; break;
    case 1: os << "<sec>DURATION_INFINITY</sec>"; break;
    case 2: os << "<sec>" << between(rng, 0, 5000) << "</sec>"; break;
    default:
      os << "<sec>" << between(rng, 0, 3) << "</sec><nanosec>" << between(rng, 0, 999'999'999) <<
        "</nanosec>";
  }
  os << "</" << tag << ">";
  return os.str();
}

std::string random_count(std::mt19937_64 & rng, std::string_view tag)
{
  const auto v = coin(rng, 0.2) ? std::string{coin(rng) ? "UNLIMITED" : "-1"} :
    std::to_string(between(rng, 0, 500));
  return "<" + std::string{tag} + ">" + v + "</" + std::string{tag} + ">";
}

std::string random_bytes(std::mt19937_64 & rng)
{
  static const std::string digits = "0123456789abcdefABCDEF";
  std::string out;
  const auto n = between(rng, 0, 6);
  for (std::int64_t i = 0; i < n; ++i) {
    out += digits[static_cast<std::size_t>(between(rng, 0, 21))];
    out += digits[static_cast<std::size_t>(between(rng, 0, 21))];
    out += i + 1 < n && coin(rng) ? "." : "";
  }
  return "<value>" + out + "</value>";
}

std::string random_qos(std::mt19937_64 & rng)
{
  std::string q;
  const auto maybe = [&](auto && make) {
      if (coin(rng, 0.4)) {
        q += make();
      }
    };
  maybe([&] {return autoenable(coin(rng));});
  maybe(
    [&] {
      std::string names;
      for (std::int64_t i = between(rng, 0, 3); i > 0; --i) {
        names += "<name>" + pick(rng, std::vector<std::string>{"", "A", "B", "zone*", "x&y"}) +
        "</name>";
      }
      // XML-escape the one name that needs it.
      std::string escaped;
      for (char c : names) {
        escaped += c == '&' ? std::string{"&amp;"} : std::string(1, c);
      }
      return wrap("partition", "<names>" + escaped + "</names>");
    });
  for (const char * tag : {"user_data", "group_data", "topic_data"}) {
    maybe([&] {return wrap(tag, random_bytes(rng));});
  }
  maybe(
    [&] {
      std::string body;
      if (coin(rng)) {
        body += "<kind>" + pick(rng, std::vector<std::string>{"BEST_EFFORT", "RELIABLE"}) + "</kind>";
      }
      if (coin(rng)) {
        body += random_duration(rng, "max_blocking_time");
      }
      return wrap("reliability", body);
    });
  maybe(
    [&] {
      return durability(
        pick(
          rng, std::vector<std::string>{"VOLATILE", "TRANSIENT_LOCAL", "TRANSIENT",
            "PERSISTENT"}));
    });
  maybe([&] {return wrap("deadline", random_duration(rng, "period"));});
  maybe(
    [&] {
      std::string body;
      if (coin(rng)) {
        body += "<kind>" +
        pick(
          rng, std::vector<std::string>{"AUTOMATIC", "MANUAL_BY_PARTICIPANT",
            "MANUAL_BY_TOPIC"}) + "</kind>";
      }
      if (coin(rng)) {
        body += random_duration(rng, "lease_duration");
      }
      return wrap("liveliness", body);
    });
  maybe(
    [&] {
      std::string body;
      if (coin(rng)) {
        body += coin(rng) ? "<kind>KEEP_LAST</kind>" : "<kind>KEEP_ALL</kind>";
      }
      if (coin(rng)) {
        body += "<depth>" + std::to_string(between(rng, 1, 64)) + "</depth>";
      }
      return wrap("history", body);
    });
  maybe(
    [&] {
      std::string body;
      for (const char * tag : {"max_samples", "max_instances", "max_samples_per_instance"}) {
        if (coin(rng)) {
          body += random_count(rng, tag);
        }
      }
      return wrap("resource_limits", body);
    });
  maybe([&] {return wrap("lifespan", random_duration(rng, "duration"));});
  maybe(
    [&] {
      std::string body;
      if (coin(rng)) {
        body += coin(rng) ? "<kind>SHARED</kind>" : "<kind>EXCLUSIVE</kind>";
      }
      if (coin(rng)) {
        body += "<strength><value>" + std::to_string(between(rng, -1000, 1000)) +
        "</value></strength>";
      }
      return wrap("ownership", body);
    });
  maybe(
    [&] {
      return destination(
        coin(rng) ? "BY_RECEPTION_TIMESTAMP" : "BY_SOURCE_TIMESTAMP");
    });
  maybe([&] {return autodispose(coin(rng));});
  maybe(
    [&] {
      std::string body;
      if (coin(rng)) {
        body += random_duration(rng, "autopurge_no_writer_samples_delay");
      }
      if (coin(rng)) {
        body += random_duration(rng, "autopurge_disposed_samples_delay");
      }
      return wrap("reader_data_lifecycle", body);
    });
  return q;
}

}  // namespace

std::string random_document(std::mt19937_64 & rng, int endpoints)
{
  const std::vector<std::string> topics{"alpha", "beta", "gamma"};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<dds>\n  <profiles>\n";
  for (const auto & t : topics) {
    if (coin(rng, 0.3)) {
      os << "    <topic><name>" << t << "</name><qos>" << random_qos(rng) << "</qos></topic>\n";
    }
  }
  for (int i = 0; i < endpoints; ++i) {
    const char * tag = coin(rng) ? "data_writer" : "data_reader";
    os << "    <" << tag << " profile_name=\"ep" << i << "\">";
    if (coin(rng, 0.8)) {
      os << "<topic><name>" << pick(rng, topics) << "</name></topic>";
    }
    os << "<qos>" << random_qos(rng) << "</qos></" << tag << ">\n";
  }
  os << "  </profiles>\n</dds>\n";
  return os.str();
}

std::string synthesized_document(int topics)
{
  std::ostringstream os;
  os << "<?xml version=\"1.0\"?>\n<dds><profiles>\n";
  for (int i = 0; i < topics; ++i) {
    const auto t = "topic_" + std::to_string(i);
    const bool odd = i % 2 == 1;
    os << "<data_writer profile_name=\"w" << i << "\"><topic><name>" << t <<
      "</name></topic><qos>" << keep_last(1 + i % 12) <<
      (odd ? durability("TRANSIENT_LOCAL") : "") << deadline(100 + i % 7) << "</qos></data_writer>\n";
    os << "<data_reader profile_name=\"r" << i << "\"><topic><name>" << t <<
      "</name></topic><qos>" << (odd ? reliable() : best_effort()) << deadline(200) <<
      "</qos></data_reader>\n";
  }
  os << "</profiles></dds>\n";
  return os.str();
}

}  // namespace qos_guard::testing
