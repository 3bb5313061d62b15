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

#include "qos_guard/profile_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "xml_tree.hpp"

namespace qos_guard
{

LoadError::LoadError(std::string message, std::string document, int line, int column)
: std::runtime_error([&] {
      std::string where = document;
      if (!where.empty() && line > 0) {
        where += ":" + std::to_string(line);
        if (column > 0) {
          where += ":" + std::to_string(column);
        }
      }
      return where.empty() ? message : where + ": " + message;
    }()),
  document_(std::move(document)), line_(line), column_(column)
{
}

void ProfileSet::add(EndpointProfile endpoint)
{
  const auto it = endpoints_.find(endpoint.profile_name);
  if (it != endpoints_.end()) {
    throw LoadError(
      "duplicate profile name '" + endpoint.profile_name + "' (first defined at " +
      it->second.location.to_string() + ")",
      endpoint.location.document, endpoint.location.line);
  }
  auto name = endpoint.profile_name;
  endpoints_.emplace(std::move(name), std::move(endpoint));
}

const EndpointProfile * ProfileSet::find(const std::string & name) const
{
  const auto it = endpoints_.find(name);
  return it == endpoints_.end() ? nullptr : &it->second;
}

std::map<std::string, TopicEndpoints> ProfileSet::topic_index() const
{
  std::map<std::string, TopicEndpoints> index;
  for (const auto & [name, ep] : endpoints_) {
    if (!ep.topic_name) {
      continue;
    }
    auto & bucket = index[*ep.topic_name];
    (ep.is_writer() ? bucket.writers : bucket.readers).push_back(name);
  }
  return index;
}

TopicEndpoints ProfileSet::unbound() const
{
  TopicEndpoints out;
  for (const auto & [name, ep] : endpoints_) {
    if (!ep.topic_name) {
      (ep.is_writer() ? out.writers : out.readers).push_back(name);
    }
  }
  return out;
}

namespace
{

constexpr std::string_view kInfinityToken = "DURATION_INFINITY";
constexpr std::string_view kUnlimitedToken = "UNLIMITED";

std::string upper(std::string_view s)
{
  std::string out{s};
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::toupper(c));
    });
  return out;
}

/// Walks one document's element tree, accumulating Info diagnostics.
class DocumentReader
{
public:
  DocumentReader(std::string path, std::vector<ParseDiagnostic> & diags)
  : path_(std::move(path)), diags_(diags) {}

  [[noreturn]] void fail(const xml::Element & at, const std::string & msg) const
  {
    throw LoadError(msg, path_, at.line, at.column);
  }

  void note(const xml::Element & at, const std::string & msg)
  {
    diags_.push_back({ParseLevel::Info, {path_, at.line}, msg});
  }

  void ignore(const xml::Element & el, std::string_view context)
  {
    note(el, "ignored unknown element <" + el.name + "> in " + std::string{context});
  }

  SourceLocation location(const xml::Element & el) const {return {path_, el.line};}

  std::int64_t integer(const xml::Element & el, const std::string & field) const
  {
    const auto text = el.trimmed_text();
    std::int64_t v = 0;
    const auto * first = text.data();
    const auto * last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != last) {
      fail(el, field + ": expected an integer, got '" + text + "'");
    }
    return v;
  }

  std::int32_t int32(const xml::Element & el, const std::string & field) const
  {
    const auto v = integer(el, field);
    if (v < std::numeric_limits<std::int32_t>::min() ||
      v > std::numeric_limits<std::int32_t>::max())
    {
      fail(el, field + ": value out of range");
    }
    return static_cast<std::int32_t>(v);
  }

  bool boolean(const xml::Element & el, const std::string & field) const
  {
    const auto t = upper(el.trimmed_text());
    if (t == "TRUE" || t == "1") {
      return true;
    }
    if (t == "FALSE" || t == "0") {
      return false;
    }
    fail(el, field + ": expected true or false, got '" + el.trimmed_text() + "'");
  }

  Duration duration(const xml::Element & el, const std::string & field)
  {
    if (upper(el.trimmed_text()) == kInfinityToken) {
      return Duration::infinite();
    }
    const xml::Element * sec = nullptr;
    const xml::Element * nsec = nullptr;
    for (const auto & c : el.children) {
      if (c.name == "sec") {
        sec = &c;
      } else if (c.name == "nanosec") {
        nsec = &c;
      } else {
        ignore(c, field);
      }
    }
    if (sec == nullptr && nsec == nullptr) {
      fail(el, field + ": expected <sec>/<nanosec> or " + std::string{kInfinityToken});
    }
    if (sec != nullptr && upper(sec->trimmed_text()) == kInfinityToken) {
      return Duration::infinite();
    }
    const std::int64_t s = sec ? integer(*sec, field + ".sec") : 0;
    const std::int64_t ns = nsec ? integer(*nsec, field + ".nanosec") : 0;
    if (s < 0 || ns < 0) {
      fail(el, field + ": duration must be nonnegative");
    }
    constexpr std::int64_t kNsPerSec = 1'000'000'000;
    if (s > (std::numeric_limits<std::int64_t>::max() - ns) / kNsPerSec) {
      fail(el, field + ": duration too large");
    }
    return Duration::from_nanos(s * kNsPerSec + ns);
  }

  Count count(const xml::Element & el, const std::string & field) const
  {
    if (upper(el.trimmed_text()) == kUnlimitedToken) {
      return Count::unlimited();
    }
    const auto v = integer(el, field);
    if (v == -1) {
      return Count::unlimited();
    }
    if (v < 0) {
      fail(el, field + ": count must be nonnegative or UNLIMITED (got " + std::to_string(v) + ")");
    }
    return Count::of(v);
  }

  Bytes bytes(const xml::Element & el, const std::string & field) const
  {
    std::string hex;
    for (const char c : el.text) {
      if (std::isxdigit(static_cast<unsigned char>(c))) {
        hex += c;
      } else if (!(std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ':' ||
        c == ','))
      {
        fail(el, field + ": expected hexadecimal bytes");
      }
    }
    if (hex.size() % 2 != 0) {
      fail(el, field + ": odd number of hex digits");
    }
    Bytes out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      out.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
    }
    return out;
  }

  template<typename E>
  E token(
    const xml::Element & el, const std::string & field,
    std::initializer_list<std::pair<std::string_view, E>> table) const
  {
    const auto t = upper(el.trimmed_text());
    std::string allowed;
    for (const auto & [name, value] : table) {
      if (t == name) {
        return value;
      }
      allowed += allowed.empty() ? "" : ", ";
      allowed += name;
    }
    fail(el, field + ": unknown value '" + el.trimmed_text() + "' (expected one of " + allowed + ")");
  }

  PartialQos qos(const xml::Element & qos_el);

  const std::string & path() const {return path_;}

private:
  void data_policy(const xml::Element & el, std::optional<Bytes> & dst);

  std::string path_;
  std::vector<ParseDiagnostic> & diags_;
};

void DocumentReader::data_policy(const xml::Element & el, std::optional<Bytes> & dst)
{
  for (const auto & c : el.children) {
    if (c.name == "value") {
      dst = bytes(c, el.name + ".value");
    } else {
      ignore(c, el.name);
    }
  }
}

PartialQos DocumentReader::qos(const xml::Element & qos_el)
{
  PartialQos p;
  for (const auto & pol : qos_el.children) {
    const auto & n = pol.name;
    if (n == "entity_factory") {
      for (const auto & c : pol.children) {
        if (c.name == "autoenable_created_entities") {
          p.autoenable_created_entities = boolean(c, "entity_factory.autoenable_created_entities");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "partition") {
      for (const auto & c : pol.children) {
        if (c.name != "names") {
          ignore(c, n);
          continue;
        }
        std::vector<std::string> names;
        for (const auto & name_el : c.children) {
          if (name_el.name == "name") {
            names.push_back(name_el.trimmed_text());
          } else {
            ignore(name_el, "partition.names");
          }
        }
        p.partition_names = std::move(names);
      }
    } else if (n == "user_data") {
      data_policy(pol, p.user_data);
    } else if (n == "group_data") {
      data_policy(pol, p.group_data);
    } else if (n == "topic_data") {
      data_policy(pol, p.topic_data);
    } else if (n == "reliability") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.reliability_kind = token<ReliabilityKind>(
            c, "reliability.kind",
            {{"BEST_EFFORT", ReliabilityKind::BestEffort},
              {"RELIABLE", ReliabilityKind::Reliable}});
        } else if (c.name == "max_blocking_time") {
          p.max_blocking_time = duration(c, "reliability.max_blocking_time");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "durability") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.durability_kind = token<DurabilityKind>(
            c, "durability.kind",
            {{"VOLATILE", DurabilityKind::Volatile},
              {"TRANSIENT_LOCAL", DurabilityKind::TransientLocal},
              {"TRANSIENT", DurabilityKind::Transient},
              {"PERSISTENT", DurabilityKind::Persistent}});
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "deadline") {
      for (const auto & c : pol.children) {
        if (c.name == "period") {
          p.deadline_period = duration(c, "deadline.period");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "liveliness") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.liveliness_kind = token<LivelinessKind>(
            c, "liveliness.kind",
            {{"AUTOMATIC", LivelinessKind::Automatic},
              {"MANUAL_BY_PARTICIPANT", LivelinessKind::ManualByParticipant},
              {"MANUAL_BY_TOPIC", LivelinessKind::ManualByTopic}});
        } else if (c.name == "lease_duration") {
          p.lease_duration = duration(c, "liveliness.lease_duration");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "history") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.history_kind = token<HistoryKind>(
            c, "history.kind",
            {{"KEEP_LAST", HistoryKind::KeepLast}, {"KEEP_ALL", HistoryKind::KeepAll}});
        } else if (c.name == "depth") {
          const auto d = int32(c, "history.depth");
          if (d < 1) {
            fail(c, "history.depth: must be >= 1 (got " + std::to_string(d) + ")");
          }
          p.history_depth = d;
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "resource_limits") {
      for (const auto & c : pol.children) {
        if (c.name == "max_samples") {
          p.max_samples = count(c, "resource_limits.max_samples");
        } else if (c.name == "max_instances") {
          p.max_instances = count(c, "resource_limits.max_instances");
        } else if (c.name == "max_samples_per_instance") {
          p.max_samples_per_instance = count(c, "resource_limits.max_samples_per_instance");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "lifespan") {
      for (const auto & c : pol.children) {
        if (c.name == "duration") {
          p.lifespan = duration(c, "lifespan.duration");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "ownership") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.ownership_kind = token<OwnershipKind>(
            c, "ownership.kind",
            {{"SHARED", OwnershipKind::Shared}, {"EXCLUSIVE", OwnershipKind::Exclusive}});
        } else if (c.name == "strength") {
          // Both <strength>7</strength> and <strength><value>7</value></strength>.
          const auto * value = c.child("value");
          p.ownership_strength = int32(value ? *value : c, "ownership.strength");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "ownership_strength") {
      for (const auto & c : pol.children) {
        if (c.name == "value") {
          p.ownership_strength = int32(c, "ownership_strength.value");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "destination_order") {
      for (const auto & c : pol.children) {
        if (c.name == "kind") {
          p.destination_order_kind = token<DestinationOrderKind>(
            c, "destination_order.kind",
            {{"BY_RECEPTION_TIMESTAMP", DestinationOrderKind::ByReceptionTimestamp},
              {"BY_SOURCE_TIMESTAMP", DestinationOrderKind::BySourceTimestamp}});
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "writer_data_lifecycle") {
      for (const auto & c : pol.children) {
        if (c.name == "autodispose_unregistered_instances") {
          p.autodispose_unregistered_instances =
            boolean(c, "writer_data_lifecycle.autodispose_unregistered_instances");
        } else {
          ignore(c, n);
        }
      }
    } else if (n == "reader_data_lifecycle") {
      for (const auto & c : pol.children) {
        if (c.name == "autopurge_disposed_samples_delay") {
          p.autopurge_disposed_samples_delay =
            duration(c, "reader_data_lifecycle.autopurge_disposed_samples_delay");
        } else if (c.name == "autopurge_no_writer_samples_delay") {
          p.autopurge_no_writer_samples_delay =
            duration(c, "reader_data_lifecycle.autopurge_no_writer_samples_delay");
        } else {
          ignore(c, n);
        }
      }
    } else {
      ignore(pol, "qos");
    }
  }
  return p;
}

struct RawEndpoint
{
  std::string name;
  EndpointKind kind;
  std::optional<std::string> topic;
  PartialQos qos;
  SourceLocation location;
};

struct TopicLayer
{
  PartialQos qos;
  SourceLocation location;
};

std::optional<std::string> topic_name_of(
  DocumentReader & reader, const xml::Element & topic_el, PartialQos * layer_qos)
{
  std::optional<std::string> name;
  for (const auto & c : topic_el.children) {
    if (c.name == "name") {
      name = c.trimmed_text();
    } else if (c.name == "qos" && layer_qos != nullptr) {
      *layer_qos = reader.qos(c);
    } else {
      reader.ignore(c, "topic");
    }
  }
  return name;
}

void read_profiles_container(
  DocumentReader & reader, const xml::Element & profiles,
  std::vector<RawEndpoint> & endpoints, std::map<std::string, TopicLayer> & layers)
{
  for (const auto & el : profiles.children) {
    if (el.name == "data_writer" || el.name == "data_reader") {
      const auto * name = el.attribute("profile_name");
      if (name == nullptr || name->empty()) {
        reader.note(el, "<" + el.name + "> without profile_name attribute skipped");
        continue;
      }
      RawEndpoint raw{*name,
        el.name == "data_writer" ? EndpointKind::DataWriter : EndpointKind::DataReader,
        std::nullopt, {}, reader.location(el)};
      for (const auto & c : el.children) {
        if (c.name == "topic") {
          raw.topic = topic_name_of(reader, c, nullptr);
        } else if (c.name == "qos") {
          raw.qos = reader.qos(c);
        } else {
          reader.ignore(c, el.name);
        }
      }
      endpoints.push_back(std::move(raw));
    } else if (el.name == "topic") {
      PartialQos layer;
      const auto name = topic_name_of(reader, el, &layer);
      if (!name) {
        reader.note(el, "<topic> without <name> skipped");
        continue;
      }
      const auto [it, inserted] = layers.emplace(*name, TopicLayer{layer, reader.location(el)});
      if (!inserted) {
        reader.fail(
          el, "duplicate topic QoS block for '" + *name + "' (first defined at " +
          it->second.location.to_string() + ")");
      }
    } else {
      reader.ignore(el, "profiles");
    }
  }
}

void write_duration(std::ostream & os, int indent, std::string_view tag, Duration d)
{
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (d.is_infinite()) {
    os << pad << '<' << tag << '>' << kInfinityToken << "</" << tag << ">\n";
    return;
  }
  os << pad << '<' << tag << ">\n"
     << pad << "  <sec>" << d.nanos() / 1'000'000'000 << "</sec>\n"
     << pad << "  <nanosec>" << d.nanos() % 1'000'000'000 << "</nanosec>\n"
     << pad << "</" << tag << ">\n";
}

std::string hex(const Bytes & b)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (const auto byte : b) {
    out += digits[byte >> 4];
    out += digits[byte & 0xf];
  }
  return out;
}

std::string token(std::string_view lower_name) {return upper(lower_name);}

void write_qos(std::ostream & os, const QosProfile & q)
{
  const auto leaf = [&os](int indent, std::string_view tag, const std::string & value) {
      os << std::string(static_cast<std::size_t>(indent), ' ') << '<' << tag << '>' <<
        xml::escape(value) << "</" << tag << ">\n";
    };
  const auto open = [&os](int indent, std::string_view tag) {
      os << std::string(static_cast<std::size_t>(indent), ' ') << '<' << tag << ">\n";
    };
  const auto close = [&os](int indent, std::string_view tag) {
      os << std::string(static_cast<std::size_t>(indent), ' ') << "</" << tag << ">\n";
    };
  const auto boolstr = [](bool b) {return std::string{b ? "true" : "false"};};

  open(4, "qos");
  open(6, "entity_factory");
  leaf(8, "autoenable_created_entities", boolstr(q.entity_factory.autoenable_created_entities));
  close(6, "entity_factory");

  open(6, "partition");
  open(8, "names");
  for (const auto & n : q.partition.names) {
    leaf(10, "name", n);
  }
  close(8, "names");
  close(6, "partition");

  for (const auto & [tag, data] : {std::pair{"user_data", &q.user_data},
      std::pair{"group_data", &q.group_data}, std::pair{"topic_data", &q.topic_data}})
  {
    open(6, tag);
    leaf(8, "value", hex(data->value));
    close(6, tag);
  }

  open(6, "reliability");
  leaf(8, "kind", token(to_string(q.reliability.kind)));
  write_duration(os, 8, "max_blocking_time", q.reliability.max_blocking_time);
  close(6, "reliability");

  open(6, "durability");
  leaf(8, "kind", token(to_string(q.durability.kind)));
  close(6, "durability");

  open(6, "deadline");
  write_duration(os, 8, "period", q.deadline.period);
  close(6, "deadline");

  open(6, "liveliness");
  leaf(8, "kind", token(to_string(q.liveliness.kind)));
  write_duration(os, 8, "lease_duration", q.liveliness.lease_duration);
  close(6, "liveliness");

  open(6, "history");
  leaf(8, "kind", token(to_string(q.history.kind)));
  leaf(8, "depth", std::to_string(q.history.depth));
  close(6, "history");

  open(6, "resource_limits");
  leaf(8, "max_samples", q.resource_limits.max_samples.to_string());
  leaf(8, "max_instances", q.resource_limits.max_instances.to_string());
  leaf(8, "max_samples_per_instance", q.resource_limits.max_samples_per_instance.to_string());
  close(6, "resource_limits");

  open(6, "lifespan");
  write_duration(os, 8, "duration", q.lifespan.duration);
  close(6, "lifespan");

  open(6, "ownership");
  leaf(8, "kind", token(to_string(q.ownership.kind)));
  leaf(8, "strength", std::to_string(q.ownership_strength.value));
  close(6, "ownership");

  open(6, "destination_order");
  leaf(8, "kind", token(to_string(q.destination_order.kind)));
  close(6, "destination_order");

  open(6, "writer_data_lifecycle");
  leaf(
    8, "autodispose_unregistered_instances",
    boolstr(q.writer_data_lifecycle.autodispose_unregistered_instances));
  close(6, "writer_data_lifecycle");

  open(6, "reader_data_lifecycle");
  write_duration(
    os, 8, "autopurge_disposed_samples_delay",
    q.reader_data_lifecycle.autopurge_disposed_samples_delay);
  write_duration(
    os, 8, "autopurge_no_writer_samples_delay",
    q.reader_data_lifecycle.autopurge_no_writer_samples_delay);
  close(6, "reader_data_lifecycle");
  close(4, "qos");
}

}  // namespace

ProfileSet parse_profiles(const std::vector<ProfileDocument> & documents)
{
  ProfileSet set;
  std::vector<RawEndpoint> raw;
  std::map<std::string, TopicLayer> layers;

  for (const auto & doc : documents) {
    const auto root = xml::parse(doc.text, doc.path);
    DocumentReader reader{doc.path, set.diagnostics()};
    if (root.name == "profiles") {
      read_profiles_container(reader, root, raw, layers);
    } else if (root.name == "dds") {
      for (const auto & c : root.children) {
        if (c.name == "profiles") {
          read_profiles_container(reader, c, raw, layers);
        } else {
          reader.ignore(c, "dds");
        }
      }
    } else {
      reader.note(root, "root element <" + root.name + "> is not <dds> or <profiles>; nothing loaded");
    }
  }

  for (auto & r : raw) {
    PartialQos effective = r.qos;
    if (r.topic) {
      if (const auto it = layers.find(*r.topic); it != layers.end()) {
        effective = merge(it->second.qos, r.qos);
      }
    }
    set.add(EndpointProfile{r.name, r.kind, r.topic, resolve_defaults(effective, r.kind),
        r.location});
  }
  return set;
}

std::string serialize_canonical(const ProfileSet & set)
{
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<profiles>\n";
  for (const auto & [name, ep] : set.endpoints()) {
    const auto tag = ep.is_writer() ? "data_writer" : "data_reader";
    os << "  <" << tag << " profile_name=\"" << xml::escape(name) << "\">\n";
    if (ep.topic_name) {
      os << "    <topic>\n      <name>" << xml::escape(*ep.topic_name) << "</name>\n    </topic>\n";
    }
    write_qos(os, ep.qos);
    os << "  </" << tag << ">\n";
  }
  os << "</profiles>\n";
  return os.str();
}

ProfileDocument read_document(const std::string & path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in) {
    throw LoadError("cannot read file", path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw LoadError("error while reading file", path);
  }
  return {path, buf.str()};
}

}  // namespace qos_guard
