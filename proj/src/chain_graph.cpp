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

#include "qos_guard/chain_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace qos_guard
{

namespace
{

constexpr auto C = Severity::Critical;
constexpr auto N = Severity::Conditional;
constexpr auto I = Severity::Incidental;
constexpr auto F = EdgeDirection::Forward;
constexpr auto R = EdgeDirection::Reverse;
constexpr auto B = EdgeDirection::Bidirectional;

ChainGraph build()
{
  ChainGraph g;
  g.nodes = {
    {"ENTFAC", "ENTITY_FACTORY", true, false, false},
    {"PART", "PARTITION", true, false, false},
    {"USRDATA", "USER_DATA", true, false, false},
    {"GRPDATA", "GROUP_DATA", true, false, false},
    {"TOPDATA", "TOPIC_DATA", true, false, false},
    {"RELIAB", "RELIABILITY", true, true, true},
    {"DURABL", "DURABILITY", true, true, true},
    {"DEADLN", "DEADLINE", true, true, false},
    {"LIVENS", "LIVELINESS", true, true, true},
    {"HIST", "HISTORY", false, true, false},
    {"RESLIM", "RESOURCE_LIMITS", false, true, false},
    {"LFSPAN", "LIFESPAN", false, true, false},
    {"OWNST", "OWNERSHIP", true, true, true},
    {"DESTORD", "DESTINATION_ORDER", true, true, false},
    {"WDLIFE", "WRITER_DATA_LIFECYCLE", false, false, true},
    {"RDLIFE", "READER_DATA_LIFECYCLE", false, false, true},
  };
  g.edges = {
    {"ENTFAC", "DURABL", I, F},

    {"PART", "PART", C, B},
    {"PART", "DURABL", I, F},
    {"PART", "DEADLN", I, F},
    {"PART", "LIVENS", I, F},

    {"RELIAB", "RELIAB", C, B},
    {"RELIAB", "DURABL", C, F},
    {"RELIAB", "DEADLN", N, F},
    {"RELIAB", "LIVENS", N, F},
    {"RELIAB", "HIST", N, R},
    {"RELIAB", "RESLIM", N, R},
    {"RELIAB", "LFSPAN", N, R},
    {"RELIAB", "OWNST", C, F},
    {"RELIAB", "WDLIFE", N, F},

    {"DURABL", "ENTFAC", I, R},
    {"DURABL", "PART", I, R},
    {"DURABL", "RELIAB", C, R},
    {"DURABL", "DURABL", C, B},
    {"DURABL", "DEADLN", I, F},
    {"DURABL", "HIST", N, R},
    {"DURABL", "RESLIM", N, R},
    {"DURABL", "LFSPAN", N, R},
    {"DURABL", "RDLIFE", I, R},

    {"DEADLN", "PART", I, R},
    {"DEADLN", "RELIAB", N, R},
    {"DEADLN", "DURABL", I, R},
    {"DEADLN", "DEADLN", C, B},
    {"DEADLN", "LIVENS", N, R},
    {"DEADLN", "OWNST", N, F},

    {"LIVENS", "PART", I, R},
    {"LIVENS", "RELIAB", N, R},
    {"LIVENS", "DEADLN", N, F},
    {"LIVENS", "LIVENS", C, B},
    {"LIVENS", "OWNST", N, F},
    {"LIVENS", "RDLIFE", N, F},

    {"HIST", "RELIAB", N, F},
    {"HIST", "DURABL", N, F},
    {"HIST", "RESLIM", C, B},
    {"HIST", "LFSPAN", N, B},
    {"HIST", "DESTORD", N, B},

    {"RESLIM", "RELIAB", N, F},
    {"RESLIM", "DURABL", N, F},
    {"RESLIM", "HIST", C, B},
    {"RESLIM", "RESLIM", C, B},
    {"RESLIM", "LFSPAN", N, B},
    {"RESLIM", "DESTORD", N, F},

    {"LFSPAN", "RELIAB", N, F},
    {"LFSPAN", "DURABL", N, F},
    {"LFSPAN", "HIST", N, B},
    {"LFSPAN", "RESLIM", N, B},

    {"OWNST", "RELIAB", C, R},
    {"OWNST", "DEADLN", N, R},
    {"OWNST", "LIVENS", N, R},
    {"OWNST", "OWNST", C, B},
    {"OWNST", "WDLIFE", I, F},

    {"DESTORD", "HIST", N, R},
    {"DESTORD", "RESLIM", N, R},
    {"DESTORD", "DESTORD", C, B},

    {"WDLIFE", "RELIAB", N, R},
    {"WDLIFE", "OWNST", I, R},
    {"WDLIFE", "RDLIFE", N, F},

    {"RDLIFE", "DURABL", I, F},
    {"RDLIFE", "LIVENS", N, R},
    {"RDLIFE", "WDLIFE", N, R},
  };
  return g;
}

std::string_view color(Severity s)
{
  switch (s) {
    case Severity::Critical: return "red";
    case Severity::Conditional: return "orange";
    case Severity::Incidental: return "gray";
  }
  return "black";
}

std::string phase_key(const PolicyNode & n)
{
  std::string key;
  if (n.discovery) {
    key += "D";
  }
  if (n.data_exchange) {
    key += "X";
  }
  if (n.disassociation) {
    key += "A";
  }
  return key;
}

std::string phase_label(const std::string & key)
{
  std::string out;
  for (char c : key) {
    out += out.empty() ? "" : " + ";
    out += c == 'D' ? "discovery" : (c == 'X' ? "data exchange" : "disassociation");
  }
  return out;
}

std::string dot()
{
  const auto & g = chain_graph();
  std::ostringstream os;
  os << "digraph qos_chain {\n  rankdir=LR;\n  node [shape=box, fontname=\"Helvetica\"];\n";

  // Clusters in order of first appearance so output stays stable.
  std::vector<std::string> keys;
  for (const auto & n : g.nodes) {
    const auto k = phase_key(n);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      keys.push_back(k);
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    os << "  subgraph cluster_" << keys[i] << " {\n    label=\"" << phase_label(keys[i]) << "\";\n";
    for (const auto & n : g.nodes) {
      if (phase_key(n) == keys[i]) {
        os << "    " << n.abbreviation << " [tooltip=\"" << n.name << "\"];\n";
      }
    }
    os << "  }\n";
  }

  // A bidirectional cell and its mirror describe one relation.
  std::set<std::tuple<std::string_view, std::string_view, bool>> emitted;
  for (const auto & e : g.edges) {
    auto from = e.from;
    auto to = e.to;
    const bool both = e.direction == EdgeDirection::Bidirectional;
    if (e.direction == EdgeDirection::Reverse || (both && to < from)) {
      std::swap(from, to);
    }
    if (!emitted.emplace(from, to, both).second) {
      continue;
    }
    os << "  " << from << " -> " << to << " [color=" << color(e.severity);
    if (both) {
      os << ", dir=both";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string json_export()
{
  using nlohmann::json;
  const auto & g = chain_graph();
  json nodes = json::array();
  for (const auto & n : g.nodes) {
    nodes.push_back(
      {{"abbreviation", n.abbreviation}, {"name", n.name}, {"discovery", n.discovery},
        {"data_exchange", n.data_exchange}, {"disassociation", n.disassociation}});
  }
  json edges = json::array();
  for (const auto & e : g.edges) {
    edges.push_back(
      {{"row", e.from}, {"column", e.to}, {"severity", to_string(e.severity)},
        {"direction", to_string(e.direction)}});
  }
  return json{{"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
}

}  // namespace

const ChainGraph & chain_graph()
{
  static const ChainGraph graph = build();
  return graph;
}

std::string export_chain_graph(GraphFormat format)
{
  return format == GraphFormat::Dot ? dot() : json_export();
}

std::string_view to_string(EdgeDirection d)
{
  switch (d) {
    case EdgeDirection::Forward: return "forward";
    case EdgeDirection::Reverse: return "reverse";
    case EdgeDirection::Bidirectional: return "bidirectional";
  }
  return "";
}

}  // namespace qos_guard
