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

#ifndef QOS_GUARD__CHAIN_GRAPH_HPP_
#define QOS_GUARD__CHAIN_GRAPH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qos_guard/rule_engine.hpp"

namespace qos_guard
{

struct PolicyNode
{
  std::string_view abbreviation;
  std::string_view name;
  bool discovery = false;
  bool data_exchange = false;
  bool disassociation = false;
};

/// Direction of a matrix cell relative to (row, column).
enum class EdgeDirection { Forward, Reverse, Bidirectional };

/// One non-empty cell of the policy dependency matrix.
struct ChainEdge
{
  std::string_view from;  // row
  std::string_view to;    // column
  Severity severity = Severity::Critical;
  EdgeDirection direction = EdgeDirection::Forward;
  bool operator==(const ChainEdge &) const = default;
};

struct ChainGraph
{
  std::vector<PolicyNode> nodes;
  std::vector<ChainEdge> edges;
};

/// The 16-policy dependency chain, nodes in catalog order, edges in
/// row-major matrix order.
const ChainGraph & chain_graph();

enum class GraphFormat { Dot, Json };

/// dot: deduplicated directed relations colored red/orange/gray by
/// severity, nodes clustered by lifecycle phase. json: nodes with phase
/// flags plus every matrix cell.
std::string export_chain_graph(GraphFormat format);

std::string_view to_string(EdgeDirection d);

}  // namespace qos_guard

#endif  // QOS_GUARD__CHAIN_GRAPH_HPP_
