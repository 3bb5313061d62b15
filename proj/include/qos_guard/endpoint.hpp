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

#ifndef QOS_GUARD__ENDPOINT_HPP_
#define QOS_GUARD__ENDPOINT_HPP_

#include <optional>
#include <string>

#include "qos_guard/qos.hpp"

namespace qos_guard
{

struct SourceLocation
{
  std::string document;
  int line = 0;

  bool operator==(const SourceLocation &) const = default;
  std::string to_string() const;
};

/// A named DataWriter or DataReader with its fully resolved QoS.
struct EndpointProfile
{
  std::string profile_name;
  EndpointKind kind = EndpointKind::DataWriter;
  std::optional<std::string> topic_name;
  QosProfile qos;
  SourceLocation location;

  bool is_writer() const {return kind == EndpointKind::DataWriter;}
  bool is_reader() const {return kind == EndpointKind::DataReader;}

  /// Content equality. The source location is provenance and is not
  /// compared, so a profile re-read from canonical output compares equal.
  bool operator==(const EndpointProfile & other) const
  {
    return profile_name == other.profile_name && kind == other.kind &&
           topic_name == other.topic_name && qos == other.qos;
  }
};

}  // namespace qos_guard

#endif  // QOS_GUARD__ENDPOINT_HPP_
