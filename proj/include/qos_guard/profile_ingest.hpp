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

#ifndef QOS_GUARD__PROFILE_INGEST_HPP_
#define QOS_GUARD__PROFILE_INGEST_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qos_guard/endpoint.hpp"

namespace qos_guard
{

/// Raised for anything that prevents a document set from loading, such as
/// malformed XML or a duplicate profile name.
class LoadError : public std::runtime_error
{
public:
  LoadError(std::string message, std::string document = {}, int line = 0, int column = 0);

  const std::string & document() const {return document_;}
  int line() const {return line_;}
  int column() const {return column_;}

private:
  std::string document_;
  int line_;
  int column_;
};

enum class ParseLevel { Info, Warning };

struct ParseDiagnostic
{
  ParseLevel level = ParseLevel::Info;
  SourceLocation location;
  std::string message;

  bool operator==(const ParseDiagnostic &) const = default;
};

struct ProfileDocument
{
  std::string path;
  std::string text;
};

struct TopicEndpoints
{
  std::vector<std::string> writers;
  std::vector<std::string> readers;
};

/// Loaded endpoints keyed by unique profile name.
class ProfileSet
{
public:
  /// Throws LoadError on a duplicate profile name.
  void add(EndpointProfile endpoint);

  const std::map<std::string, EndpointProfile> & endpoints() const {return endpoints_;}
  const EndpointProfile * find(const std::string & name) const;
  std::size_t size() const {return endpoints_.size();}
  bool empty() const {return endpoints_.empty();}

  /// Endpoints grouped by topic name; names within a bucket are sorted.
  std::map<std::string, TopicEndpoints> topic_index() const;
  /// Endpoints without a topic binding.
  TopicEndpoints unbound() const;

  std::vector<ParseDiagnostic> & diagnostics() {return diagnostics_;}
  const std::vector<ParseDiagnostic> & diagnostics() const {return diagnostics_;}

  /// Endpoint content only; parse diagnostics are not compared.
  bool operator==(const ProfileSet & other) const {return endpoints_ == other.endpoints_;}

private:
  std::map<std::string, EndpointProfile> endpoints_;
  std::vector<ParseDiagnostic> diagnostics_;
};

/// Parse profile documents into a default-resolved ProfileSet.
///
/// Recognized layout (root <dds> wrapping <profiles>, or <profiles> alone):
///
///   <profiles>
///     <topic><name>scan</name><qos>...</qos></topic>      (optional layer)
///     <data_writer profile_name="w1">
///       <topic><name>scan</name></topic>
///       <qos> ...policy elements... </qos>
///     </data_writer>
///     <data_reader profile_name="r1"> ... </data_reader>
///   </profiles>
///
/// Unknown elements yield Info diagnostics on the returned set.
/// Throws LoadError.
ProfileSet parse_profiles(const std::vector<ProfileDocument> & documents);

/// Deterministic canonical XML: profiles sorted by name, all 16 policies
/// materialized in catalog order.
std::string serialize_canonical(const ProfileSet & set);

/// Reads a file from disk into a ProfileDocument. Throws LoadError.
ProfileDocument read_document(const std::string & path);

}  // namespace qos_guard

#endif  // QOS_GUARD__PROFILE_INGEST_HPP_
