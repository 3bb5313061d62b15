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

#ifndef QOS_GUARD__XML_TREE_HPP_
#define QOS_GUARD__XML_TREE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qos_guard::xml
{

/// Minimal element tree. Namespace prefixes are stripped from names.
struct Element
{
  std::string name;
  std::map<std::string, std::string> attributes;
  std::string text;  // character data directly inside this element
  std::vector<Element> children;
  int line = 0;
  int column = 0;

  const Element * child(std::string_view name) const;
  const std::string * attribute(std::string_view name) const;
  /// Character data with surrounding whitespace removed.
  std::string trimmed_text() const;
};

/// Throws LoadError with line/column on malformed input.
Element parse(std::string_view text, const std::string & document);

/// Escape for element text and attribute values.
std::string escape(std::string_view raw);

std::string_view trim(std::string_view s);

}  // namespace qos_guard::xml

#endif  // QOS_GUARD__XML_TREE_HPP_
