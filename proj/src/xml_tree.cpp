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

#include "xml_tree.hpp"

#include <expat.h>

#include <memory>
#include <vector>

#include "qos_guard/profile_ingest.hpp"

namespace qos_guard::xml
{

namespace
{

std::string local_name(const XML_Char * name)
{
  std::string_view n{name};
  const auto colon = n.rfind(':');
  return std::string{colon == std::string_view::npos ? n : n.substr(colon + 1)};
}

struct BuildState
{
  XML_Parser parser = nullptr;
  Element root;
  bool has_root = false;
  std::vector<Element *> stack;
};

void XMLCALL on_start(void * user, const XML_Char * name, const XML_Char ** attrs)
{
  auto * st = static_cast<BuildState *>(user);
  Element * el = nullptr;
  if (st->stack.empty()) {
    st->has_root = true;
    el = &st->root;
  } else {
    el = &st->stack.back()->children.emplace_back();
  }
  el->name = local_name(name);
  el->line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  el->column = static_cast<int>(XML_GetCurrentColumnNumber(st->parser)) + 1;
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    el->attributes[local_name(attrs[i])] = attrs[i + 1];
  }
  st->stack.push_back(el);
}

void XMLCALL on_end(void * user, const XML_Char *)
{
  static_cast<BuildState *>(user)->stack.pop_back();
}

void XMLCALL on_text(void * user, const XML_Char * s, int len)
{
  auto * st = static_cast<BuildState *>(user);
  if (!st->stack.empty()) {
    st->stack.back()->text.append(s, static_cast<std::size_t>(len));
  }
}

struct ParserDeleter
{
  void operator()(XML_ParserStruct * p) const {XML_ParserFree(p);}
};

}  // namespace

const Element * Element::child(std::string_view n) const
{
  for (const auto & c : children) {
    if (c.name == n) {
      return &c;
    }
  }
  return nullptr;
}

const std::string * Element::attribute(std::string_view n) const
{
  const auto it = attributes.find(std::string{n});
  return it == attributes.end() ? nullptr : &it->second;
}

std::string Element::trimmed_text() const
{
  return std::string{trim(text)};
}

std::string_view trim(std::string_view s)
{
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Element parse(std::string_view text, const std::string & document)
{
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser{XML_ParserCreate("UTF-8")};
  if (!parser) {
    throw LoadError("cannot allocate XML parser", document);
  }
  BuildState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  const auto status = XML_Parse(
    parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE);
  if (status != XML_STATUS_OK) {
    const auto line = static_cast<int>(XML_GetCurrentLineNumber(parser.get()));
    const auto col = static_cast<int>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    throw LoadError(
      std::string{"malformed XML: "} + XML_ErrorString(XML_GetErrorCode(parser.get())),
      document, line, col);
  }
  if (!st.has_root) {
    throw LoadError("malformed XML: no root element", document, 1, 1);
  }
  return std::move(st.root);
}

std::string escape(std::string_view raw)
{
  std::string out;
  out.reserve(raw.size());
  for (const char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace qos_guard::xml
