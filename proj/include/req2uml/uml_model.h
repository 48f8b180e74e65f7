// Copyright 2026 The req2uml Authors.
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

// Builds a UML class model from the classe / Association / Attribut
// annotations left by the transducer.

#ifndef REQ2UML_UML_MODEL_H_
#define REQ2UML_UML_MODEL_H_

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "req2uml/document.h"

namespace req2uml {

inline constexpr std::string_view kClassType = "classe";
inline constexpr std::string_view kAssociationType = "Association";
inline constexpr std::string_view kAttributeType = "Attribut";

using DeterminerSet = std::set<std::string, std::less<>>;

struct UmlClass {
  std::string name;
  std::set<std::string> surface_forms;
  std::vector<Span> source_spans;
};

struct UmlAttribute {
  std::string name;
  std::string owner;  // name of the owning UmlClass
  Span source_span;
};

struct UmlAssociation {
  std::string name;
  std::string source;  // class names
  std::string target;
  Span source_span;
};

struct UmlModel {
  std::vector<UmlClass> classes;
  std::vector<UmlAttribute> attributes;
  std::vector<UmlAssociation> associations;
  // Links that could not be resolved, one human-readable line each.
  std::vector<std::string> diagnostics;

  const UmlClass* FindClass(std::string_view name) const;
  bool empty() const {
    return classes.empty() && attributes.empty() && associations.empty();
  }
};

// Same class names, attributes (owner, name) and associations
// (name, source, target), irrespective of order. Spans, surface forms and
// diagnostics are ignored.
bool StructurallyEqual(const UmlModel& a, const UmlModel& b);

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Lowercases, collapses whitespace and strips one leading determiner word
// (or an elided determiner such as "l'").
std::string NormalizeEntityName(std::string_view surface,
                                const DeterminerSet& determiners);

// One determiner per line; `#` comments allowed.
DeterminerSet LoadDeterminers(const std::filesystem::path& path);

UmlModel BuildModel(const Document& doc, const DeterminerSet& determiners);

// The token-level span each UML annotation denotes: the head noun phrase of
// a class, the verb of an association, the noun naming an attribute. These
// are the spans the evaluation harness compares against gold.
struct Mention {
  std::string type;
  Span span;
  auto operator<=>(const Mention&) const = default;
};

std::vector<Mention> ExtractMentions(const Document& doc);

}  // namespace req2uml

#endif  // REQ2UML_UML_MODEL_H_
