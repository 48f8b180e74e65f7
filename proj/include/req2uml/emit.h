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

// Serializers: inline annotated XML, model XML and class-diagram source.

#ifndef REQ2UML_EMIT_H_
#define REQ2UML_EMIT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "req2uml/document.h"
#include "req2uml/uml_model.h"

namespace req2uml {

enum class DiagramDialect { kPlantUml, kMermaid };

std::optional<DiagramDialect> ParseDialect(std::string_view name);
// File extension for diagram output, without the dot: "puml" or "mmd".
std::string_view DiagramExtension(DiagramDialect dialect);

struct EmitConfig {
  TypeSet keep_types{std::string(kClassType), std::string(kAssociationType),
                     std::string(kAttributeType)};
  DiagramDialect dialect = DiagramDialect::kPlantUml;
};

class EmitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string EscapeXml(std::string_view text);

// The document text with each kept annotation wrapped in an element named
// after its type, features as attributes. Nested annotations nest as
// elements; partially overlapping ones raise EmitError naming both spans.
// The root element is <doc>, with a source attribute when the document has
// a name.
std::string EmitInlineXml(const Document& doc, const EmitConfig& cfg);

// Compact, stable-ordered model XML: classes by name, attributes by name
// within their class, associations by (name, from, to).
std::string EmitModelXml(const UmlModel& model);

std::string EmitDiagram(const UmlModel& model, const EmitConfig& cfg);

}  // namespace req2uml

#endif  // REQ2UML_EMIT_H_
