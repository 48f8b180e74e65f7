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

// End-to-end pipeline: resources, per-document analysis, rendered outputs.

#ifndef REQ2UML_PIPELINE_H_
#define REQ2UML_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "req2uml/document.h"
#include "req2uml/emit.h"
#include "req2uml/lingpipe.h"
#include "req2uml/rule_engine.h"
#include "req2uml/uml_model.h"

namespace req2uml {

// Everything loaded from a resource root:
//
//   lexicon.tsv            POS lexicon
//   gazetteer/lists.def    gazetteer index (phrase files next to it)
//   rules/phases.lst       rule files, one per line, in execution order
//   determiners.txt        determiners stripped from entity names
struct Resources {
  Lexicon lexicon;
  Gazetteer gazetteer{{}};
  std::vector<RulePhase> phases;
  DeterminerSet determiners;

  // Throws ResourceError for missing or malformed files and RuleSyntaxError
  // for rule files that do not parse.
  static Resources Load(const std::filesystem::path& root);
};

// Forces every phase to `mode`.
void OverrideControl(std::vector<RulePhase>& phases, ControlMode mode);

struct Analysis {
  Document doc;
  UmlModel model;
};

// Tokenize, split, tag, gazetteer, transducer, model.
Analysis Analyze(std::string_view utf8_text, std::string name,
                 const Resources& resources);

struct RenderedOutputs {
  std::string annotated_xml;
  std::string model_xml;
  std::string diagram;
};

// Each output ends with a single newline.
RenderedOutputs Render(const Analysis& analysis, const EmitConfig& cfg);

// Reads a whole file; throws ResourceError if it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);

// Expands directories into their *.txt files (sorted); files pass through.
std::vector<std::filesystem::path> ExpandInputs(
    const std::vector<std::filesystem::path>& inputs);

}  // namespace req2uml

#endif  // REQ2UML_PIPELINE_H_
