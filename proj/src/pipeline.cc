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

#include "req2uml/pipeline.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "req2uml/unicode.h"

namespace req2uml {
namespace {

std::filesystem::path Require(const std::filesystem::path& path,
                              std::string_view what) {
  if (!std::filesystem::exists(path)) {
    throw ResourceError(path.string(), "missing " + std::string(what));
  }
  return path;
}

}  // namespace

Resources Resources::Load(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) {
    throw ResourceError(root.string(), "resource root is not a directory");
  }
  Resources r;
  r.lexicon = Lexicon::Load(Require(root / "lexicon.tsv", "lexicon"));
  r.gazetteer = Gazetteer(LoadGazetteer(
      Require(root / "gazetteer" / "lists.def", "gazetteer index")));
  r.determiners =
      LoadDeterminers(Require(root / "determiners.txt", "determiner list"));

  const std::filesystem::path phase_list =
      Require(root / "rules" / "phases.lst", "rule phase list");
  std::ifstream in(phase_list);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string entry = Trim(line);
    if (entry.empty() || entry.starts_with("#")) continue;
    const std::filesystem::path rule_path = phase_list.parent_path() / entry;
    if (!std::filesystem::exists(rule_path)) {
      throw ResourceError(phase_list.string(), line_no,
                          "missing rule file " + rule_path.string());
    }
    r.phases.push_back(LoadRuleFile(rule_path));
  }
  if (r.phases.empty()) {
    throw ResourceError(phase_list.string(), "no rule phases listed");
  }
  return r;
}

void OverrideControl(std::vector<RulePhase>& phases, ControlMode mode) {
  for (RulePhase& p : phases) p.control = mode;
}

Analysis Analyze(std::string_view utf8_text, std::string name,
                 const Resources& resources) {
  Analysis a{Document(utf8_text, std::move(name)), {}};
  Tokenize(a.doc);
  SplitSentences(a.doc);
  PosTagDocument(a.doc, resources.lexicon);
  resources.gazetteer.Annotate(a.doc);
  RunTransducer(a.doc, resources.phases);
  a.model = BuildModel(a.doc, resources.determiners);
  return a;
}

RenderedOutputs Render(const Analysis& analysis, const EmitConfig& cfg) {
  return RenderedOutputs{EmitInlineXml(analysis.doc, cfg) + "\n",
                         EmitModelXml(analysis.model) + "\n",
                         EmitDiagram(analysis.model, cfg)};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError(path.string(), "cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::filesystem::path> ExpandInputs(
    const std::vector<std::filesystem::path>& inputs) {
  std::vector<std::filesystem::path> out;
  for (const auto& input : inputs) {
    if (std::filesystem::is_directory(input)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(input);
    }
  }
  return out;
}

}  // namespace req2uml
