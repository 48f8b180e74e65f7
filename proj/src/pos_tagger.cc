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

#include <array>
#include <fstream>
#include <sstream>

#include "req2uml/lingpipe.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 11> kTagNames = {{
    {PosTag::kPRP, "PRP"},
    {PosTag::kDET, "DET"},
    {PosTag::kNN, "NN"},
    {PosTag::kNNP, "NNP"},
    {PosTag::kNNS, "NNS"},
    {PosTag::kV, "V"},
    {PosTag::kVB, "VB"},
    {PosTag::kADJ, "ADJ"},
    {PosTag::kNUM, "NUM"},
    {PosTag::kPUNCT, "PUNCT"},
    {PosTag::kOTHER, "OTHER"},
}};

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(Trim(field));
  return fields;
}

PosTag RequireTag(const std::string& name, const std::string& source,
                  int line) {
  auto tag = ParseTag(name);
  if (!tag) throw ResourceError(source, line, "unknown POS tag '" + name + "'");
  return *tag;
}

}  // namespace

std::string_view TagName(PosTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "OTHER";
}

std::optional<PosTag> ParseTag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

void Lexicon::AddEntry(std::string_view word, PosTag tag) {
  entries_[ToLowerUtf8(word)] = tag;
}

void Lexicon::AddSuffixRule(std::string_view suffix, PosTag tag) {
  suffix_rules_.emplace_back(ToLowerUtf8(suffix), tag);
}

PosTag Lexicon::Lookup(std::string_view word) const {
  const std::string lowered = ToLowerUtf8(word);
  if (auto it = entries_.find(lowered); it != entries_.end()) {
    return it->second;
  }
  for (const auto& [suffix, tag] : suffix_rules_) {
    if (lowered.size() > suffix.size() && lowered.ends_with(suffix)) {
      return tag;
    }
  }
  return default_tag_;
}

Lexicon Lexicon::Parse(std::istream& in, const std::string& source_name) {
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields[0] == "#suffix") {
      if (fields.size() != 3 || fields[1].empty()) {
        throw ResourceError(source_name, line_no,
                            "expected '#suffix<TAB>suffix<TAB>TAG'");
      }
      lexicon.AddSuffixRule(fields[1],
                            RequireTag(fields[2], source_name, line_no));
      continue;
    }
    if (fields[0] == "#default") {
      if (fields.size() != 2) {
        throw ResourceError(source_name, line_no,
                            "expected '#default<TAB>TAG'");
      }
      lexicon.set_default_tag(RequireTag(fields[1], source_name, line_no));
      continue;
    }
    if (fields[0].starts_with("#")) continue;
    if (fields.size() != 2 || fields[0].empty()) {
      throw ResourceError(source_name, line_no, "expected 'word<TAB>TAG'");
    }
    lexicon.AddEntry(fields[0], RequireTag(fields[1], source_name, line_no));
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open lexicon");
  try {
    return Parse(in, path.string());
  } catch (const Utf8Error& e) {
    throw ResourceError(path.string(), e.what());
  }
}

void PosTagDocument(Document& doc, const Lexicon& lexicon) {
  for (const Annotation& token : doc.AnnotationsOf({std::string(kTokenType)})) {
    const auto kind = token.Feature("kind");
    PosTag tag = PosTag::kOTHER;
    if (kind == "word") {
      tag = lexicon.Lookup(doc.Slice(token.span));
    } else if (kind == "number") {
      tag = PosTag::kNUM;
    } else if (kind == "punctuation") {
      tag = PosTag::kPUNCT;
    }
    doc.SetFeature(token.id, "category", std::string(TagName(tag)));
  }
}

}  // namespace req2uml
