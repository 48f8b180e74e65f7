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

#include <fstream>
#include <sstream>

#include "req2uml/lingpipe.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

bool IsWordChar(char32_t c) { return IsLetter(c) || IsDigit(c); }

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  std::istringstream in{std::string(Trim(text))};
  std::string word;
  while (in >> word) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

}  // namespace

std::string_view CasePolicyName(CasePolicy policy) {
  switch (policy) {
    case CasePolicy::kMinuscule: return "Minuscule";
    case CasePolicy::kJustPremierMaj: return "JustPremierMaj";
    case CasePolicy::kPremierMaj: return "PremierMaj";
    case CasePolicy::kMajuscule: return "Majuscule";
  }
  return "Minuscule";
}

std::optional<CasePolicy> ParseCasePolicy(std::string_view name) {
  for (CasePolicy p : {CasePolicy::kMinuscule, CasePolicy::kJustPremierMaj,
                       CasePolicy::kPremierMaj, CasePolicy::kMajuscule}) {
    if (CasePolicyName(p) == name) return p;
  }
  return std::nullopt;
}

bool SatisfiesCasePolicy(std::u32string_view surface, CasePolicy policy) {
  switch (policy) {
    case CasePolicy::kMinuscule:
      for (char32_t c : surface) {
        if (IsUpper(c)) return false;
      }
      return true;
    case CasePolicy::kMajuscule:
      for (char32_t c : surface) {
        if (IsLower(c)) return false;
      }
      return true;
    case CasePolicy::kJustPremierMaj: {
      bool first = true;
      for (char32_t c : surface) {
        if (!IsLetter(c)) continue;
        if (first ? !IsUpper(c) : IsUpper(c)) return false;
        first = false;
      }
      return !first;
    }
    case CasePolicy::kPremierMaj: {
      bool word_start = true;
      bool any = false;
      for (char32_t c : surface) {
        if (IsSpace(c)) {
          word_start = true;
          continue;
        }
        if (!IsLetter(c)) continue;
        if (word_start && !IsUpper(c)) return false;
        word_start = false;
        any = true;
      }
      return any;
    }
  }
  return false;
}

GazetteerList MakeGazetteerList(std::string concept_name, CasePolicy policy,
                                std::set<std::string> phrases,
                                std::string_view label,
                                std::optional<std::string> minor_type) {
  GazetteerList list;
  list.major_type =
      concept_name +
      std::string(label.empty() ? CasePolicyName(policy) : label);
  list.concept_name = std::move(concept_name);
  list.case_policy = policy;
  for (const std::string& p : phrases) {
    std::string canonical = CollapseWhitespace(p);
    if (!canonical.empty()) list.phrases.insert(std::move(canonical));
  }
  list.minor_type = std::move(minor_type);
  return list;
}

std::set<std::string> ReadPhraseFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open gazetteer list");
  std::set<std::string> phrases;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      std::string phrase = CollapseWhitespace(line);
      if (phrase.empty() || phrase.starts_with("#")) continue;
      DecodeUtf8(phrase);
      phrases.insert(std::move(phrase));
    } catch (const Utf8Error& e) {
      throw ResourceError(path.string(), line_no, e.what());
    }
  }
  return phrases;
}

std::vector<GazetteerList> LoadGazetteer(const std::filesystem::path& index) {
  std::ifstream in(index);
  if (!in) throw ResourceError(index.string(), "cannot open gazetteer index");
  std::vector<GazetteerList> lists;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line).starts_with("#")) continue;
    std::vector<std::string> fields;
    std::istringstream fs(line);
    std::string field;
    while (std::getline(fs, field, '\t')) fields.push_back(Trim(field));
    if (fields.size() < 3 || fields.size() > 4 || fields[0].empty() ||
        fields[1].empty() || fields[2].empty()) {
      throw ResourceError(index.string(), line_no,
                          "expected 'file<TAB>concept<TAB>policies"
                          "[<TAB>minorType]'");
    }
    std::optional<std::string> minor;
    if (fields.size() == 4 && !fields[3].empty()) minor = fields[3];

    const std::filesystem::path list_path = index.parent_path() / fields[0];
    if (!std::filesystem::exists(list_path)) {
      throw ResourceError(index.string(), line_no,
                          "missing list file " + list_path.string());
    }
    const std::set<std::string> phrases = ReadPhraseFile(list_path);

    std::istringstream ps(fields[2]);
    std::string item;
    while (std::getline(ps, item, ',')) {
      item = Trim(item);
      std::string label;
      if (auto eq = item.find('='); eq != std::string::npos) {
        label = Trim(item.substr(eq + 1));
        item = Trim(item.substr(0, eq));
        if (label.empty()) {
          throw ResourceError(index.string(), line_no,
                              "empty majorType label for policy " + item);
        }
      }
      auto policy = ParseCasePolicy(item);
      if (!policy) {
        throw ResourceError(index.string(), line_no,
                            "unknown case policy '" + item + "'");
      }
      lists.push_back(
          MakeGazetteerList(fields[1], *policy, phrases, label, minor));
    }
  }
  return lists;
}

Gazetteer::Gazetteer(std::vector<GazetteerList> lists)
    : lists_(std::move(lists)) {
  tries_.reserve(lists_.size());
  for (const GazetteerList& list : lists_) {
    Trie trie;
    trie.nodes.emplace_back();
    for (const std::string& phrase : list.phrases) {
      const std::u32string key = ToLower(DecodeUtf8(phrase));
      size_t node = 0;
      for (char32_t c : key) {
        auto it = trie.nodes[node].next.find(c);
        if (it == trie.nodes[node].next.end()) {
          trie.nodes.emplace_back();
          const size_t child = trie.nodes.size() - 1;
          trie.nodes[node].next.emplace(c, child);
          node = child;
        } else {
          node = it->second;
        }
      }
      trie.nodes[node].phrase_length = key.size();
    }
    tries_.push_back(std::move(trie));
  }
}

void Gazetteer::Annotate(Document& doc) const {
  const std::u32string& text = doc.text();
  const std::u32string_view view(text);
  for (size_t l = 0; l < lists_.size(); ++l) {
    const GazetteerList& list = lists_[l];
    const Trie& trie = tries_[l];
    for (size_t start = 0; start < text.size(); ++start) {
      if (start > 0 && IsWordChar(text[start - 1])) continue;
      size_t node = 0;
      size_t best_end = 0;
      for (size_t k = start; k < text.size(); ++k) {
        const char32_t key = IsSpace(text[k]) ? U' ' : ToLower(text[k]);
        auto it = trie.nodes[node].next.find(key);
        if (it == trie.nodes[node].next.end()) break;
        node = it->second;
        const size_t end = k + 1;
        if (trie.nodes[node].phrase_length == 0) continue;
        if (end < text.size() && IsWordChar(text[end])) continue;
        if (!SatisfiesCasePolicy(view.substr(start, end - start),
                                 list.case_policy)) {
          continue;
        }
        best_end = end;
      }
      if (best_end == 0) continue;
      FeatureMap features{{"majorType", list.major_type}};
      if (list.minor_type) features["minorType"] = *list.minor_type;
      doc.Add(std::string(kLookupType), Span{start, best_end},
              std::move(features));
    }
  }
}

void GazetteerLookup(Document& doc, const std::vector<GazetteerList>& lists) {
  if (lists.empty()) return;
  Gazetteer(lists).Annotate(doc);
}

}  // namespace req2uml
