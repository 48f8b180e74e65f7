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

// Linguistic preprocessing: tokenizer, sentence splitter, lexicon POS
// tagger and gazetteer lookup. Each stage adds annotations to a Document.

#ifndef REQ2UML_LINGPIPE_H_
#define REQ2UML_LINGPIPE_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "req2uml/document.h"
#include "req2uml/errors.h"

namespace req2uml {

inline constexpr std::string_view kTokenType = "Token";
inline constexpr std::string_view kSentenceType = "Sentence";
inline constexpr std::string_view kLookupType = "Lookup";

// ---------------------------------------------------------------------------
// Tokenizer and sentence splitter.

// Adds Token annotations with features kind (word, number, punctuation,
// symbol) and, for words, orth (lowercase, upperInitial, allCaps, mixedCaps).
// Throws PreconditionError if the document already has tokens.
void Tokenize(Document& doc);

// Adds Sentence annotations partitioning the tokens. A sentence closes after
// '.', '!' or '?' (plus any trailing closers) or at a blank line.
void SplitSentences(Document& doc);

// ---------------------------------------------------------------------------
// Lexicon POS tagger.

enum class PosTag { kPRP, kDET, kNN, kNNP, kNNS, kV, kVB, kADJ, kNUM, kPUNCT,
                    kOTHER };

std::string_view TagName(PosTag tag);
std::optional<PosTag> ParseTag(std::string_view name);

class Lexicon {
 public:
  explicit Lexicon(PosTag default_tag = PosTag::kNN)
      : default_tag_(default_tag) {}

  void AddEntry(std::string_view word, PosTag tag);
  void AddSuffixRule(std::string_view suffix, PosTag tag);
  void set_default_tag(PosTag tag) { default_tag_ = tag; }
  PosTag default_tag() const { return default_tag_; }

  // Exact lowercased form, then suffix rules in order, then the default.
  PosTag Lookup(std::string_view word) const;

  // Format: `word<TAB>TAG` per line; `#suffix<TAB>sfx<TAB>TAG` adds a suffix
  // rule; `#default<TAB>TAG` sets the fallback; other `#` lines and blank
  // lines are ignored.
  static Lexicon Parse(std::istream& in, const std::string& source_name);
  static Lexicon Load(const std::filesystem::path& path);

 private:
  std::map<std::string, PosTag, std::less<>> entries_;
  std::vector<std::pair<std::string, PosTag>> suffix_rules_;
  PosTag default_tag_;
};

// Adds a category feature to every Token: words via the lexicon, numbers
// NUM, punctuation PUNCT, symbols OTHER.
void PosTagDocument(Document& doc, const Lexicon& lexicon);

// ---------------------------------------------------------------------------
// Gazetteer.

enum class CasePolicy { kMinuscule, kJustPremierMaj, kPremierMaj, kMajuscule };

std::string_view CasePolicyName(CasePolicy policy);
std::optional<CasePolicy> ParseCasePolicy(std::string_view name);

// Minuscule: no uppercase letter. Majuscule: no lowercase letter.
// JustPremierMaj: first letter uppercase, every other letter lowercase.
// PremierMaj: the first letter of each whitespace-separated word uppercase.
bool SatisfiesCasePolicy(std::u32string_view surface, CasePolicy policy);

struct GazetteerList {
  std::string concept_name;
  CasePolicy case_policy = CasePolicy::kMinuscule;
  std::set<std::string> phrases;
  std::string major_type;
  std::optional<std::string> minor_type;
};

// Builds a list whose majorType is `concept_name` followed by `label`, or by
// the policy name when `label` is empty.
GazetteerList MakeGazetteerList(std::string concept_name, CasePolicy policy,
                                std::set<std::string> phrases,
                                std::string_view label = {},
                                std::optional<std::string> minor_type = {});

// Reads a phrase file: one phrase per line, blank and `#` lines skipped,
// internal whitespace collapsed.
std::set<std::string> ReadPhraseFile(const std::filesystem::path& path);

// Reads a gazetteer index. Each non-comment line is
// `file<TAB>concept<TAB>policies[<TAB>minorType]` where policies is a comma
// list of `Policy` or `Policy=Label`. Phrase files are relative to the index.
std::vector<GazetteerList> LoadGazetteer(const std::filesystem::path& index);

// Compiled form of a set of lists.
class Gazetteer {
 public:
  explicit Gazetteer(std::vector<GazetteerList> lists);

  // Adds one Lookup per (list, token-aligned start) for the longest phrase
  // of that list matching there under its case policy.
  void Annotate(Document& doc) const;

  const std::vector<GazetteerList>& lists() const { return lists_; }

 private:
  struct TrieNode {
    std::map<char32_t, size_t> next;
    size_t phrase_length = 0;  // non-zero when a phrase ends here
  };
  struct Trie {
    std::vector<TrieNode> nodes;
  };

  std::vector<GazetteerList> lists_;
  std::vector<Trie> tries_;
};

void GazetteerLookup(Document& doc, const std::vector<GazetteerList>& lists);

}  // namespace req2uml

#endif  // REQ2UML_LINGPIPE_H_
