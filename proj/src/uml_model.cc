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

#include "req2uml/uml_model.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "req2uml/errors.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

bool IsNoun(const Annotation& token) {
  const auto cat = token.Feature("category");
  return cat == "NN" || cat == "NNP" || cat == "NNS";
}

bool IsVerb(const Annotation& token) {
  const auto cat = token.Feature("category");
  return cat == "V" || cat == "VB";
}

std::string SpanText(const Span& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

// Token and sentence lookups shared by the model builder and the mention
// extractor.
class DocIndex {
 public:
  explicit DocIndex(const Document& doc)
      : doc_(doc),
        tokens_(doc.AnnotationsOf({"Token"})),
        sentences_(doc.AnnotationsOf({"Sentence"})) {}

  std::vector<const Annotation*> TokensIn(const Span& span) const {
    std::vector<const Annotation*> out;
    auto it = std::lower_bound(
        tokens_.begin(), tokens_.end(), span.start,
        [](const Annotation& t, size_t start) { return t.span.start < start; });
    for (; it != tokens_.end() && it->span.start < span.end; ++it) {
      if (span.Contains(it->span)) out.push_back(&*it);
    }
    return out;
  }

  // Head noun phrase of a class annotation: from the first noun token up to
  // the token before the next verb.
  std::optional<Span> ClassMention(const Annotation& a) const {
    const std::vector<const Annotation*> tokens = TokensIn(a.span);
    auto first = std::find_if(tokens.begin(), tokens.end(),
                              [](const Annotation* t) { return IsNoun(*t); });
    if (first == tokens.end()) return std::nullopt;
    Span mention = (*first)->span;
    for (auto it = first + 1; it != tokens.end() && !IsVerb(**it); ++it) {
      if ((*it)->Feature("kind") == "punctuation") break;
      mention.end = (*it)->span.end;
    }
    return mention;
  }

  // The verb naming an association, or the whole span if it has none.
  Span AssociationAnchor(const Annotation& a) const {
    for (const Annotation* t : TokensIn(a.span)) {
      if (IsVerb(*t)) return t->span;
    }
    return a.span;
  }

  // Last noun token in the span not covered by a class mention.
  std::optional<Span> AttributeName(
      const Annotation& a, const std::vector<Span>& class_mentions) const {
    const std::vector<const Annotation*> tokens = TokensIn(a.span);
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
      if (!IsNoun(**it)) continue;
      const bool in_class = std::any_of(
          class_mentions.begin(), class_mentions.end(),
          [&](const Span& m) { return m.Contains((*it)->span); });
      if (!in_class) return (*it)->span;
    }
    return std::nullopt;
  }

  Span SentenceOf(const Span& span) const {
    for (const Annotation& s : sentences_) {
      if (s.span.Contains(span)) return s.span;
    }
    return Span{0, doc_.length()};
  }

  const Document& doc() const { return doc_; }

 private:
  const Document& doc_;
  std::vector<Annotation> tokens_;
  std::vector<Annotation> sentences_;
};

struct ClassMentionRef {
  Span mention;
  std::string name;
};

}  // namespace

const UmlClass* UmlModel::FindClass(std::string_view name) const {
  for (const UmlClass& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool StructurallyEqual(const UmlModel& a, const UmlModel& b) {
  auto class_names = [](const UmlModel& m) {
    std::multiset<std::string> out;
    for (const UmlClass& c : m.classes) out.insert(c.name);
    return out;
  };
  auto attrs = [](const UmlModel& m) {
    std::multiset<std::pair<std::string, std::string>> out;
    for (const UmlAttribute& at : m.attributes) out.emplace(at.owner, at.name);
    return out;
  };
  auto assocs = [](const UmlModel& m) {
    std::multiset<std::tuple<std::string, std::string, std::string>> out;
    for (const UmlAssociation& as : m.associations) {
      out.emplace(as.name, as.source, as.target);
    }
    return out;
  };
  return class_names(a) == class_names(b) && attrs(a) == attrs(b) &&
         assocs(a) == assocs(b);
}

std::string NormalizeEntityName(std::string_view surface,
                                const DeterminerSet& determiners) {
  std::istringstream in(ToLowerUtf8(Trim(surface)));
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  if (words.empty()) throw NormalizationError("empty entity name");

  if (determiners.contains(words.front())) {
    words.erase(words.begin());
  } else {
    // Elided determiners: "l'adresse", "l’adresse".
    for (std::string_view apostrophe : {"'", "\xE2\x80\x99"}) {
      const size_t pos = words.front().find(apostrophe);
      if (pos == std::string::npos) continue;
      const std::string head = words.front().substr(0, pos);
      if (determiners.contains(head + "'")) {
        words.front() = words.front().substr(pos + apostrophe.size());
        if (words.front().empty()) words.erase(words.begin());
      }
      break;
    }
  }

  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  if (out.empty()) {
    throw NormalizationError("entity name '" + std::string(surface) +
                             "' is empty after normalization");
  }
  return out;
}

DeterminerSet LoadDeterminers(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open determiner list");
  DeterminerSet out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      const std::string word = ToLowerUtf8(Trim(line));
      if (word.empty() || word.starts_with("#")) continue;
      out.insert(word);
    } catch (const Utf8Error& e) {
      throw ResourceError(path.string(), line_no, e.what());
    }
  }
  return out;
}

UmlModel BuildModel(const Document& doc, const DeterminerSet& determiners) {
  const DocIndex index(doc);
  UmlModel model;

  // Classes, merged by normalized name.
  std::map<std::string, UmlClass> classes;
  std::vector<ClassMentionRef> mentions;
  for (const Annotation& a : doc.AnnotationsOf({std::string(kClassType)})) {
    const std::optional<Span> mention = index.ClassMention(a);
    if (!mention) {
      model.diagnostics.push_back("classe " + SpanText(a.span) +
                                  " contains no noun token; ignored");
      continue;
    }
    const std::string surface = doc.Slice(*mention);
    std::string name;
    try {
      name = NormalizeEntityName(surface, determiners);
    } catch (const NormalizationError& e) {
      model.diagnostics.push_back("classe " + SpanText(a.span) + ": " +
                                  e.what());
      continue;
    }
    UmlClass& cls = classes[name];
    cls.name = name;
    cls.surface_forms.insert(surface);
    if (std::find(cls.source_spans.begin(), cls.source_spans.end(), a.span) ==
        cls.source_spans.end()) {
      cls.source_spans.push_back(a.span);
      std::sort(cls.source_spans.begin(), cls.source_spans.end());
    }
    mentions.push_back({*mention, name});
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const ClassMentionRef& x, const ClassMentionRef& y) {
              return std::tie(x.mention, x.name) < std::tie(y.mention, y.name);
            });
  mentions.erase(std::unique(mentions.begin(), mentions.end(),
                             [](const ClassMentionRef& x,
                                const ClassMentionRef& y) {
                               return x.mention == y.mention &&
                                      x.name == y.name;
                             }),
                 mentions.end());
  for (auto& [name, cls] : classes) model.classes.push_back(std::move(cls));

  // Nearest class mention before / after an anchor, within one sentence.
  auto preceding = [&](const Span& anchor) -> const ClassMentionRef* {
    const Span sentence = index.SentenceOf(anchor);
    const ClassMentionRef* best = nullptr;
    for (const ClassMentionRef& m : mentions) {
      if (!sentence.Contains(m.mention) || m.mention.end > anchor.start) {
        continue;
      }
      if (best == nullptr || m.mention.end >= best->mention.end) best = &m;
    }
    return best;
  };
  auto following = [&](const Span& anchor) -> const ClassMentionRef* {
    const Span sentence = index.SentenceOf(anchor);
    for (const ClassMentionRef& m : mentions) {
      if (sentence.Contains(m.mention) && m.mention.start >= anchor.end) {
        return &m;
      }
    }
    return nullptr;
  };

  std::set<std::tuple<std::string, std::string, std::string>> seen_assocs;
  for (const Annotation& a :
       doc.AnnotationsOf({std::string(kAssociationType)})) {
    const Span anchor = index.AssociationAnchor(a);
    std::string name;
    try {
      name = NormalizeEntityName(doc.Slice(anchor), {});
    } catch (const NormalizationError& e) {
      model.diagnostics.push_back("Association " + SpanText(a.span) + ": " +
                                  e.what());
      continue;
    }
    const ClassMentionRef* source = preceding(anchor);
    const ClassMentionRef* target = following(anchor);
    if (source == nullptr || target == nullptr) {
      model.diagnostics.push_back(
          "Association '" + name + "' " + SpanText(a.span) + ": no " +
          (source == nullptr ? "source" : "target") +
          " class in the same sentence; dropped");
      continue;
    }
    if (!seen_assocs.emplace(name, source->name, target->name).second) {
      continue;
    }
    model.associations.push_back({name, source->name, target->name, a.span});
  }

  std::vector<Span> mention_spans;
  for (const ClassMentionRef& m : mentions) mention_spans.push_back(m.mention);
  std::set<std::pair<std::string, std::string>> seen_attrs;
  for (const Annotation& a : doc.AnnotationsOf({std::string(kAttributeType)})) {
    const std::optional<Span> name_span =
        index.AttributeName(a, mention_spans);
    if (!name_span) {
      model.diagnostics.push_back("Attribut " + SpanText(a.span) +
                                  " has no non-class noun; dropped");
      continue;
    }
    std::string name;
    try {
      name = NormalizeEntityName(doc.Slice(*name_span), determiners);
    } catch (const NormalizationError& e) {
      model.diagnostics.push_back("Attribut " + SpanText(a.span) + ": " +
                                  e.what());
      continue;
    }
    const ClassMentionRef* owner = preceding(*name_span);
    if (owner == nullptr) {
      model.diagnostics.push_back("Attribut '" + name + "' " +
                                  SpanText(a.span) +
                                  ": no preceding class in the same "
                                  "sentence; dropped");
      continue;
    }
    if (!seen_attrs.emplace(owner->name, name).second) continue;
    model.attributes.push_back({name, owner->name, a.span});
  }

  std::sort(model.attributes.begin(), model.attributes.end(),
            [](const UmlAttribute& x, const UmlAttribute& y) {
              return std::tie(x.owner, x.name) < std::tie(y.owner, y.name);
            });
  std::sort(model.associations.begin(), model.associations.end(),
            [](const UmlAssociation& x, const UmlAssociation& y) {
              return std::tie(x.name, x.source, x.target) <
                     std::tie(y.name, y.source, y.target);
            });
  return model;
}

std::vector<Mention> ExtractMentions(const Document& doc) {
  const DocIndex index(doc);
  std::set<Mention> out;
  std::vector<Span> class_spans;
  for (const Annotation& a : doc.AnnotationsOf({std::string(kClassType)})) {
    if (auto m = index.ClassMention(a)) {
      out.insert({std::string(kClassType), *m});
      class_spans.push_back(*m);
    }
  }
  for (const Annotation& a :
       doc.AnnotationsOf({std::string(kAssociationType)})) {
    out.insert({std::string(kAssociationType), index.AssociationAnchor(a)});
  }
  for (const Annotation& a : doc.AnnotationsOf({std::string(kAttributeType)})) {
    if (auto m = index.AttributeName(a, class_spans)) {
      out.insert({std::string(kAttributeType), *m});
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace req2uml
