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

// Test-only oracles and generators. Everything here is written against the
// public data types only and shares no matching code with the library, so
// agreement between the two is meaningful.

#ifndef REQ2UML_TESTS_SUPPORT_ORACLES_H_
#define REQ2UML_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "req2uml/document.h"
#include "req2uml/lingpipe.h"
#include "req2uml/rule_engine.h"
#include "req2uml/uml_model.h"
#include "req2uml/unicode.h"

namespace req2uml::testing {

// ---------------------------------------------------------------------------
// Document selection oracle.

inline std::vector<Annotation> BruteForceAnnotationsIn(
    const std::vector<Annotation>& all, const TypeSet& types,
    const Span& region) {
  std::vector<Annotation> out;
  for (const Annotation& a : all) {
    if (types.count(a.type) && region.start <= a.span.start &&
        a.span.end <= region.end) {
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end(), [](const Annotation& x,
                                       const Annotation& y) {
    return std::make_tuple(x.span.start, -static_cast<long>(x.span.end), x.id) <
           std::make_tuple(y.span.start, -static_cast<long>(y.span.end), y.id);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Gazetteer oracle: naive substring scan over every phrase at every offset.

struct LookupHit {
  size_t start;
  size_t end;
  std::string major_type;
  auto operator<=>(const LookupHit&) const = default;
};

inline bool OracleCasePolicy(std::u32string_view s, CasePolicy policy) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t c : s) {
    if (IsSpace(c)) {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(cur);
  std::u32string letters;
  for (char32_t c : s) {
    if (IsLetter(c)) letters += c;
  }
  switch (policy) {
    case CasePolicy::kMinuscule:
      return std::none_of(s.begin(), s.end(), [](char32_t c) { return IsUpper(c); });
    case CasePolicy::kMajuscule:
      return std::none_of(s.begin(), s.end(), [](char32_t c) { return IsLower(c); });
    case CasePolicy::kJustPremierMaj:
      if (letters.empty() || !IsUpper(letters[0])) return false;
      return std::none_of(letters.begin() + 1, letters.end(),
                          [](char32_t c) { return IsUpper(c); });
    case CasePolicy::kPremierMaj: {
      bool any = false;
      for (const std::u32string& w : words) {
        for (char32_t c : w) {
          if (!IsLetter(c)) continue;
          if (!IsUpper(c)) return false;
          any = true;
          break;
        }
      }
      return any;
    }
  }
  return false;
}

inline std::set<LookupHit> OracleGazetteer(
    std::u32string_view text, const std::vector<GazetteerList>& lists) {
  auto word = [](char32_t c) { return IsLetter(c) || IsDigit(c); };
  std::set<LookupHit> hits;
  for (const GazetteerList& list : lists) {
    for (size_t s = 0; s < text.size(); ++s) {
      if (s > 0 && word(text[s - 1])) continue;
      size_t best = 0;
      for (const std::string& phrase_utf8 : list.phrases) {
        const std::u32string phrase = DecodeUtf8(phrase_utf8);
        const size_t n = phrase.size();
        if (n == 0 || s + n > text.size()) continue;
        bool same = true;
        for (size_t i = 0; i < n && same; ++i) {
          same = phrase[i] == U' ' ? IsSpace(text[s + i])
                                   : ToLower(text[s + i]) == ToLower(phrase[i]);
        }
        if (!same) continue;
        if (s + n < text.size() && word(text[s + n])) continue;
        if (!OracleCasePolicy(text.substr(s, n), list.case_policy)) continue;
        best = std::max(best, n);
      }
      if (best > 0) hits.insert({s, s + best, list.major_type});
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Transducer oracle: enumerate every annotation path from every start, test
// each path prefix against the pattern by recursive splitting, then apply
// the control-mode selection.

struct Fired {
  std::string type;
  Span span;
  FeatureMap features;
  bool operator==(const Fired&) const = default;
};

class TransducerOracle {
 public:
  TransducerOracle(const Document& doc, const RulePhase& phase)
      : phase_(phase) {
    for (const Annotation& a : doc.All()) {
      if (phase.input_types.count(a.type)) visible_.push_back(a);
    }
  }

  std::vector<Fired> Run() {
    std::vector<Fired> out;
    std::set<size_t> starts;
    for (const Annotation& a : visible_) starts.insert(a.span.start);
    std::optional<size_t> pos =
        starts.empty() ? std::nullopt : std::optional<size_t>(*starts.begin());
    while (pos) {
      const size_t p = *pos;
      std::vector<std::set<size_t>> ends(phase_.rules.size());
      for (size_t r = 0; r < phase_.rules.size(); ++r) {
        ends[r] = RuleEnds(phase_.rules[r].pattern, p);
      }
      std::optional<size_t> resume;
      if (phase_.control == ControlMode::kAppelt) {
        // All (rule, end) pairs, ordered by longest, priority, definition.
        std::vector<std::tuple<size_t, int, size_t>> candidates;
        for (size_t r = 0; r < ends.size(); ++r) {
          for (size_t e : ends[r]) {
            candidates.emplace_back(e, phase_.rules[r].priority, r);
          }
        }
        if (!candidates.empty()) {
          auto best = *std::max_element(
              candidates.begin(), candidates.end(),
              [](const auto& x, const auto& y) {
                return std::make_tuple(std::get<0>(x), std::get<1>(x),
                                       -static_cast<long>(std::get<2>(x))) <
                       std::make_tuple(std::get<0>(y), std::get<1>(y),
                                       -static_cast<long>(std::get<2>(y)));
              });
          const Rule& rule = phase_.rules[std::get<2>(best)];
          out.push_back({rule.action.new_type, Span{p, std::get<0>(best)},
                         rule.action.features});
          resume = std::get<0>(best);
        }
      } else if (phase_.control == ControlMode::kAll) {
        for (size_t r = 0; r < ends.size(); ++r) {
          for (size_t e : ends[r]) {
            out.push_back({phase_.rules[r].action.new_type, Span{p, e},
                           phase_.rules[r].action.features});
          }
        }
      } else {
        for (size_t r = 0; r < ends.size(); ++r) {
          if (ends[r].empty()) continue;
          const size_t e = *ends[r].begin();
          out.push_back({phase_.rules[r].action.new_type, Span{p, e},
                         phase_.rules[r].action.features});
          resume = e;
          break;
        }
      }
      auto next = resume ? starts.lower_bound(*resume) : starts.upper_bound(p);
      pos = next == starts.end() ? std::nullopt
                                 : std::optional<size_t>(*next);
    }
    return out;
  }

 private:
  using Path = std::vector<const Annotation*>;

  std::optional<size_t> NextStart(size_t offset) const {
    std::optional<size_t> best;
    for (const Annotation& a : visible_) {
      if (a.span.start >= offset && (!best || a.span.start < *best)) {
        best = a.span.start;
      }
    }
    return best;
  }

  void Paths(size_t start, Path& path, std::vector<Path>& out) const {
    for (const Annotation& a : visible_) {
      if (a.span.start != start) continue;
      path.push_back(&a);
      out.push_back(path);
      if (auto next = NextStart(a.span.end)) Paths(*next, path, out);
      path.pop_back();
    }
  }

  std::set<size_t> RuleEnds(const PatternExpr& pattern, size_t p) const {
    std::vector<Path> paths;
    Path scratch;
    Paths(p, scratch, paths);
    std::set<size_t> ends;
    for (const Path& path : paths) {
      if (Accepts(pattern, path, 0, path.size())) {
        ends.insert(path.back()->span.end);
      }
    }
    return ends;
  }

  static bool Equal(const Constraint& c, std::string_view actual) {
    const std::string a = Trim(actual);
    const std::string v = Trim(c.value);
    if (c.annotation_type == "Token" && c.feature == "category") {
      static const std::map<std::string, int> kClass = {
          {"NN", 1}, {"NNP", 1}, {"NNS", 1}, {"V", 2}, {"VB", 2}};
      auto ia = kClass.find(a);
      auto iv = kClass.find(v);
      if (ia != kClass.end() && iv != kClass.end()) {
        return ia->second == iv->second;
      }
    }
    return a == v;
  }

  static bool Holds(const Constraint& c, const Annotation& a) {
    auto it = a.features.find(c.feature);
    const bool eq = it != a.features.end() && Equal(c, it->second);
    return c.op == CompareOp::kEq ? eq : !eq;
  }

  static bool HoldsAll(const std::vector<Constraint>& cs,
                       const std::string& type, const Annotation& a) {
    for (const Constraint& c : cs) {
      if (c.annotation_type == type && !Holds(c, a)) return false;
    }
    return true;
  }

  bool GroupMatches(const std::vector<Constraint>& cs,
                    const Annotation& a) const {
    std::string anchor = cs.front().annotation_type;
    for (const Constraint& c : cs) {
      if (c.op == CompareOp::kEq) {
        anchor = c.annotation_type;
        break;
      }
    }
    if (a.type != anchor || !HoldsAll(cs, anchor, a)) return false;
    std::set<std::string> others;
    for (const Constraint& c : cs) {
      if (c.annotation_type != anchor) others.insert(c.annotation_type);
    }
    for (const std::string& type : others) {
      const bool positive =
          std::any_of(cs.begin(), cs.end(), [&](const Constraint& c) {
            return c.annotation_type == type && c.op == CompareOp::kEq;
          });
      bool witness = false;
      bool all = true;
      for (const Annotation& b : visible_) {
        if (b.type != type || b.span.start != a.span.start) continue;
        if (HoldsAll(cs, type, b)) {
          witness = true;
        } else {
          all = false;
        }
      }
      if (positive ? !witness : !all) return false;
    }
    return true;
  }

  bool Accepts(const PatternExpr& e, const Path& path, size_t i,
               size_t j) const {
    switch (e.kind) {
      case PatternExpr::Kind::kConstraintSet:
        return j == i + 1 && GroupMatches(e.constraints, *path[i]);
      case PatternExpr::Kind::kSequence:
        return SeqAccepts(e.children, 0, path, i, j);
      case PatternExpr::Kind::kAlternation:
        return std::any_of(e.children.begin(), e.children.end(),
                           [&](const PatternExpr& c) {
                             return Accepts(c, path, i, j);
                           });
      case PatternExpr::Kind::kGroup: {
        const PatternExpr& inner = e.children.front();
        switch (e.quantifier) {
          case Quantifier::kOne:
            return Accepts(inner, path, i, j);
          case Quantifier::kOptional:
            return i == j || Accepts(inner, path, i, j);
          case Quantifier::kStar:
            return StarAccepts(inner, path, i, j);
          case Quantifier::kPlus:
            for (size_t m = i; m <= j; ++m) {
              if (Accepts(inner, path, i, m) &&
                  StarAccepts(inner, path, m, j)) {
                return true;
              }
            }
            return false;
        }
      }
    }
    return false;
  }

  bool StarAccepts(const PatternExpr& inner, const Path& path, size_t i,
                   size_t j) const {
    if (i == j) return true;
    for (size_t m = i + 1; m <= j; ++m) {
      if (Accepts(inner, path, i, m) && StarAccepts(inner, path, m, j)) {
        return true;
      }
    }
    return false;
  }

  bool SeqAccepts(const std::vector<PatternExpr>& items, size_t k,
                  const Path& path, size_t i, size_t j) const {
    if (k == items.size()) return i == j;
    for (size_t m = i; m <= j; ++m) {
      if (Accepts(items[k], path, i, m) &&
          SeqAccepts(items, k + 1, path, m, j)) {
        return true;
      }
    }
    return false;
  }

  const RulePhase& phase_;
  std::vector<Annotation> visible_;
};

// Annotations added to `doc` at or after `first_new_id`, in id order.
inline std::vector<Fired> NewAnnotations(const Document& doc,
                                         AnnotationId first_new_id) {
  std::vector<Fired> out;
  for (AnnotationId id = first_new_id; id < doc.size(); ++id) {
    const Annotation& a = doc.Get(id);
    out.push_back({a.type, a.span, a.features});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random generators.

class RandomCases {
 public:
  explicit RandomCases(unsigned seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(Uniform(0, static_cast<int>(v.size()) - 1))];
  }

  // Up to `max_annotations` random Token / Lookup / Mark annotations over a
  // short text.
  Document RandomAnnotatedDocument(int max_annotations) {
    Document doc(std::string(16, 'x'));
    const int n = Uniform(std::max(1, max_annotations / 2), max_annotations);
    for (int i = 0; i < n; ++i) {
      const std::string type = Pick(kTypes);
      const size_t start = static_cast<size_t>(Uniform(0, 12));
      const size_t end = start + static_cast<size_t>(Uniform(1, 4));
      FeatureMap f;
      if (!Chance(0.1)) f[FeatureFor(type)] = Pick(ValuesFor(type));
      if (type == "Token") f["kind"] = "word";
      doc.Add(type, Span{start, end}, f);
    }
    return doc;
  }

  Constraint RandomConstraint() {
    const std::string type = Pick(kTypes);
    Constraint c;
    c.annotation_type = type;
    c.feature = FeatureFor(type);
    c.op = Chance(0.8) ? CompareOp::kEq : CompareOp::kNe;
    c.value = Pick(ValuesFor(type));
    return c;
  }

  PatternExpr RandomElement(int depth) {
    const int roll = Uniform(0, 9);
    if (depth <= 0 || roll < 6) {
      std::vector<Constraint> cs{RandomConstraint()};
      if (Chance(0.3)) cs.push_back(RandomConstraint());
      PatternExpr set = PatternExpr::Constraints(std::move(cs));
      if (Chance(0.15)) {
        return PatternExpr::Group(std::move(set), RandomQuantifier());
      }
      return set;
    }
    if (roll < 8) {
      return PatternExpr::Group(RandomSequence(depth - 1), RandomQuantifier());
    }
    std::vector<PatternExpr> branches;
    const int n = Uniform(2, 3);
    for (int i = 0; i < n; ++i) branches.push_back(RandomSequence(depth - 1));
    return PatternExpr::Alternation(std::move(branches));
  }

  PatternExpr RandomSequence(int depth) {
    std::vector<PatternExpr> items;
    const int n = Uniform(1, 3);
    for (int i = 0; i < n; ++i) items.push_back(RandomElement(depth));
    if (items.size() == 1) return std::move(items.front());
    return PatternExpr::Sequence(std::move(items));
  }

  RulePhase RandomPhase(ControlMode control, int max_rules) {
    RulePhase phase;
    phase.name = "Random";
    phase.control = control;
    for (const std::string& t : kTypes) {
      if (Chance(0.7)) phase.input_types.insert(t);
    }
    if (phase.input_types.empty()) phase.input_types.insert(Pick(kTypes));
    const int n = Uniform(1, max_rules);
    for (int i = 0; i < n; ++i) {
      Rule r;
      r.name = "R" + std::to_string(i);
      r.priority = Uniform(0, 2);
      // Reusing an earlier pattern forces length and priority ties.
      r.pattern = i > 0 && Chance(0.35)
                      ? phase.rules[static_cast<size_t>(Uniform(0, i - 1))].pattern
                      : RandomSequence(2);
      r.label = "l";
      r.action.new_type = "Out";
      r.action.features = {{"rule", r.name}};
      phase.rules.push_back(std::move(r));
    }
    return phase;
  }

  std::mt19937& engine() { return rng_; }

 private:
  Quantifier RandomQuantifier() {
    static const std::vector<Quantifier> q = {
        Quantifier::kOptional, Quantifier::kStar, Quantifier::kPlus,
        Quantifier::kOne};
    return Pick(q);
  }

  static std::string FeatureFor(const std::string& type) {
    if (type == "Token") return "category";
    if (type == "Lookup") return "majorType";
    return "f";
  }

  static const std::vector<std::string>& ValuesFor(const std::string& type) {
    static const std::vector<std::string> token = {"NN", "NNP", "V", "VB",
                                                   "PRP", " NN "};
    static const std::vector<std::string> lookup = {"a", "b"};
    static const std::vector<std::string> mark = {"x", "y"};
    if (type == "Token") return token;
    if (type == "Lookup") return lookup;
    return mark;
  }

  inline static const std::vector<std::string> kTypes = {"Token", "Lookup",
                                                         "Mark"};
  std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Test-only model XML reader.

inline UmlModel ReadModelXml(const std::string& xml) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(xml);
  pt::read_xml(in, tree);
  UmlModel model;
  const pt::ptree& root = tree.get_child("model");
  for (const auto& [tag, node] : root) {
    if (tag == "class") {
      UmlClass c;
      c.name = node.get<std::string>("<xmlattr>.name");
      for (const auto& [child_tag, child] : node) {
        if (child_tag == "attribute") {
          model.attributes.push_back(
              {child.get<std::string>("<xmlattr>.name"), c.name, {}});
        }
      }
      model.classes.push_back(std::move(c));
    } else if (tag == "association") {
      model.associations.push_back(
          {node.get<std::string>("<xmlattr>.name"),
           node.get<std::string>("<xmlattr>.from"),
           node.get<std::string>("<xmlattr>.to"),
           {}});
    }
  }
  return model;
}

// True when `xml` parses as a single well-formed element tree.
inline bool IsWellFormedXml(const std::string& xml, std::string* error = nullptr) {
  namespace pt = boost::property_tree;
  try {
    pt::ptree tree;
    std::istringstream in(xml);
    pt::read_xml(in, tree);
    return tree.size() == 1;
  } catch (const pt::xml_parser_error& e) {
    if (error) *error = e.what();
    return false;
  }
}

}  // namespace req2uml::testing

#endif  // REQ2UML_TESTS_SUPPORT_ORACLES_H_
