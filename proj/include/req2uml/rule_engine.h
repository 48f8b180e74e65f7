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

// A JAPE-like annotation pattern engine. A phase is a prioritized list of
// rules; each rule matches a pattern of constraint groups over the visible
// annotations of a document and adds one annotation over the match.

#ifndef REQ2UML_RULE_ENGINE_H_
#define REQ2UML_RULE_ENGINE_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "req2uml/document.h"

namespace req2uml {

enum class ControlMode { kAppelt, kAll, kFirst };
enum class CompareOp { kEq, kNe };
enum class Quantifier { kOne, kOptional, kStar, kPlus };

std::string_view ControlModeName(ControlMode mode);

struct Constraint {
  std::string annotation_type;
  std::string feature;
  CompareOp op = CompareOp::kEq;
  std::string value;

  bool operator==(const Constraint&) const = default;
};

// One node of a rule pattern. Sequence and Alternation hold their items in
// `children`; a Group holds exactly one child and a quantifier; a
// ConstraintSet holds the constraints of one brace group.
struct PatternExpr {
  enum class Kind { kSequence, kAlternation, kGroup, kConstraintSet };

  Kind kind = Kind::kConstraintSet;
  std::vector<PatternExpr> children;
  Quantifier quantifier = Quantifier::kOne;
  std::vector<Constraint> constraints;

  static PatternExpr Sequence(std::vector<PatternExpr> items);
  static PatternExpr Alternation(std::vector<PatternExpr> branches);
  static PatternExpr Group(PatternExpr inner, Quantifier q);
  static PatternExpr Constraints(std::vector<Constraint> constraints);

  bool operator==(const PatternExpr&) const = default;
};

struct Action {
  std::string new_type;
  FeatureMap features;
};

struct Rule {
  std::string name;
  int priority = 0;
  PatternExpr pattern;
  std::string label;
  Action action;
};

struct RulePhase {
  std::string name;
  TypeSet input_types;
  ControlMode control = ControlMode::kAppelt;
  std::vector<Rule> rules;
};

class RuleSyntaxError : public std::runtime_error {
 public:
  RuleSyntaxError(std::string source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Parses one phase. `source_name` only decorates error messages.
RulePhase ParseRuleFile(std::string_view text,
                        const std::string& source_name = "<rules>");
RulePhase LoadRuleFile(const std::filesystem::path& path);

// True when the two category tags are interchangeable for matching:
// {NN, NNP, NNS} and {V, VB} form equivalence classes.
bool CategoryEquivalent(std::string_view a, std::string_view b);

// Evaluates a single constraint against a feature value (nullopt when the
// annotation lacks the feature).
bool ConstraintHolds(const Constraint& c,
                     std::optional<std::string_view> actual);

// Runs one phase over `doc`. The phase sees a snapshot of the annotations of
// its input types taken before it starts; new annotations are only visible
// to later phases.
void ApplyPhase(Document& doc, const RulePhase& phase);

void RunTransducer(Document& doc, std::span<const RulePhase> phases);

}  // namespace req2uml

#endif  // REQ2UML_RULE_ENGINE_H_
