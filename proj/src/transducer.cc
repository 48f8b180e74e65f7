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

#include <algorithm>
#include <map>
#include <set>

#include "req2uml/rule_engine.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

int CategoryClass(std::string_view tag) {
  if (tag == "NN" || tag == "NNP" || tag == "NNS") return 1;
  if (tag == "V" || tag == "VB") return 2;
  return 0;
}

bool IsCategoryConstraint(const Constraint& c) {
  return c.annotation_type == "Token" && c.feature == "category";
}

bool ValueEquals(const Constraint& c, std::string_view actual) {
  const std::string lhs = Trim(actual);
  const std::string rhs = Trim(c.value);
  if (IsCategoryConstraint(c)) return CategoryEquivalent(lhs, rhs);
  return lhs == rhs;
}

// Type whose annotation a constraint group consumes: the type of the first
// equality constraint, else of the first constraint.
const std::string& AnchorType(const std::vector<Constraint>& constraints) {
  for (const Constraint& c : constraints) {
    if (c.op == CompareOp::kEq) return c.annotation_type;
  }
  return constraints.front().annotation_type;
}

bool AllHold(const std::vector<Constraint>& constraints,
             std::string_view type, const Annotation& a) {
  for (const Constraint& c : constraints) {
    if (c.annotation_type != type) continue;
    if (!ConstraintHolds(c, a.Feature(c.feature))) return false;
  }
  return true;
}

// Snapshot of the annotations a phase can see, grouped by start offset.
class AnnotationView {
 public:
  AnnotationView(const Document& doc, const TypeSet& types)
      : annotations_(doc.AnnotationsOf(types)) {
    for (size_t i = 0; i < annotations_.size(); ++i) {
      const size_t start = annotations_[i].span.start;
      if (starts_.empty() || starts_.back() != start) {
        starts_.push_back(start);
        at_start_.emplace_back();
      }
      at_start_.back().push_back(i);
    }
  }

  const std::vector<size_t>& starts() const { return starts_; }

  // Index into starts() of the first start >= offset.
  size_t FirstStartIndex(size_t offset) const {
    return std::lower_bound(starts_.begin(), starts_.end(), offset) -
           starts_.begin();
  }

  // Ends of annotations that satisfy `constraints` at the first start at or
  // after `offset`.
  void MatchConstraintSet(const std::vector<Constraint>& constraints,
                          size_t offset, std::set<size_t>& ends) const {
    const size_t si = FirstStartIndex(offset);
    if (si >= starts_.size()) return;
    const std::vector<size_t>& here = at_start_[si];
    const std::string& anchor_type = AnchorType(constraints);

    // Constraints on other types are checked against co-located
    // annotations: an equality needs a witness, an inequality must hold for
    // all of them.
    std::set<std::string_view> other_types;
    for (const Constraint& c : constraints) {
      if (c.annotation_type != anchor_type) {
        other_types.insert(c.annotation_type);
      }
    }
    for (std::string_view type : other_types) {
      bool needs_witness = false;
      for (const Constraint& c : constraints) {
        if (c.annotation_type == type && c.op == CompareOp::kEq) {
          needs_witness = true;
        }
      }
      bool witness = false;
      for (size_t i : here) {
        const Annotation& a = annotations_[i];
        if (a.type != type) continue;
        if (AllHold(constraints, type, a)) {
          witness = true;
        } else if (!needs_witness) {
          return;
        }
      }
      if (needs_witness && !witness) return;
    }

    for (size_t i : here) {
      const Annotation& a = annotations_[i];
      if (a.type == anchor_type && AllHold(constraints, anchor_type, a)) {
        ends.insert(a.span.end);
      }
    }
  }

 private:
  std::vector<Annotation> annotations_;
  std::vector<size_t> starts_;
  std::vector<std::vector<size_t>> at_start_;
};

// Set of offsets at which `expr` can stop when started at `offset`. An
// element that consumes nothing leaves the offset unchanged.
std::set<size_t> MatchEnds(const AnnotationView& view, const PatternExpr& expr,
                           size_t offset) {
  std::set<size_t> result;
  switch (expr.kind) {
    case PatternExpr::Kind::kConstraintSet:
      view.MatchConstraintSet(expr.constraints, offset, result);
      break;
    case PatternExpr::Kind::kSequence: {
      std::set<size_t> frontier{offset};
      for (const PatternExpr& item : expr.children) {
        std::set<size_t> next;
        for (size_t o : frontier) next.merge(MatchEnds(view, item, o));
        frontier = std::move(next);
        if (frontier.empty()) break;
      }
      result = std::move(frontier);
      break;
    }
    case PatternExpr::Kind::kAlternation:
      for (const PatternExpr& branch : expr.children) {
        result.merge(MatchEnds(view, branch, offset));
      }
      break;
    case PatternExpr::Kind::kGroup: {
      const PatternExpr& inner = expr.children.front();
      if (expr.quantifier == Quantifier::kOne) {
        return MatchEnds(view, inner, offset);
      }
      if (expr.quantifier == Quantifier::kOptional) {
        result = MatchEnds(view, inner, offset);
        result.insert(offset);
        break;
      }
      // star and plus: closure over repeated application.
      std::set<size_t> frontier = MatchEnds(view, inner, offset);
      result = frontier;
      if (expr.quantifier == Quantifier::kStar) result.insert(offset);
      while (!frontier.empty()) {
        std::set<size_t> next;
        for (size_t o : frontier) {
          for (size_t e : MatchEnds(view, inner, o)) {
            if (result.insert(e).second) next.insert(e);
          }
        }
        frontier = std::move(next);
      }
      break;
    }
  }
  return result;
}

void Fire(Document& doc, const Rule& rule, Span span) {
  doc.Add(rule.action.new_type, span, rule.action.features);
}

}  // namespace

bool CategoryEquivalent(std::string_view a, std::string_view b) {
  if (a == b) return true;
  const int ca = CategoryClass(a);
  return ca != 0 && ca == CategoryClass(b);
}

bool ConstraintHolds(const Constraint& c,
                     std::optional<std::string_view> actual) {
  if (c.op == CompareOp::kEq) return actual && ValueEquals(c, *actual);
  return !actual || !ValueEquals(c, *actual);
}

void ApplyPhase(Document& doc, const RulePhase& phase) {
  if (phase.rules.empty()) return;
  const AnnotationView view(doc, phase.input_types);
  const std::vector<size_t>& starts = view.starts();

  size_t si = 0;
  while (si < starts.size()) {
    const size_t pos = starts[si];
    switch (phase.control) {
      case ControlMode::kAppelt: {
        const Rule* best = nullptr;
        size_t best_end = pos;
        for (const Rule& rule : phase.rules) {
          const std::set<size_t> ends = MatchEnds(view, rule.pattern, pos);
          if (ends.empty() || *ends.rbegin() <= pos) continue;
          const size_t end = *ends.rbegin();
          // Rules are visited in definition order, so strict comparisons
          // keep the earlier rule on a full tie.
          if (best == nullptr || end > best_end ||
              (end == best_end && rule.priority > best->priority)) {
            best = &rule;
            best_end = end;
          }
        }
        if (best != nullptr) {
          Fire(doc, *best, Span{pos, best_end});
          si = view.FirstStartIndex(best_end);
        } else {
          ++si;
        }
        break;
      }
      case ControlMode::kAll: {
        for (const Rule& rule : phase.rules) {
          for (size_t end : MatchEnds(view, rule.pattern, pos)) {
            if (end > pos) Fire(doc, rule, Span{pos, end});
          }
        }
        ++si;
        break;
      }
      case ControlMode::kFirst: {
        bool fired = false;
        for (const Rule& rule : phase.rules) {
          const std::set<size_t> ends = MatchEnds(view, rule.pattern, pos);
          auto it = ends.upper_bound(pos);
          if (it == ends.end()) continue;
          Fire(doc, rule, Span{pos, *it});
          si = view.FirstStartIndex(*it);
          fired = true;
          break;
        }
        if (!fired) ++si;
        break;
      }
    }
  }
}

void RunTransducer(Document& doc, std::span<const RulePhase> phases) {
  for (const RulePhase& phase : phases) ApplyPhase(doc, phase);
}

}  // namespace req2uml
