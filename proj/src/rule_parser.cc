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

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "req2uml/errors.h"
#include "req2uml/rule_engine.h"

namespace req2uml {
namespace {

enum class Tok {
  kIdent, kString, kLParen, kRParen, kLBrace, kRBrace, kPipe, kColon, kDot,
  kComma, kAssign, kEq, kNe, kArrow, kQuestion, kStar, kPlus, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  int line;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kIdent: return "'" + t.text + "'";
    case Tok::kString: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

bool IsIdentByte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || u >= 0x80;
}

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& source)
      : text_(text), source_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", line_});
        return out;
      }
      out.push_back(Next());
    }
  }

 private:
  void SkipTrivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        const int start_line = line_;
        pos_ += 2;
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        }
        if (pos_ >= text_.size()) {
          throw RuleSyntaxError(source_, start_line, "unterminated comment");
        }
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  Token Next() {
    const char c = text_[pos_];
    auto take = [&](Tok kind, size_t n) {
      Token t{kind, std::string(text_.substr(pos_, n)), line_};
      pos_ += n;
      return t;
    };
    if (text_.substr(pos_, 3) == "-->") return take(Tok::kArrow, 3);
    if (text_.substr(pos_, 2) == "==") return take(Tok::kEq, 2);
    if (text_.substr(pos_, 2) == "!=") return take(Tok::kNe, 2);
    switch (c) {
      case '(': return take(Tok::kLParen, 1);
      case ')': return take(Tok::kRParen, 1);
      case '{': return take(Tok::kLBrace, 1);
      case '}': return take(Tok::kRBrace, 1);
      case '|': return take(Tok::kPipe, 1);
      case ':': return take(Tok::kColon, 1);
      case '.': return take(Tok::kDot, 1);
      case ',': return take(Tok::kComma, 1);
      case '=': return take(Tok::kAssign, 1);
      case '?': return take(Tok::kQuestion, 1);
      case '*': return take(Tok::kStar, 1);
      case '+': return take(Tok::kPlus, 1);
      default: break;
    }
    if (c == '"') {
      const int start_line = line_;
      std::string value;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') {
          throw RuleSyntaxError(source_, start_line, "unterminated string");
        }
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        value += text_[pos_++];
      }
      if (pos_ >= text_.size()) {
        throw RuleSyntaxError(source_, start_line, "unterminated string");
      }
      ++pos_;
      return {Tok::kString, value, start_line};
    }
    if (IsIdentByte(c) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      size_t end = pos_ + 1;
      while (end < text_.size() && IsIdentByte(text_[end])) ++end;
      return take(Tok::kIdent, end - pos_);
    }
    throw RuleSyntaxError(source_, line_,
                          std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::string& source_;
  size_t pos_ = 0;
  int line_ = 1;
};

bool IsKeyword(const std::string& s) {
  return s == "Phase" || s == "Input" || s == "Options" || s == "Rule" ||
         s == "Priority" || s == "Macro";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::string& source)
      : tokens_(std::move(tokens)), source_(source) {}

  RulePhase ParsePhase() {
    RulePhase phase;
    ExpectKeyword("Phase");
    phase.name = ExpectIdent("phase name").text;

    const Token& input_kw = ExpectKeyword("Input");
    while (Peek().kind == Tok::kIdent && !AtKeyword()) {
      phase.input_types.insert(Advance().text);
    }
    if (phase.input_types.empty()) {
      throw RuleSyntaxError(source_, input_kw.line,
                            "Input must name at least one annotation type");
    }

    if (AtKeyword("Options")) {
      Advance();
      Expect(Tok::kColon, "':'");
      while (true) {
        const Token& key = ExpectIdent("option name");
        Expect(Tok::kAssign, "'='");
        const Token& value = ExpectIdent("option value");
        if (key.text != "control") {
          throw RuleSyntaxError(source_, key.line,
                                "unknown option '" + key.text + "'");
        }
        if (value.text == "appelt") {
          phase.control = ControlMode::kAppelt;
        } else if (value.text == "all") {
          phase.control = ControlMode::kAll;
        } else if (value.text == "first") {
          phase.control = ControlMode::kFirst;
        } else {
          throw RuleSyntaxError(source_, value.line,
                                "unsupported control mode '" + value.text +
                                    "' (expected appelt, all or first)");
        }
        if (Peek().kind != Tok::kComma) break;
        Advance();
      }
    }

    std::set<std::string> names;
    while (Peek().kind != Tok::kEnd) {
      if (AtKeyword("Phase")) {
        throw RuleSyntaxError(source_, Peek().line,
                              "only one Phase per rule file is supported");
      }
      Rule rule = ParseRule();
      if (!names.insert(rule.name).second) {
        throw RuleSyntaxError(source_, last_rule_line_,
                              "duplicate rule name '" + rule.name + "'");
      }
      phase.rules.push_back(std::move(rule));
    }
    return phase;
  }

 private:
  Rule ParseRule() {
    Rule rule;
    const Token& kw = Peek();
    if (AtKeyword("Macro")) {
      throw RuleSyntaxError(source_, kw.line, "macros are not supported");
    }
    ExpectKeyword("Rule");
    last_rule_line_ = kw.line;
    rule.name = ExpectIdent("rule name").text;
    if (AtKeyword("Priority")) {
      Advance();
      Expect(Tok::kColon, "':'");
      const Token& value = ExpectIdent("priority");
      try {
        size_t used = 0;
        rule.priority = std::stoi(value.text, &used);
        if (used != value.text.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw RuleSyntaxError(source_, value.line,
                              "priority must be an integer, got '" +
                                  value.text + "'");
      }
    }

    Expect(Tok::kLParen, "'(' opening the rule pattern");
    rule.pattern = ParseAlternation();
    Expect(Tok::kRParen, "')' closing the rule pattern");
    Expect(Tok::kColon, "':' before the pattern label");
    rule.label = ExpectIdent("pattern label").text;

    Expect(Tok::kArrow, "'-->'");

    Expect(Tok::kColon, "':' starting the action");
    const Token& label = ExpectIdent("action label");
    if (label.text != rule.label) {
      throw RuleSyntaxError(source_, label.line,
                            "action label '" + label.text +
                                "' does not match pattern label '" +
                                rule.label + "'");
    }
    Expect(Tok::kDot, "'.'");
    rule.action.new_type = ExpectIdent("annotation type").text;
    Expect(Tok::kAssign, "'='");
    Expect(Tok::kLBrace, "'{'");
    while (Peek().kind != Tok::kRBrace) {
      const Token& key = ExpectIdent("feature name");
      Expect(Tok::kAssign, "'='");
      const Token& value = ExpectValue();
      rule.action.features[key.text] = value.text;
      if (Peek().kind != Tok::kComma) break;
      Advance();
    }
    Expect(Tok::kRBrace, "'}'");
    return rule;
  }

  PatternExpr ParseAlternation() {
    std::vector<PatternExpr> branches;
    branches.push_back(ParseSequence());
    while (Peek().kind == Tok::kPipe) {
      Advance();
      branches.push_back(ParseSequence());
    }
    if (branches.size() == 1) return std::move(branches.front());
    return PatternExpr::Alternation(std::move(branches));
  }

  PatternExpr ParseSequence() {
    std::vector<PatternExpr> items;
    while (Peek().kind == Tok::kLParen || Peek().kind == Tok::kLBrace) {
      items.push_back(ParseElement());
    }
    if (items.empty()) {
      throw RuleSyntaxError(source_, Peek().line,
                            "expected '(' or '{', got " + Describe(Peek()));
    }
    if (items.size() == 1) return std::move(items.front());
    return PatternExpr::Sequence(std::move(items));
  }

  PatternExpr ParseElement() {
    PatternExpr element;
    if (Peek().kind == Tok::kLParen) {
      Advance();
      element = ParseAlternation();
      Expect(Tok::kRParen, "')'");
      if (Peek().kind == Tok::kColon) {
        throw RuleSyntaxError(source_, Peek().line,
                              "nested labels are not supported");
      }
    } else {
      element = ParseConstraintSet();
    }
    Quantifier q = Quantifier::kOne;
    switch (Peek().kind) {
      case Tok::kQuestion: q = Quantifier::kOptional; break;
      case Tok::kStar: q = Quantifier::kStar; break;
      case Tok::kPlus: q = Quantifier::kPlus; break;
      default: break;
    }
    if (q == Quantifier::kOne) return element;
    Advance();
    return PatternExpr::Group(std::move(element), q);
  }

  PatternExpr ParseConstraintSet() {
    Expect(Tok::kLBrace, "'{'");
    std::vector<Constraint> constraints;
    while (true) {
      Constraint c;
      c.annotation_type = ExpectIdent("annotation type").text;
      Expect(Tok::kDot, "'.' after annotation type");
      c.feature = ExpectIdent("feature name").text;
      if (Peek().kind == Tok::kEq) {
        c.op = CompareOp::kEq;
      } else if (Peek().kind == Tok::kNe) {
        c.op = CompareOp::kNe;
      } else {
        throw RuleSyntaxError(source_, Peek().line,
                              "expected '==' or '!=', got " + Describe(Peek()));
      }
      Advance();
      c.value = ExpectValue().text;
      constraints.push_back(std::move(c));
      if (Peek().kind != Tok::kComma) break;
      Advance();
    }
    Expect(Tok::kRBrace, "'}'");
    return PatternExpr::Constraints(std::move(constraints));
  }

  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }

  bool AtKeyword(std::string_view word = {}) const {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || !IsKeyword(t.text)) return false;
    if (!word.empty() && t.text != word) return false;
    return pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].kind == Tok::kColon;
  }

  const Token& ExpectKeyword(std::string_view word) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || t.text != word) {
      throw RuleSyntaxError(source_, t.line,
                            "expected '" + std::string(word) + ":', got " +
                                Describe(t));
    }
    Advance();
    Expect(Tok::kColon, "':' after " + std::string(word));
    return t;
  }

  const Token& Expect(Tok kind, const std::string& what) {
    const Token& t = Peek();
    if (t.kind != kind) {
      throw RuleSyntaxError(source_, t.line,
                            "expected " + what + ", got " + Describe(t));
    }
    return Advance();
  }

  const Token& ExpectIdent(const std::string& what) {
    return Expect(Tok::kIdent, what);
  }

  const Token& ExpectValue() {
    if (Peek().kind == Tok::kString) return Advance();
    return ExpectIdent("value");
  }

  std::vector<Token> tokens_;
  const std::string& source_;
  size_t pos_ = 0;
  int last_rule_line_ = 0;
};

}  // namespace

RuleSyntaxError::RuleSyntaxError(std::string source, int line,
                                 const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) +
                         ": syntax error: " + message),
      source_(std::move(source)),
      line_(line) {}

std::string_view ControlModeName(ControlMode mode) {
  switch (mode) {
    case ControlMode::kAppelt: return "appelt";
    case ControlMode::kAll: return "all";
    case ControlMode::kFirst: return "first";
  }
  return "appelt";
}

PatternExpr PatternExpr::Sequence(std::vector<PatternExpr> items) {
  PatternExpr e;
  e.kind = Kind::kSequence;
  e.children = std::move(items);
  return e;
}

PatternExpr PatternExpr::Alternation(std::vector<PatternExpr> branches) {
  PatternExpr e;
  e.kind = Kind::kAlternation;
  e.children = std::move(branches);
  return e;
}

PatternExpr PatternExpr::Group(PatternExpr inner, Quantifier q) {
  PatternExpr e;
  e.kind = Kind::kGroup;
  e.quantifier = q;
  e.children.push_back(std::move(inner));
  return e;
}

PatternExpr PatternExpr::Constraints(std::vector<Constraint> constraints) {
  PatternExpr e;
  e.kind = Kind::kConstraintSet;
  e.constraints = std::move(constraints);
  return e;
}

RulePhase ParseRuleFile(std::string_view text,
                        const std::string& source_name) {
  Lexer lexer(text, source_name);
  Parser parser(lexer.Run(), source_name);
  return parser.ParsePhase();
}

RulePhase LoadRuleFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ResourceError(path.string(), "cannot open rule file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseRuleFile(buffer.str(), path.string());
}

}  // namespace req2uml
