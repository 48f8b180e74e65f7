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

#include <string>

#include "req2uml/lingpipe.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

enum class CharClass { kSpace, kLetter, kDigit, kPunct, kSymbol };

CharClass Classify(char32_t c) {
  if (IsSpace(c)) return CharClass::kSpace;
  if (IsLetter(c)) return CharClass::kLetter;
  if (IsDigit(c)) return CharClass::kDigit;
  if (IsPunctuation(c)) return CharClass::kPunct;
  return CharClass::kSymbol;
}

std::string Orthography(std::u32string_view word) {
  bool first_upper = IsUpper(word[0]);
  size_t upper = 0;
  size_t lower = 0;
  for (char32_t c : word) {
    if (IsUpper(c)) ++upper;
    if (IsLower(c)) ++lower;
  }
  if (upper == 0) return "lowercase";
  if (first_upper && upper == 1) return "upperInitial";
  if (lower == 0) return "allCaps";
  return "mixedCaps";
}

bool IsTerminator(std::u32string_view s) {
  return s == U"." || s == U"!" || s == U"?" || s == U"…";
}

bool IsCloser(std::u32string_view s) {
  return s == U")" || s == U"]" || s == U"\"" || s == U"'" || s == U"»" ||
         s == U"”" || s == U"’";
}

// True when the gap contains a newline, optional whitespace, then another
// newline.
bool HasBlankLine(std::u32string_view gap) {
  bool seen_newline = false;
  for (char32_t c : gap) {
    if (c == U'\n') {
      if (seen_newline) return true;
      seen_newline = true;
    } else if (!IsSpace(c)) {
      seen_newline = false;
    }
  }
  return false;
}

}  // namespace

void Tokenize(Document& doc) {
  if (doc.HasType(kTokenType)) {
    throw PreconditionError("document is already tokenized");
  }
  const std::u32string& text = doc.text();
  size_t i = 0;
  while (i < text.size()) {
    const CharClass cls = Classify(text[i]);
    if (cls == CharClass::kSpace) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    if (cls == CharClass::kLetter || cls == CharClass::kDigit) {
      while (j < text.size() && Classify(text[j]) == cls) ++j;
    }
    FeatureMap features;
    switch (cls) {
      case CharClass::kLetter:
        features["kind"] = "word";
        features["orth"] = Orthography(
            std::u32string_view(text).substr(i, j - i));
        break;
      case CharClass::kDigit:
        features["kind"] = "number";
        break;
      case CharClass::kPunct:
        features["kind"] = "punctuation";
        break;
      default:
        features["kind"] = "symbol";
        break;
    }
    features["string"] = doc.Slice(Span{i, j});
    doc.Add(std::string(kTokenType), Span{i, j}, std::move(features));
    i = j;
  }
}

void SplitSentences(Document& doc) {
  const std::vector<Annotation> tokens =
      doc.AnnotationsOf({std::string(kTokenType)});
  const std::u32string_view text(doc.text());
  auto surface = [&](const Annotation& a) {
    return text.substr(a.span.start, a.span.length());
  };

  size_t i = 0;
  while (i < tokens.size()) {
    const size_t first = i;
    size_t last = i;
    while (true) {
      if (IsTerminator(surface(tokens[last]))) {
        while (last + 1 < tokens.size() &&
               tokens[last + 1].span.start == tokens[last].span.end &&
               (IsTerminator(surface(tokens[last + 1])) ||
                IsCloser(surface(tokens[last + 1])))) {
          ++last;
        }
        break;
      }
      if (last + 1 >= tokens.size()) break;
      const size_t gap_start = tokens[last].span.end;
      const size_t gap_end = tokens[last + 1].span.start;
      if (HasBlankLine(text.substr(gap_start, gap_end - gap_start))) break;
      ++last;
    }
    doc.Add(std::string(kSentenceType),
            Span{tokens[first].span.start, tokens[last].span.end});
    i = last + 1;
  }
}

}  // namespace req2uml
