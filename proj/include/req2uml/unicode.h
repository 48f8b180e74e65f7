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

// Minimal UTF-8 and character-class helpers. The pipeline measures all
// offsets in Unicode scalar values, so text is decoded once on entry.

#ifndef REQ2UML_UNICODE_H_
#define REQ2UML_UNICODE_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace req2uml {

class Utf8Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws Utf8Error on malformed input.
std::u32string DecodeUtf8(std::string_view bytes);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);
bool IsPunctuation(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);

std::u32string ToLower(std::u32string_view text);
std::string ToLowerUtf8(std::string_view text);

// Trims ASCII/Unicode whitespace from both ends.
std::string Trim(std::string_view text);

}  // namespace req2uml

#endif  // REQ2UML_UNICODE_H_
