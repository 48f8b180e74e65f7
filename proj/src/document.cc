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

#include "req2uml/document.h"

#include <algorithm>

#include "req2uml/unicode.h"

namespace req2uml {

std::optional<std::string_view> Annotation::Feature(
    std::string_view key) const {
  auto it = features.find(std::string(key));
  if (it == features.end()) return std::nullopt;
  return std::string_view(it->second);
}

bool CanonicalLess(const Annotation& a, const Annotation& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.span.end != b.span.end) return a.span.end > b.span.end;
  return a.id < b.id;
}

Document::Document(std::string_view utf8_text, std::string name)
    : name_(std::move(name)), text_(DecodeUtf8(utf8_text)) {}

std::string Document::Slice(const Span& span) const {
  if (span.start > span.end || span.end > text_.size()) {
    throw BoundsError("span out of bounds");
  }
  return EncodeUtf8(
      std::u32string_view(text_).substr(span.start, span.length()));
}

std::string Document::Utf8Text() const { return EncodeUtf8(text_); }

AnnotationId Document::Add(std::string type, Span span, FeatureMap features) {
  if (span.start > span.end || span.end > text_.size()) {
    throw BoundsError("annotation span [" + std::to_string(span.start) + "," +
                      std::to_string(span.end) + ") outside text of length " +
                      std::to_string(text_.size()));
  }
  if (type.empty()) throw std::invalid_argument("empty annotation type");
  const AnnotationId id = annotations_.size();
  annotations_.push_back(
      Annotation{id, std::move(type), span, std::move(features)});
  auto pos = std::upper_bound(order_.begin(), order_.end(), id,
                              [&](AnnotationId lhs, AnnotationId rhs) {
                                return CanonicalLess(annotations_[lhs],
                                                     annotations_[rhs]);
                              });
  order_.insert(pos, id);
  return id;
}

void Document::SetFeature(AnnotationId id, const std::string& key,
                          std::string value) {
  annotations_.at(id).features[key] = std::move(value);
}

bool Document::HasType(std::string_view type) const {
  return std::any_of(annotations_.begin(), annotations_.end(),
                     [&](const Annotation& a) { return a.type == type; });
}

std::vector<Annotation> Document::AnnotationsIn(const TypeSet& types,
                                                const Span& region) const {
  std::vector<Annotation> out;
  if (types.empty()) return out;
  for (AnnotationId id : order_) {
    const Annotation& a = annotations_[id];
    if (a.span.start > region.end) break;
    if (types.contains(a.type) && region.Contains(a.span)) out.push_back(a);
  }
  return out;
}

std::vector<Annotation> Document::All() const {
  std::vector<Annotation> out;
  out.reserve(order_.size());
  for (AnnotationId id : order_) out.push_back(annotations_[id]);
  return out;
}

}  // namespace req2uml
