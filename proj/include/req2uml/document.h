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

// The annotation store shared by every pipeline stage.

#ifndef REQ2UML_DOCUMENT_H_
#define REQ2UML_DOCUMENT_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace req2uml {

// Half-open range of code point offsets.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  auto operator<=>(const Span&) const = default;
};

using FeatureMap = std::map<std::string, std::string>;
using TypeSet = std::set<std::string, std::less<>>;
using AnnotationId = size_t;

struct Annotation {
  AnnotationId id = 0;
  std::string type;
  Span span;
  FeatureMap features;

  // Returns the feature value, or nullopt when absent.
  std::optional<std::string_view> Feature(std::string_view key) const;
};

// Canonical order: start ascending, end descending, id ascending.
bool CanonicalLess(const Annotation& a, const Annotation& b);

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class Document {
 public:
  Document() = default;
  // `utf8_text` is decoded to code points; `name` is the source label used
  // by serializers.
  explicit Document(std::string_view utf8_text, std::string name = {});

  const std::u32string& text() const { return text_; }
  size_t length() const { return text_.size(); }
  const std::string& name() const { return name_; }

  // UTF-8 slice of the text under `span`.
  std::string Slice(const Span& span) const;
  std::string Utf8Text() const;

  AnnotationId Add(std::string type, Span span, FeatureMap features = {});

  // Sets (or replaces) one feature of an existing annotation.
  void SetFeature(AnnotationId id, const std::string& key, std::string value);

  const Annotation& Get(AnnotationId id) const { return annotations_.at(id); }
  size_t size() const { return annotations_.size(); }
  AnnotationId next_id() const { return annotations_.size(); }
  bool HasType(std::string_view type) const;

  // Annotations whose type is in `types` and whose span lies inside
  // `region`, in canonical order.
  std::vector<Annotation> AnnotationsIn(const TypeSet& types,
                                        const Span& region) const;
  std::vector<Annotation> AnnotationsOf(const TypeSet& types) const {
    return AnnotationsIn(types, Span{0, text_.size()});
  }

  // Every annotation, in canonical order.
  std::vector<Annotation> All() const;

 private:
  std::string name_;
  std::u32string text_;
  std::vector<Annotation> annotations_;  // indexed by id
  std::vector<AnnotationId> order_;      // ids in canonical order
};

}  // namespace req2uml

#endif  // REQ2UML_DOCUMENT_H_
