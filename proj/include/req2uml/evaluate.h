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

// Corpus evaluation: exact-span, exact-type comparison of UML mentions
// against hand-authored gold files.

#ifndef REQ2UML_EVALUATE_H_
#define REQ2UML_EVALUATE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "req2uml/uml_model.h"

namespace req2uml {

struct Counts {
  size_t true_positives = 0;
  size_t false_positives = 0;
  size_t false_negatives = 0;

  // 0/0 is defined as 1.0.
  double Precision() const;
  double Recall() const;
  // Harmonic mean; 0 when precision and recall are both 0.
  double F1() const;

  Counts& operator+=(const Counts& other);
};

struct EvalReport {
  std::map<std::string, Counts> per_type;  // classe, Association, Attribut
  size_t documents = 0;
  std::vector<std::string> skipped;  // inputs without a gold file

  EvalReport();

  // Counts summed over all types.
  Counts Micro() const;

  // Aligned plain-text table.
  std::string FormatTable() const;
  // Machine-readable summary (JSON).
  std::string ToJson() const;
};

// Gold file: one `type<TAB>start<TAB>end` line per mention (code point
// offsets); extra columns and `#` lines are ignored.
std::vector<Mention> ReadGoldFile(const std::filesystem::path& path);

// Adds one document's comparison to the report.
void Accumulate(EvalReport& report, const std::vector<Mention>& system,
                const std::vector<Mention>& gold);

}  // namespace req2uml

#endif  // REQ2UML_EVALUATE_H_
