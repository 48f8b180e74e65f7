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

#include "req2uml/evaluate.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "req2uml/errors.h"
#include "req2uml/unicode.h"

namespace req2uml {
namespace {

double Ratio(size_t num, size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::ordered_json CountsJson(const Counts& c) {
  nlohmann::ordered_json j;
  j["tp"] = c.true_positives;
  j["fp"] = c.false_positives;
  j["fn"] = c.false_negatives;
  j["precision"] = c.Precision();
  j["recall"] = c.Recall();
  j["f1"] = c.F1();
  return j;
}

}  // namespace

double Counts::Precision() const {
  return Ratio(true_positives, true_positives + false_positives);
}

double Counts::Recall() const {
  return Ratio(true_positives, true_positives + false_negatives);
}

double Counts::F1() const {
  const double p = Precision();
  const double r = Recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

Counts& Counts::operator+=(const Counts& other) {
  true_positives += other.true_positives;
  false_positives += other.false_positives;
  false_negatives += other.false_negatives;
  return *this;
}

EvalReport::EvalReport() {
  for (std::string_view t : {kClassType, kAssociationType, kAttributeType}) {
    per_type[std::string(t)];
  }
}

Counts EvalReport::Micro() const {
  Counts total;
  for (const auto& [type, c] : per_type) total += c;
  return total;
}

std::string EvalReport::FormatTable() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %6s %6s %6s %9s %9s %9s\n", "type",
                "TP", "FP", "FN", "precision", "recall", "F1");
  out << line;
  auto row = [&](const std::string& name, const Counts& c) {
    std::snprintf(line, sizeof(line), "%-12s %6zu %6zu %6zu %9.4f %9.4f %9.4f\n",
                  name.c_str(), c.true_positives, c.false_positives,
                  c.false_negatives, c.Precision(), c.Recall(), c.F1());
    out << line;
  };
  for (const auto& [type, c] : per_type) row(type, c);
  row("micro", Micro());
  out << "documents: " << documents << "\n";
  for (const std::string& s : skipped) out << "skipped (no gold): " << s << "\n";
  return out.str();
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["documents"] = documents;
  nlohmann::ordered_json types = nlohmann::ordered_json::object();
  for (const auto& [type, c] : per_type) types[type] = CountsJson(c);
  j["per_type"] = types;
  j["micro"] = CountsJson(Micro());
  j["skipped"] = skipped;
  return j.dump(2) + "\n";
}

std::vector<Mention> ReadGoldFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError(path.string(), "cannot open gold file");
  std::vector<Mention> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || Trim(line).starts_with("#")) continue;
    std::vector<std::string> fields;
    std::istringstream fs(line);
    std::string field;
    while (std::getline(fs, field, '\t')) fields.push_back(field);
    if (fields.size() < 3) {
      throw ResourceError(path.string(), line_no,
                          "expected 'type<TAB>start<TAB>end'");
    }
    try {
      size_t used_start = 0;
      size_t used_end = 0;
      const unsigned long start = std::stoul(fields[1], &used_start);
      const unsigned long end = std::stoul(fields[2], &used_end);
      if (used_start != fields[1].size() || used_end != fields[2].size() ||
          start > end) {
        throw std::invalid_argument("");
      }
      out.push_back({Trim(fields[0]), Span{start, end}});
    } catch (const std::exception&) {
      throw ResourceError(path.string(), line_no, "invalid offsets");
    }
  }
  return out;
}

void Accumulate(EvalReport& report, const std::vector<Mention>& system,
                const std::vector<Mention>& gold) {
  const std::set<Mention> sys(system.begin(), system.end());
  const std::set<Mention> ref(gold.begin(), gold.end());
  for (const Mention& m : sys) {
    Counts& c = report.per_type[m.type];
    if (ref.contains(m)) {
      ++c.true_positives;
    } else {
      ++c.false_positives;
    }
  }
  for (const Mention& m : ref) {
    if (!sys.contains(m)) ++report.per_type[m.type].false_negatives;
  }
  ++report.documents;
}

}  // namespace req2uml
