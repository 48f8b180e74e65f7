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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

namespace req2uml {
namespace {

Mention M(std::string type, size_t start, size_t end) {
  return Mention{std::move(type), Span{start, end}};
}

TEST_CASE("Perfect agreement scores 1") {
  EvalReport r;
  Accumulate(r, {M("classe", 3, 9), M("Association", 10, 15)},
             {M("Association", 10, 15), M("classe", 3, 9)});
  CHECK(r.per_type["classe"].F1() == 1.0);
  CHECK(r.per_type["Association"].F1() == 1.0);
  CHECK(r.Micro().F1() == 1.0);
  CHECK(r.documents == 1);
}

TEST_CASE("Half right") {
  EvalReport r;
  Accumulate(r, {M("classe", 0, 3), M("classe", 10, 12)},
             {M("classe", 0, 3), M("classe", 5, 8)});
  const Counts& c = r.per_type["classe"];
  CHECK(c.true_positives == 1);
  CHECK(c.false_positives == 1);
  CHECK(c.false_negatives == 1);
  CHECK(c.Precision() == 0.5);
  CHECK(c.Recall() == 0.5);
  CHECK(c.F1() == 0.5);
}

TEST_CASE("Empty sets and zero scores") {
  Counts empty;
  CHECK(empty.Precision() == 1.0);
  CHECK(empty.Recall() == 1.0);
  CHECK(empty.F1() == 1.0);
  Counts wrong{0, 2, 3};
  CHECK(wrong.Precision() == 0.0);
  CHECK(wrong.Recall() == 0.0);
  CHECK(wrong.F1() == 0.0);
  Counts mixed{2, 1, 3};
  CHECK(mixed.F1() == doctest::Approx(2.0 * (2.0 / 3) * (2.0 / 5) /
                                      (2.0 / 3 + 2.0 / 5)));
}

TEST_CASE("Types are compared separately") {
  EvalReport r;
  Accumulate(r, {M("Association", 0, 3)}, {M("classe", 0, 3)});
  CHECK(r.per_type["Association"].false_positives == 1);
  CHECK(r.per_type["classe"].false_negatives == 1);
  CHECK(r.per_type["Attribut"].F1() == 1.0);
}

TEST_CASE("Gold file parsing and JSON report") {
  const auto path = std::filesystem::temp_directory_path() / "req2uml_gold.tsv";
  {
    std::ofstream out(path);
    out << "# type\tstart\tend\tsurface\nclasse\t3\t9\tclient\n\n"
           "Association\t10\t15\tpasse\n";
  }
  auto gold = ReadGoldFile(path);
  std::filesystem::remove(path);
  REQUIRE(gold.size() == 2);
  CHECK(gold[0] == M("classe", 3, 9));
  CHECK(gold[1] == M("Association", 10, 15));

  EvalReport r;
  Accumulate(r, gold, gold);
  auto json = nlohmann::json::parse(r.ToJson());
  CHECK(json["documents"] == 1);
  CHECK(json.dump().find("classe") != std::string::npos);
  CHECK(r.FormatTable().find("classe") != std::string::npos);
}

}  // namespace
}  // namespace req2uml
