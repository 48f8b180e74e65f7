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


#include "req2uml/emit.h"

#include <random>

#include "doctest.h"
#include "support/oracles.h"

namespace req2uml {
namespace {

UmlModel ReferenceModel() {
  UmlModel m;
  m.classes = {{"client", {}, {}}, {"commande", {}, {}}};
  m.associations = {{"passe", "client", "commande", {}}};
  return m;
}

TEST_CASE("Inline XML nests kept annotations") {
  Document doc("Le client passe une commande.");
  doc.Add("Token", Span{0, 2});
  doc.Add("classe", Span{3, 15}, {{"rule", "Classe"}});
  doc.Add("Association", Span{10, 15}, {{"rule", "Association"}});
  doc.Add("classe", Span{20, 28}, {{"rule", "Classe"}});
  CHECK(EmitInlineXml(doc, EmitConfig{}) ==
        "<doc>Le <classe rule=\"Classe\">client <Association "
        "rule=\"Association\">passe</Association></classe> une "
        "<classe rule=\"Classe\">commande</classe>.</doc>");
}

TEST_CASE("Inline XML without kept annotations is the escaped text") {
  Document doc("a < b & c", "x&y.txt");
  doc.Add("Token", Span{0, 1});
  CHECK(EmitInlineXml(doc, EmitConfig{}) ==
        "<doc source=\"x&amp;y.txt\">a &lt; b &amp; c</doc>");
  EmitConfig none;
  none.keep_types.clear();
  Document plain("x");
  plain.Add("classe", Span{0, 1});
  CHECK(EmitInlineXml(plain, none) == "<doc>x</doc>");
}

TEST_CASE("Inline XML escapes feature values and sorts attributes") {
  Document doc("ab");
  doc.Add("classe", Span{0, 2}, {{"z", "1"}, {"a", "\"<'>"}});
  CHECK(EmitInlineXml(doc, EmitConfig{}) ==
        "<doc><classe a=\"&quot;&lt;&apos;&gt;\" z=\"1\">ab</classe></doc>");
}

TEST_CASE("Crossing annotations cannot be serialized") {
  Document doc("abcdef");
  doc.Add("classe", Span{0, 4});
  doc.Add("Association", Span{2, 6});
  CHECK_THROWS_AS(EmitInlineXml(doc, EmitConfig{}), EmitError);
}

TEST_CASE("Empty annotations and equal spans") {
  Document doc("ab");
  doc.Add("classe", Span{0, 2});
  doc.Add("Attribut", Span{0, 2});
  doc.Add("classe", Span{1, 1});
  const std::string xml = EmitInlineXml(doc, EmitConfig{});
  CHECK(testing::IsWellFormedXml(xml));
}

TEST_CASE("Model XML") {
  CHECK(EmitModelXml(ReferenceModel()) ==
        "<model><class name=\"client\"/><class name=\"commande\"/>"
        "<association name=\"passe\" from=\"client\" to=\"commande\"/>"
        "</model>");
  CHECK(EmitModelXml(UmlModel{}) == "<model/>");
  UmlModel m;
  m.classes = {{"produit", {}, {}}};
  m.attributes = {{"couleur", "produit", {}}};
  CHECK(EmitModelXml(m) ==
        "<model><class name=\"produit\"><attribute name=\"couleur\"/>"
        "</class></model>");
}

TEST_CASE("PlantUML diagram") {
  EmitConfig cfg;
  const std::string d = EmitDiagram(ReferenceModel(), cfg);
  CHECK(d.starts_with("@startuml\n"));
  CHECK(d.ends_with("@enduml\n"));
  CHECK(d.find("class client\n") != std::string::npos);
  CHECK(d.find("client --> commande : passe\n") != std::string::npos);
  CHECK(EmitDiagram(UmlModel{}, cfg) == "@startuml\n@enduml\n");

  UmlModel m;
  m.classes = {{"bon de livraison", {}, {}}, {"colis", {}, {}}};
  m.attributes = {{"poids", "colis", {}}};
  m.associations = {{"accompagne", "bon de livraison", "colis", {}}};
  CHECK(EmitDiagram(m, cfg) ==
        "@startuml\n"
        "class \"bon de livraison\" as bon_de_livraison\n"
        "class colis {\n"
        "  poids\n"
        "}\n"
        "bon_de_livraison --> colis : accompagne\n"
        "@enduml\n");
}

TEST_CASE("Mermaid diagram") {
  EmitConfig cfg;
  cfg.dialect = DiagramDialect::kMermaid;
  const std::string d = EmitDiagram(ReferenceModel(), cfg);
  CHECK(d.starts_with("classDiagram\n"));
  CHECK(d.find("  client --> commande : passe\n") != std::string::npos);
  CHECK(DiagramExtension(DiagramDialect::kMermaid) == "mmd");
  CHECK(ParseDialect("plantuml") == DiagramDialect::kPlantUml);
  CHECK_FALSE(ParseDialect("dot").has_value());
}

TEST_CASE("Emitters are deterministic") {
  for (int i = 0; i < 3; ++i) {
    CHECK(EmitModelXml(ReferenceModel()) == EmitModelXml(ReferenceModel()));
    CHECK(EmitDiagram(ReferenceModel(), {}) == EmitDiagram(ReferenceModel(), {}));
  }
}

UmlModel RandomModel(std::mt19937& rng) {
  static const std::vector<std::string> pool = {
      "client", "commande", "bon de livraison", "élève", "a&b", "x<y",
      "\"q\"", "l'adresse", "Ωmega", "n°1", "c>d", "tab\there"};
  UmlModel m;
  std::vector<std::string> names = pool;
  std::shuffle(names.begin(), names.end(), rng);
  names.resize(rng() % 6);
  std::sort(names.begin(), names.end());
  for (const auto& n : names) m.classes.push_back({n, {}, {}});
  if (names.empty()) return m;
  const int na = static_cast<int>(rng() % 4);
  for (int i = 0; i < na; ++i) {
    m.attributes.push_back({pool[rng() % pool.size()],
                            names[rng() % names.size()], {}});
  }
  const int nas = static_cast<int>(rng() % 4);
  for (int i = 0; i < nas; ++i) {
    m.associations.push_back({pool[rng() % pool.size()],
                              names[rng() % names.size()],
                              names[rng() % names.size()], {}});
  }
  return m;
}

TEST_CASE("property: model XML round-trips through an XML parser") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    UmlModel m = RandomModel(rng);
    const std::string xml = EmitModelXml(m);
    REQUIRE(testing::IsWellFormedXml(xml));
    REQUIRE_MESSAGE(StructurallyEqual(testing::ReadModelXml(xml), m), xml);
  }
}

}  // namespace
}  // namespace req2uml
