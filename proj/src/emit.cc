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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "req2uml/unicode.h"

namespace req2uml {
namespace {

// Attribute values additionally need whitespace character references, or a
// parser would normalize tabs and newlines to spaces.
std::string EscapeAttribute(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += EscapeXml(std::string_view(&c, 1)); break;
    }
  }
  return out;
}

std::string SpanText(const Span& s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

std::string OpenTag(const Annotation& a) {
  std::string out = "<" + a.type;
  for (const auto& [key, value] : a.features) {
    out += " " + key + "=\"" + EscapeAttribute(value) + "\"";
  }
  return out + ">";
}

struct SortedModel {
  std::vector<const UmlClass*> classes;
  std::map<std::string, std::vector<std::string>> attributes;  // by owner
  std::vector<const UmlAssociation*> associations;
};

SortedModel Sort(const UmlModel& model) {
  SortedModel out;
  for (const UmlClass& c : model.classes) out.classes.push_back(&c);
  std::sort(out.classes.begin(), out.classes.end(),
            [](const UmlClass* a, const UmlClass* b) {
              return a->name < b->name;
            });
  for (const UmlAttribute& at : model.attributes) {
    out.attributes[at.owner].push_back(at.name);
  }
  for (auto& [owner, names] : out.attributes) {
    std::sort(names.begin(), names.end());
  }
  for (const UmlAssociation& as : model.associations) {
    out.associations.push_back(&as);
  }
  std::sort(out.associations.begin(), out.associations.end(),
            [](const UmlAssociation* a, const UmlAssociation* b) {
              return std::tie(a->name, a->source, a->target) <
                     std::tie(b->name, b->source, b->target);
            });
  return out;
}

bool IsPlainAsciiIdent(std::string_view name) {
  if (name.empty() || (name[0] >= '0' && name[0] <= '9')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

bool IsUnicodeIdent(std::string_view name) {
  const std::u32string decoded = DecodeUtf8(name);
  if (decoded.empty() || IsDigit(decoded[0])) return false;
  return std::all_of(decoded.begin(), decoded.end(), [](char32_t c) {
    return IsLetter(c) || IsDigit(c) || c == U'_';
  });
}

// Assigns each class a diagram identifier; names that are not identifiers
// in the target dialect get a sanitized alias.
std::map<std::string, std::string> AssignIds(const SortedModel& sorted,
                                             DiagramDialect dialect) {
  std::map<std::string, std::string> ids;
  std::set<std::string> used;
  for (const UmlClass* c : sorted.classes) {
    const bool plain = dialect == DiagramDialect::kPlantUml
                           ? IsUnicodeIdent(c->name)
                           : IsPlainAsciiIdent(c->name);
    if (plain) used.insert(c->name);
  }
  for (const UmlClass* c : sorted.classes) {
    const bool plain = dialect == DiagramDialect::kPlantUml
                           ? IsUnicodeIdent(c->name)
                           : IsPlainAsciiIdent(c->name);
    if (plain) {
      ids[c->name] = c->name;
      continue;
    }
    std::string base;
    for (char c32 : c->name) {
      const bool keep = (c32 >= 'a' && c32 <= 'z') ||
                        (c32 >= 'A' && c32 <= 'Z') ||
                        (c32 >= '0' && c32 <= '9');
      base += keep ? c32 : '_';
    }
    if (base.empty() || (base[0] >= '0' && base[0] <= '9')) base = "c_" + base;
    std::string id = base;
    for (int n = 2; used.contains(id); ++n) id = base + "_" + std::to_string(n);
    used.insert(id);
    ids[c->name] = id;
  }
  return ids;
}

std::string QuoteLabel(std::string_view text) {
  std::string out = "\"";
  for (char c : text) out += (c == '"') ? '\'' : c;
  return out + "\"";
}

}  // namespace

std::optional<DiagramDialect> ParseDialect(std::string_view name) {
  if (name == "plantuml") return DiagramDialect::kPlantUml;
  if (name == "mermaid") return DiagramDialect::kMermaid;
  return std::nullopt;
}

std::string_view DiagramExtension(DiagramDialect dialect) {
  return dialect == DiagramDialect::kPlantUml ? "puml" : "mmd";
}

std::string EscapeXml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string EmitInlineXml(const Document& doc, const EmitConfig& cfg) {
  std::vector<Annotation> kept = doc.AnnotationsOf(cfg.keep_types);
  // Exact duplicates collapse into one element.
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Annotation& a, const Annotation& b) {
                           return a.type == b.type && a.span == b.span &&
                                  a.features == b.features;
                         }),
             kept.end());

  std::vector<std::string> crossings;
  {
    std::vector<const Annotation*> stack;
    for (const Annotation& a : kept) {
      while (!stack.empty() && stack.back()->span.end <= a.span.start) {
        stack.pop_back();
      }
      if (!stack.empty() && stack.back()->span.end < a.span.end) {
        crossings.push_back(stack.back()->type + SpanText(stack.back()->span) +
                            " overlaps " + a.type + SpanText(a.span));
        continue;
      }
      stack.push_back(&a);
    }
  }
  if (!crossings.empty()) {
    std::string message = "cannot nest overlapping annotations:";
    for (const std::string& c : crossings) message += " " + c + ";";
    throw EmitError(message);
  }

  const std::u32string_view text(doc.text());
  std::string out = doc.name().empty()
                        ? "<doc>"
                        : "<doc source=\"" + EscapeAttribute(doc.name()) + "\">";
  size_t cursor = 0;
  auto emit_text_to = [&](size_t pos) {
    if (pos > cursor) {
      out += EscapeXml(EncodeUtf8(text.substr(cursor, pos - cursor)));
      cursor = pos;
    }
  };
  std::vector<const Annotation*> stack;
  auto close_until = [&](size_t pos) {
    while (!stack.empty() && stack.back()->span.end <= pos) {
      emit_text_to(stack.back()->span.end);
      out += "</" + stack.back()->type + ">";
      stack.pop_back();
    }
  };
  for (const Annotation& a : kept) {
    close_until(a.span.start);
    emit_text_to(a.span.start);
    out += OpenTag(a);
    stack.push_back(&a);
  }
  close_until(text.size());
  emit_text_to(text.size());
  out += "</doc>";
  return out;
}

std::string EmitModelXml(const UmlModel& model) {
  const SortedModel sorted = Sort(model);
  if (sorted.classes.empty() && sorted.associations.empty()) {
    return "<model/>";
  }
  std::string out = "<model>";
  for (const UmlClass* c : sorted.classes) {
    out += "<class name=\"" + EscapeAttribute(c->name) + "\"";
    auto it = sorted.attributes.find(c->name);
    if (it == sorted.attributes.end()) {
      out += "/>";
      continue;
    }
    out += ">";
    for (const std::string& name : it->second) {
      out += "<attribute name=\"" + EscapeAttribute(name) + "\"/>";
    }
    out += "</class>";
  }
  for (const UmlAssociation* as : sorted.associations) {
    out += "<association name=\"" + EscapeAttribute(as->name) + "\" from=\"" +
           EscapeAttribute(as->source) + "\" to=\"" + EscapeAttribute(as->target) +
           "\"/>";
  }
  out += "</model>";
  return out;
}

std::string EmitDiagram(const UmlModel& model, const EmitConfig& cfg) {
  const SortedModel sorted = Sort(model);
  const std::map<std::string, std::string> ids = AssignIds(sorted, cfg.dialect);
  auto id_of = [&](const std::string& name) {
    auto it = ids.find(name);
    return it == ids.end() ? name : it->second;
  };

  std::string out;
  const bool plantuml = cfg.dialect == DiagramDialect::kPlantUml;
  const std::string indent = plantuml ? "" : "  ";
  out += plantuml ? "@startuml\n" : "classDiagram\n";
  for (const UmlClass* c : sorted.classes) {
    const std::string& id = ids.at(c->name);
    auto attrs = sorted.attributes.find(c->name);
    const bool has_attrs = attrs != sorted.attributes.end();
    if (plantuml) {
      out += "class ";
      out += id == c->name ? id : QuoteLabel(c->name) + " as " + id;
    } else {
      // Mermaid identifiers are ASCII; other names get a label.
      if (id != c->name) {
        out += indent + "class " + id + "[" + QuoteLabel(c->name) + "]\n";
        if (!has_attrs) continue;
      }
      out += indent + "class " + id;
    }
    if (has_attrs) {
      out += " {\n";
      for (const std::string& name : attrs->second) {
        out += indent + "  " + name + "\n";
      }
      out += indent + "}";
    }
    out += "\n";
  }
  for (const UmlAssociation* as : sorted.associations) {
    out += indent + id_of(as->source) + " --> " + id_of(as->target) + " : " +
           as->name + "\n";
  }
  if (plantuml) out += "@enduml\n";
  return out;
}

}  // namespace req2uml
