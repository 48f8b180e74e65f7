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

// req2uml: requirements text to UML class model.
//
//   req2uml run --resources DIR --out DIR [--dialect plantuml|mermaid] INPUT...
//   req2uml eval --resources DIR --gold DIR [--report FILE] INPUT...
//   req2uml check-rules FILE
//
// Exit codes: 0 success, 1 input or resource error, 2 rule syntax error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "req2uml/evaluate.h"
#include "req2uml/pipeline.h"
#include "req2uml/unicode.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRuleError = 2;

struct Options {
  std::string resources;
  std::string out;
  std::string gold;
  std::string report = "eval_report.json";
  std::string dialect = "plantuml";
  std::string control;
  std::vector<std::string> inputs;
  std::string rule_file;
};

// --resources, else $REQ2UML_RESOURCES.
std::optional<fs::path> ResourceRoot(const Options& opts) {
  if (!opts.resources.empty()) return fs::path(opts.resources);
  if (const char* env = std::getenv("REQ2UML_RESOURCES"); env && *env) {
    return fs::path(env);
  }
  return std::nullopt;
}

req2uml::Resources LoadResources(const Options& opts) {
  const std::optional<fs::path> root = ResourceRoot(opts);
  if (!root) {
    throw req2uml::ResourceError("req2uml",
                                 "no resource root: pass --resources or set "
                                 "REQ2UML_RESOURCES");
  }
  req2uml::Resources resources = req2uml::Resources::Load(*root);
  if (opts.control == "appelt") {
    req2uml::OverrideControl(resources.phases, req2uml::ControlMode::kAppelt);
  } else if (opts.control == "all") {
    req2uml::OverrideControl(resources.phases, req2uml::ControlMode::kAll);
  } else if (opts.control == "first") {
    req2uml::OverrideControl(resources.phases, req2uml::ControlMode::kFirst);
  }
  return resources;
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw req2uml::ResourceError(path.string(), "cannot write file");
  out << content;
}

std::vector<fs::path> Inputs(const Options& opts) {
  std::vector<fs::path> raw(opts.inputs.begin(), opts.inputs.end());
  return req2uml::ExpandInputs(raw);
}

int Run(const Options& opts) {
  const req2uml::Resources resources = LoadResources(opts);
  req2uml::EmitConfig cfg;
  cfg.dialect = *req2uml::ParseDialect(opts.dialect);
  const fs::path out_dir(opts.out);
  fs::create_directories(out_dir);

  int status = kExitOk;
  for (const fs::path& input : Inputs(opts)) {
    try {
      const std::string text = req2uml::ReadFile(input);
      const req2uml::Analysis analysis =
          req2uml::Analyze(text, input.filename().string(), resources);
      const req2uml::RenderedOutputs outputs = req2uml::Render(analysis, cfg);
      const std::string stem = input.stem().string();
      WriteFile(out_dir / (stem + ".annotated.xml"), outputs.annotated_xml);
      WriteFile(out_dir / (stem + ".model.xml"), outputs.model_xml);
      WriteFile(out_dir / (stem + "." +
                           std::string(req2uml::DiagramExtension(cfg.dialect))),
                outputs.diagram);
      for (const std::string& d : analysis.model.diagnostics) {
        std::cerr << input.string() << ": note: " << d << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << input.string() << ": error: " << e.what() << "\n";
      status = kExitInputError;
    }
  }
  return status;
}

int Eval(const Options& opts) {
  const req2uml::Resources resources = LoadResources(opts);
  const fs::path gold_dir(opts.gold);
  if (!fs::is_directory(gold_dir)) {
    throw req2uml::ResourceError(gold_dir.string(),
                                 "gold directory does not exist");
  }
  req2uml::EvalReport report;
  int status = kExitOk;
  for (const fs::path& input : Inputs(opts)) {
    const fs::path gold_path =
        gold_dir / (input.stem().string() + ".gold.tsv");
    if (!fs::exists(gold_path)) {
      report.skipped.push_back(input.string());
      continue;
    }
    try {
      const req2uml::Analysis analysis = req2uml::Analyze(
          req2uml::ReadFile(input), input.filename().string(), resources);
      req2uml::Accumulate(report, req2uml::ExtractMentions(analysis.doc),
                          req2uml::ReadGoldFile(gold_path));
    } catch (const std::exception& e) {
      std::cerr << input.string() << ": error: " << e.what() << "\n";
      status = kExitInputError;
    }
  }
  std::cout << report.FormatTable();
  if (!opts.report.empty()) WriteFile(opts.report, report.ToJson());
  return status;
}

int CheckRules(const Options& opts) {
  const req2uml::RulePhase phase = req2uml::LoadRuleFile(opts.rule_file);
  std::cout << "phase " << phase.name << ": control "
            << req2uml::ControlModeName(phase.control) << ", "
            << phase.rules.size() << " rule(s)\n";
  for (const req2uml::Rule& rule : phase.rules) {
    std::cout << "  rule " << rule.name << " priority " << rule.priority
              << " -> " << rule.action.new_type << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract a UML class model from natural-language requirements"};
  app.require_subcommand(1);
  Options opts;

  CLI::App* run = app.add_subcommand("run", "Annotate inputs and emit models");
  run->add_option("--resources", opts.resources,
                  "Resource root (default: $REQ2UML_RESOURCES)");
  run->add_option("--out", opts.out, "Output directory")->required();
  run->add_option("--dialect", opts.dialect, "Diagram dialect")
      ->check(CLI::IsMember({"plantuml", "mermaid"}));
  run->add_option("--control", opts.control,
                  "Override the control mode of every phase")
      ->check(CLI::IsMember({"appelt", "all", "first"}));
  run->add_option("inputs", opts.inputs, "Input files or directories")
      ->required();

  CLI::App* eval = app.add_subcommand("eval", "Score inputs against gold files");
  eval->add_option("--resources", opts.resources,
                   "Resource root (default: $REQ2UML_RESOURCES)");
  eval->add_option("--gold", opts.gold, "Directory of <stem>.gold.tsv files")
      ->required();
  eval->add_option("--report", opts.report, "JSON summary path")
      ->capture_default_str();
  eval->add_option("--control", opts.control,
                   "Override the control mode of every phase")
      ->check(CLI::IsMember({"appelt", "all", "first"}));
  eval->add_option("inputs", opts.inputs, "Input files or directories")
      ->required();

  CLI::App* check =
      app.add_subcommand("check-rules", "Parse a rule file and report errors");
  check->add_option("file", opts.rule_file, "Rule file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*run) return Run(opts);
    if (*eval) return Eval(opts);
    return CheckRules(opts);
  } catch (const req2uml::RuleSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuleError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
