// Copyright 2026 The AGSC Authors. All Rights Reserved.
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

// Command-line entry point: score, eval and inspect.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "absl/strings/str_format.h"
#include "agsc/config.h"
#include "agsc/dataset.h"
#include "agsc/eval.h"
#include "agsc/pipeline.h"
#include "agsc/report.h"
#include "agsc/variant.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDataset = 3;

int Fail(int code, const absl::Status& status) {
  std::cerr << "agsc: " << status.message() << "\n";
  return code;
}

struct ScoreArgs {
  std::string dataset;
  std::string config;
  std::string out;
  std::string variant;
  bool all_variants = false;
};

int RunScore(const ScoreArgs& args) {
  absl::StatusOr<agsc::PipelineConfig> config =
      args.config.empty() ? agsc::ParseConfig("")
                          : agsc::LoadConfig(args.config);
  if (!config.ok()) return Fail(kExitConfig, config.status());
  if (!args.variant.empty()) {
    std::optional<agsc::MethodVariant> variant =
        agsc::ParseVariant(args.variant);
    if (!variant) {
      return Fail(kExitConfig, absl::InvalidArgumentError(absl::StrFormat(
                                   "unknown variant '%s'", args.variant)));
    }
    config->variant = *variant;
  }
  const std::string out = args.out.empty() ? config->report_dir : args.out;
  if (out.empty()) {
    return Fail(kExitConfig, absl::InvalidArgumentError(
                                 "no output directory: pass --out or set "
                                 "pipeline.report_dir"));
  }

  absl::StatusOr<agsc::Dataset> dataset = agsc::LoadDataset(args.dataset);
  if (!dataset.ok()) return Fail(kExitDataset, dataset.status());
  for (const agsc::RejectedRecord& r : dataset->rejected) {
    std::cerr << "agsc: rejected record at line " << r.line << ": " << r.reason
              << "\n";
  }

  absl::StatusOr<std::unique_ptr<agsc::ProviderStack>> stack =
      agsc::ProviderStack::Create(*config);
  if (!stack.ok()) return Fail(kExitConfig, stack.status());

  std::vector<agsc::MethodVariant> variants;
  if (args.all_variants) {
    variants.assign(agsc::AllVariants().begin(), agsc::AllVariants().end());
  } else {
    variants.push_back(config->variant);
  }
  std::vector<agsc::PromptReport> all_reports;
  for (agsc::MethodVariant variant : variants) {
    agsc::PipelineConfig run_config = *config;
    agsc::CorpusResult result;
    if (args.all_variants) {
      result = agsc::RunVariant(*dataset, variant, run_config,
                                (*stack)->providers());
      run_config.variant = variant;
      run_config.granularity_override.reset();
      run_config.clustering_override.reset();
      run_config.aggregation_override.reset();
    } else {
      result = agsc::RunCorpus(*dataset, run_config, (*stack)->providers());
    }
    const std::string dir =
        args.all_variants
            ? (std::filesystem::path(out) / agsc::VariantName(variant)).string()
            : out;
    if (absl::Status s = agsc::WriteReports(dir, result, run_config); !s.ok()) {
      return Fail(kExitFailure, s);
    }
    for (const agsc::PromptFailure& f : result.failures) {
      std::cerr << "agsc: prompt " << f.prompt_id << " failed: " << f.error
                << "\n";
    }
    std::cout << absl::StrFormat("%s: scored %d of %d prompt(s), %d failed -> %s\n",
                                 result.variant, result.reports.size(),
                                 result.num_prompts, result.failures.size(),
                                 dir);
    for (auto& [index, report] : result.reports) {
      all_reports.push_back(std::move(report));
    }
  }
  if (args.all_variants) {
    const agsc::Comparison comparison = agsc::Compare(all_reports);
    for (const std::string& w : comparison.warnings) {
      std::cerr << "agsc: " << w << "\n";
    }
    std::ofstream table(std::filesystem::path(out) / "comparison.tsv");
    table << agsc::FormatTable(comparison);
  }
  return kExitOk;
}

int RunEval(const std::string& reports_dir, const std::string& out) {
  absl::StatusOr<std::vector<agsc::PromptReport>> reports =
      agsc::LoadReports(reports_dir);
  if (!reports.ok()) return Fail(kExitDataset, reports.status());
  const agsc::Comparison comparison = agsc::Compare(*reports);
  for (const std::string& w : comparison.warnings) {
    std::cerr << "agsc: " << w << "\n";
  }
  const std::string table = agsc::FormatTable(comparison);
  if (out.empty() || out == "-") {
    std::cout << table;
    return kExitOk;
  }
  std::ofstream file(out);
  file << table;
  if (!file) {
    return Fail(kExitFailure, absl::InternalError(
                                  absl::StrFormat("cannot write '%s'", out)));
  }
  return kExitOk;
}

int RunInspect(const std::string& path, int sentence) {
  absl::StatusOr<agsc::PromptReport> report = agsc::ReadReportFile(path);
  if (!report.ok()) return Fail(kExitDataset, report.status());
  for (const agsc::RoutingRecord& r : report->routing) {
    if (r.sentence_index != sentence) continue;
    std::cout << absl::StrFormat("prompt     %s (%s)\n", report->prompt_id,
                                 report->variant);
    std::cout << absl::StrFormat("sentence   %d: %s\n", r.sentence_index,
                                 r.text);
    std::cout << absl::StrFormat(
        "nli        entail=%.6f contradict=%.6f neutral=%.6f\n",
        r.distribution.entail, r.distribution.contradict,
        r.distribution.neutral);
    std::cout << absl::StrFormat("dominant   %s  gap=%.6f\n",
                                 agsc::NliLabelName(r.dominant), r.gap);
    std::cout << absl::StrFormat("decision   %s (%s)%s\n",
                                 agsc::DecisionKindName(r.decision),
                                 agsc::UnitScoringName(r.scoring),
                                 r.decomposer_fallback ? " [fallback]" : "");
    std::cout << absl::StrFormat("u_sentence %.6f\n", r.sentence_uncertainty);
    if (r.u_adaptive) {
      std::cout << absl::StrFormat("u_adaptive %.6f\n", *r.u_adaptive);
    } else {
      std::cout << "u_adaptive skipped\n";
    }
    for (const agsc::ScoredUnit& u : r.units) {
      std::cout << absl::StrFormat("  %-12s U=%.6f  %s\n", u.unit.unit_id,
                                   u.uncertainty, u.unit.text);
    }
    return kExitOk;
  }
  std::cerr << "agsc: report has no sentence " << sentence << " ("
            << report->routing.size() << " sentence(s))\n";
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-granularity semantic-clustering uncertainty scorer"};
  app.require_subcommand(1);

  ScoreArgs score;
  CLI::App* score_cmd = app.add_subcommand("score", "Score a dataset");
  score_cmd->add_option("--dataset", score.dataset, "Line-delimited dataset")
      ->required();
  score_cmd->add_option("--config", score.config, "Key-value config file");
  score_cmd->add_option("--out", score.out, "Report directory");
  score_cmd->add_option("--variant", score.variant, "Method variant override");
  score_cmd->add_flag("--all-variants", score.all_variants,
                      "Run every variant into <out>/<variant>/");

  std::string reports_dir;
  std::string eval_out;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Correlate report scores with factuality");
  eval_cmd->add_option("--reports", reports_dir, "Report directory")
      ->required();
  eval_cmd->add_option("--out", eval_out, "Output table ('-' for stdout)");

  std::string report_path;
  int sentence = 0;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Show one sentence's routing record");
  inspect_cmd->add_option("--report", report_path, "Report file")->required();
  inspect_cmd->add_option("--sentence", sentence, "Sentence index")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*score_cmd) return RunScore(score);
  if (*eval_cmd) return RunEval(reports_dir, eval_out);
  if (*inspect_cmd) return RunInspect(report_path, sentence);
  return kExitFailure;
}
