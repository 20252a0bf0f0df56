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

#include "agsc/eval.h"

#include <algorithm>
#include <filesystem>
#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "agsc/correlation.h"

namespace agsc {

CorpusResult RunVariant(const Dataset& dataset, MethodVariant variant,
                        const PipelineConfig& config,
                        const Providers& providers) {
  PipelineConfig variant_config = config;
  variant_config.variant = variant;
  variant_config.granularity_override.reset();
  variant_config.clustering_override.reset();
  variant_config.aggregation_override.reset();
  return RunCorpus(dataset, variant_config, providers);
}

std::vector<std::pair<std::string, double>> VariantScores(
    const CorpusResult& result) {
  std::vector<std::pair<std::string, double>> scores;
  for (const auto& [index, report] : result.reports) {
    scores.emplace_back(report.prompt_id, report.final_score.u_final);
  }
  return scores;
}

Comparison Compare(std::span<const PromptReport> reports) {
  std::map<std::string, std::vector<const PromptReport*>> groups;
  for (const PromptReport& r : reports) groups[r.variant].push_back(&r);

  // Canonical variant order first, then any unknown names alphabetically.
  std::vector<std::string> order;
  for (MethodVariant v : AllVariants()) {
    if (groups.count(VariantName(v))) order.push_back(VariantName(v));
  }
  for (const auto& [name, members] : groups) {
    if (!ParseVariant(name)) order.push_back(name);
  }

  Comparison comparison;
  for (const std::string& name : order) {
    const std::vector<const PromptReport*>& members = groups[name];
    std::vector<double> u;
    std::vector<double> labels;
    CorrelationReport row;
    row.variant = name;
    for (const PromptReport* r : members) {
      row.decomposer_calls += r->timing.decomposer_calls;
      row.t_nli_ms += r->timing.t_nli;
      row.t_atom_ms += r->timing.t_atom;
      row.t_cluster_ms += r->timing.t_cluster;
      if (r->factuality) {
        u.push_back(r->final_score.u_final);
        labels.push_back(*r->factuality);
      }
    }
    const double count = static_cast<double>(members.size());
    row.t_nli_ms /= count;
    row.t_atom_ms /= count;
    row.t_cluster_ms /= count;
    row.n = static_cast<int>(u.size());
    if (row.n < 2) {
      comparison.warnings.push_back(absl::StrCat(
          name, ": skipped, ", row.n, " labeled prompt(s), need at least 2"));
      continue;
    }
    absl::StatusOr<double> pcc = Pearson(u, labels);
    absl::StatusOr<double> scc = Spearman(u, labels);
    if (!pcc.ok() || !scc.ok()) {
      const absl::Status& bad = pcc.ok() ? scc.status() : pcc.status();
      comparison.warnings.push_back(
          absl::StrCat(name, ": skipped, ", bad.message()));
      continue;
    }
    row.pcc = *pcc;
    row.scc = *scc;
    comparison.rows.push_back(row);
  }
  return comparison;
}

std::string FormatTable(const Comparison& comparison) {
  std::string out = absl::StrCat(kTableHeader, "\n");
  for (const CorrelationReport& r : comparison.rows) {
    absl::StrAppend(&out,
                    absl::StrFormat("%s\t%.6f\t%.6f\t%d\t%d\t%.3f\t%.3f\t%.3f\n",
                                    r.variant, r.pcc, r.scc, r.n,
                                    r.decomposer_calls, r.t_nli_ms, r.t_atom_ms,
                                    r.t_cluster_ms));
  }
  return out;
}

absl::StatusOr<std::vector<PromptReport>> LoadReports(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    return absl::NotFoundError(
        absl::StrCat("report directory '", dir, "' does not exist"));
  }
  std::vector<fs::path> files;
  for (fs::recursive_directory_iterator it(dir, ec), end; it != end;
       it.increment(ec)) {
    if (ec) break;
    if (it->is_regular_file() && it->path().extension() == ".jsonl") {
      files.push_back(it->path());
    }
  }
  if (ec) {
    return absl::InternalError(
        absl::StrCat("cannot list '", dir, "': ", ec.message()));
  }
  std::sort(files.begin(), files.end());
  std::vector<PromptReport> reports;
  for (const fs::path& file : files) {
    absl::StatusOr<PromptReport> report = ReadReportFile(file.string());
    if (!report.ok()) return report.status();
    reports.push_back(*std::move(report));
  }
  return reports;
}

}  // namespace agsc
