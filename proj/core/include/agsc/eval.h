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

#ifndef AGSC_EVAL_H_
#define AGSC_EVAL_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/config.h"
#include "agsc/dataset.h"
#include "agsc/pipeline.h"
#include "agsc/report.h"
#include "agsc/variant.h"

namespace agsc {

// Runs the corpus with `variant` replacing the configured variant and any
// per-stage overrides.
CorpusResult RunVariant(const Dataset& dataset, MethodVariant variant,
                        const PipelineConfig& config,
                        const Providers& providers);

// (prompt_id, u_final) per scored prompt, in dataset order.
std::vector<std::pair<std::string, double>> VariantScores(
    const CorpusResult& result);

struct CorrelationReport {
  std::string variant;
  double pcc = 0.0;
  double scc = 0.0;
  int n = 0;  // labeled prompts
  int64_t decomposer_calls = 0;
  double t_nli_ms = 0.0;      // per-prompt means
  double t_atom_ms = 0.0;
  double t_cluster_ms = 0.0;
};

struct Comparison {
  std::vector<CorrelationReport> rows;
  std::vector<std::string> warnings;
};

// Groups reports by variant and correlates u_final with factuality.
// Variants with fewer than two labeled prompts or constant inputs are
// skipped with a warning.
Comparison Compare(std::span<const PromptReport> reports);

inline constexpr char kTableHeader[] =
    "variant\tpcc\tscc\tn\tdecomposer_calls\tt_nli_ms\tt_atom_ms\t"
    "t_cluster_ms";

// Tab-separated, header first, one row per variant.
std::string FormatTable(const Comparison& comparison);

// Reads every *.jsonl report under `dir`, recursively, in path order.
absl::StatusOr<std::vector<PromptReport>> LoadReports(const std::string& dir);

}  // namespace agsc

#endif  // AGSC_EVAL_H_
