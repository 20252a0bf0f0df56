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

#ifndef AGSC_REPORT_H_
#define AGSC_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/aggregation.h"
#include "agsc/router.h"
#include "agsc/timing.h"
#include "nlohmann/json.hpp"

namespace agsc {

inline constexpr char kTGenNote[] =
    "t_gen not measured: responses are inputs, generation is not performed";

struct ClusteringInfo {
  std::string method = "none";  // gmm | kmeans | none
  std::string reducer;
  std::string units;            // post_granularity | sentences_only
  int num_rows = 0;             // clustered units, anchor + reference
  int num_anchor_rows = 0;
  int embed_dim = 0;
  int reduced_dim = 0;
  int k = 0;
  int k_max = 0;
  bool trivial = false;
  std::vector<std::pair<int, double>> bic_trace;
};

struct PromptReport {
  // Ingestion fields, so a report file can be read back as a dataset.
  std::string prompt_id;
  std::string prompt;
  std::vector<std::string> responses;
  std::optional<double> factuality;

  std::string variant;
  std::vector<RoutingRecord> routing;
  std::vector<ScoredUnit> anchor_units;
  ClusteringInfo clustering;
  FinalScore final_score;
  TimingBreakdown timing;
  bool decomposer_fallback = false;
  // Reduced coordinates, responsibilities, K and BIC trace when debug dumps
  // are enabled. Written to its own file, not part of the report record.
  nlohmann::json debug;
};

nlohmann::json TimingToJson(const TimingBreakdown& timing);
absl::StatusOr<TimingBreakdown> TimingFromJson(const nlohmann::json& j);

nlohmann::json ReportToJson(const PromptReport& report);
absl::StatusOr<PromptReport> ReportFromJson(const nlohmann::json& j);

// One JSON object on a single line, newline-terminated.
std::string SerializeReport(const PromptReport& report);
absl::StatusOr<PromptReport> ParseReport(std::string_view line);
absl::StatusOr<PromptReport> ReadReportFile(const std::string& path);

}  // namespace agsc

#endif  // AGSC_REPORT_H_
