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

#ifndef AGSC_AGGREGATION_H_
#define AGSC_AGGREGATION_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "Eigen/Dense"
#include "absl/status/statusor.h"

namespace agsc {

enum class AggregationMode {
  kLiteral,  // cluster mass over anchor units only
  kGlobal,   // cluster mass over every clustered unit
  kUniform,  // plain mean, no clustering
};

const char* AggregationModeName(AggregationMode mode);
std::optional<AggregationMode> ParseAggregationMode(std::string_view name);

struct ClusterSummary {
  int k = 0;
  double mass = 0.0;         // M_k
  double anchor_mass = 0.0;  // sum of anchor responsibilities in cluster k
  double uncertainty = 0.0;  // U_k
  double weight = 0.0;       // w_k
};

struct FinalScore {
  double u_final = 0.0;
  AggregationMode mode = AggregationMode::kGlobal;
  bool fallback_used = false;
  std::vector<ClusterSummary> clusters;
};

// Clusters whose anchor mass falls below this are dropped in global mode.
inline constexpr double kAnchorMassFloor = 1e-6;
// Clusters with mass below this are dropped in literal mode.
inline constexpr double kLiteralMassFloor = 1e-12;

// Cluster-weighted score with masses over anchor units:
//   M_k = sum_h g_hk,  U_k = sum_h g_hk U_h / M_k,  w_k = M_k / sum_j M_j,
//   U = sum_k w_k U_k.
// `gamma_anchor` has one row per anchor unit.
absl::StatusOr<FinalScore> AggregateLiteral(
    const Eigen::MatrixXd& gamma_anchor, std::span<const double> uncertainty);

// Masses over every clustered unit; U_k from anchor rows normalized by the
// anchor mass in the cluster. `anchor_rows[i]` is the gamma row of anchor
// unit i, aligned with `uncertainty`.
absl::StatusOr<FinalScore> AggregateGlobal(const Eigen::MatrixXd& gamma_all,
                                           std::span<const int> anchor_rows,
                                           std::span<const double> uncertainty);

absl::StatusOr<FinalScore> AggregateUniform(std::span<const double> uncertainty);

// Score for an anchor whose every sentence was skipped: the plain mean of
// the sentence-level uncertainties computed before routing. Fails when the
// anchor has no sentences at all.
absl::StatusOr<FinalScore> AllSkipFallback(
    std::span<const double> sentence_uncertainty, AggregationMode mode);

}  // namespace agsc

#endif  // AGSC_AGGREGATION_H_
