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

#include "agsc/aggregation.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace agsc {
namespace {

absl::Status CheckUncertainties(std::span<const double> uncertainty) {
  for (size_t i = 0; i < uncertainty.size(); ++i) {
    if (!(uncertainty[i] >= 0.0 && uncertainty[i] <= 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unit ", i, " uncertainty ", uncertainty[i], " outside [0, 1]"));
    }
  }
  return absl::OkStatus();
}

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

const char* AggregationModeName(AggregationMode mode) {
  switch (mode) {
    case AggregationMode::kLiteral:
      return "literal";
    case AggregationMode::kGlobal:
      return "global";
    case AggregationMode::kUniform:
      return "uniform";
  }
  return "?";
}

std::optional<AggregationMode> ParseAggregationMode(std::string_view name) {
  for (AggregationMode m : {AggregationMode::kLiteral, AggregationMode::kGlobal,
                            AggregationMode::kUniform}) {
    if (name == AggregationModeName(m)) return m;
  }
  return std::nullopt;
}

absl::StatusOr<FinalScore> AggregateLiteral(
    const Eigen::MatrixXd& gamma_anchor, std::span<const double> uncertainty) {
  if (uncertainty.empty()) {
    return absl::FailedPreconditionError("no anchor units to aggregate");
  }
  if (gamma_anchor.rows() != static_cast<Eigen::Index>(uncertainty.size())) {
    return absl::InvalidArgumentError("gamma rows must match anchor units");
  }
  if (absl::Status s = CheckUncertainties(uncertainty); !s.ok()) return s;
  FinalScore score;
  score.mode = AggregationMode::kLiteral;
  double total_mass = 0.0;
  for (Eigen::Index k = 0; k < gamma_anchor.cols(); ++k) {
    ClusterSummary cluster;
    cluster.k = static_cast<int>(k);
    double weighted = 0.0;
    for (Eigen::Index h = 0; h < gamma_anchor.rows(); ++h) {
      cluster.mass += gamma_anchor(h, k);
      weighted += gamma_anchor(h, k) * uncertainty[h];
    }
    cluster.anchor_mass = cluster.mass;
    if (cluster.mass < kLiteralMassFloor) continue;
    cluster.uncertainty = weighted / cluster.mass;
    total_mass += cluster.mass;
    score.clusters.push_back(cluster);
  }
  if (score.clusters.empty()) {
    return absl::FailedPreconditionError("no cluster carries anchor mass");
  }
  for (ClusterSummary& c : score.clusters) {
    c.weight = c.mass / total_mass;
    score.u_final += c.weight * c.uncertainty;
  }
  score.u_final = Clamp01(score.u_final);
  return score;
}

absl::StatusOr<FinalScore> AggregateGlobal(const Eigen::MatrixXd& gamma_all,
                                           std::span<const int> anchor_rows,
                                           std::span<const double> uncertainty) {
  if (uncertainty.empty()) {
    return absl::FailedPreconditionError("no anchor units to aggregate");
  }
  if (anchor_rows.size() != uncertainty.size()) {
    return absl::InvalidArgumentError(
        "anchor_rows must align with uncertainties");
  }
  if (absl::Status s = CheckUncertainties(uncertainty); !s.ok()) return s;
  for (int row : anchor_rows) {
    if (row < 0 || row >= gamma_all.rows()) {
      return absl::InvalidArgumentError(
          absl::StrCat("anchor row ", row, " out of range"));
    }
  }
  FinalScore score;
  score.mode = AggregationMode::kGlobal;
  double retained_mass = 0.0;
  for (Eigen::Index k = 0; k < gamma_all.cols(); ++k) {
    ClusterSummary cluster;
    cluster.k = static_cast<int>(k);
    for (Eigen::Index i = 0; i < gamma_all.rows(); ++i) {
      cluster.mass += gamma_all(i, k);
    }
    double weighted = 0.0;
    for (size_t h = 0; h < anchor_rows.size(); ++h) {
      const double g = gamma_all(anchor_rows[h], k);
      cluster.anchor_mass += g;
      weighted += g * uncertainty[h];
    }
    if (cluster.anchor_mass < kAnchorMassFloor) continue;
    cluster.uncertainty = weighted / cluster.anchor_mass;
    retained_mass += cluster.mass;
    score.clusters.push_back(cluster);
  }
  if (score.clusters.empty() || !(retained_mass > 0.0)) {
    return absl::FailedPreconditionError("no cluster retains anchor mass");
  }
  for (ClusterSummary& c : score.clusters) {
    c.weight = c.mass / retained_mass;
    score.u_final += c.weight * c.uncertainty;
  }
  score.u_final = Clamp01(score.u_final);
  return score;
}

absl::StatusOr<FinalScore> AggregateUniform(
    std::span<const double> uncertainty) {
  if (uncertainty.empty()) {
    return absl::FailedPreconditionError("no anchor units to aggregate");
  }
  if (absl::Status s = CheckUncertainties(uncertainty); !s.ok()) return s;
  FinalScore score;
  score.mode = AggregationMode::kUniform;
  double sum = 0.0;
  for (double u : uncertainty) sum += u;
  score.u_final = Clamp01(sum / static_cast<double>(uncertainty.size()));
  return score;
}

absl::StatusOr<FinalScore> AllSkipFallback(
    std::span<const double> sentence_uncertainty, AggregationMode mode) {
  if (sentence_uncertainty.empty()) {
    return absl::InvalidArgumentError("anchor response has no sentences");
  }
  auto score = AggregateUniform(sentence_uncertainty);
  if (!score.ok()) return score;
  score->mode = mode;
  score->fallback_used = true;
  return score;
}

}  // namespace agsc
