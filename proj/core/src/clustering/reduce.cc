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

#include "agsc/clustering/reduce.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "agsc/clustering/config.h"

namespace agsc {

absl::Status ValidateClusteringConfig(const ClusteringConfig& config) {
  if (config.k_limit < 2) {
    return absl::InvalidArgumentError("clustering.k_limit must be >= 2");
  }
  if (!(config.bic_epsilon > 0.0)) {
    return absl::InvalidArgumentError("clustering.bic_epsilon must be > 0");
  }
  if (!(config.cov_reg > 0.0)) {
    return absl::InvalidArgumentError("clustering.cov_reg must be > 0");
  }
  if (!(config.em_tol > 0.0)) {
    return absl::InvalidArgumentError("clustering.em_tol must be > 0");
  }
  if (config.em_max_iter < 1 || config.n_init < 1 || config.target_dim < 1) {
    return absl::InvalidArgumentError(
        "clustering.em_max_iter, n_init and target_dim must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<Eigen::MatrixXd> StackEmbeddings(
    std::span<const EmbeddingVector> embeddings) {
  if (embeddings.empty()) return Eigen::MatrixXd(0, 0);
  const size_t dim = embeddings.front().size();
  Eigen::MatrixXd data(static_cast<Eigen::Index>(embeddings.size()),
                       static_cast<Eigen::Index>(dim));
  for (size_t i = 0; i < embeddings.size(); ++i) {
    if (embeddings[i].size() != dim) {
      return absl::InvalidArgumentError(absl::StrCat(
          "embedding ", i, " has dimension ", embeddings[i].size(),
          ", expected ", dim));
    }
    for (size_t j = 0; j < dim; ++j) {
      data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          embeddings[i][j];
    }
  }
  return data;
}

PcaResult PrincipalComponents(const Eigen::MatrixXd& data, int k) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  Eigen::Index keep = std::min<Eigen::Index>({static_cast<Eigen::Index>(k), d,
                                              std::max<Eigen::Index>(n - 1, 1)});
  keep = std::max<Eigen::Index>(keep, 1);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  Eigen::MatrixXd components = svd.matrixV().leftCols(keep);
  for (Eigen::Index c = 0; c < keep; ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < d; ++r) {
      const double mag = std::fabs(components(r, c));
      if (mag > best + 1e-12) {
        best = mag;
        arg = r;
      }
    }
    if (components(arg, c) < 0.0) components.col(c) *= -1.0;
  }

  PcaResult result;
  result.projected = centered * components;
  result.components = std::move(components);
  const Eigen::VectorXd sv = svd.singularValues();
  const double total = sv.squaredNorm();
  result.explained_variance_ratio = Eigen::VectorXd::Zero(keep);
  if (total > 0.0) {
    for (Eigen::Index c = 0; c < keep && c < sv.size(); ++c) {
      result.explained_variance_ratio(c) = sv(c) * sv(c) / total;
    }
  }
  return result;
}

Eigen::MatrixXd PcaReducer::Reduce(const Eigen::MatrixXd& data,
                                   int target_dim) const {
  if (data.rows() == 0) return data;
  if (data.cols() <= target_dim) {
    return data.rowwise() - data.colwise().mean();
  }
  return PrincipalComponents(data, target_dim).projected;
}

Eigen::MatrixXd IdentityReducer::Reduce(const Eigen::MatrixXd& data,
                                        int /*target_dim*/) const {
  return data;
}

std::unique_ptr<Reducer> MakeReducer(std::string_view name) {
  if (name == "pca") return std::make_unique<PcaReducer>();
  if (name == "none") return std::make_unique<IdentityReducer>();
  return nullptr;
}

}  // namespace agsc
