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

#ifndef AGSC_CLUSTERING_REDUCE_H_
#define AGSC_CLUSTERING_REDUCE_H_

#include <memory>
#include <span>
#include <string_view>

#include "Eigen/Dense"
#include "absl/status/statusor.h"
#include "agsc/providers/provider.h"

namespace agsc {

// Stacks equal-length embeddings into an N x D matrix.
absl::StatusOr<Eigen::MatrixXd> StackEmbeddings(
    std::span<const EmbeddingVector> embeddings);

struct PcaResult {
  Eigen::MatrixXd projected;   // N x k
  Eigen::MatrixXd components;  // D x k, unit columns
  Eigen::VectorXd explained_variance_ratio;  // length k
};

// Principal components of the centered rows of `data`, at most
// min(k, D, N - 1) of them (at least one). Each component's largest-magnitude
// loading is made positive (first such index on ties).
PcaResult PrincipalComponents(const Eigen::MatrixXd& data, int k);

// Dimensionality-reduction slot ahead of clustering.
class Reducer {
 public:
  virtual ~Reducer() = default;
  virtual Eigen::MatrixXd Reduce(const Eigen::MatrixXd& data,
                                 int target_dim) const = 0;
  virtual std::string_view name() const = 0;
};

// Centers the data; if D <= target_dim that is all, otherwise projects onto
// the top min(target_dim, N - 1) principal directions.
class PcaReducer : public Reducer {
 public:
  Eigen::MatrixXd Reduce(const Eigen::MatrixXd& data,
                         int target_dim) const override;
  std::string_view name() const override { return "pca"; }
};

// Passes data through unchanged.
class IdentityReducer : public Reducer {
 public:
  Eigen::MatrixXd Reduce(const Eigen::MatrixXd& data,
                         int target_dim) const override;
  std::string_view name() const override { return "none"; }
};

std::unique_ptr<Reducer> MakeReducer(std::string_view name);

}  // namespace agsc

#endif  // AGSC_CLUSTERING_REDUCE_H_
