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

#include "agsc/clustering/kmeans.h"

#include <limits>

#include "absl/strings/str_cat.h"
#include "agsc/random.h"

namespace agsc {

absl::StatusOr<std::vector<int>> KMeansPlusPlusIndices(
    const Eigen::MatrixXd& data, int k, uint64_t seed) {
  const Eigen::Index n = data.rows();
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("k-means++ needs 1 <= K <= N, got K=", k, " N=", n));
  }
  Rng rng(seed);
  std::vector<int> chosen;
  chosen.reserve(k);
  chosen.push_back(static_cast<int>(rng.UniformIndex(static_cast<size_t>(n))));
  Eigen::VectorXd nearest_sq(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    nearest_sq(i) = (data.row(i) - data.row(chosen[0])).squaredNorm();
  }
  while (static_cast<int>(chosen.size()) < k) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) total += nearest_sq(i);
    int pick = -1;
    if (total > 0.0) {
      const double target = rng.Uniform() * total;
      double cumulative = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (nearest_sq(i) <= 0.0) continue;
        cumulative += nearest_sq(i);
        pick = static_cast<int>(i);
        if (cumulative > target) break;
      }
    } else {
      // Every remaining point coincides with a chosen center.
      pick = static_cast<int>(rng.UniformIndex(static_cast<size_t>(n)));
    }
    chosen.push_back(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      nearest_sq(i) = std::min(nearest_sq(i),
                               (data.row(i) - data.row(pick)).squaredNorm());
    }
  }
  return chosen;
}

absl::StatusOr<Eigen::MatrixXd> KMeansPlusPlusInit(const Eigen::MatrixXd& data,
                                                   int k, uint64_t seed) {
  auto indices = KMeansPlusPlusIndices(data, k, seed);
  if (!indices.ok()) return indices.status();
  Eigen::MatrixXd centers(k, data.cols());
  for (int c = 0; c < k; ++c) centers.row(c) = data.row((*indices)[c]);
  return centers;
}

int NearestCenter(const Eigen::MatrixXd& centers,
                  const Eigen::RowVectorXd& point) {
  int best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < centers.rows(); ++c) {
    const double sq = (centers.row(c) - point).squaredNorm();
    if (sq < best_sq) {
      best_sq = sq;
      best = static_cast<int>(c);
    }
  }
  return best;
}

absl::StatusOr<KMeansResult> KMeansHard(const Eigen::MatrixXd& data, int k,
                                        uint64_t seed, int max_iter) {
  auto init = KMeansPlusPlusInit(data, k, seed);
  if (!init.ok()) return init.status();
  const Eigen::Index n = data.rows();
  KMeansResult result;
  result.centers = *std::move(init);
  result.assignment.assign(static_cast<size_t>(n), -1);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const int c = NearestCenter(result.centers, data.row(i));
      if (c != result.assignment[i]) {
        result.assignment[i] = c;
        changed = true;
      }
    }
    result.iterations = iter + 1;
    if (!changed) break;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, data.cols());
    std::vector<int> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(result.assignment[i]) += data.row(i);
      ++counts[result.assignment[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) result.centers.row(c) = sums.row(c) / counts[c];
    }
  }
  result.responsibilities = Eigen::MatrixXd::Zero(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    result.responsibilities(i, result.assignment[i]) = 1.0;
  }
  return result;
}

}  // namespace agsc
