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

#ifndef AGSC_CLUSTERING_KMEANS_H_
#define AGSC_CLUSTERING_KMEANS_H_

#include <cstdint>
#include <vector>

#include "Eigen/Dense"
#include "absl/status/statusor.h"

namespace agsc {

// k-means++ seeding over the rows of `data`: the first center is a uniform
// draw, each later one is drawn with probability proportional to its squared
// distance from the nearest chosen center. Returns row indices. K must be in
// [1, N].
absl::StatusOr<std::vector<int>> KMeansPlusPlusIndices(
    const Eigen::MatrixXd& data, int k, uint64_t seed);

absl::StatusOr<Eigen::MatrixXd> KMeansPlusPlusInit(const Eigen::MatrixXd& data,
                                                   int k, uint64_t seed);

// Index of the nearest row of `centers` (lowest index on ties).
int NearestCenter(const Eigen::MatrixXd& centers,
                  const Eigen::RowVectorXd& point);

struct KMeansResult {
  Eigen::MatrixXd centers;        // K x D
  std::vector<int> assignment;    // per row of data
  Eigen::MatrixXd responsibilities;  // N x K one-hot
  int iterations = 0;
};

// Lloyd iterations from k-means++ seeds until the assignment stops changing
// or `max_iter` rounds. A center that loses all points stays where it was.
absl::StatusOr<KMeansResult> KMeansHard(const Eigen::MatrixXd& data, int k,
                                        uint64_t seed, int max_iter = 200);

}  // namespace agsc

#endif  // AGSC_CLUSTERING_KMEANS_H_
