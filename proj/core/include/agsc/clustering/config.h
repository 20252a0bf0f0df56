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

#ifndef AGSC_CLUSTERING_CONFIG_H_
#define AGSC_CLUSTERING_CONFIG_H_

#include <cstdint>

#include "absl/status/status.h"

namespace agsc {

struct ClusteringConfig {
  int k_limit = 15;          // global cap on components
  double bic_epsilon = 0.01; // relative BIC improvement needed to grow K
  double cov_reg = 1e-5;     // added to every covariance diagonal
  double em_tol = 1e-4;      // on mean per-point log-likelihood gain
  int em_max_iter = 200;
  int n_init = 3;
  uint64_t seed = 0;
  int target_dim = 32;
};

absl::Status ValidateClusteringConfig(const ClusteringConfig& config);

}  // namespace agsc

#endif  // AGSC_CLUSTERING_CONFIG_H_
