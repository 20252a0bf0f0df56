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

#ifndef AGSC_CLUSTERING_GMM_H_
#define AGSC_CLUSTERING_GMM_H_

#include <vector>

#include "Eigen/Dense"
#include "absl/status/statusor.h"
#include "agsc/clustering/config.h"

namespace agsc {

// Full-covariance Gaussian mixture.
struct GmmParams {
  Eigen::VectorXd weights;                   // K, on the simplex
  Eigen::MatrixXd means;                     // K x D
  std::vector<Eigen::MatrixXd> covariances;  // K of D x D, SPD

  int num_components() const { return static_cast<int>(weights.size()); }
  int dim() const { return static_cast<int>(means.cols()); }
};

struct GmmFit {
  GmmParams params;
  Eigen::MatrixXd responsibilities;  // N x K, rows on the simplex
  double log_likelihood = 0.0;       // total over points
  // Total log-likelihood at every E-step of the winning restart.
  std::vector<double> log_likelihood_trace;
  int iterations = 0;
  bool converged = false;
};

// Posterior responsibilities and total log-likelihood of `data` under
// `params`, via log-sum-exp. Fails if a covariance is not positive definite
// or the likelihood is not finite.
absl::StatusOr<double> EStep(const GmmParams& params,
                             const Eigen::MatrixXd& data,
                             Eigen::MatrixXd* responsibilities,
                             Eigen::VectorXd* point_log_likelihood = nullptr);

// EM from k-means++ seeds, best of config.n_init restarts by final
// likelihood. Each M-step adds config.cov_reg to every covariance diagonal.
// Iteration stops once the mean per-point log-likelihood gains less than
// config.em_tol, or after config.em_max_iter rounds. A component whose mass
// drops below 1e-10 is re-seeded at the worst-explained point.
absl::StatusOr<GmmFit> FitGmm(const Eigen::MatrixXd& data, int k,
                              const ClusteringConfig& config);

// Free parameters of a K-component, D-dimensional full-covariance mixture:
// (K - 1) + K*D + K*D*(D + 1)/2.
double GmmParameterCount(int k, int dim);

// p * ln(N) - 2 * log_likelihood. Lower is better.
double Bic(const GmmParams& params, int num_points, double log_likelihood);

struct KSelection {
  GmmFit fit;
  int k = 1;
  int k_max = 1;
  std::vector<std::pair<int, double>> bic_trace;  // (K, BIC) per fitted K
  bool trivial = false;  // N <= 2: single cluster, no fitting
};

// Upper end of the K search: min(k_limit, max(2, N / 3), floor(log2 N) + 1).
int MaxComponents(int num_points, int k_limit);

// Grows K from 2 while BIC improves by more than bic_epsilon * |BIC| over
// the last accepted model. N <= 2 short-circuits to one cluster.
absl::StatusOr<KSelection> SelectK(const Eigen::MatrixXd& data,
                                   const ClusteringConfig& config);

}  // namespace agsc

#endif  // AGSC_CLUSTERING_GMM_H_
