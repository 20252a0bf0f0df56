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

#include "agsc/clustering/gmm.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <algorithm>

#include "absl/strings/str_cat.h"
#include "agsc/clustering/kmeans.h"
#include "agsc/random.h"

namespace agsc {
namespace {

constexpr double kEmptyComponentMass = 1e-10;

// M-step from responsibilities. Components with (near) zero mass are left
// for the caller to re-seed and reported through `empty`.
void MStep(const Eigen::MatrixXd& data, const Eigen::MatrixXd& resp,
           double cov_reg, GmmParams* params, std::vector<int>* empty) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  const Eigen::Index k = resp.cols();
  params->weights.resize(k);
  params->means.resize(k, d);
  params->covariances.resize(k);
  empty->clear();
  for (Eigen::Index c = 0; c < k; ++c) {
    const double mass = resp.col(c).sum();
    params->weights(c) = mass / static_cast<double>(n);
    if (mass < kEmptyComponentMass) {
      empty->push_back(static_cast<int>(c));
      continue;
    }
    Eigen::RowVectorXd mean = (resp.col(c).transpose() * data) / mass;
    Eigen::MatrixXd centered = data.rowwise() - mean;
    Eigen::MatrixXd cov =
        (centered.transpose() * resp.col(c).asDiagonal() * centered) / mass;
    cov = 0.5 * (cov + cov.transpose());
    cov.diagonal().array() += cov_reg;
    params->means.row(c) = mean;
    params->covariances[c] = std::move(cov);
  }
}

// Places each empty component on the point worst explained by the current
// model, with the data's per-dimension variance as covariance.
void ReseedEmpty(const Eigen::MatrixXd& data, const std::vector<int>& empty,
                 const Eigen::VectorXd& point_ll, double cov_reg,
                 GmmParams* params) {
  if (empty.empty()) return;
  const Eigen::Index n = data.rows();
  Eigen::RowVectorXd mean = data.colwise().mean();
  Eigen::VectorXd variance =
      ((data.rowwise() - mean).array().square().colwise().sum() /
       static_cast<double>(n))
          .transpose();
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int c : empty) {
    Eigen::Index worst = 0;
    double worst_ll = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!used[i] && point_ll(i) < worst_ll) {
        worst_ll = point_ll(i);
        worst = i;
      }
    }
    used[worst] = true;
    params->means.row(c) = data.row(worst);
    Eigen::MatrixXd cov = variance.asDiagonal();
    cov.diagonal().array() += cov_reg;
    params->covariances[c] = std::move(cov);
    params->weights(c) = 1.0 / static_cast<double>(n);
  }
  params->weights /= params->weights.sum();
}

struct RestartResult {
  GmmFit fit;
  absl::Status status;
};

RestartResult RunEm(const Eigen::MatrixXd& data, int k,
                    const ClusteringConfig& config, uint64_t seed) {
  RestartResult out;
  GmmFit& fit = out.fit;
  const Eigen::Index n = data.rows();
  const double inv_n = 1.0 / static_cast<double>(n);

  auto centers = KMeansPlusPlusInit(data, k, seed);
  if (!centers.ok()) {
    out.status = centers.status();
    return out;
  }
  Eigen::MatrixXd resp = Eigen::MatrixXd::Zero(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    resp(i, NearestCenter(*centers, data.row(i))) = 1.0;
  }
  std::vector<int> empty;
  MStep(data, resp, config.cov_reg, &fit.params, &empty);
  // A seed nobody was nearest to (duplicate points) starts at its center.
  for (int c : empty) {
    fit.params.means.row(c) = centers->row(c);
    fit.params.covariances[c] =
        Eigen::MatrixXd::Identity(data.cols(), data.cols()) * config.cov_reg;
    fit.params.weights(c) = inv_n;
  }
  if (!empty.empty()) fit.params.weights /= fit.params.weights.sum();

  Eigen::VectorXd point_ll;
  double previous = -std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= config.em_max_iter; ++iter) {
    auto ll = EStep(fit.params, data, &resp, &point_ll);
    if (!ll.ok()) {
      out.status = absl::InternalError(
          absl::StrCat("EM iteration ", iter, ": ", ll.status().message()));
      return out;
    }
    fit.log_likelihood = *ll;
    fit.log_likelihood_trace.push_back(*ll);
    fit.responsibilities = resp;
    fit.iterations = iter;
    if (iter > 1 && (*ll - previous) * inv_n < config.em_tol) {
      fit.converged = true;
      return out;
    }
    previous = *ll;
    MStep(data, resp, config.cov_reg, &fit.params, &empty);
    ReseedEmpty(data, empty, point_ll, config.cov_reg, &fit.params);
  }
  // Out of iterations: report responsibilities for the last M-step.
  auto ll = EStep(fit.params, data, &resp, &point_ll);
  if (!ll.ok()) {
    out.status = absl::InternalError(absl::StrCat(
        "EM iteration ", config.em_max_iter + 1, ": ", ll.status().message()));
    return out;
  }
  fit.log_likelihood = *ll;
  fit.log_likelihood_trace.push_back(*ll);
  fit.responsibilities = resp;
  return out;
}

}  // namespace

absl::StatusOr<double> EStep(const GmmParams& params,
                             const Eigen::MatrixXd& data,
                             Eigen::MatrixXd* responsibilities,
                             Eigen::VectorXd* point_log_likelihood) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  const int k = params.num_components();
  Eigen::MatrixXd log_prob(n, k);
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  for (int c = 0; c < k; ++c) {
    Eigen::LLT<Eigen::MatrixXd> llt(params.covariances[c]);
    if (llt.info() != Eigen::Success) {
      return absl::InternalError(
          absl::StrCat("covariance of component ", c,
                       " is not positive definite"));
    }
    const Eigen::MatrixXd& lower = llt.matrixL();
    const double log_det = 2.0 * lower.diagonal().array().log().sum();
    Eigen::MatrixXd centered =
        (data.rowwise() - params.means.row(c)).transpose();  // D x N
    Eigen::MatrixXd solved =
        llt.matrixL().solve(centered);  // L^{-1} (x - mu)
    const double log_weight = std::log(params.weights(c));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double maha = solved.col(i).squaredNorm();
      log_prob(i, c) =
          log_weight - 0.5 * (static_cast<double>(d) * log_2pi + log_det + maha);
    }
  }
  responsibilities->resize(n, k);
  if (point_log_likelihood != nullptr) point_log_likelihood->resize(n);
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double max = log_prob.row(i).maxCoeff();
    double sum = 0.0;
    for (int c = 0; c < k; ++c) sum += std::exp(log_prob(i, c) - max);
    const double lse = max + std::log(sum);
    for (int c = 0; c < k; ++c) {
      (*responsibilities)(i, c) = std::exp(log_prob(i, c) - lse);
    }
    if (point_log_likelihood != nullptr) (*point_log_likelihood)(i) = lse;
    total += lse;
  }
  if (!std::isfinite(total)) {
    return absl::InternalError("log-likelihood is not finite");
  }
  return total;
}

absl::StatusOr<GmmFit> FitGmm(const Eigen::MatrixXd& data, int k,
                              const ClusteringConfig& config) {
  const Eigen::Index n = data.rows();
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("GMM needs 1 <= K <= N, got K=", k, " N=", n));
  }
  if (data.cols() < 1) {
    return absl::InvalidArgumentError("GMM needs at least one dimension");
  }
  std::optional<GmmFit> best;
  absl::Status last_error;
  for (int restart = 0; restart < config.n_init; ++restart) {
    RestartResult run =
        RunEm(data, k, config,
              DeriveSeed(config.seed, static_cast<uint64_t>(restart) * 1000 +
                                          static_cast<uint64_t>(k)));
    if (!run.status.ok()) {
      last_error = run.status;
      continue;
    }
    if (!best || run.fit.log_likelihood > best->log_likelihood) {
      best = std::move(run.fit);
    }
  }
  if (!best) return last_error;
  return *std::move(best);
}

double GmmParameterCount(int k, int dim) {
  const double kk = k;
  const double d = dim;
  return (kk - 1.0) + kk * d + kk * d * (d + 1.0) / 2.0;
}

double Bic(const GmmParams& params, int num_points, double log_likelihood) {
  return GmmParameterCount(params.num_components(), params.dim()) *
             std::log(static_cast<double>(num_points)) -
         2.0 * log_likelihood;
}

int MaxComponents(int num_points, int k_limit) {
  const int k_density = std::max(2, num_points / 3);
  const int k_log =
      static_cast<int>(std::floor(std::log2(static_cast<double>(num_points)))) +
      1;
  return std::min({k_limit, k_density, k_log});
}

absl::StatusOr<KSelection> SelectK(const Eigen::MatrixXd& data,
                                   const ClusteringConfig& config) {
  const Eigen::Index n = data.rows();
  if (n < 1) return absl::InvalidArgumentError("cannot cluster zero points");
  KSelection selection;
  if (n <= 2) {
    selection.trivial = true;
    selection.k = 1;
    selection.k_max = 1;
    GmmParams& p = selection.fit.params;
    p.weights = Eigen::VectorXd::Ones(1);
    p.means = data.colwise().mean();
    Eigen::MatrixXd centered = data.rowwise() - p.means.row(0);
    Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(n);
    cov.diagonal().array() += config.cov_reg;
    p.covariances = {cov};
    selection.fit.responsibilities = Eigen::MatrixXd::Ones(n, 1);
    auto ll = EStep(p, data, &selection.fit.responsibilities);
    if (!ll.ok()) return ll.status();
    selection.fit.log_likelihood = *ll;
    selection.fit.converged = true;
    return selection;
  }

  selection.k_max = MaxComponents(static_cast<int>(n), config.k_limit);
  std::optional<GmmFit> best;
  double last_bic = std::numeric_limits<double>::infinity();
  for (int k = 2; k <= selection.k_max; ++k) {
    auto fit = FitGmm(data, k, config);
    if (!fit.ok()) return fit.status();
    const double bic = Bic(fit->params, static_cast<int>(n), fit->log_likelihood);
    selection.bic_trace.emplace_back(k, bic);
    if (!best || bic < last_bic - config.bic_epsilon * std::fabs(last_bic)) {
      best = *std::move(fit);
      last_bic = bic;
      selection.k = k;
    } else {
      break;
    }
  }
  selection.fit = *std::move(best);
  return selection;
}

}  // namespace agsc
