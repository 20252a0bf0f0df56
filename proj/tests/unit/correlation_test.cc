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

#include "agsc/correlation.h"

#include <cmath>
#include <vector>

#include "agsc/random.h"
#include "gtest/gtest.h"

namespace agsc {
namespace {

// Textbook two-pass sample correlation, used as an independent oracle.
double OraclePearson(const std::vector<double>& x,
                     const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

TEST(PearsonTest, Examples) {
  std::vector<double> x = {1, 2, 3};
  std::vector<double> down = {3, 2, 1};
  std::vector<double> sq = {1, 4, 9};
  EXPECT_EQ(*Pearson(x, down), -1.0);
  EXPECT_EQ(*Pearson(x, x), 1.0);
  // 4 / sqrt(2 * (98/6)) evaluated by hand: 0.98974.
  EXPECT_NEAR(*Pearson(x, sq), OraclePearson(x, sq), 1e-14);
  EXPECT_NEAR(*Pearson(x, sq), 0.98974, 5e-6);
}

TEST(PearsonTest, Errors) {
  std::vector<double> x = {1, 2, 3};
  std::vector<double> c = {2, 2, 2};
  std::vector<double> short_x = {1};
  std::vector<double> two = {1, 2};
  std::vector<double> nan = {1, NAN, 3};
  EXPECT_FALSE(Pearson(x, c).ok());
  EXPECT_NE(Pearson(x, c).status().message().find("constant"),
            std::string::npos);
  EXPECT_FALSE(Pearson(short_x, short_x).ok());
  EXPECT_FALSE(Pearson(x, two).ok());
  EXPECT_FALSE(Pearson(x, nan).ok());
  EXPECT_FALSE(Spearman(x, c).ok());
}

TEST(PearsonTest, AffineInvarianceAndNegation) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(20), y(20), ax(20), ny(20);
    const double a = 0.1 + 5 * rng.Uniform();
    const double b = rng.Normal();
    for (int i = 0; i < 20; ++i) {
      x[i] = rng.Normal();
      y[i] = x[i] + rng.Normal();
      ax[i] = a * x[i] + b;
      ny[i] = -y[i];
    }
    EXPECT_NEAR(*Pearson(ax, y), *Pearson(x, y), 1e-12);
    EXPECT_NEAR(*Pearson(x, ny), -*Pearson(x, y), 1e-12);
    EXPECT_NEAR(*Pearson(x, y), OraclePearson(x, y), 1e-12);
  }
}

TEST(AverageRanksTest, TiesShareMeanRank) {
  std::vector<double> v = {10, 10, 20};
  EXPECT_EQ(AverageRanks(v), (std::vector<double>{1.5, 1.5, 3}));
  std::vector<double> w = {3, 1, 2, 1, 3};
  EXPECT_EQ(AverageRanks(w), (std::vector<double>{4.5, 1.5, 3, 1.5, 4.5}));
}

TEST(SpearmanTest, Examples) {
  std::vector<double> x = {1, 2, 3};
  std::vector<double> sq = {1, 4, 9};
  std::vector<double> rev = {9, 4, 1};
  EXPECT_NEAR(*Spearman(x, sq), 1.0, 1e-15);
  EXPECT_NEAR(*Spearman(x, rev), -1.0, 1e-15);
  // Ranks (1.5,1.5,3) vs (1,2,3): covariance 1.5, variances 1.5 and 2,
  // so rho = 1.5 / sqrt(3) = sqrt(3)/2.
  std::vector<double> tied = {1, 1, 2};
  EXPECT_NEAR(*Spearman(tied, x), std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(*Spearman(tied, x), 0.866, 5e-4);
}

TEST(SpearmanTest, MonotoneTransformInvariance) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(15), y(15), fx(15);
    const double scale = 0.5 + rng.Uniform();
    const double shift = rng.Normal();
    for (int i = 0; i < 15; ++i) {
      x[i] = rng.Normal();
      y[i] = x[i] + rng.Normal();
    }
    for (int i = 0; i < 15; ++i) {
      fx[i] = std::exp(scale * x[i]) + shift + std::pow(x[i], 3);
    }
    EXPECT_NEAR(*Spearman(fx, y), *Spearman(x, y), 1e-12);
  }
}

}  // namespace
}  // namespace agsc
