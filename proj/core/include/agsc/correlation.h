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

#ifndef AGSC_CORRELATION_H_
#define AGSC_CORRELATION_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace agsc {

// Sample Pearson correlation. Lengths must match and be >= 2; a constant
// input has no defined correlation and yields InvalidArgument.
absl::StatusOr<double> Pearson(std::span<const double> xs,
                               std::span<const double> ys);

// 1-based ranks; tied values share the mean of their rank span.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of average ranks.
absl::StatusOr<double> Spearman(std::span<const double> xs,
                                std::span<const double> ys);

}  // namespace agsc

#endif  // AGSC_CORRELATION_H_
