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

#ifndef AGSC_VARIANT_H_
#define AGSC_VARIANT_H_

#include <optional>
#include <span>
#include <string_view>

#include "agsc/aggregation.h"
#include "agsc/router.h"

namespace agsc {

// Scoring methods compared by the evaluation harness: the full pipeline,
// LUQ-style baselines and single-component ablations.
enum class MethodVariant {
  kAgsc,
  kAgscLiteral,
  kLuqSentence,
  kLuqAtomic,
  kAblateNoAdapt,
  kAblateNg,
  kAblateNw,
  kAblateNoCluster,
  kAblateKmeans,
};

enum class ClusteringMethod { kGmm, kKMeans, kNone };

struct VariantSpec {
  GranularityMode granularity = GranularityMode::kAdaptive;
  ClusteringMethod clustering = ClusteringMethod::kGmm;
  AggregationMode aggregation = AggregationMode::kGlobal;

  bool operator==(const VariantSpec&) const = default;
};

VariantSpec ResolveVariant(MethodVariant variant);

const char* VariantName(MethodVariant variant);
std::optional<MethodVariant> ParseVariant(std::string_view name);
std::span<const MethodVariant> AllVariants();

const char* ClusteringMethodName(ClusteringMethod method);
std::optional<ClusteringMethod> ParseClusteringMethod(std::string_view name);

}  // namespace agsc

#endif  // AGSC_VARIANT_H_
