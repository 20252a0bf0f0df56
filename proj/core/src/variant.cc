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

#include "agsc/variant.h"

#include <array>

namespace agsc {
namespace {

struct VariantEntry {
  MethodVariant variant;
  const char* name;
  VariantSpec spec;
};

using GM = GranularityMode;
using CM = ClusteringMethod;
using AM = AggregationMode;

constexpr std::array<VariantEntry, 9> kVariants = {{
    {MethodVariant::kAgsc, "agsc", {GM::kAdaptive, CM::kGmm, AM::kGlobal}},
    {MethodVariant::kAgscLiteral, "agsc_literal",
     {GM::kAdaptive, CM::kGmm, AM::kLiteral}},
    {MethodVariant::kLuqSentence, "luq_sentence",
     {GM::kOff, CM::kNone, AM::kUniform}},
    {MethodVariant::kLuqAtomic, "luq_atomic",
     {GM::kAtomic, CM::kNone, AM::kUniform}},
    {MethodVariant::kAblateNoAdapt, "ablate_no_adapt",
     {GM::kOff, CM::kGmm, AM::kGlobal}},
    {MethodVariant::kAblateNg, "ablate_ng",
     {GM::kNeutralGuess, CM::kGmm, AM::kGlobal}},
    {MethodVariant::kAblateNw, "ablate_nw",
     {GM::kNeutralWeight, CM::kGmm, AM::kGlobal}},
    {MethodVariant::kAblateNoCluster, "ablate_no_cluster",
     {GM::kAdaptive, CM::kNone, AM::kUniform}},
    {MethodVariant::kAblateKmeans, "ablate_kmeans",
     {GM::kAdaptive, CM::kKMeans, AM::kGlobal}},
}};

constexpr std::array<MethodVariant, 9> kAll = {
    MethodVariant::kAgsc,          MethodVariant::kAgscLiteral,
    MethodVariant::kLuqSentence,   MethodVariant::kLuqAtomic,
    MethodVariant::kAblateNoAdapt, MethodVariant::kAblateNg,
    MethodVariant::kAblateNw,      MethodVariant::kAblateNoCluster,
    MethodVariant::kAblateKmeans,
};

const VariantEntry& Entry(MethodVariant variant) {
  for (const VariantEntry& e : kVariants) {
    if (e.variant == variant) return e;
  }
  return kVariants[0];
}

}  // namespace

VariantSpec ResolveVariant(MethodVariant variant) { return Entry(variant).spec; }

const char* VariantName(MethodVariant variant) { return Entry(variant).name; }

std::optional<MethodVariant> ParseVariant(std::string_view name) {
  for (const VariantEntry& e : kVariants) {
    if (name == e.name) return e.variant;
  }
  return std::nullopt;
}

std::span<const MethodVariant> AllVariants() { return kAll; }

const char* ClusteringMethodName(ClusteringMethod method) {
  switch (method) {
    case ClusteringMethod::kGmm:
      return "gmm";
    case ClusteringMethod::kKMeans:
      return "kmeans";
    case ClusteringMethod::kNone:
      return "none";
  }
  return "?";
}

std::optional<ClusteringMethod> ParseClusteringMethod(std::string_view name) {
  for (ClusteringMethod m :
       {ClusteringMethod::kGmm, ClusteringMethod::kKMeans,
        ClusteringMethod::kNone}) {
    if (name == ClusteringMethodName(m)) return m;
  }
  return std::nullopt;
}

}  // namespace agsc
