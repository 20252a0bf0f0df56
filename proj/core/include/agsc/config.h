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

#ifndef AGSC_CONFIG_H_
#define AGSC_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "agsc/clustering/config.h"
#include "agsc/providers/http_clients.h"
#include "agsc/router.h"
#include "agsc/scoring.h"
#include "agsc/variant.h"

namespace agsc {

enum class ClockKind { kSteady, kSimulated };

// Units handed to clustering.
enum class ClusterUnits {
  kPostGranularity,  // anchor units after routing + reference sentences
  kSentencesOnly,    // sentences only; facts share their parent's row
};

struct ProviderSettings {
  // nli: mock | http.  embed: mock | http.  decompose: mock | rules | http.
  std::string kind = "mock";
  ProviderConfig http;
  double latency_ms = 0.0;  // mock providers only
  int dim = 64;             // mock embedder only
};

struct PipelineConfig {
  ScoringConfig scoring;
  GranularityConfig granularity;
  ClusteringConfig clustering;
  std::string reducer = "pca";
  ClusterUnits cluster_units = ClusterUnits::kPostGranularity;

  MethodVariant variant = MethodVariant::kAgsc;
  // Explicit per-stage overrides of the variant's mapping.
  std::optional<GranularityMode> granularity_override;
  std::optional<ClusteringMethod> clustering_override;
  std::optional<AggregationMode> aggregation_override;

  uint64_t seed = 0;
  int workers = 0;  // 0: one per hardware thread
  std::string cache_dir;   // empty: in-memory caches
  std::string report_dir;  // default output directory for `score`
  ClockKind clock = ClockKind::kSteady;
  bool debug_dump = false;

  ProviderSettings nli;
  ProviderSettings embed;
  ProviderSettings decompose;

  // Variant mapping with overrides applied.
  VariantSpec EffectiveSpec() const;
  // Clustering config with the pipeline seed folded in.
  ClusteringConfig EffectiveClustering() const;
};

// Flat "section.key = value" text, '#' starts a comment. Unknown keys and
// malformed values are errors (InvalidArgument naming the line).
absl::StatusOr<PipelineConfig> ParseConfig(std::string_view text);
absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path);

absl::Status ValidateConfig(const PipelineConfig& config);

// Renders every key with its current value; ParseConfig(FormatConfig(c))
// reproduces c.
std::string FormatConfig(const PipelineConfig& config);

}  // namespace agsc

#endif  // AGSC_CONFIG_H_
