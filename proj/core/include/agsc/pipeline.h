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

#ifndef AGSC_PIPELINE_H_
#define AGSC_PIPELINE_H_

#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/clock.h"
#include "agsc/config.h"
#include "agsc/corpus.h"
#include "agsc/dataset.h"
#include "agsc/providers/cache.h"
#include "agsc/providers/provider.h"
#include "agsc/report.h"
#include "agsc/timing.h"

namespace agsc {

// Non-owning provider handles. `decomposer` may be null when no sentence is
// ever routed to decomposition.
struct Providers {
  NliProvider* nli = nullptr;
  EmbeddingProvider* embed = nullptr;
  Decomposer* decomposer = nullptr;
};

// Owns the providers named in a config, each behind a content cache.
class ProviderStack {
 public:
  static absl::StatusOr<std::unique_ptr<ProviderStack>> Create(
      const PipelineConfig& config);

  Providers providers() const;

  // Calls that missed the cache and reached the underlying provider.
  int64_t nli_inner_calls() const { return nli_cached_->inner_calls(); }
  int64_t embed_inner_calls() const { return embed_cached_->inner_calls(); }
  int64_t decompose_inner_calls() const {
    return decompose_cached_->inner_calls();
  }

 private:
  ProviderStack() = default;

  std::unique_ptr<ContentCache> nli_cache_;
  std::unique_ptr<ContentCache> embed_cache_;
  std::unique_ptr<ContentCache> decompose_cache_;
  std::unique_ptr<NliProvider> nli_;
  std::unique_ptr<EmbeddingProvider> embed_;
  std::unique_ptr<Decomposer> decompose_;
  std::unique_ptr<CachingNliProvider> nli_cached_;
  std::unique_ptr<CachingEmbeddingProvider> embed_cached_;
  std::unique_ptr<CachingDecomposer> decompose_cached_;
};

std::unique_ptr<Clock> MakeClock(ClockKind kind);

// Scores one sample set. Under a simulated clock the caller must hold a
// SimulatedTimeScope on this thread.
absl::StatusOr<PromptReport> RunPrompt(const SampleSet& sample,
                                       const PipelineConfig& config,
                                       const Providers& providers,
                                       const Clock& clock);

struct PromptFailure {
  int index = 0;
  std::string prompt_id;
  std::string error;
};

struct CorpusResult {
  std::string variant;
  // Successful reports with their dataset index, in dataset order.
  std::vector<std::pair<int, PromptReport>> reports;
  std::vector<PromptFailure> failures;
  std::vector<RejectedRecord> rejected;
  TimingBreakdown total;
  int num_prompts = 0;
};

// Scores every sample on a pool of config.workers threads. A prompt whose
// providers fail is recorded in `failures` and the run continues.
CorpusResult RunCorpus(const Dataset& dataset, const PipelineConfig& config,
                       const Providers& providers);

std::string ReportFileName(int index, std::string_view prompt_id);

nlohmann::json SummaryToJson(const CorpusResult& result,
                             const PipelineConfig& config);

// Writes one NNNN_<id>.jsonl per scored prompt plus summary.json. Report
// files from an earlier run in `dir` are removed first.
absl::Status WriteReports(const std::string& dir, const CorpusResult& result,
                          const PipelineConfig& config);

}  // namespace agsc

#endif  // AGSC_PIPELINE_H_
