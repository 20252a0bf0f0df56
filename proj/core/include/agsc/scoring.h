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

#ifndef AGSC_SCORING_H_
#define AGSC_SCORING_H_

#include <atomic>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/corpus.h"
#include "agsc/providers/provider.h"

namespace agsc {

// Which side of the NLI pair the scored unit occupies.
enum class NliDirection {
  kReferencePremise,  // premise = reference chunk, hypothesis = unit
  kUnitPremise,       // premise = unit, hypothesis = reference chunk
};

// How a reference's chunks reduce to one three-class distribution when
// building the routing signal.
enum class ChunkSelection {
  kMostPolarized,  // chunk maximizing p_entail + p_contradict
  kBestEntail,     // chunk maximizing the binary entailment score
  kMean,           // component-wise mean over chunks
};

struct ScoringConfig {
  int chunk_budget_chars = 1000;
  int chunk_stride_chars = 500;
  NliDirection direction = NliDirection::kReferencePremise;
  ChunkSelection chunk_selection = ChunkSelection::kMostPolarized;
};

absl::Status ValidateScoringConfig(const ScoringConfig& config);

// Sentence-aligned window over one reference response.
struct Chunk {
  int reference_index = 0;
  int chunk_index = 0;
  std::string text;
  int first_sentence = 0;  // inclusive
  int last_sentence = 0;   // inclusive
};

struct NliDistribution {
  double entail = 0.0;
  double contradict = 0.0;
  double neutral = 0.0;
};

struct SupportScore {
  std::string unit_id;
  double support = 0.0;
  std::vector<double> per_reference;

  double uncertainty() const { return 1.0 - support; }
};

// Greedy windows of at most `chunk_budget_chars` code points (sentences
// joined by one space). Each window takes as many whole sentences as fit
// (at least one); the next window starts after the fewest leading sentences
// whose combined length reaches the stride. Windows that would end where the
// previous one ended are skipped, and the last window ends at the final
// sentence.
std::vector<Chunk> MakeChunks(std::span<const Sentence> sentences,
                              int reference_index,
                              const ScoringConfig& config);

// exp(le) / (exp(le) + exp(lc)), evaluated as a logistic of the difference.
double BinaryEntail(const NliLogits& logits);

// exp(le) / (exp(le) + exp(lc) + w * exp(ln)), max-shifted.
double NeutralWeightedEntail(const NliLogits& logits,
                             double neutral_weight = 0.5);

// Max-shifted softmax over (entail, contradict, neutral).
NliDistribution ThreeClassSoftmax(const NliLogits& logits);

// Reductions over one reference's chunk logits. `chunk_logits` must be
// non-empty.
double MaxBinaryEntail(std::span<const NliLogits> chunk_logits);
double MaxNeutralWeightedEntail(std::span<const NliLogits> chunk_logits);
NliDistribution SelectDistribution(std::span<const NliLogits> chunk_logits,
                                   ChunkSelection selection);

NliDistribution MeanDistribution(std::span<const NliDistribution> dists);

// A reference response with its chunks precomputed.
struct PreparedReference {
  int response_index = 0;
  std::vector<Sentence> sentences;
  std::vector<Chunk> chunks;
};

PreparedReference PrepareReference(std::string_view text, int response_index,
                                   const ScoringConfig& config);

// NLI logits of one unit against every chunk of every reference:
// per_reference[t][k] is the logit triple for reference t, chunk k.
struct UnitEvidence {
  std::vector<std::vector<NliLogits>> per_reference;
};

SupportScore SupportFrom(const UnitEvidence& evidence, std::string unit_id);
NliDistribution AverageDistributionFrom(const UnitEvidence& evidence,
                                        ChunkSelection selection);
// Mean over references of the max-over-chunks neutral-weighted score.
double NeutralWeightedSupportFrom(const UnitEvidence& evidence);

// Issues NLI requests for units against prepared references.
class NliScorer {
 public:
  NliScorer(NliProvider* nli, ScoringConfig config)
      : nli_(nli), config_(config) {}

  // All (unit, chunk) pairs go out in a single Classify call.
  absl::StatusOr<std::vector<UnitEvidence>> Collect(
      std::span<const std::string> unit_texts,
      std::span<const PreparedReference> references);

  absl::StatusOr<double> PairEntail(std::string_view unit,
                                    const PreparedReference& reference);
  absl::StatusOr<SupportScore> Support(
      const TextUnit& unit, std::span<const PreparedReference> references);
  absl::StatusOr<NliDistribution> ReferenceDistribution(
      std::string_view unit, const PreparedReference& reference);
  absl::StatusOr<NliDistribution> AvgDistribution(
      std::string_view unit, std::span<const PreparedReference> references);

  const ScoringConfig& config() const { return config_; }
  int64_t pairs_requested() const { return pairs_requested_; }

 private:
  NliProvider* nli_;
  ScoringConfig config_;
  std::atomic<int64_t> pairs_requested_{0};
};

}  // namespace agsc

#endif  // AGSC_SCORING_H_
