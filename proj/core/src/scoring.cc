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

#include "agsc/scoring.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "agsc/segmenter.h"
#include "agsc/text_util.h"

namespace agsc {
namespace {

std::string JoinSentences(std::span<const Sentence> sentences, int first,
                          int last) {
  std::string out;
  for (int i = first; i <= last; ++i) {
    if (i > first) out.push_back(' ');
    out += sentences[i].text;
  }
  return out;
}

}  // namespace

absl::Status ValidateScoringConfig(const ScoringConfig& config) {
  if (config.chunk_budget_chars < 1) {
    return absl::InvalidArgumentError("scoring.chunk_budget_chars must be >= 1");
  }
  if (config.chunk_stride_chars < 1) {
    return absl::InvalidArgumentError("scoring.chunk_stride_chars must be >= 1");
  }
  if (config.chunk_stride_chars > config.chunk_budget_chars) {
    return absl::InvalidArgumentError(
        "scoring.chunk_stride_chars must not exceed chunk_budget_chars");
  }
  return absl::OkStatus();
}

std::vector<Chunk> MakeChunks(std::span<const Sentence> sentences,
                              int reference_index,
                              const ScoringConfig& config) {
  std::vector<Chunk> chunks;
  const int n = static_cast<int>(sentences.size());
  if (n == 0) return chunks;
  std::vector<size_t> lengths(n);
  for (int i = 0; i < n; ++i) lengths[i] = Utf8Length(sentences[i].text);
  const size_t budget = static_cast<size_t>(config.chunk_budget_chars);
  const size_t stride = static_cast<size_t>(config.chunk_stride_chars);

  int start = 0;
  int previous_end = -1;
  while (true) {
    int end = start;
    size_t length = lengths[start];
    while (end + 1 < n && length + 1 + lengths[end + 1] <= budget) {
      length += 1 + lengths[++end];
    }
    if (end > previous_end) {
      Chunk chunk;
      chunk.reference_index = reference_index;
      chunk.chunk_index = static_cast<int>(chunks.size());
      chunk.text = JoinSentences(sentences, start, end);
      chunk.first_sentence = start;
      chunk.last_sentence = end;
      chunks.push_back(std::move(chunk));
      previous_end = end;
    }
    if (end == n - 1) break;
    int advance = 0;
    size_t covered = 0;
    while (covered < stride && start + advance <= end) {
      covered += lengths[start + advance];
      ++advance;
    }
    start = std::min(start + advance, end + 1);
  }
  return chunks;
}

double BinaryEntail(const NliLogits& logits) {
  // exp(le)/(exp(le)+exp(lc)) == 1/(1+exp(lc-le)); shift by the max so the
  // exponent is never positive.
  const double m = std::max(logits.entail, logits.contradict);
  const double e = std::exp(logits.entail - m);
  const double c = std::exp(logits.contradict - m);
  return e / (e + c);
}

double NeutralWeightedEntail(const NliLogits& logits, double neutral_weight) {
  const double m =
      std::max({logits.entail, logits.contradict, logits.neutral});
  const double e = std::exp(logits.entail - m);
  const double c = std::exp(logits.contradict - m);
  const double n = std::exp(logits.neutral - m);
  return e / (e + c + neutral_weight * n);
}

NliDistribution ThreeClassSoftmax(const NliLogits& logits) {
  const double m =
      std::max({logits.entail, logits.contradict, logits.neutral});
  const double e = std::exp(logits.entail - m);
  const double c = std::exp(logits.contradict - m);
  const double n = std::exp(logits.neutral - m);
  const double z = e + c + n;
  return NliDistribution{e / z, c / z, n / z};
}

double MaxBinaryEntail(std::span<const NliLogits> chunk_logits) {
  double best = 0.0;
  for (const NliLogits& l : chunk_logits) best = std::max(best, BinaryEntail(l));
  return best;
}

double MaxNeutralWeightedEntail(std::span<const NliLogits> chunk_logits) {
  double best = 0.0;
  for (const NliLogits& l : chunk_logits) {
    best = std::max(best, NeutralWeightedEntail(l));
  }
  return best;
}

NliDistribution SelectDistribution(std::span<const NliLogits> chunk_logits,
                                   ChunkSelection selection) {
  switch (selection) {
    case ChunkSelection::kMean: {
      std::vector<NliDistribution> dists;
      dists.reserve(chunk_logits.size());
      for (const NliLogits& l : chunk_logits) {
        dists.push_back(ThreeClassSoftmax(l));
      }
      return MeanDistribution(dists);
    }
    case ChunkSelection::kBestEntail: {
      size_t best = 0;
      double best_score = -1.0;
      for (size_t k = 0; k < chunk_logits.size(); ++k) {
        const double score = BinaryEntail(chunk_logits[k]);
        if (score > best_score) {
          best_score = score;
          best = k;
        }
      }
      return ThreeClassSoftmax(chunk_logits[best]);
    }
    case ChunkSelection::kMostPolarized:
      break;
  }
  NliDistribution best_dist;
  double best_mass = -1.0;
  for (const NliLogits& l : chunk_logits) {
    NliDistribution d = ThreeClassSoftmax(l);
    const double mass = d.entail + d.contradict;
    if (mass > best_mass) {  // strict: ties keep the earliest chunk
      best_mass = mass;
      best_dist = d;
    }
  }
  return best_dist;
}

NliDistribution MeanDistribution(std::span<const NliDistribution> dists) {
  NliDistribution mean;
  if (dists.empty()) return mean;
  for (const NliDistribution& d : dists) {
    mean.entail += d.entail;
    mean.contradict += d.contradict;
    mean.neutral += d.neutral;
  }
  const double n = static_cast<double>(dists.size());
  mean.entail /= n;
  mean.contradict /= n;
  mean.neutral /= n;
  return mean;
}

PreparedReference PrepareReference(std::string_view text, int response_index,
                                   const ScoringConfig& config) {
  PreparedReference ref;
  ref.response_index = response_index;
  ref.sentences = SegmentSentences(text, response_index);
  ref.chunks = MakeChunks(ref.sentences, response_index, config);
  return ref;
}

SupportScore SupportFrom(const UnitEvidence& evidence, std::string unit_id) {
  SupportScore score;
  score.unit_id = std::move(unit_id);
  double sum = 0.0;
  for (const auto& chunks : evidence.per_reference) {
    const double p = MaxBinaryEntail(chunks);
    score.per_reference.push_back(p);
    sum += p;
  }
  if (!score.per_reference.empty()) {
    score.support = sum / static_cast<double>(score.per_reference.size());
  }
  return score;
}

NliDistribution AverageDistributionFrom(const UnitEvidence& evidence,
                                        ChunkSelection selection) {
  std::vector<NliDistribution> dists;
  dists.reserve(evidence.per_reference.size());
  for (const auto& chunks : evidence.per_reference) {
    dists.push_back(SelectDistribution(chunks, selection));
  }
  return MeanDistribution(dists);
}

double NeutralWeightedSupportFrom(const UnitEvidence& evidence) {
  if (evidence.per_reference.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& chunks : evidence.per_reference) {
    sum += MaxNeutralWeightedEntail(chunks);
  }
  return sum / static_cast<double>(evidence.per_reference.size());
}

absl::StatusOr<std::vector<UnitEvidence>> NliScorer::Collect(
    std::span<const std::string> unit_texts,
    std::span<const PreparedReference> references) {
  std::vector<NliPair> pairs;
  for (const std::string& unit : unit_texts) {
    for (const PreparedReference& ref : references) {
      if (ref.chunks.empty()) {
        return absl::FailedPreconditionError(absl::StrCat(
            "reference ", ref.response_index, " has no chunks"));
      }
      for (const Chunk& chunk : ref.chunks) {
        if (config_.direction == NliDirection::kReferencePremise) {
          pairs.push_back(NliPair{chunk.text, unit});
        } else {
          pairs.push_back(NliPair{unit, chunk.text});
        }
      }
    }
  }
  std::vector<UnitEvidence> evidence(unit_texts.size());
  if (pairs.empty()) return evidence;
  pairs_requested_ += static_cast<int64_t>(pairs.size());
  auto logits = nli_->Classify(pairs);
  if (!logits.ok()) return logits.status();
  if (logits->size() != pairs.size()) {
    return absl::DataLossError(absl::StrCat(
        "protocol error: requested ", pairs.size(), " NLI pairs, got ",
        logits->size()));
  }
  size_t next = 0;
  for (UnitEvidence& unit : evidence) {
    unit.per_reference.reserve(references.size());
    for (const PreparedReference& ref : references) {
      auto first = logits->begin() + static_cast<std::ptrdiff_t>(next);
      unit.per_reference.emplace_back(
          first, first + static_cast<std::ptrdiff_t>(ref.chunks.size()));
      next += ref.chunks.size();
    }
  }
  return evidence;
}

absl::StatusOr<double> NliScorer::PairEntail(
    std::string_view unit, const PreparedReference& reference) {
  std::string text(unit);
  auto evidence = Collect({&text, 1}, {&reference, 1});
  if (!evidence.ok()) return evidence.status();
  return MaxBinaryEntail(evidence->front().per_reference.front());
}

absl::StatusOr<SupportScore> NliScorer::Support(
    const TextUnit& unit, std::span<const PreparedReference> references) {
  if (references.empty()) {
    return absl::FailedPreconditionError("support needs at least one reference");
  }
  auto evidence = Collect({&unit.text, 1}, references);
  if (!evidence.ok()) return evidence.status();
  return SupportFrom(evidence->front(), unit.unit_id);
}

absl::StatusOr<NliDistribution> NliScorer::ReferenceDistribution(
    std::string_view unit, const PreparedReference& reference) {
  std::string text(unit);
  auto evidence = Collect({&text, 1}, {&reference, 1});
  if (!evidence.ok()) return evidence.status();
  return SelectDistribution(evidence->front().per_reference.front(),
                            config_.chunk_selection);
}

absl::StatusOr<NliDistribution> NliScorer::AvgDistribution(
    std::string_view unit, std::span<const PreparedReference> references) {
  if (references.empty()) {
    return absl::FailedPreconditionError(
        "average distribution needs at least one reference");
  }
  std::string text(unit);
  auto evidence = Collect({&text, 1}, references);
  if (!evidence.ok()) return evidence.status();
  return AverageDistributionFrom(evidence->front(), config_.chunk_selection);
}

}  // namespace agsc
