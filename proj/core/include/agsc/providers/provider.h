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

#ifndef AGSC_PROVIDERS_PROVIDER_H_
#define AGSC_PROVIDERS_PROVIDER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace agsc {

// Raw three-class NLI scores (unnormalized).
struct NliLogits {
  double entail = 0.0;
  double contradict = 0.0;
  double neutral = 0.0;

  bool operator==(const NliLogits&) const = default;
};

struct NliPair {
  std::string premise;
  std::string hypothesis;
};

using EmbeddingVector = std::vector<double>;

struct Decomposition {
  std::vector<std::string> facts;
  // Set when the primary decomposer failed and the rule-based splitter
  // produced `facts` instead.
  bool fallback_used = false;
  std::string fallback_reason;
};

// Three-way natural language inference.
class NliProvider {
 public:
  virtual ~NliProvider() = default;
  // One NliLogits per pair, order-aligned with `pairs`.
  virtual absl::StatusOr<std::vector<NliLogits>> Classify(
      std::span<const NliPair> pairs) = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  // Order-aligned vectors of one common dimension. Empty in, empty out.
  virtual absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) = 0;
};

// Splits a sentence into atomic facts.
class Decomposer {
 public:
  virtual ~Decomposer() = default;
  virtual absl::StatusOr<Decomposition> Decompose(
      std::string_view sentence, std::string_view prompt_context) = 0;
};

// Rejects empty premises/hypotheses.
absl::Status ValidateNliPairs(std::span<const NliPair> pairs);

// Rejects non-finite logits.
absl::Status ValidateLogits(std::span<const NliLogits> logits);

// Checks that every vector has the same finite dimension; returns it (0 for
// an empty batch).
absl::StatusOr<size_t> ValidateEmbeddings(
    std::span<const EmbeddingVector> vectors);

}  // namespace agsc

#endif  // AGSC_PROVIDERS_PROVIDER_H_
