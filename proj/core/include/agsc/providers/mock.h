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

#ifndef AGSC_PROVIDERS_MOCK_H_
#define AGSC_PROVIDERS_MOCK_H_

#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agsc/providers/provider.h"

namespace agsc {

// Offline providers. Each is a pure function of its inputs; optional
// per-call latency is spent through ConsumeLatency() so it shows up in
// stage timings (and is reproducible under simulated time).

// A claim is a "key=value" token, e.g. "born=1879". Text without claims
// carries no checkable content.
std::vector<std::pair<std::string, std::string>> ParseClaims(
    std::string_view text);

// Claim-matching NLI rule. Each hypothesis claim is supported (premise has
// the same key and value), contradicted (same key, other value) or unknown.
// With m hypothesis claims, s supported and c contradicted:
//   no claims or all unknown -> ( 0,  0,  3)   neutral, zero gap
//   all supported            -> ( 4, -4,  0)
//   all contradicted         -> (-4,  4,  0)
//   mixed, some contradicted -> (0.5, 2,  1)   contradiction-leaning
//   mixed, none contradicted -> (3s/m, -1.5, 2.5)  neutral, wide gap
NliLogits ClaimLogits(std::string_view premise, std::string_view hypothesis);

class ScriptedNliProvider : public NliProvider {
 public:
  using Rule = std::function<NliLogits(const NliPair&)>;

  // Pairs in `script` return their scripted logits; all others go to `rule`
  // (ClaimLogits by default).
  explicit ScriptedNliProvider(
      std::map<std::pair<std::string, std::string>, NliLogits> script = {},
      Rule rule = nullptr, double latency_ms_per_call = 0.0);

  absl::StatusOr<std::vector<NliLogits>> Classify(
      std::span<const NliPair> pairs) override;

  int64_t calls() const { return calls_; }
  int64_t pairs_seen() const { return pairs_seen_; }

 private:
  std::map<std::pair<std::string, std::string>, NliLogits> script_;
  Rule rule_;
  double latency_ms_;
  std::atomic<int64_t> calls_{0};
  std::atomic<int64_t> pairs_seen_{0};
};

// Hashed bag-of-words embedder. Tokens are maximal runs of ASCII letters
// and digits (lowercased) or of non-ASCII bytes; token t adds 1 to bucket
// FNV-1a-64(t) mod dim. Vectors are L2-normalized (all-zero if no tokens).
class HashedBowEmbedder : public EmbeddingProvider {
 public:
  explicit HashedBowEmbedder(size_t dim = 64, double latency_ms_per_call = 0.0)
      : dim_(dim), latency_ms_(latency_ms_per_call) {}

  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;

  EmbeddingVector EmbedOne(std::string_view text) const;
  size_t dim() const { return dim_; }
  int64_t calls() const { return calls_; }

 private:
  size_t dim_;
  double latency_ms_;
  std::atomic<int64_t> calls_{0};
};

std::vector<std::string> BowTokens(std::string_view text);
uint64_t Fnv1a64(std::string_view data);

// Rule-based decomposer with a fixed per-call latency and call counter.
class MockDecomposer : public Decomposer {
 public:
  explicit MockDecomposer(double latency_ms_per_call = 0.0)
      : latency_ms_(latency_ms_per_call) {}

  absl::StatusOr<Decomposition> Decompose(
      std::string_view sentence, std::string_view prompt_context) override;

  int64_t calls() const { return calls_; }

 private:
  double latency_ms_;
  std::atomic<int64_t> calls_{0};
};

}  // namespace agsc

#endif  // AGSC_PROVIDERS_MOCK_H_
