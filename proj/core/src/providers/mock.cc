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

#include "agsc/providers/mock.h"

#include <cctype>
#include <cmath>
#include <set>

#include "agsc/clock.h"
#include "agsc/providers/rule_decomposer.h"

namespace agsc {
namespace {

bool IsClaimChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<std::pair<std::string, std::string>> ParseClaims(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> claims;
  for (size_t eq = text.find('='); eq != std::string_view::npos;
       eq = text.find('=', eq + 1)) {
    size_t key_begin = eq;
    while (key_begin > 0 && IsClaimChar(text[key_begin - 1])) --key_begin;
    size_t value_end = eq + 1;
    while (value_end < text.size() && IsClaimChar(text[value_end])) {
      ++value_end;
    }
    if (key_begin == eq || value_end == eq + 1) continue;
    claims.emplace_back(std::string(text.substr(key_begin, eq - key_begin)),
                        std::string(text.substr(eq + 1, value_end - eq - 1)));
  }
  return claims;
}

NliLogits ClaimLogits(std::string_view premise, std::string_view hypothesis) {
  const auto hyp = ParseClaims(hypothesis);
  if (hyp.empty()) return {0.0, 0.0, 3.0};
  std::map<std::string, std::set<std::string>> known;
  for (auto& [k, v] : ParseClaims(premise)) known[k].insert(v);
  int supported = 0;
  int contradicted = 0;
  for (const auto& [k, v] : hyp) {
    auto it = known.find(k);
    if (it == known.end()) continue;
    if (it->second.count(v)) {
      ++supported;
    } else {
      ++contradicted;
    }
  }
  const int m = static_cast<int>(hyp.size());
  if (supported == m) return {4.0, -4.0, 0.0};
  if (contradicted == m) return {-4.0, 4.0, 0.0};
  if (supported == 0 && contradicted == 0) return {0.0, 0.0, 3.0};
  if (contradicted > 0) return {0.5, 2.0, 1.0};
  return {3.0 * supported / m, -1.5, 2.5};
}

ScriptedNliProvider::ScriptedNliProvider(
    std::map<std::pair<std::string, std::string>, NliLogits> script, Rule rule,
    double latency_ms_per_call)
    : script_(std::move(script)),
      rule_(std::move(rule)),
      latency_ms_(latency_ms_per_call) {
  if (!rule_) {
    rule_ = [](const NliPair& p) { return ClaimLogits(p.premise, p.hypothesis); };
  }
}

absl::StatusOr<std::vector<NliLogits>> ScriptedNliProvider::Classify(
    std::span<const NliPair> pairs) {
  if (absl::Status s = ValidateNliPairs(pairs); !s.ok()) return s;
  ++calls_;
  pairs_seen_ += static_cast<int64_t>(pairs.size());
  ConsumeLatency(latency_ms_);
  std::vector<NliLogits> out;
  out.reserve(pairs.size());
  for (const NliPair& pair : pairs) {
    auto it = script_.find({pair.premise, pair.hypothesis});
    out.push_back(it != script_.end() ? it->second : rule_(pair));
  }
  return out;
}

uint64_t Fnv1a64(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::vector<std::string> BowTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c >= 0x80) {
      current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c))
                                 : static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

EmbeddingVector HashedBowEmbedder::EmbedOne(std::string_view text) const {
  EmbeddingVector v(dim_, 0.0);
  for (const std::string& token : BowTokens(text)) {
    v[Fnv1a64(token) % dim_] += 1.0;
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

absl::StatusOr<std::vector<EmbeddingVector>> HashedBowEmbedder::Embed(
    std::span<const std::string> texts) {
  if (texts.empty()) return std::vector<EmbeddingVector>{};
  ++calls_;
  ConsumeLatency(latency_ms_);
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(EmbedOne(t));
  return out;
}

absl::StatusOr<Decomposition> MockDecomposer::Decompose(
    std::string_view sentence, std::string_view prompt_context) {
  ++calls_;
  ConsumeLatency(latency_ms_);
  return RuleBasedDecomposer().Decompose(sentence, prompt_context);
}

}  // namespace agsc
