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

#ifndef AGSC_PROVIDERS_CACHE_H_
#define AGSC_PROVIDERS_CACHE_H_

#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "absl/status/statusor.h"
#include "agsc/providers/provider.h"
#include "nlohmann/json.hpp"

namespace agsc {

// Thread-safe key/value store backed by an append-only JSONL file of
// {"k": key, "v": value} records. An empty path keeps it in memory only.
// On load, later records for a key win.
class ContentCache {
 public:
  static absl::StatusOr<std::unique_ptr<ContentCache>> Open(
      const std::string& path);
  static std::unique_ptr<ContentCache> InMemory();

  std::optional<nlohmann::json> Get(const std::string& key) const;
  absl::Status Put(const std::string& key, const nlohmann::json& value);
  size_t size() const;

 private:
  ContentCache() = default;

  mutable std::mutex mu_;
  std::unordered_map<std::string, nlohmann::json> entries_;
  std::ofstream log_;
};

// Keys hash NFC-canonicalized text, so cache hits survive normalization
// differences between callers.
std::string NliCacheKey(const NliPair& pair);
std::string TextCacheKey(std::string_view text);
std::string DecompositionCacheKey(std::string_view sentence,
                                  std::string_view prompt_context);

// Decorators that consult a ContentCache before the wrapped provider.
// `inner_calls()` counts calls that reached the wrapped provider.
class CachingNliProvider : public NliProvider {
 public:
  CachingNliProvider(NliProvider* inner, ContentCache* cache)
      : inner_(inner), cache_(cache) {}

  absl::StatusOr<std::vector<NliLogits>> Classify(
      std::span<const NliPair> pairs) override;

  int64_t inner_calls() const { return inner_calls_; }

 private:
  NliProvider* inner_;
  ContentCache* cache_;
  std::atomic<int64_t> inner_calls_{0};
};

class CachingEmbeddingProvider : public EmbeddingProvider {
 public:
  CachingEmbeddingProvider(EmbeddingProvider* inner, ContentCache* cache)
      : inner_(inner), cache_(cache) {}

  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;

  int64_t inner_calls() const { return inner_calls_; }

 private:
  EmbeddingProvider* inner_;
  ContentCache* cache_;
  std::atomic<int64_t> inner_calls_{0};
};

// Only successful, non-fallback decompositions are cached so a transient
// endpoint outage is retried on the next run.
class CachingDecomposer : public Decomposer {
 public:
  CachingDecomposer(Decomposer* inner, ContentCache* cache)
      : inner_(inner), cache_(cache) {}

  absl::StatusOr<Decomposition> Decompose(
      std::string_view sentence, std::string_view prompt_context) override;

  int64_t inner_calls() const { return inner_calls_; }

 private:
  Decomposer* inner_;
  ContentCache* cache_;
  std::atomic<int64_t> inner_calls_{0};
};

}  // namespace agsc

#endif  // AGSC_PROVIDERS_CACHE_H_
