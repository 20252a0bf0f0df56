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

#include "agsc/providers/cache.h"

#include <filesystem>
#include <map>

#include "absl/strings/str_cat.h"
#include "agsc/text_util.h"

namespace agsc {

using json = nlohmann::json;

absl::StatusOr<std::unique_ptr<ContentCache>> ContentCache::Open(
    const std::string& path) {
  std::unique_ptr<ContentCache> cache(new ContentCache());
  if (path.empty()) return cache;
  std::filesystem::path file(path);
  if (file.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) {
      return absl::PermissionDeniedError(absl::StrCat(
          "cannot create cache directory ", file.parent_path().string(), ": ",
          ec.message()));
    }
  }
  {
    std::ifstream existing(path);
    std::string line;
    while (std::getline(existing, line)) {
      json record = json::parse(line, nullptr, false);
      // A torn final line from an interrupted run is skipped.
      if (record.is_discarded() || !record.is_object() ||
          !record.contains("k") || !record["k"].is_string() ||
          !record.contains("v")) {
        continue;
      }
      cache->entries_[record["k"].get<std::string>()] = record["v"];
    }
  }
  cache->log_.open(path, std::ios::app);
  if (!cache->log_) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open cache file '", path, "' for append"));
  }
  return cache;
}

std::unique_ptr<ContentCache> ContentCache::InMemory() {
  return std::unique_ptr<ContentCache>(new ContentCache());
}

std::optional<json> ContentCache::Get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::optional<json>(std::in_place, it->second);
}

absl::Status ContentCache::Put(const std::string& key, const json& value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.insert_or_assign(key, value);
  (void)it;
  if (log_.is_open()) {
    log_ << json{{"k", key}, {"v", value}}.dump() << '\n';
    log_.flush();
    if (!log_) return absl::DataLossError("failed to append to cache file");
  }
  return absl::OkStatus();
}

size_t ContentCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::string NliCacheKey(const NliPair& pair) {
  return Sha256Hex(absl::StrCat(NfcNormalize(pair.premise), "\x1f",
                                NfcNormalize(pair.hypothesis)));
}

std::string TextCacheKey(std::string_view text) {
  return Sha256Hex(NfcNormalize(text));
}

std::string DecompositionCacheKey(std::string_view sentence,
                                  std::string_view prompt_context) {
  return Sha256Hex(absl::StrCat(NfcNormalize(sentence), "\x1f",
                                NfcNormalize(prompt_context)));
}

absl::StatusOr<std::vector<NliLogits>> CachingNliProvider::Classify(
    std::span<const NliPair> pairs) {
  if (absl::Status s = ValidateNliPairs(pairs); !s.ok()) return s;
  std::vector<NliLogits> out(pairs.size());
  std::vector<NliPair> misses;
  // key -> positions in `out` waiting on that key
  std::map<std::string, std::vector<size_t>> pending;
  for (size_t i = 0; i < pairs.size(); ++i) {
    std::string key = NliCacheKey(pairs[i]);
    if (auto hit = cache_->Get(key)) {
      out[i] = NliLogits{(*hit)[0].get<double>(), (*hit)[1].get<double>(),
                         (*hit)[2].get<double>()};
      continue;
    }
    auto [it, inserted] = pending.try_emplace(std::move(key));
    if (inserted) misses.push_back(pairs[i]);
    it->second.push_back(i);
  }
  if (misses.empty()) return out;
  ++inner_calls_;
  auto fresh = inner_->Classify(misses);
  if (!fresh.ok()) return fresh.status();
  if (fresh->size() != misses.size()) {
    return absl::DataLossError("protocol error: NLI response arity mismatch");
  }
  for (size_t m = 0; m < misses.size(); ++m) {
    const NliLogits& l = (*fresh)[m];
    const std::string key = NliCacheKey(misses[m]);
    if (absl::Status s = cache_->Put(key, json::array({l.entail, l.contradict,
                                                       l.neutral}));
        !s.ok()) {
      return s;
    }
    for (size_t i : pending[key]) out[i] = l;
  }
  return out;
}

absl::StatusOr<std::vector<EmbeddingVector>> CachingEmbeddingProvider::Embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out(texts.size());
  std::vector<std::string> misses;
  std::map<std::string, std::vector<size_t>> pending;
  std::vector<std::string> miss_keys;
  for (size_t i = 0; i < texts.size(); ++i) {
    std::string key = TextCacheKey(texts[i]);
    if (auto hit = cache_->Get(key)) {
      out[i] = hit->get<EmbeddingVector>();
      continue;
    }
    auto [it, inserted] = pending.try_emplace(key);
    if (inserted) {
      misses.push_back(texts[i]);
      miss_keys.push_back(key);
    }
    it->second.push_back(i);
  }
  if (!misses.empty()) {
    ++inner_calls_;
    auto fresh = inner_->Embed(misses);
    if (!fresh.ok()) return fresh.status();
    if (fresh->size() != misses.size()) {
      return absl::DataLossError(
          "protocol error: embedding response arity mismatch");
    }
    for (size_t m = 0; m < misses.size(); ++m) {
      if (absl::Status s = cache_->Put(miss_keys[m], json((*fresh)[m]));
          !s.ok()) {
        return s;
      }
      for (size_t i : pending[miss_keys[m]]) out[i] = (*fresh)[m];
    }
  }
  auto dim = ValidateEmbeddings(out);
  if (!dim.ok()) return dim.status();
  return out;
}

absl::StatusOr<Decomposition> CachingDecomposer::Decompose(
    std::string_view sentence, std::string_view prompt_context) {
  const std::string key = DecompositionCacheKey(sentence, prompt_context);
  if (auto hit = cache_->Get(key)) {
    Decomposition cached;
    cached.facts = hit->get<std::vector<std::string>>();
    return cached;
  }
  ++inner_calls_;
  auto result = inner_->Decompose(sentence, prompt_context);
  if (!result.ok()) return result;
  if (!result->fallback_used) {
    if (absl::Status s = cache_->Put(key, json(result->facts)); !s.ok()) {
      return s;
    }
  }
  return result;
}

}  // namespace agsc
