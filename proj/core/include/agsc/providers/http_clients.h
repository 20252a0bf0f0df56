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

#ifndef AGSC_PROVIDERS_HTTP_CLIENTS_H_
#define AGSC_PROVIDERS_HTTP_CLIENTS_H_

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/providers/provider.h"

namespace agsc {

struct RetryPolicy {
  int max_attempts = 3;
  int base_backoff_ms = 100;
};

struct ProviderConfig {
  // Base URL, e.g. "http://127.0.0.1:8080" or "http://host/api/v1".
  std::string endpoint;
  // Name of the environment variable holding a bearer token. Empty: no auth.
  std::string auth_env_var;
  int batch_size = 32;
  int max_in_flight = 4;
  RetryPolicy retry;
  int timeout_ms = 30000;
};

absl::Status ValidateProviderConfig(const ProviderConfig& config);

// Counters shared by the HTTP clients.
struct TransportStats {
  std::atomic<int64_t> requests{0};  // successful POSTs
  std::atomic<int64_t> attempts{0};  // including retries
};

// JSON POST with retry and exponential backoff: attempt i (1-based) that
// fails waits base_backoff_ms * 2^(i-1) before the next. Any transport
// failure or non-2xx status is retried; exhaustion yields Unavailable with
// the attempt count in the message.
class JsonPoster {
 public:
  explicit JsonPoster(ProviderConfig config);

  absl::StatusOr<std::string> Post(std::string_view path,
                                   const std::string& body) const;

  const ProviderConfig& config() const { return config_; }
  const TransportStats& stats() const { return stats_; }

 private:
  ProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  mutable TransportStats stats_;
};

// Runs fn(batch_index) for batch_index in [0, num_batches) on at most
// `max_in_flight` threads; returns the first error by batch index.
absl::Status RunBatches(size_t num_batches, int max_in_flight,
                        const std::function<absl::Status(size_t)>& fn);

// POST {endpoint}/nli  {"pairs":[{"premise":..,"hypothesis":..}]}
//   -> {"logits":[[e,c,n],...]}
class HttpNliClient : public NliProvider {
 public:
  explicit HttpNliClient(ProviderConfig config) : poster_(std::move(config)) {}

  absl::StatusOr<std::vector<NliLogits>> Classify(
      std::span<const NliPair> pairs) override;

  const TransportStats& stats() const { return poster_.stats(); }

 private:
  JsonPoster poster_;
};

// POST {endpoint}/embed  {"texts":[...]}  -> {"vectors":[[...]],"dim":D}
// The first dimension seen is pinned for the client's lifetime; later
// batches with another dimension are a protocol error.
class HttpEmbeddingClient : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingClient(ProviderConfig config)
      : poster_(std::move(config)) {}

  absl::StatusOr<std::vector<EmbeddingVector>> Embed(
      std::span<const std::string> texts) override;

  const TransportStats& stats() const { return poster_.stats(); }

 private:
  JsonPoster poster_;
  std::atomic<size_t> dim_{0};
};

// Few-shot chat prompt asking for one independent fact per line.
std::string BuildDecompositionPrompt(std::string_view sentence,
                                     std::string_view prompt_context);

// One fact per non-empty line, leading "- " (or "* ") stripped.
std::vector<std::string> ParseFactLines(std::string_view text);

// POST {endpoint}/chat  {"messages":[{"role":..,"content":..}]}
//   -> {"content": "- fact\n- fact"}
// Any failure, including an empty fact list, falls back to SplitIntoFacts
// and marks the Decomposition.
class HttpDecomposer : public Decomposer {
 public:
  explicit HttpDecomposer(ProviderConfig config)
      : poster_(std::move(config)) {}

  absl::StatusOr<Decomposition> Decompose(
      std::string_view sentence, std::string_view prompt_context) override;

  const TransportStats& stats() const { return poster_.stats(); }

 private:
  JsonPoster poster_;
};

}  // namespace agsc

#endif  // AGSC_PROVIDERS_HTTP_CLIENTS_H_
