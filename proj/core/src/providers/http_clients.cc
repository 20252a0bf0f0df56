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

#include "agsc/providers/http_clients.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "agsc/providers/rule_decomposer.h"
#include "agsc/text_util.h"
#include "httplib.h"
#include "nlohmann/json.hpp"

namespace agsc {
namespace {

using json = nlohmann::json;

absl::Status ProtocolError(std::string_view what) {
  return absl::DataLossError(absl::StrCat("protocol error: ", std::string(what)));
}

absl::StatusOr<json> ParseJsonBody(const std::string& body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    return ProtocolError("response body is not a JSON object");
  }
  return parsed;
}

constexpr char kDecompositionInstructions[] =
    "Break the sentence into independent facts. Each fact must be a short, "
    "self-contained statement that can be checked on its own. Resolve "
    "pronouns to the names they refer to. Write one fact per line, each "
    "line starting with \"- \".";

struct Demonstration {
  const char* sentence;
  const char* facts;
};

constexpr Demonstration kDemonstrations[] = {
    {"She studied physics in Paris and later taught at the Sorbonne.",
     "- She studied physics.\n- She studied in Paris.\n"
     "- She later taught at the Sorbonne."},
    {"The bridge, which opened in 1937, spans the Golden Gate strait.",
     "- The bridge opened in 1937.\n- The bridge spans the Golden Gate "
     "strait."},
    {"He was born in 1879.", "- He was born in 1879."},
};

}  // namespace

absl::Status ValidateProviderConfig(const ProviderConfig& config) {
  if (config.batch_size < 1) {
    return absl::InvalidArgumentError("batch_size must be >= 1");
  }
  if (config.max_in_flight < 1) {
    return absl::InvalidArgumentError("max_in_flight must be >= 1");
  }
  if (config.retry.max_attempts < 1) {
    return absl::InvalidArgumentError("retry.max_attempts must be >= 1");
  }
  if (config.retry.base_backoff_ms < 0) {
    return absl::InvalidArgumentError("retry.base_backoff_ms must be >= 0");
  }
  if (config.timeout_ms < 1) {
    return absl::InvalidArgumentError("timeout_ms must be >= 1");
  }
  return absl::OkStatus();
}

JsonPoster::JsonPoster(ProviderConfig config) : config_(std::move(config)) {
  std::string_view endpoint = config_.endpoint;
  while (!endpoint.empty() && endpoint.back() == '/') endpoint.remove_suffix(1);
  size_t scheme_end = endpoint.find("://");
  size_t path_start = endpoint.find(
      '/', scheme_end == std::string_view::npos ? 0 : scheme_end + 3);
  scheme_host_port_ = std::string(endpoint.substr(0, path_start));
  if (path_start != std::string_view::npos) {
    path_prefix_ = std::string(endpoint.substr(path_start));
  }
}

absl::StatusOr<std::string> JsonPoster::Post(std::string_view path,
                                             const std::string& body) const {
  httplib::Client client(scheme_host_port_);
  const auto timeout = std::chrono::milliseconds(config_.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!config_.auth_env_var.empty()) {
    if (const char* token = std::getenv(config_.auth_env_var.c_str())) {
      headers.emplace("Authorization", absl::StrCat("Bearer ", token));
    }
  }
  const std::string full_path = absl::StrCat(path_prefix_, std::string(path));

  std::string last_error;
  for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
    ++stats_.attempts;
    auto response =
        client.Post(full_path, headers, body, "application/json; charset=utf-8");
    if (response && response->status >= 200 && response->status < 300) {
      ++stats_.requests;
      return response->body;
    }
    last_error = response ? absl::StrCat("HTTP status ", response->status)
                          : httplib::to_string(response.error());
    if (attempt < config_.retry.max_attempts) {
      const int64_t backoff =
          static_cast<int64_t>(config_.retry.base_backoff_ms) << (attempt - 1);
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    }
  }
  return absl::UnavailableError(absl::StrCat(
      "POST ", config_.endpoint, std::string(path), " failed after ",
      config_.retry.max_attempts, " attempt(s): ", last_error));
}

absl::Status RunBatches(size_t num_batches, int max_in_flight,
                        const std::function<absl::Status(size_t)>& fn) {
  if (num_batches == 0) return absl::OkStatus();
  std::vector<absl::Status> statuses(num_batches);
  const size_t workers =
      std::min<size_t>(num_batches, static_cast<size_t>(std::max(1, max_in_flight)));
  if (workers == 1) {
    for (size_t b = 0; b < num_batches; ++b) statuses[b] = fn(b);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (size_t b = next++; b < num_batches; b = next++) {
          statuses[b] = fn(b);
        }
      });
    }
    for (std::thread& t : threads) t.join();
  }
  for (const absl::Status& s : statuses) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<NliLogits>> HttpNliClient::Classify(
    std::span<const NliPair> pairs) {
  if (absl::Status s = ValidateNliPairs(pairs); !s.ok()) return s;
  std::vector<NliLogits> out(pairs.size());
  const size_t batch = static_cast<size_t>(poster_.config().batch_size);
  const size_t num_batches = (pairs.size() + batch - 1) / batch;
  absl::Status status = RunBatches(
      num_batches, poster_.config().max_in_flight,
      [&](size_t b) -> absl::Status {
        const size_t begin = b * batch;
        const size_t end = std::min(pairs.size(), begin + batch);
        json request;
        request["pairs"] = json::array();
        for (size_t i = begin; i < end; ++i) {
          request["pairs"].push_back(
              {{"premise", pairs[i].premise},
               {"hypothesis", pairs[i].hypothesis}});
        }
        auto body = poster_.Post("/nli", request.dump());
        if (!body.ok()) return body.status();
        auto parsed = ParseJsonBody(*body);
        if (!parsed.ok()) return parsed.status();
        const json& logits = (*parsed)["logits"];
        if (!logits.is_array()) return ProtocolError("missing 'logits' array");
        if (logits.size() != end - begin) {
          return ProtocolError(absl::StrCat("expected ", end - begin,
                                            " logit triples, got ",
                                            logits.size()));
        }
        for (size_t i = begin; i < end; ++i) {
          const json& triple = logits[i - begin];
          if (!triple.is_array() || triple.size() != 3 ||
              !triple[0].is_number() || !triple[1].is_number() ||
              !triple[2].is_number()) {
            return ProtocolError("logit entry is not a 3-number array");
          }
          out[i] = NliLogits{triple[0].get<double>(), triple[1].get<double>(),
                             triple[2].get<double>()};
        }
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  if (absl::Status s = ValidateLogits(out); !s.ok()) return s;
  return out;
}

absl::StatusOr<std::vector<EmbeddingVector>> HttpEmbeddingClient::Embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out(texts.size());
  const size_t batch = static_cast<size_t>(poster_.config().batch_size);
  const size_t num_batches = (texts.size() + batch - 1) / batch;
  absl::Status status = RunBatches(
      num_batches, poster_.config().max_in_flight,
      [&](size_t b) -> absl::Status {
        const size_t begin = b * batch;
        const size_t end = std::min(texts.size(), begin + batch);
        json request;
        request["texts"] = json::array();
        for (size_t i = begin; i < end; ++i) request["texts"].push_back(texts[i]);
        auto body = poster_.Post("/embed", request.dump());
        if (!body.ok()) return body.status();
        auto parsed = ParseJsonBody(*body);
        if (!parsed.ok()) return parsed.status();
        const json& vectors = (*parsed)["vectors"];
        if (!vectors.is_array() || vectors.size() != end - begin) {
          return ProtocolError("'vectors' missing or misaligned");
        }
        for (size_t i = begin; i < end; ++i) {
          const json& v = vectors[i - begin];
          if (!v.is_array()) return ProtocolError("vector is not an array");
          EmbeddingVector values;
          values.reserve(v.size());
          for (const json& x : v) {
            if (!x.is_number()) return ProtocolError("non-numeric entry");
            values.push_back(x.get<double>());
          }
          out[i] = std::move(values);
        }
        if (parsed->contains("dim")) {
          const json& dim = (*parsed)["dim"];
          if (!dim.is_number_unsigned() ||
              (end > begin && dim.get<size_t>() != out[begin].size())) {
            return ProtocolError("'dim' disagrees with vector length");
          }
        }
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  auto dim = ValidateEmbeddings(out);
  if (!dim.ok()) return dim.status();
  if (*dim > 0) {
    size_t expected = 0;
    if (!dim_.compare_exchange_strong(expected, *dim) && expected != *dim) {
      return ProtocolError(absl::StrCat("embedding dimension drifted from ",
                                        expected, " to ", *dim));
    }
  }
  return out;
}

std::string BuildDecompositionPrompt(std::string_view sentence,
                                     std::string_view prompt_context) {
  std::string prompt = absl::StrCat(kDecompositionInstructions, "\n\n");
  for (const Demonstration& demo : kDemonstrations) {
    absl::StrAppend(&prompt, "Sentence: ", demo.sentence, "\n", demo.facts,
                    "\n\n");
  }
  if (!StripWhitespace(prompt_context).empty()) {
    absl::StrAppend(&prompt, "Context: ",
                    std::string(StripWhitespace(prompt_context)),
                    "\n");
  }
  absl::StrAppend(&prompt, "Sentence: ", std::string(StripWhitespace(sentence)),
                  "\n");
  return prompt;
}

std::vector<std::string> ParseFactLines(std::string_view text) {
  std::vector<std::string> facts;
  for (absl::string_view piece : absl::StrSplit(std::string(text), '\n')) {
    std::string_view line =
        StripWhitespace(std::string_view(piece.data(), piece.size()));
    // A bullet marker, with or without text after it.
    if (!line.empty() && (line[0] == '-' || line[0] == '*') &&
        (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) {
      line = StripWhitespace(line.substr(1));
    }
    if (!line.empty()) facts.emplace_back(line);
  }
  return facts;
}

absl::StatusOr<Decomposition> HttpDecomposer::Decompose(
    std::string_view sentence, std::string_view prompt_context) {
  if (StripWhitespace(sentence).empty()) {
    return absl::InvalidArgumentError("cannot decompose an empty sentence");
  }
  json request;
  request["messages"] = json::array(
      {{{"role", "user"},
        {"content", BuildDecompositionPrompt(sentence, prompt_context)}}});
  std::string failure;
  auto body = poster_.Post("/chat", request.dump());
  if (body.ok()) {
    auto parsed = ParseJsonBody(*body);
    if (parsed.ok() && (*parsed)["content"].is_string()) {
      Decomposition result;
      result.facts = ParseFactLines((*parsed)["content"].get<std::string>());
      if (!result.facts.empty()) return result;
      failure = "decomposer returned no facts";
    } else {
      failure = parsed.ok() ? "protocol error: missing 'content' string"
                            : std::string(parsed.status().message());
    }
  } else {
    failure = std::string(body.status().message());
  }
  Decomposition fallback;
  fallback.facts = SplitIntoFacts(sentence);
  fallback.fallback_used = true;
  fallback.fallback_reason = std::move(failure);
  return fallback;
}

}  // namespace agsc
