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

#include "agsc/dataset.h"

#include <fstream>
#include <optional>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "agsc/text_util.h"
#include "nlohmann/json.hpp"

namespace agsc {
namespace {

using json = nlohmann::json;

absl::Status SchemaError(int line_number, std::string_view field,
                         std::string_view problem) {
  return absl::InvalidArgumentError(absl::StrCat(
      "line ", line_number, ": field '", std::string(field), "' ", std::string(problem)));
}

}  // namespace

absl::StatusOr<SampleSet> ParseRecord(std::string_view line, int line_number) {
  json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", line_number, ": not valid JSON"));
  }
  if (!record.is_object()) {
    return SchemaError(line_number, "<record>", "must be an object");
  }

  auto prompt_id = record.find("prompt_id");
  if (prompt_id == record.end()) {
    return SchemaError(line_number, "prompt_id", "is missing");
  }
  if (!prompt_id->is_string()) {
    return SchemaError(line_number, "prompt_id", "must be a string");
  }

  std::string prompt;
  if (auto it = record.find("prompt"); it != record.end()) {
    if (!it->is_string()) {
      return SchemaError(line_number, "prompt", "must be a string");
    }
    prompt = NfcNormalize(it->get<std::string>());
  }

  auto responses_it = record.find("responses");
  if (responses_it == record.end()) {
    return SchemaError(line_number, "responses", "is missing");
  }
  if (!responses_it->is_array()) {
    return SchemaError(line_number, "responses", "must be an array");
  }
  std::vector<std::string> responses;
  responses.reserve(responses_it->size());
  for (size_t i = 0; i < responses_it->size(); ++i) {
    const json& r = (*responses_it)[i];
    if (!r.is_string()) {
      return SchemaError(line_number, absl::StrCat("responses[", i, "]"),
                         "must be a string");
    }
    responses.push_back(NfcNormalize(r.get<std::string>()));
  }

  std::optional<double> factuality;
  if (auto it = record.find("factuality"); it != record.end()) {
    if (!it->is_number()) {
      return SchemaError(line_number, "factuality", "must be a number");
    }
    factuality = it->get<double>();
  }

  auto sample = SampleSet::Create(NfcNormalize(prompt_id->get<std::string>()),
                                  std::move(prompt), std::move(responses),
                                  factuality);
  if (!sample.ok()) {
    return absl::FailedPreconditionError(
        absl::StrCat("line ", line_number, ": ", sample.status().message()));
  }
  return sample;
}

absl::StatusOr<Dataset> ReadDataset(std::istream& input) {
  Dataset dataset;
  std::string line;
  int line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (StripWhitespace(line).empty()) continue;
    auto sample = ParseRecord(line, line_number);
    if (sample.ok()) {
      dataset.samples.push_back(*std::move(sample));
      continue;
    }
    if (!absl::IsFailedPrecondition(sample.status())) return sample.status();
    RejectedRecord rejected;
    rejected.line = line_number;
    rejected.reason = std::string(sample.status().message());
    json record = json::parse(line, nullptr, false);
    if (record.is_object() && record.contains("prompt_id") &&
        record["prompt_id"].is_string()) {
      rejected.prompt_id = record["prompt_id"].get<std::string>();
    }
    dataset.rejected.push_back(std::move(rejected));
  }
  return dataset;
}

absl::StatusOr<Dataset> LoadDataset(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    return absl::NotFoundError(absl::StrCat("cannot open dataset '", path, "'"));
  }
  return ReadDataset(input);
}

}  // namespace agsc
