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

#ifndef AGSC_CORPUS_H_
#define AGSC_CORPUS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace agsc {

// A prompt together with its sampled responses. responses[0] is the anchor
// whose uncertainty is scored; the rest are references.
class SampleSet {
 public:
  // Validates n >= 2 and that every response has non-whitespace content.
  static absl::StatusOr<SampleSet> Create(std::string prompt_id,
                                          std::string prompt,
                                          std::vector<std::string> responses,
                                          std::optional<double> factuality =
                                              std::nullopt);

  const std::string& prompt_id() const { return prompt_id_; }
  const std::string& prompt() const { return prompt_; }
  const std::vector<std::string>& responses() const { return responses_; }
  const std::optional<double>& factuality() const { return factuality_; }

  size_t size() const { return responses_.size(); }
  const std::string& anchor() const { return responses_.front(); }
  std::span<const std::string> references() const {
    return std::span<const std::string>(responses_).subspan(1);
  }

 private:
  SampleSet() = default;

  std::string prompt_id_;
  std::string prompt_;
  std::vector<std::string> responses_;
  std::optional<double> factuality_;
};

struct Sentence {
  int response_index = 0;
  int sentence_index = 0;
  std::string text;

  bool operator==(const Sentence&) const = default;
};

enum class UnitRole { kSentence, kAtomicFact };

const char* UnitRoleName(UnitRole role);

// A sentence or an atomic fact derived from one. Facts keep the coordinates
// of the sentence they came from.
struct TextUnit {
  std::string unit_id;
  int response_index = 0;
  int sentence_index = 0;
  int fact_index = -1;  // -1 for sentence units
  UnitRole role = UnitRole::kSentence;
  std::string text;

  static TextUnit FromSentence(const Sentence& sentence);
  static TextUnit FromFact(const Sentence& origin, int fact_index,
                           std::string text);

  bool operator==(const TextUnit&) const = default;
};

}  // namespace agsc

#endif  // AGSC_CORPUS_H_
