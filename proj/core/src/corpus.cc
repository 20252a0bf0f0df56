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

#include "agsc/corpus.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "agsc/text_util.h"

namespace agsc {

absl::StatusOr<SampleSet> SampleSet::Create(
    std::string prompt_id, std::string prompt,
    std::vector<std::string> responses, std::optional<double> factuality) {
  if (responses.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("prompt '", prompt_id, "' has ", responses.size(),
                     " response(s); need an anchor and at least one "
                     "reference"));
  }
  for (size_t i = 0; i < responses.size(); ++i) {
    if (StripWhitespace(responses[i]).empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "prompt '", prompt_id, "' response ", i, " is empty"));
    }
  }
  if (factuality.has_value() && !(*factuality >= 0.0 && *factuality <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "prompt '", prompt_id, "' factuality ", *factuality,
        " outside [0, 1]"));
  }
  SampleSet set;
  set.prompt_id_ = std::move(prompt_id);
  set.prompt_ = std::move(prompt);
  set.responses_ = std::move(responses);
  set.factuality_ = factuality;
  return set;
}

const char* UnitRoleName(UnitRole role) {
  return role == UnitRole::kSentence ? "sentence" : "atomic_fact";
}

TextUnit TextUnit::FromSentence(const Sentence& sentence) {
  TextUnit unit;
  unit.unit_id =
      absl::StrCat("r", sentence.response_index, ".s", sentence.sentence_index);
  unit.response_index = sentence.response_index;
  unit.sentence_index = sentence.sentence_index;
  unit.role = UnitRole::kSentence;
  unit.text = sentence.text;
  return unit;
}

TextUnit TextUnit::FromFact(const Sentence& origin, int fact_index,
                            std::string text) {
  TextUnit unit;
  unit.unit_id = absl::StrCat("r", origin.response_index, ".s",
                              origin.sentence_index, ".f", fact_index);
  unit.response_index = origin.response_index;
  unit.sentence_index = origin.sentence_index;
  unit.fact_index = fact_index;
  unit.role = UnitRole::kAtomicFact;
  unit.text = std::move(text);
  return unit;
}

}  // namespace agsc
