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

#ifndef AGSC_PROVIDERS_RULE_DECOMPOSER_H_
#define AGSC_PROVIDERS_RULE_DECOMPOSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "agsc/providers/provider.h"

namespace agsc {

// Deterministic clause splitter used offline and as the fallback when an
// LLM-backed decomposer is unavailable.
//
// Splits on coordinating conjunctions (", and", " and ", " but ", "; ",
// ", while ") and on relative clauses (", which", ", who"). Fragments that
// start with a verb borrow the leading subject, bare name fragments borrow
// the previous fragment's predicate ("by him and Mark Heyman" yields "by
// Mark Heyman"), relative clauses borrow the nearest preceding name, and
// object pronouns resolve to the last name seen. A sentence with no split
// point comes back unchanged.
std::vector<std::string> SplitIntoFacts(std::string_view sentence);

class RuleBasedDecomposer : public Decomposer {
 public:
  absl::StatusOr<Decomposition> Decompose(
      std::string_view sentence, std::string_view prompt_context) override;
};

}  // namespace agsc

#endif  // AGSC_PROVIDERS_RULE_DECOMPOSER_H_
