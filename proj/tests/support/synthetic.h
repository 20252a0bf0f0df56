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

#ifndef AGSC_TESTS_SUPPORT_SYNTHETIC_H_
#define AGSC_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "agsc/dataset.h"

namespace agsc::testing {

// Synthetic corpora for the claim-token mock NLI. Every factual sentence
// carries tokens of the form a<j>=<value>; the mock entails a hypothesis whose
// tokens all appear in the premise, contradicts one whose keys appear with
// other values, and stays neutral on unknown keys.

struct HallucinationCorpusOptions {
  int num_prompts = 50;
  int anchor_sentences = 10;
  int num_references = 4;
  // Probability that a reference states a wrong value for an attribute.
  double reference_noise = 0.1;
  // Filler sentences (no claims) mixed into each response.
  int filler_sentences = 2;
  uint64_t seed = 7;
};

// Prompt i gets hallucination fraction p_i = i / (num_prompts - 1): that
// share of anchor claims carries values no reference supports. The
// factuality label is the share of correct anchor claims.
Dataset MakeHallucinationCorpus(const HallucinationCorpusOptions& options);

struct NeutralHeavyCorpusOptions {
  int num_prompts = 20;
  int anchor_sentences = 10;
  // Share of anchor sentences without claims (routed to skip).
  double neutral_fraction = 0.5;
  // Share of anchor sentences with one supported and one unknown claim
  // (routed to decompose).
  double mixed_fraction = 0.2;
  int num_references = 3;
  uint64_t seed = 11;
};

Dataset MakeNeutralHeavyCorpus(const NeutralHeavyCorpusOptions& options);

// Number of anchor sentences per prompt across the dataset.
int CountAnchorSentences(const Dataset& dataset);

std::string DatasetToJsonl(const Dataset& dataset);

}  // namespace agsc::testing

#endif  // AGSC_TESTS_SUPPORT_SYNTHETIC_H_
