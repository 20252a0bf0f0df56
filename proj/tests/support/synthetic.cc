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

#include "support/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

#include "absl/strings/str_cat.h"
#include "agsc/random.h"
#include "agsc/segmenter.h"
#include "nlohmann/json.hpp"
#include "support/fixtures.h"

namespace agsc::testing {
namespace {

constexpr std::array<std::string_view, 12> kPhrases = {
    "was born in",   "studied at",     "worked for",  "moved to",
    "won the prize", "wrote a book on", "founded",     "taught at",
    "lived near",    "played for",     "married into", "retired to"};

constexpr std::array<std::string_view, 8> kFillers = {
    "Many people still talk about those years.",
    "The period was full of change.",
    "Opinions about this remain divided.",
    "It is an interesting story overall.",
    "Some details are hard to pin down.",
    "Such careers were unusual at the time.",
    "Readers often find this part memorable.",
    "There is more to say on the subject."};

std::string Name(int prompt) { return absl::StrCat("Person", prompt); }

std::string Claim(const std::string& name, int attribute,
                  const std::string& value) {
  return absl::StrCat(name, " ", std::string(kPhrases[attribute % kPhrases.size()]),
                      " place", value, " a", attribute, "=", value, ".");
}

template <typename T>
void Shuffle(std::vector<T>* items, Rng* rng) {
  for (size_t i = items->size(); i > 1; --i) {
    std::swap((*items)[i - 1], (*items)[rng->UniformIndex(i)]);
  }
}

std::string Join(const std::vector<std::string>& sentences) {
  std::string out;
  for (const std::string& s : sentences) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

}  // namespace

Dataset MakeHallucinationCorpus(const HallucinationCorpusOptions& options) {
  Dataset dataset;
  Rng rng(options.seed);
  const int m = options.anchor_sentences;
  for (int i = 0; i < options.num_prompts; ++i) {
    const std::string name = Name(i);
    const double p = options.num_prompts > 1
                         ? static_cast<double>(i) / (options.num_prompts - 1)
                         : 0.0;
    const int wrong = static_cast<int>(std::lround(p * m));
    std::vector<int> attributes(m);
    for (int j = 0; j < m; ++j) attributes[j] = j;
    std::vector<int> hallucinated = attributes;
    Shuffle(&hallucinated, &rng);
    hallucinated.resize(wrong);

    std::vector<std::string> anchor;
    for (int j = 0; j < m; ++j) {
      const bool bad = std::find(hallucinated.begin(), hallucinated.end(), j) !=
                       hallucinated.end();
      anchor.push_back(Claim(name, j, absl::StrCat(bad ? "h" : "t", j)));
    }
    for (int f = 0; f < options.filler_sentences; ++f) {
      const size_t at = rng.UniformIndex(anchor.size() + 1);
      anchor.insert(anchor.begin() + at,
                    std::string(kFillers[rng.UniformIndex(kFillers.size())]));
    }

    std::vector<std::string> responses = {Join(anchor)};
    for (int r = 0; r < options.num_references; ++r) {
      std::vector<std::string> sentences;
      for (int j = 0; j < m; ++j) {
        const bool noisy = rng.Uniform() < options.reference_noise;
        sentences.push_back(
            Claim(name, j, absl::StrCat(noisy ? "n" : "t", j)));
      }
      for (int f = 0; f < options.filler_sentences; ++f) {
        sentences.push_back(
            std::string(kFillers[rng.UniformIndex(kFillers.size())]));
      }
      Shuffle(&sentences, &rng);
      responses.push_back(Join(sentences));
    }
    dataset.samples.push_back(MakeSample(
        absl::StrCat("syn", i), std::move(responses),
        1.0 - static_cast<double>(wrong) / m, absl::StrCat("Who is ", name, "?")));
  }
  return dataset;
}

Dataset MakeNeutralHeavyCorpus(const NeutralHeavyCorpusOptions& options) {
  Dataset dataset;
  Rng rng(options.seed);
  const int m = options.anchor_sentences;
  const int neutral = static_cast<int>(std::lround(options.neutral_fraction * m));
  const int mixed = static_cast<int>(std::lround(options.mixed_fraction * m));
  for (int i = 0; i < options.num_prompts; ++i) {
    const std::string name = Name(i);
    std::vector<std::string> anchor;
    int attribute = 0;
    for (int j = 0; j < m - neutral - mixed; ++j, ++attribute) {
      anchor.push_back(Claim(name, attribute, absl::StrCat("t", attribute)));
    }
    for (int j = 0; j < mixed; ++j, attribute += 2) {
      // Supported first clause, unknown second clause.
      anchor.push_back(absl::StrCat(
          name, " ", std::string(kPhrases[attribute % kPhrases.size()]), " place", "t",
          attribute, " a", attribute, "=t", attribute, " and ",
          std::string(kPhrases[(attribute + 1) % kPhrases.size()]), " place", "u",
          attribute + 1, " x", attribute + 1, "=u", attribute + 1, "."));
    }
    for (int j = 0; j < neutral; ++j) {
      anchor.push_back(std::string(kFillers[(i + j) % kFillers.size()]));
    }
    Shuffle(&anchor, &rng);

    std::vector<std::string> responses = {Join(anchor)};
    for (int r = 0; r < options.num_references; ++r) {
      std::vector<std::string> sentences;
      for (int a = 0; a < attribute; ++a) {
        sentences.push_back(Claim(name, a, absl::StrCat("t", a)));
      }
      Shuffle(&sentences, &rng);
      responses.push_back(Join(sentences));
    }
    dataset.samples.push_back(MakeSample(absl::StrCat("nh", i),
                                         std::move(responses), 1.0,
                                         absl::StrCat("Who is ", name, "?")));
  }
  return dataset;
}

int CountAnchorSentences(const Dataset& dataset) {
  int total = 0;
  for (const SampleSet& s : dataset.samples) {
    total += static_cast<int>(SegmentSentences(s.anchor(), 0).size());
  }
  return total;
}

std::string DatasetToJsonl(const Dataset& dataset) {
  std::string out;
  for (const SampleSet& s : dataset.samples) {
    nlohmann::json record{{"prompt_id", s.prompt_id()},
                          {"prompt", s.prompt()},
                          {"responses", s.responses()}};
    if (s.factuality()) record["factuality"] = *s.factuality();
    out += record.dump() + "\n";
  }
  return out;
}

}  // namespace agsc::testing
