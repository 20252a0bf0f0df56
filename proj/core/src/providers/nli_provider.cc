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

#include <cmath>

#include "absl/strings/str_cat.h"
#include "agsc/providers/provider.h"
#include "agsc/text_util.h"

namespace agsc {

absl::Status ValidateNliPairs(std::span<const NliPair> pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (StripWhitespace(pairs[i].premise).empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("NLI pair ", i, " has an empty premise"));
    }
    if (StripWhitespace(pairs[i].hypothesis).empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("NLI pair ", i, " has an empty hypothesis"));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateLogits(std::span<const NliLogits> logits) {
  for (size_t i = 0; i < logits.size(); ++i) {
    const NliLogits& l = logits[i];
    if (!std::isfinite(l.entail) || !std::isfinite(l.contradict) ||
        !std::isfinite(l.neutral)) {
      return absl::DataLossError(
          absl::StrCat("protocol error: non-finite logits at index ", i));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<size_t> ValidateEmbeddings(
    std::span<const EmbeddingVector> vectors) {
  if (vectors.empty()) return size_t{0};
  const size_t dim = vectors.front().size();
  if (dim == 0) {
    return absl::DataLossError("protocol error: zero-dimensional embedding");
  }
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      return absl::DataLossError(absl::StrCat(
          "protocol error: embedding ", i, " has dimension ",
          vectors[i].size(), ", expected ", dim));
    }
    for (double v : vectors[i]) {
      if (!std::isfinite(v)) {
        return absl::DataLossError(absl::StrCat(
            "protocol error: embedding ", i, " has a non-finite entry"));
      }
    }
  }
  return dim;
}

}  // namespace agsc
