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

#ifndef AGSC_DATASET_H_
#define AGSC_DATASET_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "agsc/corpus.h"

namespace agsc {

// A record that parsed but violated a SampleSet invariant (e.g. fewer than
// two responses). The rest of the file still loads.
struct RejectedRecord {
  int line = 0;
  std::string prompt_id;
  std::string reason;
};

struct Dataset {
  std::vector<SampleSet> samples;
  std::vector<RejectedRecord> rejected;
};

// Parses one line-delimited record:
//   {"prompt_id": str, "prompt": str, "responses": [str, ...],
//    "factuality": number (optional)}
// Text fields are NFC-normalized. Schema violations return
// InvalidArgument naming the line and field; invariant violations return
// FailedPrecondition.
absl::StatusOr<SampleSet> ParseRecord(std::string_view line, int line_number);

// Reads every record from `input`. Blank lines are ignored. The first schema
// error aborts the load; records failing SampleSet invariants are collected
// in Dataset::rejected.
absl::StatusOr<Dataset> ReadDataset(std::istream& input);

absl::StatusOr<Dataset> LoadDataset(const std::string& path);

}  // namespace agsc

#endif  // AGSC_DATASET_H_
