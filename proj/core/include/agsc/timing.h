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

#ifndef AGSC_TIMING_H_
#define AGSC_TIMING_H_

#include <cstdint>

namespace agsc {

// Per-prompt stage latencies (milliseconds) and provider call counts.
// Provider wait time is charged to the stage that made the call.
// Generation time is not part of this breakdown; responses arrive
// pre-sampled.
struct TimingBreakdown {
  double t_nli = 0.0;
  double t_atom = 0.0;
  double t_embed = 0.0;
  double t_cluster = 0.0;
  double t_total = 0.0;
  int64_t decomposer_calls = 0;
  int64_t nli_pairs = 0;
  int64_t embed_calls = 0;

  TimingBreakdown& operator+=(const TimingBreakdown& other) {
    t_nli += other.t_nli;
    t_atom += other.t_atom;
    t_embed += other.t_embed;
    t_cluster += other.t_cluster;
    t_total += other.t_total;
    decomposer_calls += other.decomposer_calls;
    nli_pairs += other.nli_pairs;
    embed_calls += other.embed_calls;
    return *this;
  }
};

}  // namespace agsc

#endif  // AGSC_TIMING_H_
