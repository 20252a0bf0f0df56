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

#include <benchmark/benchmark.h>

#include <string>

#include "agsc/scoring.h"
#include "agsc/segmenter.h"

namespace agsc {
namespace {

std::string Paragraph(int sentences) {
  std::string text;
  for (int i = 0; i < sentences; ++i) {
    text += "Dr. Smith visited the U.S. in 1999 and met 3.5 million people. ";
  }
  return text;
}

void BM_SplitSentences(benchmark::State& state) {
  const std::string text = Paragraph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto sentences = SegmentSentences(text);
    benchmark::DoNotOptimize(sentences);
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_SplitSentences)->Arg(10)->Arg(100)->Arg(1000);

void BM_PrepareReference(benchmark::State& state) {
  const std::string text = Paragraph(static_cast<int>(state.range(0)));
  ScoringConfig config;
  for (auto _ : state) {
    auto chunks = PrepareReference(text, 0, config);
    benchmark::DoNotOptimize(chunks);
  }
}
BENCHMARK(BM_PrepareReference)->Arg(10)->Arg(100);

}  // namespace
}  // namespace agsc

BENCHMARK_MAIN();
