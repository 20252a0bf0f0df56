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
#include <utility>
#include <vector>

#include "agsc/clock.h"
#include "agsc/pipeline.h"
#include "agsc/providers/mock.h"

namespace agsc {
namespace {

SampleSet BenchSample(int responses) {
  std::vector<std::string> texts;
  for (int r = 0; r < responses; ++r) {
    std::string text;
    for (int j = 0; j < 8; ++j) {
      const int value = (r + j) % 3 == 0 ? 1 : 0;
      text += "Fact " + std::to_string(j) + " holds a" + std::to_string(j) +
              "=" + std::to_string(value) + ". ";
    }
    text += "It was a quiet day.";
    texts.push_back(text);
  }
  return *SampleSet::Create("bench", "Tell me a bio.", std::move(texts));
}

void BM_RunPrompt(benchmark::State& state) {
  const SampleSet sample = BenchSample(static_cast<int>(state.range(0)));
  ScriptedNliProvider nli;
  HashedBowEmbedder embed;
  MockDecomposer decomposer;
  PipelineConfig config;
  config.clock = ClockKind::kSimulated;
  SimulatedClock clock;
  for (auto _ : state) {
    SimulatedTimeScope scope;
    auto report = RunPrompt(sample, config, {&nli, &embed, &decomposer}, clock);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RunPrompt)->Arg(4)->Arg(11);

}  // namespace
}  // namespace agsc

BENCHMARK_MAIN();
