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

#include "agsc/clock.h"

#include <chrono>
#include <thread>

namespace agsc {
namespace {

thread_local bool simulated_active = false;
thread_local double simulated_now_ms = 0.0;

}  // namespace

double SteadyClock::NowMs() const {
  using std::chrono::duration;
  using std::chrono::steady_clock;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

double SimulatedClock::NowMs() const { return simulated_now_ms; }

SimulatedTimeScope::SimulatedTimeScope()
    : previous_active_(simulated_active), previous_now_(simulated_now_ms) {
  simulated_active = true;
  simulated_now_ms = 0.0;
}

SimulatedTimeScope::~SimulatedTimeScope() {
  simulated_active = previous_active_;
  simulated_now_ms = previous_now_;
}

void ConsumeLatency(double ms) {
  if (ms <= 0.0) return;
  if (simulated_active) {
    simulated_now_ms += ms;
    return;
  }
  std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(ms));
}

}  // namespace agsc
