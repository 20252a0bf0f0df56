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

#ifndef AGSC_CLOCK_H_
#define AGSC_CLOCK_H_

namespace agsc {

// Millisecond clock used for stage timing.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double NowMs() const = 0;
};

// Monotonic wall clock.
class SteadyClock : public Clock {
 public:
  double NowMs() const override;
};

// Reads the calling thread's simulated time. Only mock latencies advance it,
// so timings under this clock are reproducible.
class SimulatedClock : public Clock {
 public:
  double NowMs() const override;
};

// Enables simulated time on the current thread for the scope's lifetime,
// starting from zero.
class SimulatedTimeScope {
 public:
  SimulatedTimeScope();
  ~SimulatedTimeScope();
  SimulatedTimeScope(const SimulatedTimeScope&) = delete;
  SimulatedTimeScope& operator=(const SimulatedTimeScope&) = delete;

 private:
  bool previous_active_;
  double previous_now_;
};

// Spends `ms` of provider latency: advances simulated time when a
// SimulatedTimeScope is active on this thread, sleeps otherwise.
void ConsumeLatency(double ms);

// Times a region against a Clock and adds the elapsed milliseconds to `sink`.
class ScopedTimer {
 public:
  ScopedTimer(const Clock& clock, double* sink)
      : clock_(clock), sink_(sink), start_(clock.NowMs()) {}
  ~ScopedTimer() { *sink_ += clock_.NowMs() - start_; }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  const Clock& clock_;
  double* sink_;
  double start_;
};

}  // namespace agsc

#endif  // AGSC_CLOCK_H_
