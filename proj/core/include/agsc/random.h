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

#ifndef AGSC_RANDOM_H_
#define AGSC_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace agsc {

// Seeded generator whose derived draws are identical on every platform.
// std::*_distribution output is implementation-defined, so uniform and
// normal variates are derived from the raw 64-bit engine output here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, 1).
  double Uniform();
  // Uniform integer in [0, n). n must be positive.
  size_t UniformIndex(size_t n);
  // Standard normal (Box-Muller).
  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Mixes a base seed with a stream index (splitmix64 finalizer).
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

}  // namespace agsc

#endif  // AGSC_RANDOM_H_
