// Copyright 2026 The Impulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPULSE_RANDOM_H_
#define IMPULSE_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace impulse {

// Reproducible generator: std::mt19937_64 (whose output sequence the C++
// standard fixes) with distribution code of our own, since the standard
// distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), n > 0. Lemire's multiply-shift with
  // rejection, so it is exactly unbiased.
  std::uint32_t below(std::uint32_t n);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent seed from a base seed and a path of indices
// (image, spec, run, ...): s = mix64(s ^ mix64(index + 1)) for each index.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> path);

// Non-deterministic seed for callers that did not supply one.
std::uint64_t random_seed();

}  // namespace impulse

#endif  // IMPULSE_RANDOM_H_
