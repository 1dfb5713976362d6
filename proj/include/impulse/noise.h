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

#ifndef IMPULSE_NOISE_H_
#define IMPULSE_NOISE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "impulse/image.h"
#include "json.hpp"

namespace impulse {

// Salt-and-pepper: 255 with probability p_salt, 0 with probability p_pepper.
struct SaltPepper {
  double p_salt = 0.0;
  double p_pepper = 0.0;

  bool operator==(const SaltPepper&) const = default;
};

// Fixed-range impulses: uniform in [0, m) with probability p_low and uniform
// in (255 - m, 255] with probability p_high.
struct FixedRange {
  int m = 1;
  double p_low = 0.0;
  double p_high = 0.0;

  bool operator==(const FixedRange&) const = default;
};

// General fixed-valued impulses: values[i] with probability probs[i].
struct GeneralFixed {
  std::vector<std::uint8_t> values;
  std::vector<double> probs;

  bool operator==(const GeneralFixed&) const = default;
};

using NoiseSpec = std::variant<SaltPepper, FixedRange, GeneralFixed>;

// Malformed or out-of-range noise description.
class SpecError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

NoiseSpec spn(double density);
NoiseSpec spn(double p_salt, double p_pepper);
NoiseSpec frin(int m, double p_low, double p_high);
NoiseSpec gfn(std::vector<std::uint8_t> values, std::vector<double> probs);
// Equal probabilities summing to density.
NoiseSpec gfn_uniform(std::vector<std::uint8_t> values, double density);

// All even grey-values 0, 2, ..., 254 with equal probabilities.
NoiseSpec gfn_type2(double density);

// `count` distinct grey-values drawn from [0, 255] with the given seed, equal
// probabilities.
NoiseSpec gfn_type1(double density, std::uint64_t seed, int count = 20);

// Throws SpecError unless `spec` is well formed.
void validate(const NoiseSpec& spec);

// Overall corruption probability.
double density(const NoiseSpec& spec);

// Sorted set of grey-values a corrupted pixel can take.
std::vector<std::uint8_t> impulse_set(const NoiseSpec& spec);

struct Corrupted {
  GrayImage image;
  NoiseMask mask;
};

// Each pixel is corrupted independently with probability density(spec).
// Per pixel: one uniform draw selects pepper/salt/range/value or "keep";
// a range of width > 1 costs one more integer draw. Fully determined by
// (img, spec, seed).
Corrupted corrupt(const GrayImage& img, const NoiseSpec& spec,
                  std::uint64_t seed);

nlohmann::json to_json(const NoiseSpec& spec);
NoiseSpec spec_from_json(const nlohmann::json& j);
// Compact single-line JSON.
std::string to_string(const NoiseSpec& spec);
NoiseSpec parse_spec(std::string_view text);

}  // namespace impulse

#endif  // IMPULSE_NOISE_H_
