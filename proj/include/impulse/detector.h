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

#ifndef IMPULSE_DETECTOR_H_
#define IMPULSE_DETECTOR_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "impulse/image.h"
#include "json.hpp"

namespace impulse {

struct DetectorConfig {
  double entropy_threshold = 6.0;       // bits
  double correlation_threshold = 8.0;   // grey-levels
  int max_iterations = 256;
};

// Throws InvalidArgument on negative thresholds or max_iterations < 1.
void validate(const DetectorConfig& cfg);

enum class DetectorStop {
  kAlreadyAboveThreshold,  // guard fired before the first removal
  kThresholdReached,
  kNoCandidates,           // no high-detail pixel left to take a mode from
  kMaxIterations,
};

std::string_view stop_name(DetectorStop stop);

struct DetectionResult {
  // Sorted ascending. Contains 0 whenever the input has a 0-valued pixel.
  std::vector<std::uint8_t> impulse_values;
  // Values in the order the iterations removed them (without the implicit 0).
  std::vector<std::uint8_t> removal_order;
  // Received pixels whose value is in impulse_values.
  NoiseMask noise_mask;
  // Entropy of the positive pixels before any removal, then after each one.
  std::vector<double> entropy_trace;
  int iterations = 0;
  // Entropy of the full received histogram, 0 included.
  double received_entropy = 0.0;
  DetectorStop stop = DetectorStop::kAlreadyAboveThreshold;
};

// Every positive pixel was removed before the entropy threshold was reached.
class FullyNoise : public Error {
 public:
  using Error::Error;
};

// |local mean - pixel| where the local mean averages the positive
// 4-neighbours (0 is the removed-pixel sentinel). 0 where no neighbour is
// positive.
FloatField detail_image(const GrayImage& img);

// Iteratively declares the most frequent grey-value among high-detail pixels
// an impulse value and removes it, until the entropy of the surviving
// positive pixels exceeds the threshold. Mode ties go to the smaller value.
DetectionResult detect(const GrayImage& img, const DetectorConfig& cfg = {});

nlohmann::json to_json(const DetectionResult& result);

}  // namespace impulse

#endif  // IMPULSE_DETECTOR_H_
