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

#include "impulse/detector.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <string>

namespace impulse {
namespace {

// Sum and count of the positive 4-neighbours of (r, c).
struct NeighbourSum {
  int sum = 0;
  int count = 0;
};

inline NeighbourSum PositiveNeighbours(const GrayImage& img, int r, int c) {
  NeighbourSum n;
  auto take = [&](int rr, int cc) {
    const int v = img(rr, cc);
    n.sum += v;
    n.count += v > 0;
  };
  if (r > 0) take(r - 1, c);
  if (r < img.height() - 1) take(r + 1, c);
  if (c > 0) take(r, c - 1);
  if (c < img.width() - 1) take(r, c + 1);
  return n;
}

inline double DetailAt(const GrayImage& img, int r, int c) {
  const NeighbourSum n = PositiveNeighbours(img, r, c);
  if (n.count == 0) return 0.0;
  return std::fabs(static_cast<double>(n.sum) / n.count - img(r, c));
}

// Histogram of the positive pixels whose detail exceeds the threshold T.
// With s the neighbour sum and n the count, |s/n - v| > T is evaluated as
// |s - n v| > T n, which is exact. Zero neighbours add nothing to the sum, so
// out-of-bounds neighbours are read as zero from a padded copy.
Histogram HighDetailHistogram(const GrayImage& img, double threshold,
                              std::vector<std::uint8_t>& padded) {
  const int w = img.width();
  const int h = img.height();
  const std::size_t pw = static_cast<std::size_t>(w) + 2;
  padded.assign(pw * (h + 2), 0);
  for (int r = 0; r < h; ++r) {
    std::copy_n(&img(r, 0), w, padded.data() + (r + 1) * pw + 1);
  }
  // Smallest integer strictly above T * n; 0 neighbours never pass.
  int limit[5];
  limit[0] = std::numeric_limits<int>::max();
  for (int n = 1; n <= 4; ++n) {
    const double t = threshold * n;
    limit[n] = t >= 1024.0 ? 1024 : static_cast<int>(std::floor(t)) + 1;
  }
  Histogram hist;
  for (int r = 0; r < h; ++r) {
    const std::uint8_t* here = padded.data() + (r + 1) * pw + 1;
    const std::uint8_t* up = here - pw;
    const std::uint8_t* down = here + pw;
    for (int c = 0; c < w; ++c) {
      const int v = here[c];
      const int a = up[c], b = down[c], l = here[c - 1], rr = here[c + 1];
      const int n = (a > 0) + (b > 0) + (l > 0) + (rr > 0);
      const int diff = a + b + l + rr - n * v;
      const int mag = diff < 0 ? -diff : diff;
      hist.counts[v] += (v > 0) & (mag >= limit[n]);
    }
  }
  return hist;
}

}  // namespace

void validate(const DetectorConfig& cfg) {
  if (!(cfg.entropy_threshold >= 0.0) || !(cfg.correlation_threshold >= 0.0)) {
    throw InvalidArgument("detector: thresholds must be non-negative");
  }
  if (cfg.max_iterations < 1) {
    throw InvalidArgument("detector: max_iterations must be at least 1");
  }
}

std::string_view stop_name(DetectorStop stop) {
  switch (stop) {
    case DetectorStop::kAlreadyAboveThreshold:
      return "already_above_threshold";
    case DetectorStop::kThresholdReached:
      return "threshold_reached";
    case DetectorStop::kNoCandidates:
      return "no_candidates";
    case DetectorStop::kMaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

FloatField detail_image(const GrayImage& img) {
  FloatField out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) out(r, c) = DetailAt(img, r, c);
  }
  return out;
}

DetectionResult detect(const GrayImage& img, const DetectorConfig& cfg) {
  validate(cfg);
  DetectionResult result;
  result.received_entropy = entropy(histogram_all(img));

  GrayImage work = img;
  Histogram surviving = histogram_positive(work);
  std::vector<bool> is_impulse(256, false);
  std::vector<std::uint8_t> padded;
  is_impulse[0] = surviving.total() < img.size();

  result.entropy_trace.push_back(entropy(surviving));
  if (result.entropy_trace.back() > cfg.entropy_threshold) {
    result.stop = DetectorStop::kAlreadyAboveThreshold;
  } else {
    result.stop = DetectorStop::kMaxIterations;
    while (result.iterations < cfg.max_iterations) {
      const Histogram candidates =
          HighDetailHistogram(work, cfg.correlation_threshold, padded);
      if (candidates.total() == 0) {
        result.stop = DetectorStop::kNoCandidates;
        break;
      }
      // max_element returns the first maximum, i.e. the smallest value.
      const auto g_max = static_cast<std::uint8_t>(
          std::max_element(candidates.counts.begin(), candidates.counts.end()) -
          candidates.counts.begin());
      is_impulse[g_max] = true;
      result.removal_order.push_back(g_max);
      for (std::uint8_t& v : work.values()) {
        if (v == g_max) v = 0;
      }
      surviving.counts[g_max] = 0;
      ++result.iterations;
      if (surviving.total() == 0) {
        throw FullyNoise("detector: every pixel was classified as noise after " +
                         std::to_string(result.iterations) + " iterations");
      }
      result.entropy_trace.push_back(entropy(surviving));
      if (result.entropy_trace.back() > cfg.entropy_threshold) {
        result.stop = DetectorStop::kThresholdReached;
        break;
      }
    }
  }

  for (int v = 0; v < 256; ++v) {
    if (is_impulse[v]) result.impulse_values.push_back(static_cast<std::uint8_t>(v));
  }
  result.noise_mask = NoiseMask(img.width(), img.height(), 0);
  for (std::size_t i = 0; i < img.size(); ++i) {
    result.noise_mask[i] = is_impulse[img[i]] ? 1 : 0;
  }
  return result;
}

nlohmann::json to_json(const DetectionResult& result) {
  return nlohmann::json{
      {"impulse_values", result.impulse_values},
      {"removal_order", result.removal_order},
      {"iterations", result.iterations},
      {"entropy_trace", result.entropy_trace},
      {"received_entropy", result.received_entropy},
      {"stop", std::string(stop_name(result.stop))},
  };
}

}  // namespace impulse
