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

#ifndef IMPULSE_AIM_FILTER_H_
#define IMPULSE_AIM_FILTER_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "impulse/detector.h"
#include "impulse/distance_transform.h"
#include "impulse/image.h"

namespace impulse {

struct RestorationConfig {
  double correlation_threshold = 8.0;  // grey-levels
};

// Noise mask leaves nothing to restore from.
class UnrestorableInput : public NoCleanPixels {
 public:
  using NoCleanPixels::NoCleanPixels;
};

// Co-evolving numerator (image_field) and normaliser (mask_field) of the
// adaptive iterative mean. Only their ratio is meaningful.
struct RestorationState {
  FloatField image_field;
  FloatField mask_field;
  int k = 0;
};

// Clean pixels keep their value, noisy pixels copy their nearest clean site.
FloatField init_nearest(const GrayImage& img, const NoiseMask& noise_mask,
                        const DistanceField& dt);

// Smallest integer n with n >= 2 * max distance.
int iteration_count(const DistanceField& dt);

// Step-by-step driver of the adaptive iterative mean.
//
// Iteration k replaces both fields by their cross-kernel sums at pixels whose
// distance d to the nearest clean pixel satisfies d >= k/2 (tested exactly as
// k^2 <= 4 d^2) and leaves the others untouched. So a pixel at distance d is
// averaged in iterations 1..floor(2d) and is frozen afterwards.
//
// The mask field grows by up to 4x per iteration. Once a running bound
// passes 2^512 both fields are scaled, at every pixel that can still be read,
// by the power of two that brings the largest such mask value into [1, 2).
// This is exact in binary floating point and leaves all ratios unchanged.
class AimSolver {
 public:
  AimSolver(const GrayImage& received, const NoiseMask& noise_mask);

  int width() const { return received_.width(); }
  int height() const { return received_.height(); }
  int iterations() const { return iterations_; }
  int k() const { return k_; }
  bool done() const { return k_ >= iterations_; }
  const DistanceField& distance() const { return dt_; }

  // Snapshot of both fields after the last completed iteration.
  RestorationState state() const;

  void step();
  void run();

  // Multiplies both fields everywhere by a common positive factor.
  void rescale(double factor);

  // image_field / mask_field.
  FloatField estimate() const;

  // Clean pixels keep their received value; noisy pixels whose estimate is
  // within the correlation threshold (strictly) of the received value snap
  // back to it; everything else is rounded half up and clamped.
  GrayImage finish(const RestorationConfig& cfg) const;

 private:
  struct Run {
    int row;
    int begin;
    int end;
  };

  double EstimateAt(std::size_t i) const;

  GrayImage received_;
  NoiseMask noise_mask_;
  DistanceField dt_;
  // Interleaved (image, mask) pairs, updated in place row by row.
  std::vector<double> field_;
  // Pre-update copies of the previous and current row.
  std::vector<double> old_rows_[2];
  // Pixels updated in the last completed iteration (all pixels before the
  // first one).
  std::vector<Run> runs_;
  std::vector<Run> next_runs_;
  std::vector<int> row_starts_;  // next_runs_ index of each row's first run
  double bound_ = 1.0;
  int iterations_ = 0;
  int k_ = 0;
};

GrayImage aim_restore(const GrayImage& img, const NoiseMask& noise_mask,
                      const RestorationConfig& cfg = {});

struct Denoised {
  GrayImage image;
  DetectionResult detection;
};

// detect, then aim_restore with the detected noise mask.
Denoised denoise(const GrayImage& img, const DetectorConfig& det_cfg = {},
                 const RestorationConfig& res_cfg = {});

}  // namespace impulse

#endif  // IMPULSE_AIM_FILTER_H_
