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

#include "impulse/aim_filter.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "impulse/kernels.h"

namespace impulse {
namespace {

constexpr double kRescaleBound = 0x1.0p512;

// floor(sqrt(x)) for x >= 0, exact.
std::int64_t FloorSqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

DistanceField CleanDistance(const GrayImage& img, const NoiseMask& noise_mask) {
  if (!img.same_shape(noise_mask)) {
    throw InvalidArgument("aim: image and noise mask differ in shape");
  }
  try {
    return edt(clean_mask(noise_mask));
  } catch (const NoCleanPixels&) {
    throw UnrestorableInput("aim: every pixel is flagged as noise");
  }
}

}  // namespace

FloatField init_nearest(const GrayImage& img, const NoiseMask& noise_mask,
                        const DistanceField& dt) {
  if (!img.same_shape(noise_mask) || dt.width() != img.width() ||
      dt.height() != img.height()) {
    throw InvalidArgument("init_nearest: shape mismatch");
  }
  FloatField out(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (!noise_mask(r, c)) {
        out(r, c) = img(r, c);
      } else {
        const Site s = dt.site(r, c);
        out(r, c) = img(s.row, s.col);
      }
    }
  }
  return out;
}

int iteration_count(const DistanceField& dt) {
  const std::int64_t q = 4 * dt.max_squared();
  std::int64_t n = FloorSqrt(q);
  if (n * n < q) ++n;
  return static_cast<int>(n);
}

AimSolver::AimSolver(const GrayImage& received, const NoiseMask& noise_mask)
    : received_(received),
      noise_mask_(noise_mask),
      dt_(CleanDistance(received, noise_mask)),
      iterations_(iteration_count(dt_)) {
  const std::size_t n = received_.size();
  const std::int32_t* sites = dt_.site_indices().data();
  field_.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    field_[2 * i] = received_[sites[i]];
    field_[2 * i + 1] = 1.0;
  }
  for (auto& row : old_rows_) row.resize(2 * static_cast<std::size_t>(width()));
  runs_.reserve(height());
  for (int r = 0; r < height(); ++r) runs_.push_back({r, 0, width()});
}

RestorationState AimSolver::state() const {
  RestorationState out{FloatField(width(), height()),
                       FloatField(width(), height()), k_};
  for (std::size_t i = 0; i < out.image_field.size(); ++i) {
    out.image_field[i] = field_[2 * i];
    out.mask_field[i] = field_[2 * i + 1];
  }
  return out;
}

void AimSolver::step() {
  if (done()) return;
  const KernelTable& kt = active_kernels();
  ++k_;
  const int w = width();
  const int h = height();
  const std::size_t row_len = 2 * static_cast<std::size_t>(w);
  auto row_ptr = [&](int r) { return field_.data() + r * row_len; };

  // Pixel moves in iteration k iff k^2 <= 4 d^2, i.e. d^2 >= ceil(k^2 / 4).
  const std::int64_t kk = static_cast<std::int64_t>(k_) * k_;
  const std::int64_t min_sq = (kk + 3) / 4;
  next_runs_.clear();
  row_starts_.clear();
  for (const Run& run : runs_) {
    const std::int32_t* sq =
        dt_.squared().data() + static_cast<std::size_t>(run.row) * w;
    int c = run.begin;
    while (c < run.end) {
      while (c < run.end && sq[c] < min_sq) ++c;
      const int begin = c;
      while (c < run.end && sq[c] >= min_sq) ++c;
      if (c == begin) continue;
      if (next_runs_.empty() || next_runs_.back().row != run.row) {
        row_starts_.push_back(static_cast<int>(next_runs_.size()));
      }
      next_runs_.push_back({run.row, begin, c});
    }
  }
  row_starts_.push_back(static_cast<int>(next_runs_.size()));

  // Rows are updated top to bottom in place. The row below is still
  // untouched when a row is computed; the row itself and the one above are
  // read from their saved pre-update copies.
  int saved_row = -2;
  int slot = 0;
  for (std::size_t g = 0; g + 1 < row_starts_.size(); ++g) {
    const Run* first = &next_runs_[row_starts_[g]];
    const Run* last = &next_runs_[row_starts_[g + 1] - 1];
    const int r = first->row;
    int lo = std::max(first->begin - 1, 0);
    int hi = std::min(last->end + 1, w);
    if (g + 2 < row_starts_.size()) {
      const Run& below_first = next_runs_[row_starts_[g + 1]];
      if (below_first.row == r + 1) {
        const Run& below_last = next_runs_[row_starts_[g + 2] - 1];
        lo = std::min(lo, below_first.begin);
        hi = std::max(hi, below_last.end);
      }
    }
    const double* up = nullptr;
    if (r > 0) up = saved_row == r - 1 ? old_rows_[1 - slot].data() : row_ptr(r - 1);
    const double* down = r < h - 1 ? row_ptr(r + 1) : nullptr;
    double* here = old_rows_[slot].data();
    std::copy(row_ptr(r) + 2 * lo, row_ptr(r) + 2 * hi, here + 2 * lo);
    for (const Run* run = first; run <= last; ++run) {
      kt.aim_row(up, here, down, row_ptr(r), w, run->begin, run->end);
    }
    saved_row = r;
    slot = 1 - slot;
  }

  bound_ *= 4.0;
  if (bound_ > kRescaleBound) {
    // A pixel read by a future iteration is within one step of a pixel that
    // still moves, so floor(2d) >= k - 1: exactly the pixels in runs_. Their
    // largest mask value is brought into [1, 2) by a power of two.
    double peak = 0.0;
    for (const Run& run : runs_) {
      const double* p = row_ptr(run.row) + 2 * run.begin;
      for (int c = 0; c < run.end - run.begin; ++c) peak = std::max(peak, p[2 * c + 1]);
    }
    if (peak > 0.0) {
      const double factor = std::ldexp(1.0, -std::ilogb(peak));
      for (const Run& run : runs_) {
        kt.scale(row_ptr(run.row) + 2 * run.begin,
                 2 * static_cast<std::size_t>(run.end - run.begin), factor);
      }
      bound_ = peak * factor;
    }
  }
  std::swap(runs_, next_runs_);
}

void AimSolver::run() {
  while (!done()) step();
}

void AimSolver::rescale(double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("aim: rescale factor must be positive and finite");
  }
  active_kernels().scale(field_.data(), field_.size(), factor);
  bound_ *= factor;
}

double AimSolver::EstimateAt(std::size_t i) const {
  const double m = field_[2 * i + 1];
  // m only reaches 0 by underflow in pathological geometries.
  return m > 0.0 ? field_[2 * i] / m
                 : received_[dt_.site_indices()[i]];
}

FloatField AimSolver::estimate() const {
  FloatField out(width(), height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = EstimateAt(i);
  return out;
}

GrayImage AimSolver::finish(const RestorationConfig& cfg) const {
  GrayImage out = received_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!noise_mask_[i]) continue;
    const double est = EstimateAt(i);
    if (std::fabs(est - received_[i]) < cfg.correlation_threshold) continue;
    out[i] = quantize(est);
  }
  return out;
}

GrayImage aim_restore(const GrayImage& img, const NoiseMask& noise_mask,
                      const RestorationConfig& cfg) {
  if (!(cfg.correlation_threshold >= 0.0)) {
    throw InvalidArgument("aim: correlation threshold must be non-negative");
  }
  AimSolver solver(img, noise_mask);
  solver.run();
  return solver.finish(cfg);
}

Denoised denoise(const GrayImage& img, const DetectorConfig& det_cfg,
                 const RestorationConfig& res_cfg) {
  Denoised out;
  out.detection = detect(img, det_cfg);
  out.image = aim_restore(img, out.detection.noise_mask, res_cfg);
  return out;
}

}  // namespace impulse
