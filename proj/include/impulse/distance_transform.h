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

#ifndef IMPULSE_DISTANCE_TRANSFORM_H_
#define IMPULSE_DISTANCE_TRANSFORM_H_

#include <cstdint>
#include <vector>

#include "impulse/image.h"

namespace impulse {

// 1 = clean (uncorrupted) pixel.
using BinaryMask = Grid<std::uint8_t, struct BinaryMaskTag>;

BinaryMask clean_mask(const NoiseMask& noise);

struct Site {
  int row = 0;
  int col = 0;

  bool operator==(const Site&) const = default;
};

// Raised when a transform or restoration needs at least one clean pixel.
class NoCleanPixels : public Error {
 public:
  using Error::Error;
};

// Exact Euclidean distance of every pixel to its nearest clean pixel, kept as
// integer squared distances, plus one nearest clean site per pixel. Sides are
// limited to 32767 so that squared distances fit in 32 bits.
class DistanceField {
 public:
  // `sites` holds row-major indices of the nearest clean pixels.
  DistanceField(Grid<std::int32_t> squared, Grid<std::int32_t> sites);

  int width() const { return squared_.width(); }
  int height() const { return squared_.height(); }

  std::int64_t squared(int row, int col) const { return squared_(row, col); }
  const Grid<std::int32_t>& squared() const { return squared_; }
  double distance(int row, int col) const;
  Site site(int row, int col) const {
    const std::int32_t i = sites_(row, col);
    return {i / width(), i % width()};
  }
  // Row-major index of the nearest clean pixel.
  const Grid<std::int32_t>& site_indices() const { return sites_; }

  std::int64_t max_squared() const;
  FloatField distances() const;

 private:
  Grid<std::int32_t> squared_;
  Grid<std::int32_t> sites_;
};

// Linear-time separable transform: a column pass finds the nearest clean row
// in each column, then a row pass takes the lower envelope of the resulting
// parabolas. Among equidistant clean pixels the one with the smallest row,
// then smallest column, is the site. Throws NoCleanPixels on an all-false
// mask and InvalidArgument if a side exceeds 32767.
DistanceField edt(const BinaryMask& clean);

// Distances rounded and saturated to 16 bits, as a P5 file.
std::vector<std::uint8_t> distance_pgm(const DistanceField& field);

}  // namespace impulse

#endif  // IMPULSE_DISTANCE_TRANSFORM_H_
