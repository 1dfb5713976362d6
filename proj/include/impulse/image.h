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

#ifndef IMPULSE_IMAGE_H_
#define IMPULSE_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace impulse {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Row-major 2-D grid. The Tag parameter only exists to keep grids with the
// same element type but different meaning (an image vs. a mask) apart.
template <typename T, typename Tag = void>
class Grid {
 public:
  using value_type = T;

  Grid() = default;

  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    CheckDims(width, height);
    values_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  Grid(int width, int height, std::vector<T> values)
      : width_(width), height_(height), values_(std::move(values)) {
    CheckDims(width, height);
    if (values_.size() != static_cast<std::size_t>(width) * height) {
      throw InvalidArgument("grid: value count " +
                            std::to_string(values_.size()) +
                            " does not match " + std::to_string(width) + "x" +
                            std::to_string(height));
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  T& operator()(int row, int col) {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  const T& operator()(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }

  bool contains(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }

  template <typename U, typename OtherTag>
  bool same_shape(const Grid<U, OtherTag>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  std::span<T> values() { return values_; }
  std::span<const T> values() const { return values_; }
  T* data() { return values_.data(); }
  const T* data() const { return values_.data(); }

  bool operator==(const Grid&) const = default;

 private:
  static void CheckDims(int width, int height) {
    if (width <= 0 || height <= 0) {
      throw InvalidArgument("grid: dimensions must be positive, got " +
                            std::to_string(width) + "x" +
                            std::to_string(height));
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> values_;
};

using GrayImage = Grid<std::uint8_t, struct GrayImageTag>;
using FloatField = Grid<double, struct FloatFieldTag>;

// Per-pixel corruption flags, 1 = corrupted.
using NoiseMask = Grid<std::uint8_t, struct NoiseMaskTag>;

struct Histogram {
  std::array<std::uint64_t, 256> counts{};

  std::uint64_t total() const;
};

// Sum over the in-bounds 4-neighbours of each pixel (the cross kernel
// [0 1 0; 1 0 1; 0 1 0] with zero padding).
FloatField convolve_cross(const FloatField& f);

// Counts of grey-values 1..255; counts[0] is always 0.
Histogram histogram_positive(const GrayImage& img);

// Counts of all 256 grey-values.
Histogram histogram_all(const GrayImage& img);

// Shannon entropy in bits. 0 for an empty histogram.
double entropy(const Histogram& h);

FloatField to_field(const GrayImage& img);

// Round half up, then clamp to [0, 255].
std::uint8_t quantize(double v);
GrayImage quantize(const FloatField& f);

}  // namespace impulse

#endif  // IMPULSE_IMAGE_H_
