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

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "kernels/kernels_internal.h"

namespace impulse::kernels_internal {
namespace {

void CrossSum(const double* in, double* out, int width, int height) {
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      std::size_t i = static_cast<std::size_t>(r) * width + c;
      out[i] = CrossAt(in, 1, width, height, r, c, i);
    }
  }
}

void AimRow(const double* up, const double* here, const double* down,
            double* out, int width, int begin, int end) {
  for (int c = begin; c < end; ++c) {
    out[2 * c] = AimAt(up, here, down, width, c, 0);
    out[2 * c + 1] = AimAt(up, here, down, width, c, 1);
  }
}

void Scale(double* values, std::size_t n, double factor) {
  for (std::size_t i = 0; i < n; ++i) values[i] *= factor;
}

void Median3x3(const std::uint8_t* in, std::uint8_t* out, int width,
               int height) {
  MedianBorder(in, out, width, height);
  auto mn = [](std::uint8_t a, std::uint8_t b) { return std::min(a, b); };
  auto mx = [](std::uint8_t a, std::uint8_t b) { return std::max(a, b); };
  for (int r = 1; r < height - 1; ++r) {
    const std::uint8_t* above = in + static_cast<std::size_t>(r - 1) * width;
    const std::uint8_t* here = above + width;
    const std::uint8_t* below = here + width;
    std::uint8_t* dst = out + static_cast<std::size_t>(r) * width;
    for (int c = 1; c < width - 1; ++c) {
      std::uint8_t p[9] = {above[c - 1], above[c], above[c + 1],
                           here[c - 1],  here[c],  here[c + 1],
                           below[c - 1], below[c], below[c + 1]};
      dst[c] = Median9(p, mn, mx);
    }
  }
}

}  // namespace

const KernelTable kScalarKernels = {
    Isa::kScalar, CrossSum, AimRow, Scale, Median3x3,
};

}  // namespace impulse::kernels_internal
