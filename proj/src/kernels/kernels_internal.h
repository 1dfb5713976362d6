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

#ifndef IMPULSE_KERNELS_KERNELS_INTERNAL_H_
#define IMPULSE_KERNELS_KERNELS_INTERNAL_H_

#include <algorithm>
#include <cstdint>

#include "impulse/kernels.h"

namespace impulse::kernels_internal {

extern const KernelTable kScalarKernels;
#if defined(IMPULSE_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif

// 4-neighbour sum at (row, col) of a field with `stride` doubles per pixel;
// i is the index of the element being summed. Out-of-bounds neighbours are
// zero. Every variant sums in this order.
inline double CrossAt(const double* in, int stride, int width, int height,
                      int row, int col, std::size_t i) {
  const std::size_t vertical = static_cast<std::size_t>(stride) * width;
  double up = row > 0 ? in[i - vertical] : 0.0;
  double down = row < height - 1 ? in[i + vertical] : 0.0;
  double left = col > 0 ? in[i - stride] : 0.0;
  double right = col < width - 1 ? in[i + stride] : 0.0;
  return ((up + down) + left) + right;
}

// One element (j = 0 image, 1 mask) of the AIM update at column col.
inline double AimAt(const double* up, const double* here, const double* down,
                    int width, int col, int j) {
  const std::size_t i = 2 * static_cast<std::size_t>(col) + j;
  double u = up ? up[i] : 0.0;
  double d = down ? down[i] : 0.0;
  double left = col > 0 ? here[i - 2] : 0.0;
  double right = col < width - 1 ? here[i + 2] : 0.0;
  return ((u + d) + left) + right;
}

// Median of nine by a fixed 19 compare-exchange network. Min and Max are
// callables so the same network runs on scalars and on SIMD lanes.
template <typename T, typename Min, typename Max>
inline T Median9(T p[9], Min min, Max max) {
  auto sort2 = [&](int a, int b) {
    T lo = min(p[a], p[b]);
    p[b] = max(p[a], p[b]);
    p[a] = lo;
  };
  sort2(1, 2); sort2(4, 5); sort2(7, 8);
  sort2(0, 1); sort2(3, 4); sort2(6, 7);
  sort2(1, 2); sort2(4, 5); sort2(7, 8);
  sort2(0, 3); sort2(5, 8); sort2(4, 7);
  sort2(3, 6); sort2(1, 4); sort2(2, 5);
  sort2(4, 7); sort2(4, 2); sort2(6, 4);
  sort2(4, 2);
  return p[4];
}

// Median of the window clipped to the image, lower middle for even counts.
inline std::uint8_t ClippedMedian(const std::uint8_t* in, int width,
                                  int height, int row, int col) {
  std::uint8_t window[9];
  int n = 0;
  for (int r = std::max(row - 1, 0); r <= std::min(row + 1, height - 1); ++r) {
    for (int c = std::max(col - 1, 0); c <= std::min(col + 1, width - 1);
         ++c) {
      window[n++] = in[static_cast<std::size_t>(r) * width + c];
    }
  }
  std::sort(window, window + n);
  return window[(n - 1) / 2];
}

// Medians along the one-pixel frame of the image.
inline void MedianBorder(const std::uint8_t* in, std::uint8_t* out, int width,
                         int height) {
  auto put = [&](int r, int c) {
    out[static_cast<std::size_t>(r) * width + c] =
        ClippedMedian(in, width, height, r, c);
  };
  for (int c = 0; c < width; ++c) {
    put(0, c);
    put(height - 1, c);
  }
  for (int r = 1; r < height - 1; ++r) {
    put(r, 0);
    put(r, width - 1);
  }
}

}  // namespace impulse::kernels_internal

#endif  // IMPULSE_KERNELS_KERNELS_INTERNAL_H_
