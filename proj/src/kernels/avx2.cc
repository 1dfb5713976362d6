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

#include <immintrin.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "kernels/kernels_internal.h"

namespace impulse::kernels_internal {
namespace {

// Four consecutive elements at in + i, neighbours `horizontal` and
// `vertical` elements away.
inline __m256d Cross4(const double* in, std::size_t i, std::size_t horizontal,
                      std::size_t vertical, bool has_up, bool has_down) {
  __m256d up =
      has_up ? _mm256_loadu_pd(in + i - vertical) : _mm256_setzero_pd();
  __m256d down =
      has_down ? _mm256_loadu_pd(in + i + vertical) : _mm256_setzero_pd();
  __m256d left = _mm256_loadu_pd(in + i - horizontal);
  __m256d right = _mm256_loadu_pd(in + i + horizontal);
  return _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(up, down), left), right);
}

void CrossSum(const double* in, double* out, int width, int height) {
  const std::size_t vertical = width;
  for (int r = 0; r < height; ++r) {
    const std::size_t base = static_cast<std::size_t>(r) * width;
    const bool has_up = r > 0;
    const bool has_down = r < height - 1;
    out[base] = CrossAt(in, 1, width, height, r, 0, base);
    int c = 1;
    for (; c + 4 <= width - 1; c += 4) {
      _mm256_storeu_pd(out + base + c,
                       Cross4(in, base + c, 1, vertical, has_up, has_down));
    }
    for (; c < width; ++c) out[base + c] = CrossAt(in, 1, width, height, r, c, base + c);
  }
}

void AimRow(const double* up, const double* here, const double* down,
            double* out, int width, int begin, int end) {
  auto one = [&](int c) {
    out[2 * c] = AimAt(up, here, down, width, c, 0);
    out[2 * c + 1] = AimAt(up, here, down, width, c, 1);
  };
  int c = begin;
  if (c == 0 && c < end) one(c++);
  const int inner_end = std::min(end, width - 1);
  // Each vector covers two pixels.
  if (up && down) {
    for (; c + 2 <= inner_end; c += 2) {
      const std::size_t i = 2 * static_cast<std::size_t>(c);
      __m256d v = _mm256_add_pd(_mm256_loadu_pd(up + i), _mm256_loadu_pd(down + i));
      v = _mm256_add_pd(v, _mm256_loadu_pd(here + i - 2));
      v = _mm256_add_pd(v, _mm256_loadu_pd(here + i + 2));
      _mm256_storeu_pd(out + i, v);
    }
  } else {
    const __m256d zero = _mm256_setzero_pd();
    for (; c + 2 <= inner_end; c += 2) {
      const std::size_t i = 2 * static_cast<std::size_t>(c);
      __m256d u = up ? _mm256_loadu_pd(up + i) : zero;
      __m256d d = down ? _mm256_loadu_pd(down + i) : zero;
      __m256d v = _mm256_add_pd(_mm256_add_pd(u, d), _mm256_loadu_pd(here + i - 2));
      v = _mm256_add_pd(v, _mm256_loadu_pd(here + i + 2));
      _mm256_storeu_pd(out + i, v);
    }
  }
  for (; c < end; ++c) one(c);
}

void Scale(double* values, std::size_t n, double factor) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(values + i, _mm256_mul_pd(_mm256_loadu_pd(values + i), f));
  }
  for (; i < n; ++i) values[i] *= factor;
}

void Median3x3(const std::uint8_t* in, std::uint8_t* out, int width,
               int height) {
  MedianBorder(in, out, width, height);
  auto vmin = [](__m256i a, __m256i b) { return _mm256_min_epu8(a, b); };
  auto vmax = [](__m256i a, __m256i b) { return _mm256_max_epu8(a, b); };
  auto smin = [](std::uint8_t a, std::uint8_t b) { return std::min(a, b); };
  auto smax = [](std::uint8_t a, std::uint8_t b) { return std::max(a, b); };
  auto ld = [](const std::uint8_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  };
  for (int r = 1; r < height - 1; ++r) {
    const std::uint8_t* above = in + static_cast<std::size_t>(r - 1) * width;
    const std::uint8_t* here = above + width;
    const std::uint8_t* below = here + width;
    std::uint8_t* dst = out + static_cast<std::size_t>(r) * width;
    int c = 1;
    for (; c + 32 <= width - 1; c += 32) {
      __m256i p[9] = {ld(above + c - 1), ld(above + c), ld(above + c + 1),
                      ld(here + c - 1),  ld(here + c),  ld(here + c + 1),
                      ld(below + c - 1), ld(below + c), ld(below + c + 1)};
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + c),
                          Median9(p, vmin, vmax));
    }
    for (; c < width - 1; ++c) {
      std::uint8_t p[9] = {above[c - 1], above[c], above[c + 1],
                           here[c - 1],  here[c],  here[c + 1],
                           below[c - 1], below[c], below[c + 1]};
      dst[c] = Median9(p, smin, smax);
    }
  }
}

}  // namespace

const KernelTable kAvx2Kernels = {
    Isa::kAvx2, CrossSum, AimRow, Scale, Median3x3,
};

}  // namespace impulse::kernels_internal
