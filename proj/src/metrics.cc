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

#include "impulse/metrics.h"

#include <cmath>
#include <cstdint>
#include <limits>

#include "impulse/kernels.h"

namespace impulse {

double psnr(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw InvalidArgument("psnr: images differ in shape");
  }
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sse) / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

GrayImage median3x3(const GrayImage& img) {
  GrayImage out(img.width(), img.height());
  active_kernels().median3x3(img.data(), out.data(), img.width(), img.height());
  return out;
}

}  // namespace impulse
