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

#include "impulse/image.h"

#include <cmath>
#include <numeric>

#include "impulse/kernels.h"

namespace impulse {

std::uint64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

FloatField convolve_cross(const FloatField& f) {
  FloatField out(f.width(), f.height());
  active_kernels().cross_sum(f.data(), out.data(), f.width(), f.height());
  return out;
}

Histogram histogram_all(const GrayImage& img) {
  Histogram h;
  for (std::uint8_t v : img.values()) ++h.counts[v];
  return h;
}

Histogram histogram_positive(const GrayImage& img) {
  Histogram h = histogram_all(img);
  h.counts[0] = 0;
  return h;
}

double entropy(const Histogram& h) {
  const std::uint64_t total = h.total();
  if (total == 0) return 0.0;
  double e = 0.0;
  for (std::uint64_t c : h.counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / static_cast<double>(total);
    e -= p * std::log2(p);
  }
  // A single occupied bin gives -1*log2(1) = -0.0.
  return e > 0.0 ? e : 0.0;
}

FloatField to_field(const GrayImage& img) {
  FloatField f(img.width(), img.height());
  for (std::size_t i = 0; i < img.size(); ++i) f[i] = img[i];
  return f;
}

std::uint8_t quantize(double v) {
  double r = std::floor(v + 0.5);
  if (!(r > 0.0)) return 0;
  if (r >= 255.0) return 255;
  return static_cast<std::uint8_t>(r);
}

GrayImage quantize(const FloatField& f) {
  GrayImage img(f.width(), f.height());
  for (std::size_t i = 0; i < f.size(); ++i) img[i] = quantize(f[i]);
  return img;
}

}  // namespace impulse
