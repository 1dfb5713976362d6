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

#include "impulse/distance_transform.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "impulse/pgm.h"

namespace impulse {
namespace {

constexpr int kMaxSide = 32767;

// Lower envelope of the parabolas (j - col)^2 + g of one row. Parabola i
// wins on columns [start[i], start[i + 1]).
struct Envelope {
  std::vector<std::int32_t> col, g, row, start;
  int size = 0;

  explicit Envelope(int width)
      : col(width), g(width), row(width), start(width) {}

  // First column at which parabola (c, gc, rc), c > col[top], is preferred
  // over the top one: strictly smaller value, or equal value with a smaller
  // witness row.
  std::int32_t Overtakes(int top, std::int32_t c, std::int32_t gc,
                         std::int32_t rc) const {
    const std::int32_t a = col[top];
    const std::int32_t num = (c * c + gc) - (a * a + g[top]);
    const std::int32_t den = 2 * (c - a);
    // den > 0. |num| < 2^31 and den < 2^16, so the rounded double quotient
    // truncates to floor or floor + 1 and one correction step suffices.
    auto q = static_cast<std::int32_t>(static_cast<double>(num) /
                                       static_cast<double>(den));
    if (q * den > num) --q;
    if (q * den == num && rc < row[top]) return q;
    return q + 1;
  }

  void Push(std::int32_t c, std::int32_t gc, std::int32_t rc, int width) {
    std::int32_t s = 0;
    while (size > 0) {
      s = Overtakes(size - 1, c, gc, rc);
      if (s > start[size - 1]) break;
      --size;
      s = 0;
    }
    if (s >= width) return;
    col[size] = c;
    g[size] = gc;
    row[size] = rc;
    start[size] = s;
    ++size;
  }
};

}  // namespace

BinaryMask clean_mask(const NoiseMask& noise) {
  BinaryMask clean(noise.width(), noise.height());
  for (std::size_t i = 0; i < noise.size(); ++i) clean[i] = noise[i] ? 0 : 1;
  return clean;
}

DistanceField::DistanceField(Grid<std::int32_t> squared,
                             Grid<std::int32_t> sites)
    : squared_(std::move(squared)), sites_(std::move(sites)) {}

double DistanceField::distance(int row, int col) const {
  return std::sqrt(static_cast<double>(squared_(row, col)));
}

std::int64_t DistanceField::max_squared() const {
  return *std::max_element(squared_.values().begin(), squared_.values().end());
}

FloatField DistanceField::distances() const {
  FloatField out(width(), height());
  for (std::size_t i = 0; i < squared_.size(); ++i) {
    out[i] = std::sqrt(static_cast<double>(squared_[i]));
  }
  return out;
}

DistanceField edt(const BinaryMask& clean) {
  const int width = clean.width();
  const int height = clean.height();
  if (width > kMaxSide || height > kMaxSide) {
    throw InvalidArgument("distance transform: sides are limited to 32767");
  }
  if (std::none_of(clean.values().begin(), clean.values().end(),
                   [](std::uint8_t v) { return v != 0; })) {
    throw NoCleanPixels("distance transform: mask has no clean pixels");
  }

  // Column pass, row-major: nearest clean row at or above each pixel, -1 if
  // none. Kept in the output grid, which the bottom-up pass overwrites one
  // row at a time after reading it.
  Grid<std::int32_t> squared(width, height);
  {
    std::vector<std::int32_t> last(width, -1);
    for (int r = 0; r < height; ++r) {
      const std::uint8_t* m = &clean(r, 0);
      std::int32_t* out = &squared(r, 0);
      for (int c = 0; c < width; ++c) {
        last[c] = m[c] ? r : last[c];
        out[c] = last[c];
      }
    }
  }

  // Bottom-up: resolve against the nearest clean row below (ties go to the
  // row above), then the row pass on the finished row.
  Grid<std::int32_t> sites(width, height);
  std::vector<std::int32_t> below(width, -1);
  std::vector<std::int32_t> nearest(width);
  Envelope env(width);
  for (int r = height - 1; r >= 0; --r) {
    const std::uint8_t* m = &clean(r, 0);
    std::int32_t* sq = &squared(r, 0);
    for (int c = 0; c < width; ++c) {
      below[c] = m[c] ? r : below[c];
      const std::int32_t a = sq[c];
      const std::int32_t b = below[c];
      const bool take_below = b >= 0 && (a < 0 || b - r < r - a);
      nearest[c] = take_below ? b : a;
    }

    env.size = 0;
    for (int c = 0; c < width; ++c) {
      const std::int32_t n = nearest[c];
      if (n < 0) continue;
      env.Push(c, (r - n) * (r - n), n, width);
    }
    std::int32_t* site = &sites(r, 0);
    for (int k = 0; k < env.size; ++k) {
      const int end = k + 1 < env.size ? env.start[k + 1] : width;
      const std::int32_t pc = env.col[k];
      const std::int32_t pg = env.g[k];
      const std::int32_t ps = env.row[k] * width + pc;
      for (int c = env.start[k]; c < end; ++c) {
        sq[c] = (c - pc) * (c - pc) + pg;
        site[c] = ps;
      }
    }
  }
  return DistanceField(std::move(squared), std::move(sites));
}

std::vector<std::uint8_t> distance_pgm(const DistanceField& field) {
  Grid<std::uint16_t> out(field.width(), field.height());
  const FloatField d = field.distances();
  for (std::size_t i = 0; i < d.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(std::min(std::floor(d[i] + 0.5), 65535.0));
  }
  return save_pgm16(out);
}

}  // namespace impulse
