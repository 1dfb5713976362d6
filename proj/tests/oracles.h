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

#ifndef IMPULSE_TESTS_ORACLES_H_
#define IMPULSE_TESTS_ORACLES_H_

// Exhaustive reference implementations used to check the fast paths.

#include <cstdint>
#include <limits>
#include <vector>

#include "impulse/distance_transform.h"
#include "impulse/image.h"

namespace impulse::testing {

struct BruteForceDistance {
  Grid<std::int64_t> squared;
  Grid<Site> sites;  // smallest row, then smallest column, among the nearest
};

// All-pairs nearest clean pixel scan. Pixels are visited in row-major order
// and only a strictly closer candidate replaces the current one, which gives
// the (row, col) lexicographic tie-break.
inline BruteForceDistance brute_force_edt(const BinaryMask& clean) {
  const int w = clean.width();
  const int h = clean.height();
  std::vector<Site> clean_sites;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (clean(r, c)) clean_sites.push_back({r, c});
    }
  }
  BruteForceDistance out{Grid<std::int64_t>(w, h), Grid<Site>(w, h)};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      Site best_site;
      for (const Site& s : clean_sites) {
        const std::int64_t dr = r - s.row;
        const std::int64_t dc = c - s.col;
        const std::int64_t d = dr * dr + dc * dc;
        if (d < best) {
          best = d;
          best_site = s;
        }
      }
      out.squared(r, c) = best;
      out.sites(r, c) = best_site;
    }
  }
  return out;
}

// Every clean pixel at the minimum distance from (row, col).
inline std::vector<Site> nearest_clean_set(const BinaryMask& clean, int row,
                                           int col) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Site> out;
  for (int r = 0; r < clean.height(); ++r) {
    for (int c = 0; c < clean.width(); ++c) {
      if (!clean(r, c)) continue;
      const std::int64_t dr = r - row;
      const std::int64_t dc = c - col;
      const std::int64_t d = dr * dr + dc * dc;
      if (d < best) {
        best = d;
        out.clear();
      }
      if (d == best) out.push_back({r, c});
    }
  }
  return out;
}

// Direct 4-neighbour sum with zero padding.
inline FloatField naive_cross(const FloatField& f) {
  FloatField out(f.width(), f.height());
  for (int r = 0; r < f.height(); ++r) {
    for (int c = 0; c < f.width(); ++c) {
      double up = r > 0 ? f(r - 1, c) : 0.0;
      double down = r + 1 < f.height() ? f(r + 1, c) : 0.0;
      double left = c > 0 ? f(r, c - 1) : 0.0;
      double right = c + 1 < f.width() ? f(r, c + 1) : 0.0;
      out(r, c) = ((up + down) + left) + right;
    }
  }
  return out;
}

}  // namespace impulse::testing

#endif  // IMPULSE_TESTS_ORACLES_H_
