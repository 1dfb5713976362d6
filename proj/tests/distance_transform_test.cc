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

#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "impulse/distance_transform.h"
#include "oracles.h"
#include "test_util.h"

namespace impulse {
namespace {

BinaryMask RandomMask(Rng& rng, int w, int h, double clean_density) {
  BinaryMask m(w, h, 0);
  for (auto& v : m.values()) v = rng.uniform() < clean_density ? 1 : 0;
  if (std::find(m.values().begin(), m.values().end(), 1) == m.values().end()) {
    m[rng.below(static_cast<std::uint32_t>(m.size()))] = 1;
  }
  return m;
}

void CheckAgainstOracle(const BinaryMask& mask) {
  const DistanceField dt = edt(mask);
  const testing::BruteForceDistance ref = testing::brute_force_edt(mask);
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      REQUIRE(dt.squared(r, c) == ref.squared(r, c));
      REQUIRE(dt.site(r, c) == ref.sites(r, c));
    }
  }
}

TEST_CASE("brute-force oracle agreement on 32x32 masks") {
  Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const double density = 0.05 + 0.9 * rng.uniform();
    CheckAgainstOracle(RandomMask(rng, 32, 32, density));
  }
}

TEST_CASE("brute-force oracle agreement on odd shapes and sparse masks") {
  Rng rng(31);
  const int shapes[][2] = {{1, 1}, {1, 17}, {23, 1}, {2, 9}, {45, 7}, {13, 40}};
  for (const auto& s : shapes) {
    for (double density : {0.01, 0.2, 0.7}) {
      CheckAgainstOracle(RandomMask(rng, s[0], s[1], density));
    }
  }
}

TEST_CASE("all clean") {
  const DistanceField dt = edt(BinaryMask(6, 4, 1));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 6; ++c) {
      CHECK(dt.squared(r, c) == 0);
      CHECK(dt.site(r, c) == Site{r, c});
    }
  }
  CHECK(dt.max_squared() == 0);
}

TEST_CASE("single clean corner") {
  BinaryMask m(3, 3, 0);
  m(0, 0) = 1;
  const DistanceField dt = edt(m);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(dt.squared(r, c) == r * r + c * c);
      CHECK(dt.distance(r, c) == doctest::Approx(std::sqrt(r * r + c * c)));
    }
  }
  CHECK(dt.distance(2, 2) == doctest::Approx(2.8284271));
}

TEST_CASE("no clean pixels") {
  CHECK_THROWS_AS(edt(BinaryMask(4, 4, 0)), NoCleanPixels);
}

TEST_CASE("distance is 1-Lipschitz and transposes exactly") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 5 + static_cast<int>(rng.below(30));
    const int h = 5 + static_cast<int>(rng.below(30));
    const BinaryMask m = RandomMask(rng, w, h, 0.02 + 0.5 * rng.uniform());
    const DistanceField dt = edt(m);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        CHECK((dt.squared(r, c) == 0) == (m(r, c) == 1));
        if (c + 1 < w) CHECK(std::fabs(dt.distance(r, c) - dt.distance(r, c + 1)) <= 1.0 + 1e-12);
        if (r + 1 < h) CHECK(std::fabs(dt.distance(r, c) - dt.distance(r + 1, c)) <= 1.0 + 1e-12);
      }
    }

    BinaryMask t(h, w);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) t(c, r) = m(r, c);
    }
    const DistanceField dtt = edt(t);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) CHECK(dtt.squared(c, r) == dt.squared(r, c));
    }
  }
}

TEST_CASE("clean mask inverts the noise mask") {
  const NoiseMask noise(2, 2, {1, 0, 0, 1});
  const BinaryMask clean = clean_mask(noise);
  CHECK(clean == BinaryMask(2, 2, {0, 1, 1, 0}));
}

}  // namespace
}  // namespace impulse
