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

#include <algorithm>
#include <cmath>

#include "impulse/aim_filter.h"
#include "impulse/metrics.h"
#include "impulse/noise.h"
#include "oracles.h"
#include "test_util.h"

namespace impulse {
namespace {

struct Instance {
  GrayImage image;
  NoiseMask mask;
};

Instance RandomInstance(Rng& rng, int w, int h, double noise_density) {
  Instance in{testing::random_image(rng, w, h), NoiseMask(w, h, 0)};
  for (auto& v : in.mask.values()) v = rng.uniform() < noise_density ? 1 : 0;
  in.mask[rng.below(static_cast<std::uint32_t>(in.mask.size()))] = 0;
  return in;
}

TEST_CASE("nothing to restore") {
  Rng rng(1);
  const GrayImage img = testing::random_image(rng, 9, 7);
  const NoiseMask none(9, 7, 0);
  AimSolver solver(img, none);
  CHECK(solver.iterations() == 0);
  CHECK(aim_restore(img, none) == img);
}

TEST_CASE("iteration count is the ceiling of twice the largest distance") {
  auto count = [](int w, int h, std::vector<std::uint8_t> noisy) {
    return iteration_count(edt(clean_mask(NoiseMask(w, h, std::move(noisy)))));
  };
  CHECK(count(3, 1, {0, 1, 0}) == 2);          // d = 1
  CHECK(count(3, 3, {0, 1, 1, 1, 1, 1, 1, 1, 1}) == 6);  // d = 2 sqrt 2
  CHECK(count(2, 2, {0, 1, 1, 1}) == 3);       // d = sqrt 2
}

TEST_CASE("nearest fill picks the smallest row then column on ties") {
  const GrayImage img(3, 1, {10, 200, 30});
  const NoiseMask mask(3, 1, {0, 1, 0});
  const DistanceField dt = edt(clean_mask(mask));
  const FloatField fill = init_nearest(img, mask, dt);
  CHECK(fill[1] == 10.0);
  CHECK(fill[0] == 10.0);
  CHECK(fill[2] == 30.0);
  // Both neighbours are clean and frozen, so the result is their mean.
  CHECK(aim_restore(img, mask)[1] == 20);
}

TEST_CASE("nearest fill comes from an equidistant clean pixel") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance in = RandomInstance(rng, 32, 32, 0.3 + 0.65 * rng.uniform());
    const BinaryMask clean = clean_mask(in.mask);
    const FloatField fill = init_nearest(in.image, in.mask, edt(clean));
    for (int r = 0; r < 32; ++r) {
      for (int c = 0; c < 32; ++c) {
        if (!in.mask(r, c)) {
          CHECK(fill(r, c) == in.image(r, c));
          continue;
        }
        bool found = false;
        for (const Site& s : testing::nearest_clean_set(clean, r, c)) {
          found = found || fill(r, c) == in.image(s.row, s.col);
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("single noisy pixel becomes the rounded neighbour mean") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    GrayImage img = testing::random_image(rng, 5, 5);
    NoiseMask mask(5, 5, 0);
    mask(2, 2) = 1;
    const int sum = img(1, 2) + img(3, 2) + img(2, 1) + img(2, 3);
    img(2, 2) = static_cast<std::uint8_t>(sum / 4 >= 128 ? 0 : 255);
    AimSolver solver(img, mask);
    CHECK(solver.iterations() == 2);
    solver.run();
    const GrayImage out = solver.finish({});
    CHECK(out(2, 2) == quantize(sum / 4.0));
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (i != 12) CHECK(out[i] == img[i]);
    }
  }
}

TEST_CASE("snap-back uses a strict comparison") {
  const NoiseMask mask(3, 1, {0, 1, 0});
  CHECK(aim_restore(GrayImage(3, 1, {100, 105, 100}), mask)[1] == 105);
  CHECK(aim_restore(GrayImage(3, 1, {100, 108, 100}), mask)[1] == 100);
  CHECK(aim_restore(GrayImage(3, 1, {100, 107, 100}), mask)[1] == 107);
}

TEST_CASE("each pixel moves exactly in iterations 1..floor(2d)") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance in = RandomInstance(rng, 24, 20, 0.6 + 0.39 * rng.uniform());
    AimSolver solver(in.image, in.mask);
    const DistanceField& dt = solver.distance();
    RestorationState prev = solver.state();
    while (!solver.done()) {
      solver.step();
      const RestorationState cur = solver.state();
      const std::int64_t k = cur.k;
      const FloatField ci = testing::naive_cross(prev.image_field);
      const FloatField cm = testing::naive_cross(prev.mask_field);
      for (std::size_t i = 0; i < in.image.size(); ++i) {
        const bool moves = k * k <= 4 * dt.squared()[i];
        if (moves) {
          REQUIRE(cur.image_field[i] == ci[i]);
          REQUIRE(cur.mask_field[i] == cm[i]);
        } else {
          REQUIRE(cur.image_field[i] == prev.image_field[i]);
          REQUIRE(cur.mask_field[i] == prev.mask_field[i]);
        }
        REQUIRE(cur.mask_field[i] > 0.0);
        if (!in.mask[i]) {
          REQUIRE(cur.image_field[i] / cur.mask_field[i] == in.image[i]);
        }
      }
      prev = cur;
    }
  }
}

TEST_CASE("deferred division is scale invariant") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance in = RandomInstance(rng, 20 + static_cast<int>(rng.below(20)),
                                       20 + static_cast<int>(rng.below(20)),
                                       0.5 + 0.49 * rng.uniform());
    AimSolver plain(in.image, in.mask);
    plain.run();
    const FloatField expected = plain.estimate();

    AimSolver scaled(in.image, in.mask);
    const int at = static_cast<int>(rng.below(static_cast<std::uint32_t>(scaled.iterations()) + 1));
    for (int k = 0; k < at; ++k) scaled.step();
    scaled.rescale(std::exp(rng.uniform() * 200.0 - 100.0));
    scaled.run();
    const FloatField got = scaled.estimate();
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(std::fabs(got[i] - expected[i]) <= 1e-9 * std::fabs(expected[i]) + 1e-12);
    }
  }
}

TEST_CASE("rescale rejects non-positive factors") {
  const GrayImage img(3, 1, {1, 2, 3});
  AimSolver solver(img, NoiseMask(3, 1, {0, 1, 0}));
  CHECK_THROWS_AS(solver.rescale(0.0), InvalidArgument);
  CHECK_THROWS_AS(solver.rescale(-2.0), InvalidArgument);
  CHECK_THROWS_AS(solver.rescale(INFINITY), InvalidArgument);
}

TEST_CASE("estimates stay within the clean value range") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance in = RandomInstance(rng, 30, 30, 0.5 + 0.45 * rng.uniform());
    AimSolver solver(in.image, in.mask);
    solver.run();
    const FloatField est = solver.estimate();
    double lo = 255, hi = 0;
    for (std::size_t i = 0; i < in.image.size(); ++i) {
      if (in.mask[i]) continue;
      lo = std::min<double>(lo, in.image[i]);
      hi = std::max<double>(hi, in.image[i]);
    }
    for (std::size_t i = 0; i < est.size(); ++i) {
      CHECK(est[i] >= lo - 1e-9);
      CHECK(est[i] <= hi + 1e-9);
    }
    const GrayImage out = solver.finish({});
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!in.mask[i]) CHECK(out[i] == in.image[i]);
    }
  }
}

TEST_CASE("deep noise survives renormalisation") {
  // One clean pixel in a corner: NI is far beyond the 2^512 bound.
  GrayImage img(300, 300, 0);
  NoiseMask mask(300, 300, 1);
  img(0, 0) = 77;
  mask(0, 0) = 0;
  AimSolver solver(img, mask);
  CHECK(solver.iterations() == 846);
  solver.run();
  const RestorationState s = solver.state();
  for (std::size_t i = 0; i < s.mask_field.size(); ++i) {
    REQUIRE(std::isfinite(s.image_field[i]));
    REQUIRE(std::isfinite(s.mask_field[i]));
  }
  const GrayImage out = solver.finish({});
  for (auto v : out.values()) REQUIRE(v == 77);
}

TEST_CASE("all pixels noisy is unrestorable") {
  CHECK_THROWS_AS(aim_restore(GrayImage(4, 4, 9), NoiseMask(4, 4, 1)),
                  UnrestorableInput);
  CHECK_THROWS_AS(aim_restore(GrayImage(4, 4, 9), NoiseMask(3, 4, 0)),
                  InvalidArgument);
}

TEST_CASE("determinism") {
  const Corrupted c = corrupt(testing::lena(), spn(0.6), 4);
  const Denoised a = denoise(c.image);
  const Denoised b = denoise(c.image);
  CHECK(a.image == b.image);
}

TEST_CASE("clean natural image is returned unchanged") {
  CHECK(denoise(testing::lena()).image == testing::lena());
}

TEST_CASE("80 percent salt and pepper on a natural image") {
  const GrayImage& img = testing::lena();
  const Corrupted c = corrupt(img, spn(0.8), 80);
  const double db = psnr(img, denoise(c.image).image);
  CHECK(db == doctest::Approx(29.82).epsilon(1.0 / 29.82));
}

}  // namespace
}  // namespace impulse
