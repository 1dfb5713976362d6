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

#include "impulse/bench.h"
#include "impulse/noise.h"
#include "test_util.h"

namespace impulse {
namespace {

std::vector<BenchImage> SmallImages() {
  Rng rng(8);
  GrayImage smooth(40, 30);
  for (int r = 0; r < 30; ++r) {
    for (int c = 0; c < 40; ++c) smooth(r, c) = static_cast<std::uint8_t>(40 + 3 * r + 2 * c);
  }
  return {{"smooth", smooth}, {"random", testing::random_image(rng, 25, 25)}};
}

TEST_CASE("csv is deterministic for a seed and independent of jobs") {
  BenchOptions opt;
  opt.runs = 3;
  opt.seed = 42;
  opt.timing = false;
  const auto images = SmallImages();
  const std::vector<NoiseSpec> specs = {spn(0.5), gfn_type2(0.3)};
  const std::vector<Method> methods = {Method::kMedian3x3, Method::kAim};
  const std::string a = to_csv(bench(images, specs, methods, opt), false);
  const std::string b = to_csv(bench(images, specs, methods, opt), false);
  opt.jobs = 3;
  const std::string c = to_csv(bench(images, specs, methods, opt), false);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.rfind("image,spec_json,method,runs,psnr_mean_db,psnr_std_db,time_mean_s\n", 0) == 0);
  opt.seed = 43;
  CHECK(to_csv(bench(images, specs, methods, opt), false) != a);
}

TEST_CASE("zero density gives the identical-image result for both methods") {
  BenchOptions opt;
  opt.runs = 1;
  const GrayImage flat(12, 12, 90);
  const auto results = bench({{"flat", flat}}, {spn(0.0)},
                             {Method::kMedian3x3, Method::kAim}, opt);
  REQUIRE(results.size() == 2);
  for (const BenchResult& r : results) {
    CHECK_FALSE(r.failed);
    CHECK(std::isinf(r.psnr_mean_db));
    CHECK(r.psnr_std_db == 0.0);
  }
}

TEST_CASE("failures are reported per cell") {
  BenchOptions opt;
  opt.runs = 2;
  // Every pixel becomes pepper: nothing clean for the AIM filter to start from.
  const auto results = bench({{"flat", GrayImage(6, 6, 90)}}, {spn(0.0, 1.0)},
                             {Method::kMedian3x3, Method::kAim}, opt);
  REQUIRE(results.size() == 2);
  CHECK_FALSE(results[0].failed);
  CHECK(results[1].failed);
  CHECK_FALSE(results[1].error.empty());
  const std::string csv = to_csv(results, true);
  CHECK(csv.find("aim,2,,,\n") != std::string::npos);
}

TEST_CASE("run seeds are distinct across runs and shared across methods") {
  CHECK(run_seed(1, 0, 0, 0) != run_seed(1, 0, 0, 1));
  CHECK(run_seed(1, 0, 0, 0) != run_seed(1, 1, 0, 0));
  CHECK(run_seed(1, 0, 0, 0) != run_seed(1, 0, 1, 0));
  CHECK(run_seed(1, 0, 0, 0) == run_seed(1, 0, 0, 0));
}

TEST_CASE("method names") {
  CHECK(parse_method("aim") == Method::kAim);
  CHECK(parse_method("med") == Method::kMedian3x3);
  CHECK(method_name(Method::kMedian3x3) == "median3x3");
  CHECK_THROWS_AS(parse_method("wiener"), InvalidArgument);
}

}  // namespace
}  // namespace impulse
