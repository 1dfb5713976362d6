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

#ifndef IMPULSE_BENCH_H_
#define IMPULSE_BENCH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/aim_filter.h"
#include "impulse/detector.h"
#include "impulse/image.h"
#include "impulse/noise.h"

namespace impulse {

enum class Method { kMedian3x3, kAim };

std::string_view method_name(Method method);
// Accepts "median3x3" (or "med") and "aim".
Method parse_method(std::string_view name);

struct BenchImage {
  std::string id;
  GrayImage image;
};

struct BenchOptions {
  int runs = 20;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool timing = true;
  DetectorConfig detector;
  RestorationConfig restoration;
};

struct BenchResult {
  std::string image_id;
  NoiseSpec spec;
  Method method = Method::kAim;
  int runs = 0;
  double psnr_mean_db = 0.0;
  double psnr_std_db = 0.0;  // sample standard deviation, 0 for one run
  double time_mean_s = 0.0;
  bool failed = false;
  std::string error;
};

// Seed of one corruption: derive_seed(seed, {image, spec, run}). Methods in
// the same cell see the same noise patterns.
std::uint64_t run_seed(std::uint64_t seed, std::size_t image_index,
                       std::size_t spec_index, int run);

// Runs every (image, spec, method) cell `runs` times. A failing cell is
// reported with failed = true instead of aborting the sweep. If any run of a
// cell restores the image exactly, its mean is +infinity and its stddev 0.
std::vector<BenchResult> bench(const std::vector<BenchImage>& images,
                               const std::vector<NoiseSpec>& specs,
                               const std::vector<Method>& methods,
                               const BenchOptions& options);

// Header: image,spec_json,method,runs,psnr_mean_db,psnr_std_db,time_mean_s.
// The time column is left empty when timing is off, and failed cells carry
// empty metric columns.
std::string to_csv(const std::vector<BenchResult>& results, bool timing);

}  // namespace impulse

#endif  // IMPULSE_BENCH_H_
