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

#include "impulse/bench.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "impulse/metrics.h"
#include "impulse/random.h"

namespace impulse {
namespace {

struct Cell {
  std::size_t image;
  std::size_t spec;
  Method method;
};

GrayImage Apply(Method method, const GrayImage& noisy,
                const BenchOptions& options) {
  switch (method) {
    case Method::kMedian3x3:
      return median3x3(noisy);
    case Method::kAim:
      return denoise(noisy, options.detector, options.restoration).image;
  }
  return noisy;
}

BenchResult RunCell(const Cell& cell, const std::vector<BenchImage>& images,
                    const std::vector<NoiseSpec>& specs,
                    const BenchOptions& options) {
  BenchResult result;
  result.image_id = images[cell.image].id;
  result.spec = specs[cell.spec];
  result.method = cell.method;
  result.runs = options.runs;
  const GrayImage& original = images[cell.image].image;
  std::vector<double> scores;
  double seconds = 0.0;
  try {
    for (int run = 0; run < options.runs; ++run) {
      const Corrupted noisy =
          corrupt(original, specs[cell.spec],
                  run_seed(options.seed, cell.image, cell.spec, run));
      const auto start = std::chrono::steady_clock::now();
      const GrayImage restored = Apply(cell.method, noisy.image, options);
      const auto stop = std::chrono::steady_clock::now();
      seconds += std::chrono::duration<double>(stop - start).count();
      scores.push_back(psnr(original, restored));
    }
  } catch (const Error& e) {
    result.failed = true;
    result.error = e.what();
    return result;
  }

  double sum = 0.0;
  bool any_identical = false;
  for (double s : scores) {
    if (std::isinf(s)) any_identical = true;
    sum += s;
  }
  if (any_identical) {
    result.psnr_mean_db = std::numeric_limits<double>::infinity();
    result.psnr_std_db = 0.0;
  } else {
    const double n = static_cast<double>(scores.size());
    result.psnr_mean_db = sum / n;
    double ss = 0.0;
    for (double s : scores) ss += (s - result.psnr_mean_db) * (s - result.psnr_mean_db);
    result.psnr_std_db = scores.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  }
  result.time_mean_s = seconds / options.runs;
  return result;
}

std::string Quote(const std::string& field) {
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string Number(double v, const char* format) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kMedian3x3:
      return "median3x3";
    case Method::kAim:
      return "aim";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "median3x3" || name == "med" || name == "median") {
    return Method::kMedian3x3;
  }
  if (name == "aim") return Method::kAim;
  throw InvalidArgument("bench: unknown method '" + std::string(name) + "'");
}

std::uint64_t run_seed(std::uint64_t seed, std::size_t image_index,
                       std::size_t spec_index, int run) {
  return derive_seed(seed, {image_index, spec_index,
                            static_cast<std::uint64_t>(run)});
}

std::vector<BenchResult> bench(const std::vector<BenchImage>& images,
                               const std::vector<NoiseSpec>& specs,
                               const std::vector<Method>& methods,
                               const BenchOptions& options) {
  if (options.runs < 1) throw InvalidArgument("bench: runs must be at least 1");
  if (options.jobs < 1) throw InvalidArgument("bench: jobs must be at least 1");
  for (const NoiseSpec& spec : specs) validate(spec);

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t s = 0; s < specs.size(); ++s) {
      for (Method m : methods) cells.push_back({i, s, m});
    }
  }
  std::vector<BenchResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      results[c] = RunCell(cells[c], images, specs, options);
    }
  };
  const int jobs = std::min<int>(options.jobs, std::max<int>(1, cells.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

std::string to_csv(const std::vector<BenchResult>& results, bool timing) {
  std::string out =
      "image,spec_json,method,runs,psnr_mean_db,psnr_std_db,time_mean_s\n";
  for (const BenchResult& r : results) {
    out += r.image_id + "," + Quote(to_string(r.spec)) + "," +
           std::string(method_name(r.method)) + "," + std::to_string(r.runs) +
           ",";
    if (r.failed) {
      out += ",,\n";
      continue;
    }
    out += Number(r.psnr_mean_db, "%.4f") + "," + Number(r.psnr_std_db, "%.4f") +
           ",";
    if (timing) out += Number(r.time_mean_s, "%.6f");
    out += "\n";
  }
  return out;
}

}  // namespace impulse
