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

#include "cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "impulse/aim_filter.h"
#include "impulse/bench.h"
#include "impulse/detector.h"
#include "impulse/distance_transform.h"
#include "impulse/metrics.h"
#include "impulse/noise.h"
#include "impulse/pgm.h"
#include "impulse/random.h"

namespace impulse::cli {
namespace {

constexpr const char* kFooter = R"(Thresholds default to 6 bits (entropy) and 8 grey-levels (correlation).

Exit codes:
  0  success
  1  unexpected failure
  2  invalid arguments
  3  file cannot be read or written
  4  malformed PGM
  5  malformed noise spec or JSON
  6  unrestorable input: every pixel is flagged as noise
  7  the detector removed every pixel before reaching the entropy threshold)";

// Noise flags shared by corrupt and bench. Every flag may repeat for bench.
struct NoiseFlags {
  std::vector<double> spn;
  std::vector<double> spn_split;  // pairs: salt, pepper
  std::vector<double> frin;       // triples: m, p_low, p_high
  std::vector<std::string> gfn_files;
  std::vector<double> gfn_type1;
  std::vector<double> gfn_type2;
  std::vector<std::string> spec_json;

  void Register(CLI::App* app) {
    app->add_option("--spn", spn, "Salt-and-pepper density P, split evenly");
    app->add_option("--spn-split", spn_split, "Salt and pepper densities")
        ->expected(2);
    app->add_option("--frin", frin,
                    "Fixed-range noise: range length M, low density P1, high "
                    "density P2")
        ->expected(3);
    app->add_option("--gfn", gfn_files, "General fixed-valued noise spec file");
    app->add_option("--gfn-type1", gfn_type1,
                    "20 random impulse values with total density P");
    app->add_option("--gfn-type2", gfn_type2,
                    "All even impulse values with total density P");
    app->add_option("--spec", spec_json, "Inline noise spec JSON");
  }

  std::vector<NoiseSpec> Build(std::uint64_t seed) const {
    std::vector<NoiseSpec> specs;
    for (double p : spn) specs.push_back(impulse::spn(p));
    for (std::size_t i = 0; i + 1 < spn_split.size(); i += 2) {
      specs.push_back(impulse::spn(spn_split[i], spn_split[i + 1]));
    }
    for (std::size_t i = 0; i + 2 < frin.size(); i += 3) {
      const double m = frin[i];
      if (m != static_cast<int>(m)) {
        throw SpecError("--frin: range length must be an integer");
      }
      specs.push_back(impulse::frin(static_cast<int>(m), frin[i + 1], frin[i + 2]));
    }
    for (const std::string& path : gfn_files) {
      const std::vector<std::uint8_t> bytes = read_bytes(path);
      specs.push_back(parse_spec(std::string(bytes.begin(), bytes.end())));
    }
    for (std::size_t i = 0; i < gfn_type1.size(); ++i) {
      specs.push_back(impulse::gfn_type1(gfn_type1[i], derive_seed(seed, {0x7931, i})));
    }
    for (double p : gfn_type2) specs.push_back(impulse::gfn_type2(p));
    for (const std::string& text : spec_json) specs.push_back(parse_spec(text));
    for (const NoiseSpec& s : specs) validate(s);
    return specs;
  }
};

struct Thresholds {
  DetectorConfig detector;
  RestorationConfig restoration;

  void Register(CLI::App* app) {
    app->add_option("--entropy-threshold", detector.entropy_threshold,
                    "Detector stopping entropy in bits")
        ->capture_default_str();
    app->add_option("--correlation-threshold", detector.correlation_threshold,
                    "Detail and snap-back threshold in grey-levels")
        ->capture_default_str();
    app->add_option("--max-iterations", detector.max_iterations,
                    "Detector iteration cap")
        ->capture_default_str();
  }

  void Sync() {
    restoration.correlation_threshold = detector.correlation_threshold;
    validate(detector);
  }
};

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed,
                          std::ostream& err) {
  if (seed) return *seed;
  const std::uint64_t s = random_seed();
  err << "seed: " << s << "\n";
  return s;
}

GrayImage MaskImage(const NoiseMask& mask) {
  GrayImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask[i] ? 255 : 0;
  return out;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  write_bytes(path, std::span<const std::uint8_t>(
                        reinterpret_cast<const std::uint8_t*>(text.data()),
                        text.size()));
}

std::string ImageId(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Impulse-noise detection and adaptive iterative mean restoration"};
  app.footer(kFooter);
  app.require_subcommand(1);

  // corrupt
  NoiseFlags corrupt_noise;
  std::optional<std::uint64_t> corrupt_seed;
  std::string corrupt_in, corrupt_out, corrupt_mask;
  CLI::App* corrupt_cmd =
      app.add_subcommand("corrupt", "Add synthetic impulse noise to a PGM");
  corrupt_noise.Register(corrupt_cmd);
  corrupt_cmd->add_option("--seed", corrupt_seed, "Random seed");
  corrupt_cmd->add_option("input", corrupt_in, "Clean PGM")->required();
  corrupt_cmd->add_option("output", corrupt_out, "Corrupted PGM")->required();
  corrupt_cmd->add_option("mask", corrupt_mask, "Ground-truth mask PGM (255 = corrupted)")
      ->required();
  corrupt_cmd->footer(kFooter);

  // detect
  Thresholds detect_thresholds;
  std::string detect_in, detect_json, detect_mask;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Find impulse grey-values in a PGM");
  detect_thresholds.Register(detect_cmd);
  detect_cmd->add_option("input", detect_in, "Received PGM")->required();
  detect_cmd->add_option("result", detect_json, "Detection result JSON")->required();
  detect_cmd->add_option("mask", detect_mask, "Noise mask PGM (255 = noisy)")->required();
  detect_cmd->footer(kFooter);

  // denoise
  Thresholds denoise_thresholds;
  std::string denoise_in, denoise_out, denoise_json;
  CLI::App* denoise_cmd =
      app.add_subcommand("denoise", "Detect impulse values and restore a PGM");
  denoise_thresholds.Register(denoise_cmd);
  denoise_cmd->add_option("input", denoise_in, "Received PGM")->required();
  denoise_cmd->add_option("output", denoise_out, "Restored PGM")->required();
  denoise_cmd->add_option("result", denoise_json, "Detection result JSON")->required();
  denoise_cmd->footer(kFooter);

  // eval
  std::string eval_a, eval_b;
  CLI::App* eval_cmd = app.add_subcommand("eval", "PSNR between two PGMs");
  eval_cmd->add_option("reference", eval_a, "Reference PGM")->required();
  eval_cmd->add_option("test", eval_b, "Test PGM")->required();
  eval_cmd->footer(kFooter);

  // bench
  NoiseFlags bench_noise;
  Thresholds bench_thresholds;
  std::vector<std::string> bench_images;
  std::vector<std::string> bench_methods{"median3x3", "aim"};
  std::optional<std::uint64_t> bench_seed;
  int bench_runs = 20;
  int bench_jobs = 1;
  bool bench_no_timing = false;
  std::string bench_out;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Repeated corrupt/restore sweep written as CSV");
  bench_noise.Register(bench_cmd);
  bench_thresholds.Register(bench_cmd);
  bench_cmd->add_option("--image", bench_images, "Clean PGM (repeatable)")->required();
  bench_cmd->add_option("--methods", bench_methods, "median3x3 and/or aim")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench_runs, "Runs per cell")->capture_default_str();
  bench_cmd->add_option("--jobs", bench_jobs, "Cells evaluated in parallel")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Base random seed");
  bench_cmd->add_flag("--no-timing", bench_no_timing,
                      "Leave the time column empty so the CSV is reproducible");
  bench_cmd->add_option("--out", bench_out, "CSV path (default: stdout)");
  bench_cmd->footer(kFooter);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (corrupt_cmd->parsed()) {
      const std::uint64_t seed = ResolveSeed(corrupt_seed, err);
      const std::vector<NoiseSpec> specs = corrupt_noise.Build(seed);
      if (specs.size() != 1) {
        err << "error: corrupt needs exactly one noise flag\n";
        return kUsage;
      }
      const GrayImage img = read_pgm_file(corrupt_in);
      const Corrupted noisy = corrupt(img, specs.front(), seed);
      write_pgm_file(corrupt_out, noisy.image);
      write_pgm_file(corrupt_mask, MaskImage(noisy.mask));
    } else if (detect_cmd->parsed()) {
      detect_thresholds.Sync();
      const GrayImage img = read_pgm_file(detect_in);
      const DetectionResult result = detect(img, detect_thresholds.detector);
      WriteText(detect_json, to_json(result).dump(2) + "\n");
      write_pgm_file(detect_mask, MaskImage(result.noise_mask));
    } else if (denoise_cmd->parsed()) {
      denoise_thresholds.Sync();
      const GrayImage img = read_pgm_file(denoise_in);
      const Denoised result = denoise(img, denoise_thresholds.detector,
                                      denoise_thresholds.restoration);
      write_pgm_file(denoise_out, result.image);
      WriteText(denoise_json, to_json(result.detection).dump(2) + "\n");
    } else if (eval_cmd->parsed()) {
      const double db = psnr(read_pgm_file(eval_a), read_pgm_file(eval_b));
      if (std::isinf(db)) {
        out << "psnr_db: inf (identical)\n";
      } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "psnr_db: %.4f\n", db);
        out << buf;
      }
    } else if (bench_cmd->parsed()) {
      bench_thresholds.Sync();
      const std::uint64_t seed = ResolveSeed(bench_seed, err);
      const std::vector<NoiseSpec> specs = bench_noise.Build(seed);
      if (specs.empty()) {
        err << "error: bench needs at least one noise flag\n";
        return kUsage;
      }
      std::vector<BenchImage> images;
      for (const std::string& path : bench_images) {
        images.push_back({ImageId(path), read_pgm_file(path)});
      }
      std::vector<Method> methods;
      for (const std::string& m : bench_methods) methods.push_back(parse_method(m));
      BenchOptions options;
      options.runs = bench_runs;
      options.jobs = bench_jobs;
      options.seed = seed;
      options.timing = !bench_no_timing;
      options.detector = bench_thresholds.detector;
      options.restoration = bench_thresholds.restoration;
      const std::vector<BenchResult> results =
          bench(images, specs, methods, options);
      for (const BenchResult& r : results) {
        if (r.failed) {
          err << "warning: " << r.image_id << " " << method_name(r.method)
              << " failed: " << r.error << "\n";
        }
      }
      const std::string csv = to_csv(results, options.timing);
      if (bench_out.empty()) {
        out << csv;
      } else {
        WriteText(bench_out, csv);
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const PgmError& e) {
    err << "error: " << e.what() << "\n";
    return kBadImage;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kBadSpec;
  } catch (const UnrestorableInput& e) {
    err << "error: " << e.what() << "\n";
    return kUnrestorable;
  } catch (const FullyNoise& e) {
    err << "error: " << e.what() << "\n";
    return kFullyNoise;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace impulse::cli
