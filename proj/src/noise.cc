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

#include "impulse/noise.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "impulse/random.h"

namespace impulse {
namespace {

constexpr double kDensitySlack = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckProbability(double p, const char* name) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kDensitySlack) {
    throw SpecError(std::string("noise spec: ") + name + " = " +
                    std::to_string(p) + " is not in [0, 1]");
  }
}

// A contiguous run of `count` grey-values starting at `first`, chosen with
// probability `p`.
struct Band {
  double p;
  int first;
  int count;
};

std::vector<Band> Bands(const NoiseSpec& spec) {
  return std::visit(
      Overloaded{
          [](const SaltPepper& s) {
            return std::vector<Band>{{s.p_pepper, 0, 1}, {s.p_salt, 255, 1}};
          },
          [](const FixedRange& f) {
            return std::vector<Band>{{f.p_low, 0, f.m},
                                     {f.p_high, 256 - f.m, f.m}};
          },
          [](const GeneralFixed& g) {
            std::vector<Band> bands;
            for (std::size_t i = 0; i < g.values.size(); ++i) {
              bands.push_back({g.probs[i], g.values[i], 1});
            }
            return bands;
          },
      },
      spec);
}

double JsonProbability(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw SpecError(std::string("noise spec: '") + key + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

NoiseSpec spn(double density) {
  return SaltPepper{density / 2.0, density / 2.0};
}

NoiseSpec spn(double p_salt, double p_pepper) {
  return SaltPepper{p_salt, p_pepper};
}

NoiseSpec frin(int m, double p_low, double p_high) {
  return FixedRange{m, p_low, p_high};
}

NoiseSpec gfn(std::vector<std::uint8_t> values, std::vector<double> probs) {
  return GeneralFixed{std::move(values), std::move(probs)};
}

NoiseSpec gfn_uniform(std::vector<std::uint8_t> values, double density) {
  if (values.empty()) throw SpecError("noise spec: empty GFN value set");
  std::vector<double> probs(values.size(),
                            density / static_cast<double>(values.size()));
  return GeneralFixed{std::move(values), std::move(probs)};
}

NoiseSpec gfn_type2(double density) {
  std::vector<std::uint8_t> values;
  for (int v = 0; v <= 254; v += 2) values.push_back(static_cast<std::uint8_t>(v));
  return gfn_uniform(std::move(values), density);
}

NoiseSpec gfn_type1(double density, std::uint64_t seed, int count) {
  if (count < 1 || count > 256) {
    throw SpecError("noise spec: type I value count must be in [1, 256]");
  }
  std::vector<std::uint8_t> pool(256);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    std::uint32_t j = i + rng.below(256 - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return gfn_uniform(std::move(pool), density);
}

void validate(const NoiseSpec& spec) {
  std::visit(
      Overloaded{
          [](const SaltPepper& s) {
            CheckProbability(s.p_salt, "p_salt");
            CheckProbability(s.p_pepper, "p_pepper");
          },
          [](const FixedRange& f) {
            if (f.m < 1 || f.m > 127) {
              throw SpecError("noise spec: FRIN range length m = " +
                              std::to_string(f.m) + " is not in [1, 127]");
            }
            CheckProbability(f.p_low, "p_low");
            CheckProbability(f.p_high, "p_high");
          },
          [](const GeneralFixed& g) {
            if (g.values.empty()) {
              throw SpecError("noise spec: empty GFN value set");
            }
            if (g.values.size() != g.probs.size()) {
              throw SpecError(
                  "noise spec: GFN values and probs differ in length");
            }
            std::set<std::uint8_t> seen(g.values.begin(), g.values.end());
            if (seen.size() != g.values.size()) {
              throw SpecError("noise spec: GFN values are not distinct");
            }
            for (double p : g.probs) CheckProbability(p, "GFN probability");
          },
      },
      spec);
  CheckProbability(density(spec), "total density");
}

double density(const NoiseSpec& spec) {
  double total = 0.0;
  for (const Band& b : Bands(spec)) total += b.p;
  return total;
}

std::vector<std::uint8_t> impulse_set(const NoiseSpec& spec) {
  std::set<std::uint8_t> values;
  for (const Band& b : Bands(spec)) {
    for (int v = b.first; v < b.first + b.count; ++v) {
      values.insert(static_cast<std::uint8_t>(v));
    }
  }
  return {values.begin(), values.end()};
}

Corrupted corrupt(const GrayImage& img, const NoiseSpec& spec,
                  std::uint64_t seed) {
  validate(spec);
  const std::vector<Band> bands = Bands(spec);
  std::vector<double> upper(bands.size());
  double cum = 0.0;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    cum += bands[i].p;
    upper[i] = cum;
  }

  Corrupted out{img, NoiseMask(img.width(), img.height(), 0)};
  Rng rng(seed);
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double u = rng.uniform();
    auto it = std::upper_bound(upper.begin(), upper.end(), u);
    if (it == upper.end()) continue;
    const Band& band = bands[it - upper.begin()];
    int v = band.first;
    if (band.count > 1) v += static_cast<int>(rng.below(band.count));
    out.image[i] = static_cast<std::uint8_t>(v);
    out.mask[i] = 1;
  }
  return out;
}

nlohmann::json to_json(const NoiseSpec& spec) {
  return std::visit(
      Overloaded{
          [](const SaltPepper& s) {
            return nlohmann::json{{"kind", "spn"},
                                  {"p_salt", s.p_salt},
                                  {"p_pepper", s.p_pepper}};
          },
          [](const FixedRange& f) {
            return nlohmann::json{{"kind", "frin"},
                                  {"m", f.m},
                                  {"p_low", f.p_low},
                                  {"p_high", f.p_high}};
          },
          [](const GeneralFixed& g) {
            return nlohmann::json{
                {"kind", "gfn"}, {"values", g.values}, {"probs", g.probs}};
          },
      },
      spec);
}

NoiseSpec spec_from_json(const nlohmann::json& j) {
  NoiseSpec spec;
  try {
    if (!j.is_object()) throw SpecError("noise spec: expected a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "spn") {
      if (j.contains("p")) {
        spec = spn(JsonProbability(j, "p"));
      } else {
        spec = spn(JsonProbability(j, "p_salt"), JsonProbability(j, "p_pepper"));
      }
    } else if (kind == "frin") {
      const int m = j.at("m").get<int>();
      if (j.contains("p")) {
        double p = JsonProbability(j, "p");
        spec = frin(m, p / 2.0, p / 2.0);
      } else {
        spec = frin(m, JsonProbability(j, "p_low"), JsonProbability(j, "p_high"));
      }
    } else if (kind == "gfn") {
      std::vector<int> raw = j.at("values").get<std::vector<int>>();
      std::vector<std::uint8_t> values;
      for (int v : raw) {
        if (v < 0 || v > 255) {
          throw SpecError("noise spec: GFN value " + std::to_string(v) +
                          " is not in [0, 255]");
        }
        values.push_back(static_cast<std::uint8_t>(v));
      }
      if (j.contains("probs")) {
        spec = gfn(std::move(values), j.at("probs").get<std::vector<double>>());
      } else {
        spec = gfn_uniform(std::move(values), JsonProbability(j, "p"));
      }
    } else {
      throw SpecError("noise spec: unknown kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("noise spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

std::string to_string(const NoiseSpec& spec) { return to_json(spec).dump(); }

NoiseSpec parse_spec(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("noise spec: ") + e.what());
  }
  return spec_from_json(j);
}

}  // namespace impulse
