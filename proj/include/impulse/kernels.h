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

#ifndef IMPULSE_KERNELS_H_
#define IMPULSE_KERNELS_H_

// Data-parallel inner loops. Each ISA provides the same table of kernels and
// every variant must produce bit-identical output to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace impulse {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // out = 4-neighbour sum of in, zero padded. Summation order is fixed:
  // ((up + down) + left) + right.
  void (*cross_sum)(const double* in, double* out, int width, int height);

  // One AIM iteration over columns [begin, end) of a row. All rows hold
  // interleaved (image, mask) pairs, two doubles per pixel. Each output pair
  // is ((up + down) + left) + right of the input pairs, with left/right taken
  // from `here`. Missing neighbours (null up/down, columns outside the row)
  // count as zero. `out` may not alias `here`.
  void (*aim_row)(const double* up, const double* here, const double* down,
                  double* out, int width, int begin, int end);

  // values[i] *= factor.
  void (*scale)(double* values, std::size_t n, double factor);

  // 3x3 median with clipped windows at the border (lower middle for even
  // window sizes).
  void (*median3x3)(const std::uint8_t* in, std::uint8_t* out, int width,
                    int height);
};

bool isa_supported(Isa isa);

// Best ISA the running CPU supports.
Isa best_isa();

// Throws InvalidArgument if the ISA is not supported on this CPU.
const KernelTable& kernels(Isa isa);

// Kernels used by the library. Defaults to best_isa(); the IMPULSE_ISA
// environment variable ("scalar" or "avx2") overrides it at first use.
const KernelTable& active_kernels();

// Forces the library-wide choice. Intended for tests and benchmarks.
void set_active_isa(Isa isa);

}  // namespace impulse

#endif  // IMPULSE_KERNELS_H_
