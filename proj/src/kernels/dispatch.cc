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

#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "impulse/image.h"
#include "impulse/kernels.h"
#include "kernels/kernels_internal.h"

namespace impulse {
namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* InitialKernels() {
  if (const char* env = std::getenv("IMPULSE_ISA")) {
    std::string_view name(env);
    if (name == "scalar") return &kernels(Isa::kScalar);
    if (name == "avx2" && isa_supported(Isa::kAvx2)) {
      return &kernels(Isa::kAvx2);
    }
  }
  return &kernels(best_isa());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(IMPULSE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidArgument("kernels: ISA " + std::string(isa_name(isa)) +
                          " is not supported on this CPU");
  }
#if defined(IMPULSE_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kernels_internal::kAvx2Kernels;
#endif
  return kernels_internal::kScalarKernels;
}

const KernelTable& active_kernels() {
  const KernelTable* table = g_active.load(std::memory_order_acquire);
  if (table == nullptr) {
    table = InitialKernels();
    g_active.store(table, std::memory_order_release);
  }
  return *table;
}

void set_active_isa(Isa isa) {
  g_active.store(&kernels(isa), std::memory_order_release);
}

}  // namespace impulse
