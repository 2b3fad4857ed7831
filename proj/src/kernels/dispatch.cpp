// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "mpstab/kernels/kernels.hpp"

namespace mpstab::kernels {

#if !defined(MPSTAB_HAVE_AVX2)
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif
#if !defined(MPSTAB_HAVE_NEON)
const KernelTable* neon_table() noexcept { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(MPSTAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar:
      return &scalar_table();
    case Backend::kAvx2:
      return cpu_has_avx2() ? avx2_table() : nullptr;
    case Backend::kNeon:
      // Advanced SIMD is mandatory on aarch64.
      return neon_table();
  }
  return nullptr;
}

const KernelTable* pick_default() noexcept {
  if (const char* env = std::getenv("MPSTAB_KERNELS")) {
    std::string_view want(env);
    const KernelTable* t = nullptr;
    if (want == "scalar") t = table_for(Backend::kScalar);
    if (want == "avx2") t = table_for(Backend::kAvx2);
    if (want == "neon") t = table_for(Backend::kNeon);
    if (t) return t;
  }
  if (const KernelTable* t = table_for(Backend::kAvx2)) return t;
  if (const KernelTable* t = table_for(Backend::kNeon)) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

bool backend_available(Backend b) noexcept { return table_for(b) != nullptr; }

const KernelTable& active() noexcept {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    const KernelTable* chosen = pick_default();
    const KernelTable* expected = nullptr;
    g_active.compare_exchange_strong(expected, chosen, std::memory_order_acq_rel);
    t = g_active.load(std::memory_order_acquire);
  }
  return *t;
}

bool set_backend(Backend b) noexcept {
  const KernelTable* t = table_for(b);
  if (!t) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

}  // namespace mpstab::kernels
