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

#pragma once

// Raw max-plus inner loops over double buffers, -inf encoding ε.
//
// Every backend must produce value-identical results: the loops only use
// max, min and a single addition per element, none of which reassociate.
// Inputs never contain NaN or +inf (guaranteed by Scalar).

#include <cstddef>
#include <string_view>

namespace mpstab::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

struct KernelTable {
  Backend backend;

  /// c[m x n] = a[m x k] ⊗ b[k x n], all row-major.
  void (*gemm)(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
  /// y[m] = a[m x n] ⊗ x[n].
  void (*gemv)(const double* a, const double* x, double* y, std::size_t m,
               std::size_t n);
  /// y = max(y, s + x). x and y may alias.
  void (*axpy_max)(double s, const double* x, double* y, std::size_t n);
  /// out = max(x, y).
  void (*vmax)(const double* x, const double* y, double* out, std::size_t n);
  /// out = x + s (s finite; ε stays ε).
  void (*shift)(const double* x, double s, double* out, std::size_t n);
  /// lam_j = min(lam_j, xi - g_j) over finite g_j; xi must be finite.
  void (*residual_row)(double xi, const double* g, double* lam, std::size_t n);
  /// max and min over x[0..n), n >= 1.
  void (*minmax)(const double* x, std::size_t n, double* lo, double* hi);
};

const KernelTable& scalar_table() noexcept;
/// Null when the backend is not compiled into this build.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

/// True when the backend is compiled in and the running CPU supports it.
bool backend_available(Backend b) noexcept;

/// Active table. Chosen once on first use: the best available backend,
/// unless MPSTAB_KERNELS=scalar|avx2|neon requests a specific one.
const KernelTable& active() noexcept;

/// Overrides the active backend. Returns false if it is unavailable.
bool set_backend(Backend b) noexcept;

std::string_view backend_name(Backend b) noexcept;

}  // namespace mpstab::kernels
