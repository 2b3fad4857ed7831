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

#include <algorithm>
#include <limits>

#include "mpstab/kernels/kernels.hpp"

namespace mpstab::kernels {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

void axpy_max_scalar(double s, const double* x, double* y, std::size_t n) {
  if (s == kNegInf) return;
  for (std::size_t j = 0; j < n; ++j) y[j] = std::max(y[j], s + x[j]);
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) axpy_max_scalar(a[i * k + p], b + p * n, ci, n);
  }
}

void gemv_scalar(const double* a, const double* x, double* y, std::size_t m,
                 std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * n;
    double acc = kNegInf;
    for (std::size_t j = 0; j < n; ++j) acc = std::max(acc, ai[j] + x[j]);
    y[i] = acc;
  }
}

void vmax_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = std::max(x[j], y[j]);
}

void shift_scalar(const double* x, double s, double* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = x[j] + s;
}

void residual_row_scalar(double xi, const double* g, double* lam, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (g[j] != kNegInf) lam[j] = std::min(lam[j], xi - g[j]);
  }
}

void minmax_scalar(const double* x, std::size_t n, double* lo, double* hi) {
  double l = kPosInf;
  double h = kNegInf;
  for (std::size_t j = 0; j < n; ++j) {
    l = std::min(l, x[j]);
    h = std::max(h, x[j]);
  }
  *lo = l;
  *hi = h;
}

constexpr KernelTable kScalarTable{
    Backend::kScalar, gemm_scalar,         gemv_scalar,  axpy_max_scalar,
    vmax_scalar,      shift_scalar,        residual_row_scalar, minmax_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalarTable; }

}  // namespace mpstab::kernels
