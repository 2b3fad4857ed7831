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

// Compiled on aarch64 only.

#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "mpstab/kernels/kernels.hpp"

namespace mpstab::kernels {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

void axpy_max_neon(double s, const double* x, double* y, std::size_t n) {
  if (s == kNegInf) return;
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t vy = vld1q_f64(y + j);
    vst1q_f64(y + j, vmaxq_f64(vy, vaddq_f64(vs, vld1q_f64(x + j))));
  }
  for (; j < n; ++j) y[j] = std::max(y[j], s + x[j]);
}

void gemm_neon(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) axpy_max_neon(a[i * k + p], b + p * n, ci, n);
  }
}

void gemv_neon(const double* a, const double* x, double* y, std::size_t m,
               std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * n;
    float64x2_t acc = vdupq_n_f64(kNegInf);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      acc = vmaxq_f64(acc, vaddq_f64(vld1q_f64(ai + j), vld1q_f64(x + j)));
    }
    double r = vmaxvq_f64(acc);
    for (; j < n; ++j) r = std::max(r, ai[j] + x[j]);
    y[i] = r;
  }
}

void vmax_neon(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) vst1q_f64(out + j, vmaxq_f64(vld1q_f64(x + j), vld1q_f64(y + j)));
  for (; j < n; ++j) out[j] = std::max(x[j], y[j]);
}

void shift_neon(const double* x, double s, double* out, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) vst1q_f64(out + j, vaddq_f64(vld1q_f64(x + j), vs));
  for (; j < n; ++j) out[j] = x[j] + s;
}

void residual_row_neon(double xi, const double* g, double* lam, std::size_t n) {
  const float64x2_t vx = vdupq_n_f64(xi);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t d = vsubq_f64(vx, vld1q_f64(g + j));
    vst1q_f64(lam + j, vminq_f64(vld1q_f64(lam + j), d));
  }
  for (; j < n; ++j) {
    if (g[j] != kNegInf) lam[j] = std::min(lam[j], xi - g[j]);
  }
}

void minmax_neon(const double* x, std::size_t n, double* lo, double* hi) {
  float64x2_t vl = vdupq_n_f64(kPosInf);
  float64x2_t vh = vdupq_n_f64(kNegInf);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t v = vld1q_f64(x + j);
    vl = vminq_f64(vl, v);
    vh = vmaxq_f64(vh, v);
  }
  double l = vminvq_f64(vl);
  double h = vmaxvq_f64(vh);
  for (; j < n; ++j) {
    l = std::min(l, x[j]);
    h = std::max(h, x[j]);
  }
  *lo = l;
  *hi = h;
}

constexpr KernelTable kNeonTable{
    Backend::kNeon, gemm_neon,          gemv_neon,  axpy_max_neon,
    vmax_neon,      shift_neon,         residual_row_neon, minmax_neon};

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeonTable; }

}  // namespace mpstab::kernels
