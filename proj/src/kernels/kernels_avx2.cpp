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

// Compiled with -mavx2 on x86-64 only; dispatch.cpp checks the CPU first.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "mpstab/kernels/kernels.hpp"

namespace mpstab::kernels {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

void axpy_max_avx2(double s, const double* x, double* y, std::size_t n) {
  if (s == kNegInf) return;
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d vx = _mm256_loadu_pd(x + j);
    __m256d vy = _mm256_loadu_pd(y + j);
    _mm256_storeu_pd(y + j, _mm256_max_pd(vy, _mm256_add_pd(vs, vx)));
  }
  for (; j < n; ++j) y[j] = std::max(y[j], s + x[j]);
}

void gemm_avx2(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, kNegInf);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) axpy_max_avx2(a[i * k + p], b + p * n, ci, n);
  }
}

void gemv_avx2(const double* a, const double* x, double* y, std::size_t m,
               std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * n;
    __m256d acc = _mm256_set1_pd(kNegInf);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      acc = _mm256_max_pd(acc, _mm256_add_pd(_mm256_loadu_pd(ai + j),
                                             _mm256_loadu_pd(x + j)));
    }
    double r = hmax(acc);
    for (; j < n; ++j) r = std::max(r, ai[j] + x[j]);
    y[i] = r;
  }
}

void vmax_avx2(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_pd(out + j,
                     _mm256_max_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j)));
  }
  for (; j < n; ++j) out[j] = std::max(x[j], y[j]);
}

void shift_avx2(const double* x, double s, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_pd(out + j, _mm256_add_pd(_mm256_loadu_pd(x + j), vs));
  }
  for (; j < n; ++j) out[j] = x[j] + s;
}

// xi - (-inf) is +inf, which the min leaves untouched, so ε lanes need no
// mask. xi is finite by contract, so no lane produces NaN.
void residual_row_avx2(double xi, const double* g, double* lam, std::size_t n) {
  const __m256d vx = _mm256_set1_pd(xi);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d d = _mm256_sub_pd(vx, _mm256_loadu_pd(g + j));
    _mm256_storeu_pd(lam + j, _mm256_min_pd(_mm256_loadu_pd(lam + j), d));
  }
  for (; j < n; ++j) {
    if (g[j] != kNegInf) lam[j] = std::min(lam[j], xi - g[j]);
  }
}

void minmax_avx2(const double* x, std::size_t n, double* lo, double* hi) {
  __m256d vl = _mm256_set1_pd(kPosInf);
  __m256d vh = _mm256_set1_pd(kNegInf);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d v = _mm256_loadu_pd(x + j);
    vl = _mm256_min_pd(vl, v);
    vh = _mm256_max_pd(vh, v);
  }
  double l = hmin(vl);
  double h = hmax(vh);
  for (; j < n; ++j) {
    l = std::min(l, x[j]);
    h = std::max(h, x[j]);
  }
  *lo = l;
  *hi = h;
}

constexpr KernelTable kAvx2Table{
    Backend::kAvx2, gemm_avx2,          gemv_avx2,  axpy_max_avx2,
    vmax_avx2,      shift_avx2,         residual_row_avx2, minmax_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2Table; }

}  // namespace mpstab::kernels
