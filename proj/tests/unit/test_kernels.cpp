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

#include <cstring>
#include <vector>

#include "catch_amalgamated.hpp"
#include "mpstab/kernels/kernels.hpp"
#include "mpstab/ops.hpp"
#include "mpstab/rng.hpp"
#include "oracles.hpp"

using namespace mpstab;
using kernels::Backend;
using kernels::KernelTable;

namespace {

std::vector<double> random_buffer(SplitMix64& rng, std::size_t n, bool allow_eps = true) {
  std::vector<double> v(n);
  for (auto& x : v) {
    if (allow_eps && rng.below(5) == 0)
      x = kEps;
    else
      // Non-integer values too: every kernel must be bit-identical anyway.
      x = double(rng.uniform_int(-1000000, 1000000)) / 1024.0;
  }
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<const KernelTable*> simd_tables() {
  std::vector<const KernelTable*> out;
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (!kernels::backend_available(b)) continue;
    kernels::set_backend(b);
    out.push_back(&kernels::active());
  }
  kernels::set_backend(Backend::kScalar);
  return out;
}

}  // namespace

TEST_CASE("scalar backend is always available", "[kernels]") {
  CHECK(kernels::backend_available(Backend::kScalar));
  CHECK(kernels::set_backend(Backend::kScalar));
  CHECK(kernels::active().backend == Backend::kScalar);
  CHECK(kernels::backend_name(Backend::kAvx2) == "avx2");
}

TEST_CASE("SIMD kernels are bit-identical to the scalar reference", "[kernels][property]") {
  const auto tables = simd_tables();
  if (tables.empty()) SKIP("no SIMD backend on this machine");
  const KernelTable& ref = kernels::scalar_table();
  SplitMix64 rng(99);
  for (const KernelTable* simd : tables) {
    INFO("backend " << kernels::backend_name(simd->backend));
    for (std::size_t n = 1; n <= 37; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto x = random_buffer(rng, n);
        const auto y = random_buffer(rng, n);
        const double s = double(rng.uniform_int(-100, 100)) / 8.0;

        std::vector<double> o1(n), o2(n);
        ref.vmax(x.data(), y.data(), o1.data(), n);
        simd->vmax(x.data(), y.data(), o2.data(), n);
        REQUIRE(bitwise_equal(o1, o2));

        ref.shift(x.data(), s, o1.data(), n);
        simd->shift(x.data(), s, o2.data(), n);
        REQUIRE(bitwise_equal(o1, o2));

        o1 = y;
        o2 = y;
        ref.axpy_max(s, x.data(), o1.data(), n);
        simd->axpy_max(s, x.data(), o2.data(), n);
        REQUIRE(bitwise_equal(o1, o2));

        // Aliased input and output.
        o1 = x;
        o2 = x;
        ref.axpy_max(s, o1.data(), o1.data(), n);
        simd->axpy_max(s, o2.data(), o2.data(), n);
        REQUIRE(bitwise_equal(o1, o2));

        o1.assign(n, std::numeric_limits<double>::infinity());
        o2 = o1;
        const double xi = double(rng.uniform_int(-50, 50));
        ref.residual_row(xi, x.data(), o1.data(), n);
        simd->residual_row(xi, x.data(), o2.data(), n);
        REQUIRE(bitwise_equal(o1, o2));

        const auto f = random_buffer(rng, n, false);
        double lo1, hi1, lo2, hi2;
        ref.minmax(f.data(), n, &lo1, &hi1);
        simd->minmax(f.data(), n, &lo2, &hi2);
        REQUIRE(lo1 == lo2);
        REQUIRE(hi1 == hi2);
      }
    }
    for (int rep = 0; rep < 300; ++rep) {
      const std::size_t m = 1 + rng.below(13), k = 1 + rng.below(13), n = 1 + rng.below(13);
      const auto a = random_buffer(rng, m * k);
      const auto b = random_buffer(rng, k * n);
      const auto v = random_buffer(rng, k);
      std::vector<double> c1(m * n), c2(m * n), y1(m), y2(m);
      ref.gemm(a.data(), b.data(), c1.data(), m, k, n);
      simd->gemm(a.data(), b.data(), c2.data(), m, k, n);
      REQUIRE(bitwise_equal(c1, c2));
      ref.gemv(a.data(), v.data(), y1.data(), m, k);
      simd->gemv(a.data(), v.data(), y2.data(), m, k);
      REQUIRE(bitwise_equal(y1, y2));
    }
  }
}

TEST_CASE("library results do not depend on the backend", "[kernels][property]") {
  const auto tables = simd_tables();
  if (tables.empty()) SKIP("no SIMD backend on this machine");
  SplitMix64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.below(9);
    const Matrix a = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    const Matrix b = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    kernels::set_backend(Backend::kScalar);
    const Matrix ref = mat_otimes(a, b);
    for (const KernelTable* simd : tables) {
      kernels::set_backend(simd->backend);
      REQUIRE(mat_otimes(a, b) == ref);
    }
  }
  kernels::set_backend(Backend::kScalar);
}
