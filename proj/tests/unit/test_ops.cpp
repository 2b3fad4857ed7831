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

#include "catch_amalgamated.hpp"
#include "mpstab/ops.hpp"
#include "oracles.hpp"

using namespace mpstab;
constexpr double E = kEps;

TEST_CASE("matrix construction and identities", "[matrix]") {
  const Matrix e = Matrix::epsilon(2, 3);
  CHECK(e.rows() == 2);
  CHECK(e.cols() == 3);
  for (double v : e.raw()) CHECK(v == E);
  const Matrix id = Matrix::identity(3);
  CHECK(id(1, 1) == Scalar::one());
  CHECK(id(0, 1).is_eps());
  CHECK_THROWS(Matrix(0, 2));
  CHECK_THROWS(Matrix::from_rows({{1, 2}, {3}}));
  CHECK_THROWS(Vector({1.0, std::numeric_limits<double>::quiet_NaN()}));
}

TEST_CASE("products match hand values", "[ops]") {
  const Matrix a = Matrix::from_rows({{4, E}, {1, 1}});
  const Matrix b = Matrix::from_rows({{3, 3}, {E, 6}});
  CHECK(mat_oplus(a, b) == Matrix::from_rows({{4, 3}, {1, 6}}));
  CHECK(mat_otimes(a, b) == Matrix::from_rows({{7, 7}, {4, 7}}));
  CHECK(mat_otimes(a, Vector{0, 0}) == Vector{4, 1});
  CHECK(mat_power(a, 2) == mat_otimes(a, a));
  CHECK(scalar_otimes(Scalar(2), Vector{1, E}) == Vector{3, E});
  CHECK(scalar_power(Scalar(3), 4) == Scalar(12));
  CHECK_THROWS_AS(mat_otimes(a, Matrix(3, 3)), DimensionError);
}

TEST_CASE("norms and order", "[ops]") {
  CHECK(projective_norm(Vector{1, 4, -2}) == 6);
  CHECK_THROWS_AS(projective_norm(Vector{1, E}), DomainError);
  CHECK(sup_norm(Vector{1, 4, -2}) == Scalar(4));
  CHECK(leq(Vector{E, 1}, Vector{0, 1}));
  CHECK_FALSE(leq(Vector{0, 2}, Vector{0, 1}));
  CHECK(projective_norm_matrix(Matrix::from_rows({{0, -3}, {-5, 0}})) == 5);
}

TEST_CASE("residual is the greatest sub-solution", "[ops]") {
  const Matrix g = Matrix::from_rows({{0, -3}, {-5, 0}});
  const Vector x{2, 0};
  const Vector lam = residual(g, x);
  CHECK(lam == Vector{2, 0});
  CHECK(leq(mat_otimes(g, lam), x));
  CHECK_THROWS_AS(residual(Matrix::from_rows({{E, 0}, {E, 1}}), x), DegenerateGeneratorError);
}

TEST_CASE("library products agree with the naive oracle", "[ops][property]") {
  SplitMix64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 1 + rng.below(6), k = 1 + rng.below(6), n = 1 + rng.below(6);
    oracle::IntMat a(m, oracle::IntVec(k)), b(k, oracle::IntVec(n));
    for (auto& row : a)
      for (auto& e : row)
        if (rng.below(4)) e = rng.uniform_int(-9, 9);
    for (auto& row : b)
      for (auto& e : row)
        if (rng.below(4)) e = rng.uniform_int(-9, 9);
    REQUIRE(mat_otimes(oracle::to_matrix(a), oracle::to_matrix(b)) ==
            oracle::to_matrix(oracle::product(a, b)));
  }
}

TEST_CASE("max-plus maps are monotone, homogeneous and additive", "[ops][property]") {
  SplitMix64 rng(12);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const Matrix a = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = double(rng.uniform_int(-20, 20));
      ys[i] = xs[i] + double(rng.uniform_int(0, 5));
    }
    const Vector x(xs), y(ys);
    const Scalar lam(double(rng.uniform_int(-10, 10)));
    REQUIRE(leq(mat_otimes(a, x), mat_otimes(a, y)));
    REQUIRE(mat_otimes(a, scalar_otimes(lam, x)) == scalar_otimes(lam, mat_otimes(a, x)));
    REQUIRE(mat_otimes(a, vec_oplus(x, y)) == vec_oplus(mat_otimes(a, x), mat_otimes(a, y)));
  }
}

TEST_CASE("matrix product is associative and distributes over ⊕", "[ops][property]") {
  SplitMix64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const Matrix a = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    const Matrix b = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    const Matrix c = oracle::to_matrix(oracle::random_matrix(rng, n, -9, 9, 30));
    REQUIRE(mat_otimes(mat_otimes(a, b), c) == mat_otimes(a, mat_otimes(b, c)));
    REQUIRE(mat_otimes(a, mat_oplus(b, c)) == mat_oplus(mat_otimes(a, b), mat_otimes(a, c)));
    REQUIRE(mat_otimes(Matrix::identity(n), a) == a);
  }
}
