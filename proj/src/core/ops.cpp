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

#include "mpstab/ops.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mpstab/kernels/kernels.hpp"

namespace mpstab {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()) + " differ");
}

void require_same_length(const Vector& x, const Vector& y, const char* op) {
  if (x.size() != y.size())
    throw DimensionError(std::string(op) + ": vector lengths " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()) + " differ");
}

}  // namespace

Matrix mat_oplus(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_oplus");
  Matrix c(a.rows(), a.cols());
  kernels::active().vmax(a.raw().data(), b.raw().data(), c.raw_mut().data(), a.raw().size());
  return c;
}

Vector vec_oplus(const Vector& a, const Vector& b) {
  require_same_length(a, b, "vec_oplus");
  Vector c(a.size());
  kernels::active().vmax(a.raw().data(), b.raw().data(), c.raw_mut().data(), a.size());
  return c;
}

Matrix mat_otimes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_otimes: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  Matrix c(a.rows(), b.cols());
  kernels::active().gemm(a.raw().data(), b.raw().data(), c.raw_mut().data(), a.rows(),
                         a.cols(), b.cols());
  return c;
}

Vector mat_otimes(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size())
    throw DimensionError("mat_otimes: matrix has " + std::to_string(a.cols()) +
                         " columns, vector has length " + std::to_string(x.size()));
  Vector y(a.rows());
  kernels::active().gemv(a.raw().data(), x.raw().data(), y.raw_mut().data(), a.rows(),
                         a.cols());
  return y;
}

Vector scalar_otimes(Scalar lambda, const Vector& x) {
  if (lambda.is_eps()) return Vector(x.size());
  Vector y(x.size());
  kernels::active().shift(x.raw().data(), lambda.raw(), y.raw_mut().data(), x.size());
  return y;
}

Matrix mat_power(const Matrix& a, std::size_t k) {
  if (!a.is_square()) throw DimensionError("mat_power: matrix must be square");
  if (k == 0) throw ArgumentError("mat_power: exponent must be positive");
  Matrix p = a;
  for (std::size_t i = 1; i < k; ++i) p = mat_otimes(p, a);
  return p;
}

Scalar scalar_power(Scalar gamma, std::size_t c) {
  if (gamma.is_eps()) return c == 0 ? Scalar::one() : Scalar::eps();
  return Scalar(static_cast<double>(c) * gamma.raw());
}

bool leq(const Vector& x, const Vector& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.raw()[i] > y.raw()[i]) return false;
  return true;
}

Scalar sup_norm(const Vector& x) {
  if (x.empty()) return Scalar::eps();
  double lo = 0;
  double hi = 0;
  kernels::active().minmax(x.raw().data(), x.size(), &lo, &hi);
  return Scalar(hi);
}

double projective_norm(const Vector& x) {
  if (x.empty()) throw DimensionError("projective_norm: empty vector");
  if (!x.all_finite()) throw DomainError("projective_norm: vector has an ε entry");
  double lo = 0;
  double hi = 0;
  kernels::active().minmax(x.raw().data(), x.size(), &lo, &hi);
  return hi - lo;
}

double projective_norm_matrix(const Matrix& a) {
  if (!a.all_finite()) throw DomainError("projective_norm_matrix: matrix has an ε entry");
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, projective_norm(a.col(j)));
  return best;
}

Vector residual(const Matrix& g, const Vector& x) {
  if (g.rows() != x.size())
    throw DimensionError("residual: generator rows " + std::to_string(g.rows()) +
                         " vs vector length " + std::to_string(x.size()));
  const std::size_t m = g.cols();
  std::vector<double> lam(m, std::numeric_limits<double>::infinity());
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    auto row = g.row_raw(i);
    const double xi = x.raw()[i];
    if (xi == kEps) {
      // ε - finite = ε; ε - ε is omitted like any other ε generator entry.
      for (std::size_t j = 0; j < m; ++j)
        if (row[j] != kEps) lam[j] = kEps;
    } else {
      k.residual_row(xi, row.data(), lam.data(), m);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (lam[j] == std::numeric_limits<double>::infinity())
      throw DegenerateGeneratorError("residual: generator column " + std::to_string(j + 1) +
                                     " has no finite entry");
  }
  return Vector(std::move(lam));
}

Vector difference(const Vector& x, const Vector& y) {
  require_same_length(x, y, "difference");
  if (!x.all_finite() || !y.all_finite())
    throw DomainError("difference: conventional subtraction needs finite vectors");
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x.raw()[i] - y.raw()[i];
  return Vector(std::move(d));
}

bool approx_equal(const Vector& x, const Vector& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!approx_eq(x.raw()[i], y.raw()[i], tol)) return false;
  return true;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.raw().size(); ++i)
    if (!approx_eq(a.raw()[i], b.raw()[i], tol)) return false;
  return true;
}

}  // namespace mpstab
