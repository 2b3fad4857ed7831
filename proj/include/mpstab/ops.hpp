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

#include <cstddef>

#include "mpstab/matrix.hpp"
#include "mpstab/scalar.hpp"

namespace mpstab {

/// Entrywise maximum.
Matrix mat_oplus(const Matrix& a, const Matrix& b);
Vector vec_oplus(const Vector& a, const Vector& b);

/// (A ⊗ B)_ij = max_k (A_ik + B_kj).
Matrix mat_otimes(const Matrix& a, const Matrix& b);
Vector mat_otimes(const Matrix& a, const Vector& x);

/// λ ⊗ x: adds λ to every finite entry.
Vector scalar_otimes(Scalar lambda, const Vector& x);

/// k-fold max-plus product, k >= 1.
Matrix mat_power(const Matrix& a, std::size_t k);

/// Max-plus scalar power γ^{⊗c} = c·γ.
Scalar scalar_power(Scalar gamma, std::size_t c);

/// x <= y entrywise.
bool leq(const Vector& x, const Vector& y);

/// max_i x_i.
Scalar sup_norm(const Vector& x);

/// Hilbert projective norm max_j x_j - min_j x_j. Requires finite x.
double projective_norm(const Vector& x);

/// Maximum of the column projective norms. Requires a finite matrix.
double projective_norm_matrix(const Matrix& a);

/// Greatest λ with G ⊗ λ <= x: λ_j = min_i (x_i - G_ij) over finite G_ij.
/// An all-ε column of G throws DegenerateGeneratorError.
Vector residual(const Matrix& g, const Vector& x);

/// Conventional entrywise x - y on finite vectors.
Vector difference(const Vector& x, const Vector& y);

/// Entrywise approximate equality; ε must match ε.
bool approx_equal(const Vector& x, const Vector& y, double tol = kDefaultTolerance);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);

}  // namespace mpstab
