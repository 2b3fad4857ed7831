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
#include <optional>
#include <string>
#include <vector>

#include "mpstab/matrix.hpp"

namespace mpstab {

/// Finitely generated max-plus cone span⊕(G).
class Cone {
 public:
  /// Throws DegenerateGeneratorError if some column of G is all ε.
  explicit Cone(Matrix generators);

  const Matrix& generators() const noexcept { return g_; }
  std::size_t dimension() const noexcept { return g_.rows(); }

 private:
  Matrix g_;
};

/// x ∈ span⊕(G) iff G ⊗ residual(G, x) = x.
bool cone_membership(const Cone& c, const Vector& x, double tol = kDefaultTolerance);

/// S_α^β(g) = { x ∈ Rⁿ | α + x <= g(x) <= β + x } for g(x) = Q ⊗ x or
/// g(x) = min_j Q^(j) ⊗ x. alpha may be ε (no lower constraint).
///
/// For the single-matrix family with α <= λ*(Q) (or α = ε) and β >= λ̄(Q),
/// the set is span⊕((Q_β)⋆) ∩ Rⁿ and the star columns are kept as
/// generators. Otherwise only the membership predicate is available.
class SliceSpace {
 public:
  const std::vector<Matrix>& family() const noexcept { return family_; }
  /// The (first) generating matrix.
  const Matrix& q() const noexcept { return family_.front(); }
  bool is_min_family() const noexcept { return family_.size() > 1; }
  Scalar alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  std::size_t dimension() const noexcept { return family_.front().rows(); }

  const std::optional<Matrix>& generators() const noexcept { return generators_; }
  bool has_generators() const noexcept { return generators_.has_value(); }

  /// g(x).
  Vector apply(const Vector& x) const;

 private:
  friend SliceSpace build_slice_space(const Matrix&, Scalar, double);
  friend SliceSpace build_min_slice_space(const std::vector<Matrix>&, Scalar, double);
  SliceSpace(std::vector<Matrix> family, Scalar alpha, double beta,
             std::optional<Matrix> generators)
      : family_(std::move(family)), alpha_(alpha), beta_(beta),
        generators_(std::move(generators)) {}

  std::vector<Matrix> family_;
  Scalar alpha_;
  double beta_;
  std::optional<Matrix> generators_;
};

/// Throws ArgumentError when alpha > beta, or when alpha is finite and Q has
/// an ε diagonal entry.
SliceSpace build_slice_space(const Matrix& q, Scalar alpha, double beta);
SliceSpace build_slice_space(const Matrix& q, double alpha, double beta);

/// Slice space of g(x) = min_j Q^(j) ⊗ x. Predicate only.
SliceSpace build_min_slice_space(const std::vector<Matrix>& qs, Scalar alpha, double beta);

/// Which inequality of the slice predicate fails, if any.
struct SliceViolation {
  std::size_t row;
  bool upper;       ///< g(x)_row > β + x_row (else α + x_row > g(x)_row)
  double image;     ///< g(x)_row
  double bound;     ///< β + x_row or α + x_row
};

/// Requires finite x (DomainError otherwise).
std::optional<SliceViolation> slice_violation(const SliceSpace& s, const Vector& x,
                                              double tol = kDefaultTolerance);
bool slice_membership(const SliceSpace& s, const Vector& x, double tol = kDefaultTolerance);

/// δ = ‖G‖_P bounding ‖x‖_P over the slice space, when the generators are
/// all finite. Absent for predicate-only or unbounded slice spaces.
std::optional<double> is_bounded_projective(const SliceSpace& s);

/// Pairwise difference constraints x_i - x_j >= c_ij read off the
/// generators (G = (Q_β)⋆ satisfies G ⊗ x = x on the span). Entries with
/// c_ij = ε impose nothing.
struct DifferenceBound {
  std::size_t i;
  std::size_t j;
  double lower;  ///< x_i - x_j >= lower
};
std::vector<DifferenceBound> difference_bounds(const SliceSpace& s);

/// For n = 2 with finite generators: x_1 + lower <= x_2 <= x_1 + upper.
struct HalfSpaceForm {
  double lower;
  double upper;
  std::string to_string() const;
};
std::optional<HalfSpaceForm> half_space_form(const SliceSpace& s);

/// Result of checking A · S_src ⊆ S_dst on the generators of S_src.
struct InclusionCheck {
  bool holds = false;
  std::optional<std::size_t> generator;  ///< failing generator column
  std::optional<Vector> image;           ///< A ⊗ generator
  std::optional<SliceViolation> violation;
  std::string diagnostic;
};

/// Sound and complete: both A ⊗ · and the slice predicate (for a single
/// matrix) commute with ⊕ and scalar shifts, so checking generator images
/// suffices. S_src must carry generators.
InclusionCheck check_map_inclusion(const Matrix& a, const SliceSpace& src,
                                   const SliceSpace& dst, double tol = kDefaultTolerance);
bool map_inclusion(const Matrix& a, const SliceSpace& src, const SliceSpace& dst,
                   double tol = kDefaultTolerance);

/// g(x) = min_j [Q^(j) ⊗ x] entrywise. Throws DomainError on ε entries.
Vector min_mpl_apply(const std::vector<Matrix>& qs, const Vector& x);

}  // namespace mpstab
