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

#include "mpstab/cones.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mpstab/ops.hpp"
#include "mpstab/spectral.hpp"

namespace mpstab {

Cone::Cone(Matrix generators) : g_(std::move(generators)) {
  for (std::size_t j = 0; j < g_.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < g_.rows(); ++i) any = any || g_(i, j).is_finite();
    if (!any)
      throw DegenerateGeneratorError("cone generator column " + std::to_string(j + 1) +
                                     " is all ε");
  }
}

bool cone_membership(const Cone& c, const Vector& x, double tol) {
  if (x.size() != c.dimension())
    throw DimensionError("cone_membership: vector length does not match the cone");
  const Vector lam = residual(c.generators(), x);
  return approx_equal(mat_otimes(c.generators(), lam), x, tol);
}

Vector SliceSpace::apply(const Vector& x) const {
  if (family_.size() == 1) return mat_otimes(family_.front(), x);
  return min_mpl_apply(family_, x);
}

SliceSpace build_slice_space(const Matrix& q, Scalar alpha, double beta) {
  if (!q.is_square()) throw DimensionError("build_slice_space: Q must be square");
  if (!std::isfinite(beta)) throw DomainError("build_slice_space: β must be finite");
  if (alpha.is_finite() && alpha.raw() > beta)
    throw ArgumentError("build_slice_space: α = " + alpha.to_string() + " exceeds β = " +
                        format_scalar(beta));
  if (alpha.is_finite() && !q.has_finite_diagonal())
    throw ArgumentError("build_slice_space: Q needs a finite diagonal when α is finite");

  const Scalar lmax = max_cycle_mean(q);
  const bool lower_vacuous = alpha.is_eps() || approx_le(alpha.raw(), lambda_star(q).raw());
  const bool upper_ok = approx_le(lmax.raw(), beta);
  std::optional<Matrix> gens;
  if (lower_vacuous && upper_ok) gens = kleene_star(normalize(q, beta));
  return SliceSpace({q}, alpha, beta, std::move(gens));
}

SliceSpace build_slice_space(const Matrix& q, double alpha, double beta) {
  return build_slice_space(q, Scalar(alpha), beta);
}

SliceSpace build_min_slice_space(const std::vector<Matrix>& qs, Scalar alpha, double beta) {
  if (qs.empty()) throw ArgumentError("build_min_slice_space: empty family");
  for (const auto& q : qs) {
    if (!q.is_square() || q.rows() != qs.front().rows())
      throw DimensionError("build_min_slice_space: matrices must be square of equal size");
  }
  if (alpha.is_finite() && alpha.raw() > beta)
    throw ArgumentError("build_min_slice_space: α exceeds β");
  if (qs.size() == 1) return build_slice_space(qs.front(), alpha, beta);
  return SliceSpace(qs, alpha, beta, std::nullopt);
}

namespace {

// Predicate on R_ε^n: entries that are ε satisfy α + x_i <= g(x)_i
// trivially and need g(x)_i = ε for the upper bound. On finite x this is
// the ordinary slice predicate.
std::optional<SliceViolation> extended_violation(const SliceSpace& s, const Vector& x,
                                                 double tol) {
  const Vector gx = s.apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x.raw()[i];
    const double gi = gx.raw()[i];
    const double lo = (s.alpha().is_eps() || xi == kEps) ? kEps : s.alpha().raw() + xi;
    const double hi = xi == kEps ? kEps : s.beta() + xi;
    if (!approx_le(lo, gi, tol)) return SliceViolation{i, false, gi, lo};
    if (!approx_le(gi, hi, tol)) return SliceViolation{i, true, gi, hi};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SliceViolation> slice_violation(const SliceSpace& s, const Vector& x,
                                              double tol) {
  if (x.size() != s.dimension())
    throw DimensionError("slice_membership: vector length does not match the slice space");
  if (!x.all_finite()) throw DomainError("slice_membership: slice spaces live in Rⁿ");
  return extended_violation(s, x, tol);
}

bool slice_membership(const SliceSpace& s, const Vector& x, double tol) {
  return !slice_violation(s, x, tol).has_value();
}

std::optional<double> is_bounded_projective(const SliceSpace& s) {
  if (!s.has_generators() || !s.generators()->all_finite()) return std::nullopt;
  return projective_norm_matrix(*s.generators());
}

std::vector<DifferenceBound> difference_bounds(const SliceSpace& s) {
  std::vector<DifferenceBound> out;
  if (!s.has_generators()) return out;
  const Matrix& g = *s.generators();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && g(i, j).is_finite()) out.push_back({i, j, g(i, j).raw()});
  return out;
}

std::string HalfSpaceForm::to_string() const {
  auto term = [](double c) {
    if (c == 0.0) return std::string("x_1");
    return std::string("x_1") + (c < 0 ? "-" : "+") + format_scalar(std::fabs(c));
  };
  return term(lower) + " <= x_2 <= " + term(upper);
}

std::optional<HalfSpaceForm> half_space_form(const SliceSpace& s) {
  if (s.dimension() != 2 || !s.has_generators()) return std::nullopt;
  const Matrix& g = *s.generators();
  if (g(0, 1).is_eps() || g(1, 0).is_eps()) return std::nullopt;
  // x_1 - x_2 >= g_12 and x_2 - x_1 >= g_21.
  return HalfSpaceForm{g(1, 0).raw(), -g(0, 1).raw()};
}

InclusionCheck check_map_inclusion(const Matrix& a, const SliceSpace& src,
                                   const SliceSpace& dst, double tol) {
  if (!src.has_generators())
    throw ArgumentError("map_inclusion: source slice space has no generators");
  if (!a.is_square() || a.rows() != src.dimension() || a.rows() != dst.dimension())
    throw DimensionError("map_inclusion: dimensions do not match");
  InclusionCheck out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row_raw(i);
    if (std::all_of(row.begin(), row.end(), [](double v) { return v == kEps; })) {
      out.diagnostic = "row " + std::to_string(i + 1) +
                       " of the mode matrix is all ε; images leave Rⁿ";
      return out;
    }
  }
  const Matrix& g = *src.generators();
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const Vector gen = g.col(c);
    Vector img = mat_otimes(a, gen);
    if (dst.is_min_family() && !img.all_finite()) {
      out.generator = c;
      out.image = std::move(img);
      out.diagnostic = "image of generator " + std::to_string(c + 1) +
                       " has ε entries; the min-of predicate needs finite points";
      return out;
    }
    if (auto v = extended_violation(dst, img, tol)) {
      std::ostringstream os;
      os << "image of generator " << c + 1 << ' ' << gen.to_string() << " is "
         << img.to_string() << "; row " << v->row + 1 << ": g(x) = " << format_scalar(v->image)
         << (v->upper ? " > β + x = " : " < α + x = ") << format_scalar(v->bound);
      out.generator = c;
      out.image = std::move(img);
      out.violation = v;
      out.diagnostic = os.str();
      return out;
    }
  }
  out.holds = true;
  return out;
}

bool map_inclusion(const Matrix& a, const SliceSpace& src, const SliceSpace& dst, double tol) {
  return check_map_inclusion(a, src, dst, tol).holds;
}

Vector min_mpl_apply(const std::vector<Matrix>& qs, const Vector& x) {
  if (qs.empty()) throw ArgumentError("min_mpl_apply: empty family");
  if (!x.all_finite()) throw DomainError("min_mpl_apply: x must be finite");
  std::vector<double> out(x.size(), std::numeric_limits<double>::infinity());
  for (const auto& q : qs) {
    if (q.rows() != x.size() || q.cols() != x.size())
      throw DimensionError("min_mpl_apply: matrix size does not match x");
    const Vector img = mat_otimes(q, x);
    if (!img.all_finite()) throw DomainError("min_mpl_apply: image has an ε entry");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], img.raw()[i]);
  }
  return Vector(std::move(out));
}

}  // namespace mpstab
