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

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "mpstab/error.hpp"

namespace mpstab {

/// Literal for ε in raw-double initializers such as Matrix::from_rows.
inline constexpr double kEps = -std::numeric_limits<double>::infinity();

/// Default absolute tolerance for comparisons on non-integer data.
inline constexpr double kDefaultTolerance = 1e-9;

/// Element of R ∪ {ε}. ε is stored as -inf; NaN and +inf are rejected, so
/// the raw value is always safe for max/add in the kernels.
class Scalar {
 public:
  constexpr Scalar() noexcept : v_(kEps) {}
  explicit Scalar(double v) : v_(check(v)) {}

  static constexpr Scalar eps() noexcept { return Scalar(); }
  static constexpr Scalar one() noexcept { return Scalar(Unchecked{}, 0.0); }

  constexpr bool is_eps() const noexcept { return v_ == kEps; }
  constexpr bool is_finite() const noexcept { return v_ != kEps; }

  /// Raw value; -inf for ε.
  constexpr double raw() const noexcept { return v_; }

  /// Finite value. Throws DomainError on ε.
  double value() const {
    if (is_eps()) throw DomainError("ε has no finite value");
    return v_;
  }

  constexpr auto operator<=>(const Scalar&) const = default;
  constexpr bool operator==(const Scalar&) const = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  constexpr Scalar(Unchecked, double v) noexcept : v_(v) {}

  static double check(double v) {
    if (std::isnan(v)) throw DomainError("NaN is not an extended real");
    if (v == std::numeric_limits<double>::infinity())
      throw DomainError("+inf is not an element of the max-plus semiring");
    return v;
  }

  double v_;
};

/// a ⊕ b = max(a, b).
constexpr Scalar oplus(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

/// a ⊗ b = a + b, ε absorbing.
inline Scalar otimes(Scalar a, Scalar b) {
  if (a.is_eps() || b.is_eps()) return Scalar::eps();
  return Scalar(a.raw() + b.raw());
}

/// Approximate a <= b. ε compares below every finite value.
inline bool approx_le(double a, double b, double tol = kDefaultTolerance) {
  if (a == kEps) return true;
  if (b == kEps) return false;
  return a <= b + tol;
}

inline bool approx_eq(double a, double b, double tol = kDefaultTolerance) {
  if (a == kEps || b == kEps) return a == b;
  return std::fabs(a - b) <= tol;
}

/// True when v is ε or an integer value (exact-comparison regime).
inline bool is_integral(double v) {
  return v == kEps || (std::isfinite(v) && std::nearbyint(v) == v);
}

/// "-inf" for ε, shortest round-trip decimal otherwise.
std::string format_scalar(double v);

}  // namespace mpstab
