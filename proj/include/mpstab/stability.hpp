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
#include <string_view>
#include <variant>
#include <vector>

#include "mpstab/cones.hpp"
#include "mpstab/smpl.hpp"

namespace mpstab {

enum class Verdict { kCertified, kNotCertified, kUnsupportedRegion };

enum class Notion {
  kUniformLipschitz,
  kUniformWeakBounded,
  kPathCompleteLipschitz,
  kPathCompleteWeakBounded,
  kStrongBounded,
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Notion n) noexcept;

/// (i, l, j): A^(l) S_i ⊆ S_j. 0-based here, 1-based in reports.
struct InclusionEdge {
  std::size_t from;
  std::size_t mode;
  std::size_t to;
  auto operator<=>(const InclusionEdge&) const = default;
};

struct LipschitzBounds {
  double lower;
  double upper;
};

struct StabilityCertificate {
  Verdict verdict = Verdict::kNotCertified;
  Notion notion = Notion::kUniformLipschitz;
  Scalar alpha;
  double beta = 0;
  std::vector<SliceSpace> cones;
  /// Full inclusion relation over all (i, l, j) (path-complete checks).
  std::vector<InclusionEdge> relation;
  /// Witness edges: the cone graph that covers the admissible switching.
  std::vector<InclusionEdge> edges;
  std::optional<double> proj_bound;
  std::optional<LipschitzBounds> lipschitz_bounds;
  std::vector<std::string> diagnostics;

  bool certified() const noexcept { return verdict == Verdict::kCertified; }
};

/// Uniform check with one common slice space of Q. alpha and
/// beta default to λ*(Q) and λ̄(Q). Throws ArgumentError when Q is not
/// square or has an ε diagonal entry.
StabilityCertificate check_uniform(const SmplSystem& sys, const Matrix& q,
                                   std::optional<double> alpha = std::nullopt,
                                   std::optional<double> beta = std::nullopt);

/// Path-complete check over a family of slice spaces S_α^β(Q^(j)).
/// Without a constraint the switching is arbitrary; the certificate then
/// needs a non-empty family of cones closed under every mode. With a
/// constraint automaton (states may be any labels), every admissible word
/// must be tracked by a path of inclusion edges.
StabilityCertificate check_path_complete(const SmplSystem& sys, const std::vector<Matrix>& qs,
                                         double alpha, double beta,
                                         const std::optional<Automaton>& constraint = std::nullopt);

/// Invariance of K = { x | Q ⊗ x <= x }. Throws EmptyConeError when λ̄(Q) > 0.
StabilityCertificate check_strong_bounded(const SmplSystem& sys, const Matrix& q);

struct SingleMatrix {
  Matrix q;
};
struct MinOfMatrices {
  std::vector<Matrix> qs;
};
using GeneratingFunction = std::variant<SingleMatrix, MinOfMatrices>;

/// Generic slice-space invariance. The single-matrix case delegates to
/// check_uniform. The min-of case tests the min predicate on the images of
/// the union of the per-matrix generators.
StabilityCertificate check_proposition1(const SmplSystem& sys, const GeneratingFunction& g,
                                        double alpha, double beta);

/// Sound bounds on A^(l) ⊗ x - x over x in the given cones, from their
/// difference constraints. Absent when some bound is infinite.
std::optional<LipschitzBounds> lipschitz_bounds(const SmplSystem& sys,
                                                const std::vector<const SliceSpace*>& cones);

}  // namespace mpstab
