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
#include <vector>

#include "mpstab/matrix.hpp"

namespace mpstab {

/// Strongly connected components of the precedence graph of a square matrix
/// (edge j -> i whenever A_ij != ε), listed in topological order: every
/// edge between components goes from an earlier to a later component.
struct SccPartition {
  std::vector<std::vector<std::size_t>> components;
  /// One component that carries a cycle (so a 1x1 ε matrix is reducible).
  bool irreducible = false;
};

SccPartition precedence_scc(const Matrix& a);
bool is_irreducible(const Matrix& a);

/// Maximum cycle mean λ̄(A) (Karp's algorithm per component); ε when the
/// precedence graph is acyclic.
Scalar max_cycle_mean(const Matrix& a);

/// λ*(A): minimum diagonal entry (ε if some diagonal entry is ε).
Scalar lambda_star(const Matrix& a);

/// [A_μ]_ij = A_ij - μ, μ finite.
Matrix normalize(const Matrix& a, double mu);

/// A⋆ = ℐ ⊕ A ⊕ A^{⊗2} ⊕ ... via all-pairs longest-path closure.
/// Throws StarDivergenceError when λ̄(A) > tol.
Matrix kleene_star(const Matrix& a, double tol = kDefaultTolerance);

/// A ⊗ A⋆ (the weak transitive closure A⁺). Same precondition as kleene_star.
Matrix kleene_plus(const Matrix& a, double tol = kDefaultTolerance);

struct Eigenpair {
  double eigenvalue;
  Vector eigenvector;
  /// Nodes i with (A_λ ⊗ (A_λ)⋆)_ii = 0.
  std::vector<std::size_t> critical_nodes;
};

/// Finite eigenvector for λ̄(A), taken from the star column of the smallest
/// critical node whose column is finite. Absent when no finite eigenvector
/// is found, which happens only for reducible A, including the acyclic case
/// λ̄(A) = ε.
std::optional<Eigenpair> eigenpair(const Matrix& a);
std::optional<Vector> eigenvector(const Matrix& a);

struct SpectralData {
  Scalar lambda_max;
  Scalar lambda_star;
  bool irreducible = false;
  SccPartition scc;
  std::optional<Vector> eigenvector;
  std::vector<std::size_t> critical_nodes;
};

SpectralData analyze_spectrum(const Matrix& a);

}  // namespace mpstab
