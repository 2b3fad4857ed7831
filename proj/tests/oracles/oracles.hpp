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

// Independent brute-force references over the integers. ε is an empty
// optional; nothing here calls into the library under test except the
// conversion helpers at the bottom.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mpstab/matrix.hpp"
#include "mpstab/rng.hpp"

namespace oracle {

using Entry = std::optional<std::int64_t>;
using IntMat = std::vector<std::vector<Entry>>;
using IntVec = std::vector<Entry>;

Entry oplus(Entry a, Entry b);
Entry otimes(Entry a, Entry b);

IntMat identity(std::size_t n);
IntMat product(const IntMat& a, const IntMat& b);
IntVec product(const IntMat& a, const IntVec& x);
IntMat sum(const IntMat& a, const IntMat& b);
IntMat shifted(const IntMat& a, std::int64_t s);

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num;
  std::int64_t den;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// Maximum mean over all elementary cycles, by exhaustive enumeration.
std::optional<Rational> max_cycle_mean(const IntMat& a);

/// I ⊕ A ⊕ … ⊕ A^{n-1}. Equals the Kleene star when every cycle weight is <= 0.
IntMat truncated_star(const IntMat& a);

/// Strong connectivity of the precedence graph by transitive closure.
bool strongly_connected(const IntMat& a);

/// max_i x_i - min_i x_i for finite x.
std::int64_t projective_norm(const std::vector<std::int64_t>& x);

/// Uniform entries in [lo, hi]; each is ε with probability eps_pct / 100.
IntMat random_matrix(mpstab::SplitMix64& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                     unsigned eps_pct);

mpstab::Matrix to_matrix(const IntMat& a);
IntMat from_matrix(const mpstab::Matrix& a);

}  // namespace oracle
