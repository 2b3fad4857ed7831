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

#include "mpstab/smpl.hpp"

#include <algorithm>
#include <string>

#include "mpstab/ops.hpp"

namespace mpstab {

SmplSystem::SmplSystem(std::vector<Matrix> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw ArgumentError("SMPL system needs at least one mode");
  const std::size_t n = modes_.front().rows();
  for (std::size_t l = 0; l < modes_.size(); ++l) {
    if (!modes_[l].is_square() || modes_[l].rows() != n)
      throw DimensionError("mode " + std::to_string(l + 1) + " is not " + std::to_string(n) +
                           "x" + std::to_string(n));
  }
}

const Matrix& SmplSystem::mode(std::size_t l) const {
  if (l >= modes_.size())
    throw ArgumentError("mode index " + std::to_string(l + 1) + " out of range 1.." +
                        std::to_string(modes_.size()));
  return modes_[l];
}

std::vector<std::pair<std::size_t, std::size_t>> SmplSystem::empty_rows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < modes_.size(); ++l) {
    for (std::size_t i = 0; i < modes_[l].rows(); ++i) {
      auto r = modes_[l].row_raw(i);
      if (std::all_of(r.begin(), r.end(), [](double v) { return v == kEps; }))
        out.emplace_back(l, i);
    }
  }
  return out;
}

Matrix SmplSystem::mode_sum() const {
  Matrix q = modes_.front();
  for (std::size_t l = 1; l < modes_.size(); ++l) q = mat_oplus(q, modes_[l]);
  return q;
}

Vector step(const SmplSystem& sys, const Vector& x, std::size_t mode) {
  const Matrix& a = sys.mode(mode);
  if (x.size() != sys.dimension()) throw DimensionError("step: state has the wrong length");
  if (!x.all_finite()) throw DomainError("step: state must be finite");
  Vector y = mat_otimes(a, x);
  if (!y.all_finite())
    throw DomainError("step: mode " + std::to_string(mode + 1) +
                      " produced a non-finite state (all-ε row)");
  return y;
}

Trajectory simulate(const SmplSystem& sys, const Vector& x0,
                    const std::vector<std::size_t>& switching) {
  if (x0.size() != sys.dimension()) throw DimensionError("simulate: x0 has the wrong length");
  if (!x0.all_finite()) throw DomainError("simulate: x0 must be finite");
  Trajectory t;
  t.switching = switching;
  t.states.reserve(switching.size() + 1);
  t.states.push_back(x0);
  for (std::size_t l : switching) t.states.push_back(step(sys, t.states.back(), l));
  return t;
}

bool verify_recurrence(const SmplSystem& sys, const Trajectory& traj) {
  if (traj.states.size() != traj.switching.size() + 1) return false;
  for (std::size_t k = 0; k < traj.switching.size(); ++k) {
    if (mat_otimes(sys.mode(traj.switching[k]), traj.states[k]) != traj.states[k + 1])
      return false;
  }
  return true;
}

}  // namespace mpstab
