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
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "mpstab/matrix.hpp"

namespace mpstab {

/// Semi-autonomous switching max-plus linear system x(k) = A^(l(k)) ⊗ x(k-1).
/// Mode indices are 0-based in this API.
class SmplSystem {
 public:
  /// All modes square of a common size; at least one mode.
  explicit SmplSystem(std::vector<Matrix> modes);

  std::size_t dimension() const noexcept { return modes_.front().rows(); }
  std::size_t mode_count() const noexcept { return modes_.size(); }
  const Matrix& mode(std::size_t l) const;
  const std::vector<Matrix>& modes() const noexcept { return modes_; }

  /// (mode, row) pairs whose row is all ε. Such a mode maps finite states
  /// outside Rⁿ; step() rejects the result.
  std::vector<std::pair<std::size_t, std::size_t>> empty_rows() const;

  /// ⊕ of all mode matrices.
  Matrix mode_sum() const;

 private:
  std::vector<Matrix> modes_;
};

Vector step(const SmplSystem& sys, const Vector& x, std::size_t mode);

struct Trajectory {
  std::vector<Vector> states;       ///< x(0) ... x(K)
  std::vector<std::size_t> switching;  ///< l(1) ... l(K)

  std::size_t length() const noexcept { return switching.size(); }
};

Trajectory simulate(const SmplSystem& sys, const Vector& x0,
                    const std::vector<std::size_t>& switching);

/// Re-simulates and compares every stored state exactly.
bool verify_recurrence(const SmplSystem& sys, const Trajectory& traj);

/// Switching-signal constraint: finite automaton whose transitions are labelled
/// by modes. Nondeterminism is allowed.
struct Automaton {
  struct Transition {
    std::size_t from;
    std::size_t mode;
    std::size_t to;
  };
  std::vector<std::string> states;
  std::vector<std::size_t> initial;
  std::vector<Transition> transitions;

  std::vector<const Transition*> outgoing(std::size_t state) const;
  /// True iff some run of the automaton reads the word.
  bool accepts(const std::vector<std::size_t>& word) const;
  /// Throws GenerationError naming the first reachable state that has no
  /// outgoing transition.
  void check_no_dead_states() const;
};

struct ArbitrarySwitching {
  std::size_t mode_count;
};
struct PeriodicSwitching {
  std::vector<std::size_t> pattern;
};
struct AutomatonSwitching {
  Automaton automaton;
};
using SwitchingPolicy = std::variant<ArbitrarySwitching, PeriodicSwitching, AutomatonSwitching>;

/// Reproducible for a fixed seed. The automaton policy starts in a uniformly
/// chosen initial state and takes uniformly chosen enabled transitions.
std::vector<std::size_t> gen_switching(const SwitchingPolicy& policy, std::size_t length,
                                       std::uint64_t seed);

struct EmpiricalMetrics {
  std::vector<double> proj_norm_trace;
  double delta_min = 0;
  double delta_max = 0;
  std::vector<double> growth_rate;
  std::size_t lag = 1;
  /// Present when the trajectory has at least 2·lag + 1 states.
  std::optional<std::vector<Vector>> second_differences;
};

/// Needs K >= 1 and finite states.
EmpiricalMetrics metrics(const Trajectory& traj, std::size_t lag = 1);

/// x(k+c) - 2x(k) + x(k-c) for k = c .. K-c. Throws ArgumentError when the
/// trajectory is shorter than 2c + 1 states.
std::vector<Vector> second_differences(const Trajectory& traj, std::size_t lag);

/// CSV with header k,l,x_1..x_n,proj_norm; l is 1-based and blank for k = 0.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Independent runs of a batch, each with its own seed and start state.
struct BatchRun {
  Vector x0;
  std::uint64_t seed;
};
struct BatchSummary {
  std::size_t runs = 0;
  std::size_t steps = 0;
  double max_proj_norm = 0;
  double delta_min = 0;
  double delta_max = 0;
  /// Number of (run, k) with ‖x(k)‖_P > bound, when a bound was supplied.
  std::size_t bound_violations = 0;
};

/// Runs are independent and merged in input order, so the result does not
/// depend on how many worker threads execute them.
BatchSummary simulate_batch(const SmplSystem& sys, const SwitchingPolicy& policy,
                            const std::vector<BatchRun>& runs, std::size_t length,
                            std::optional<double> proj_bound, unsigned threads = 0);

}  // namespace mpstab
