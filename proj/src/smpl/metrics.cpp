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

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>
#include <thread>

#include "mpstab/ops.hpp"
#include "mpstab/smpl.hpp"

namespace mpstab {

EmpiricalMetrics metrics(const Trajectory& traj, std::size_t lag) {
  if (traj.states.size() < 2)
    throw ArgumentError("metrics: trajectory needs at least one step");
  if (lag == 0) throw ArgumentError("metrics: lag must be positive");
  EmpiricalMetrics m;
  m.lag = lag;
  m.proj_norm_trace.reserve(traj.states.size());
  for (const auto& x : traj.states) m.proj_norm_trace.push_back(projective_norm(x));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const auto cur = traj.states[k].raw();
    const auto prev = traj.states[k - 1].raw();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const double d = cur[i] - prev[i];
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  m.delta_min = lo;
  m.delta_max = hi;

  const double big_k = static_cast<double>(traj.states.size() - 1);
  for (double v : traj.states.back().raw()) m.growth_rate.push_back(v / big_k);

  if (traj.states.size() >= 2 * lag + 1) m.second_differences = second_differences(traj, lag);
  return m;
}

std::vector<Vector> second_differences(const Trajectory& traj, std::size_t lag) {
  if (lag == 0) throw ArgumentError("second_differences: lag must be positive");
  if (traj.states.size() < 2 * lag + 1)
    throw ArgumentError("second_differences: trajectory needs at least " +
                        std::to_string(2 * lag + 1) + " states");
  std::vector<Vector> out;
  const std::size_t last = traj.states.size() - 1;
  for (std::size_t k = lag; k + lag <= last; ++k) {
    const auto a = traj.states[k + lag].raw();
    const auto b = traj.states[k].raw();
    const auto c = traj.states[k - lag].raw();
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - 2 * b[i] + c[i];
    out.emplace_back(std::move(d));
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  os << "k,l";
  for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
  os << ",proj_norm\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const Vector& x = traj.states[k];
    os << k << ',';
    if (k > 0) os << traj.switching[k - 1] + 1;
    for (double v : x.raw()) os << ',' << format_scalar(v);
    os << ',' << (x.all_finite() ? format_scalar(projective_norm(x)) : std::string("-inf"))
       << '\n';
  }
}

namespace {

BatchSummary run_one(const SmplSystem& sys, const SwitchingPolicy& policy, const BatchRun& run,
                     std::size_t length, std::optional<double> bound) {
  const auto sw = gen_switching(policy, length, run.seed);
  BatchSummary s;
  s.runs = 1;
  s.steps = length;
  s.delta_min = std::numeric_limits<double>::infinity();
  s.delta_max = -std::numeric_limits<double>::infinity();
  Vector x = run.x0;
  auto account = [&](const Vector& v) {
    const double p = projective_norm(v);
    s.max_proj_norm = std::max(s.max_proj_norm, p);
    if (bound && !approx_le(p, *bound)) ++s.bound_violations;
  };
  account(x);
  for (std::size_t l : sw) {
    Vector y = step(sys, x, l);
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double d = y.raw()[i] - x.raw()[i];
      s.delta_min = std::min(s.delta_min, d);
      s.delta_max = std::max(s.delta_max, d);
    }
    account(y);
    x = std::move(y);
  }
  return s;
}

void merge(BatchSummary& into, const BatchSummary& r) {
  into.runs += r.runs;
  into.steps += r.steps;
  into.max_proj_norm = std::max(into.max_proj_norm, r.max_proj_norm);
  into.delta_min = std::min(into.delta_min, r.delta_min);
  into.delta_max = std::max(into.delta_max, r.delta_max);
  into.bound_violations += r.bound_violations;
}

}  // namespace

BatchSummary simulate_batch(const SmplSystem& sys, const SwitchingPolicy& policy,
                            const std::vector<BatchRun>& runs, std::size_t length,
                            std::optional<double> proj_bound, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BatchSummary> results(runs.size());
  const std::size_t workers = std::min<std::size_t>(threads, runs.size());
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) {
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t r = w; r < runs.size(); r += workers)
        results[r] = run_one(sys, policy, runs[r], length, proj_bound);
    }));
  }
  for (auto& f : pending) f.get();

  BatchSummary total;
  total.delta_min = std::numeric_limits<double>::infinity();
  total.delta_max = -std::numeric_limits<double>::infinity();
  for (const auto& r : results) merge(total, r);
  return total;
}

}  // namespace mpstab
