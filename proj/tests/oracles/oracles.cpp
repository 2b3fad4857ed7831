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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

Entry oplus(Entry a, Entry b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

Entry otimes(Entry a, Entry b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

IntMat identity(std::size_t n) {
  IntMat m(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
  return m;
}

IntMat product(const IntMat& a, const IntMat& b) {
  const std::size_t m = a.size(), k = b.size(), n = b.front().size();
  IntMat c(m, IntVec(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < k; ++t) c[i][j] = oplus(c[i][j], otimes(a[i][t], b[t][j]));
  return c;
}

IntVec product(const IntMat& a, const IntVec& x) {
  IntVec y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t t = 0; t < x.size(); ++t) y[i] = oplus(y[i], otimes(a[i][t], x[t]));
  return y;
}

IntMat sum(const IntMat& a, const IntMat& b) {
  IntMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = oplus(a[i][j], b[i][j]);
  return c;
}

IntMat shifted(const IntMat& a, std::int64_t s) {
  IntMat c = a;
  for (auto& row : c)
    for (auto& e : row)
      if (e) *e += s;
  return c;
}

namespace {

// Enumerate each elementary cycle once, rooted at its smallest vertex.
void extend(const IntMat& a, std::size_t root, std::size_t v, std::int64_t weight,
            std::int64_t length, std::vector<bool>& on_path, std::optional<Rational>& best) {
  const std::size_t n = a.size();
  for (std::size_t w = root; w < n; ++w) {
    // Edge v -> w exists iff a[w][v] is finite.
    if (!a[w][v]) continue;
    const std::int64_t wt = weight + *a[w][v];
    if (w == root) {
      const std::int64_t g = std::gcd(wt < 0 ? -wt : wt, length + 1);
      Rational r{wt / (g == 0 ? 1 : g), (length + 1) / (g == 0 ? 1 : g)};
      if (!best || *best < r) best = r;
    } else if (!on_path[w]) {
      on_path[w] = true;
      extend(a, root, w, wt, length + 1, on_path, best);
      on_path[w] = false;
    }
  }
}

}  // namespace

std::optional<Rational> max_cycle_mean(const IntMat& a) {
  std::optional<Rational> best;
  std::vector<bool> on_path(a.size(), false);
  for (std::size_t root = 0; root < a.size(); ++root) {
    on_path[root] = true;
    extend(a, root, root, 0, 0, on_path, best);
    on_path[root] = false;
  }
  return best;
}

IntMat truncated_star(const IntMat& a) {
  const std::size_t n = a.size();
  IntMat acc = identity(n);
  IntMat power = identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = product(power, a);
    acc = sum(acc, power);
  }
  return acc;
}

bool strongly_connected(const IntMat& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = (i == j) || a[i][j].has_value();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  // A single node needs a self-loop to carry a cycle.
  return n > 1 || a[0][0].has_value();
}

std::int64_t projective_norm(const std::vector<std::int64_t>& x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

IntMat random_matrix(mpstab::SplitMix64& rng, std::size_t n, std::int64_t lo, std::int64_t hi,
                     unsigned eps_pct) {
  IntMat m(n, IntVec(n));
  for (auto& row : m)
    for (auto& e : row) {
      if (rng.below(100) < eps_pct)
        e = std::nullopt;
      else
        e = rng.uniform_int(lo, hi);
    }
  return m;
}

mpstab::Matrix to_matrix(const IntMat& a) {
  std::vector<std::vector<double>> rows;
  for (const auto& row : a) {
    std::vector<double> r;
    for (const auto& e : row)
      r.push_back(e ? static_cast<double>(*e) : -std::numeric_limits<double>::infinity());
    rows.push_back(std::move(r));
  }
  return mpstab::Matrix::from_rows(rows);
}

IntMat from_matrix(const mpstab::Matrix& a) {
  IntMat m(a.rows(), IntVec(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double v = a.row_raw(i)[j];
      if (std::isfinite(v)) m[i][j] = static_cast<std::int64_t>(std::llround(v));
    }
  return m;
}

}  // namespace oracle
