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

#include "catch_amalgamated.hpp"
#include "mpstab/ops.hpp"
#include "mpstab/spectral.hpp"
#include "mpstab/stability.hpp"
#include "oracles.hpp"

using namespace mpstab;
constexpr double E = kEps;

namespace {

const Matrix kA1 = Matrix::from_rows({{4, E}, {1, 1}});
SmplSystem system1() { return SmplSystem({kA1, Matrix::from_rows({{3, 3}, {E, 6}})}); }
SmplSystem system2() { return SmplSystem({kA1, Matrix::from_rows({{3, E}, {E, 6}})}); }
const Matrix kQ1 = Matrix::from_rows({{4, 3}, {1, 1}});
const Matrix kQ2 = Matrix::from_rows({{4, 0}, {0, 4}});

Automaton no_double_mode2() {
  Automaton a;
  a.states = {"1", "2"};
  a.initial = {0, 1};
  a.transitions = {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}};
  return a;
}

bool edges_reverify(const SmplSystem& sys, const StabilityCertificate& c) {
  for (const auto& e : c.edges)
    if (!map_inclusion(sys.mode(e.mode), c.cones[e.from], c.cones[e.to])) return false;
  return true;
}

}  // namespace

TEST_CASE("verdict and notion names", "[stability]") {
  CHECK(to_string(Verdict::kCertified) == "certified");
  CHECK(to_string(Verdict::kUnsupportedRegion) == "unsupported-region");
  CHECK(to_string(Notion::kPathCompleteWeakBounded) == "path-complete-weak-bounded");
}

TEST_CASE("uniform check on example 1", "[stability]") {
  const SmplSystem sys = system1();
  const auto c = check_uniform(sys, sys.mode_sum(), 4.0, 6.0);
  CHECK(c.certified());
  CHECK(c.notion == Notion::kUniformWeakBounded);
  CHECK(c.proj_bound == 5.0);
  REQUIRE(c.lipschitz_bounds);
  CHECK(c.lipschitz_bounds->lower == 1);
  CHECK(c.lipschitz_bounds->upper == 6);
  CHECK(c.edges.size() == 2);
  CHECK(edges_reverify(sys, c));
  // Defaults are λ*(Q) = 4 and λ̄(Q) = 6.
  const auto d = check_uniform(sys, sys.mode_sum());
  CHECK(d.alpha == Scalar(4));
  CHECK(d.beta == 6);
  CHECK(d.certified());
}

TEST_CASE("uniform check failures", "[stability]") {
  const SmplSystem sys = system2();
  // ⊕ of the modes is reducible here and has no finite eigenvector.
  const auto sum = check_uniform(sys, sys.mode_sum());
  CHECK(sum.verdict == Verdict::kNotCertified);
  CHECK(sum.diagnostics.back().find("eigenvector") != std::string::npos);
  CHECK_THROWS_AS(check_uniform(SmplSystem({kA1}), Matrix::from_rows({{4, E}, {1, E}})), ArgumentError);
  const auto c = check_uniform(sys, kQ1, 0.0, 4.0);
  CHECK(c.verdict == Verdict::kNotCertified);
  REQUIRE_FALSE(c.diagnostics.empty());
  CHECK(c.diagnostics.back().find("(2, 6)") != std::string::npos);
  const auto u = check_uniform(system1(), system1().mode_sum(), 5.0, 6.0);
  CHECK(u.verdict == Verdict::kUnsupportedRegion);
}

TEST_CASE("path-complete check on example 2", "[stability]") {
  const SmplSystem sys = system2();
  const auto c = check_path_complete(sys, {kQ1, kQ2}, 0.0, 4.0, no_double_mode2());
  CHECK(c.certified());
  CHECK(c.notion == Notion::kPathCompleteWeakBounded);
  const std::vector<InclusionEdge> want{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}};
  CHECK(c.edges == want);
  CHECK(c.relation.size() == 5);
  CHECK(edges_reverify(sys, c));
  CHECK(c.proj_bound == 4.0);

  const auto arb = check_path_complete(sys, {kQ1, kQ2}, 0.0, 4.0);
  CHECK(arb.verdict == Verdict::kNotCertified);
  CHECK(arb.edges.empty());
  REQUIRE(arb.diagnostics.size() >= 2);
  CHECK(arb.diagnostics[0].find("cone 2") != std::string::npos);
  CHECK(arb.diagnostics[1].find("cone 1") != std::string::npos);

  // A constraint that allows "2,2" cannot be tracked.
  Automaton loose = no_double_mode2();
  loose.transitions.push_back({1, 1, 1});
  CHECK(check_path_complete(sys, {kQ1, kQ2}, 0.0, 4.0, loose).verdict == Verdict::kNotCertified);

  CHECK_THROWS_AS(check_path_complete(sys, {}, 0.0, 4.0), ArgumentError);
  CHECK(check_path_complete(sys, {kQ1, kQ2}, 2.0, 4.0).verdict == Verdict::kUnsupportedRegion);
}

TEST_CASE("strong bounded-buffer check", "[stability]") {
  const SmplSystem id({Matrix::identity(2)});
  const auto c = check_strong_bounded(id, Matrix::from_rows({{-1, -2}, {-2, -1}}));
  CHECK(c.certified());
  CHECK(c.notion == Notion::kStrongBounded);
  CHECK_THROWS_AS(check_strong_bounded(id, Matrix::from_rows({{1, 0}, {0, 0}})), EmptyConeError);

  const SmplSystem sys = system1();
  std::vector<Matrix> normalized;
  for (const auto& a : sys.modes()) normalized.push_back(normalize(a, 6));
  const auto s = check_strong_bounded(SmplSystem(normalized), normalize(sys.mode_sum(), 6));
  CHECK(s.certified());
  REQUIRE(s.cones.front().generators());
  CHECK(*s.cones.front().generators() == Matrix::from_rows({{0, -3}, {-5, 0}}));

  const auto r = check_strong_bounded(id, Matrix::from_rows({{-1, E}, {0, -1}}));
  CHECK(r.verdict == Verdict::kUnsupportedRegion);
}

TEST_CASE("generic invariance checker", "[stability]") {
  const SmplSystem sys = system1();
  const auto single = check_proposition1(sys, SingleMatrix{sys.mode_sum()}, 4.0, 6.0);
  const auto uni = check_uniform(sys, sys.mode_sum(), 4.0, 6.0);
  CHECK(single.verdict == uni.verdict);
  CHECK(single.notion == uni.notion);
  CHECK(single.proj_bound == uni.proj_bound);
  CHECK(single.edges == uni.edges);

  const auto min = check_proposition1(system2(), MinOfMatrices{{kQ1, kQ2}}, 0.0, 4.0);
  CHECK(min.cones.size() == 1);
  CHECK(min.cones.front().is_min_family());
  CHECK(slice_membership(min.cones.front(), Vector{0, 0}));

  // α = β = λ̄: the slice is the eigenspace.
  const Matrix q = Matrix::from_rows({{0, -1}, {-1, 0}});
  const auto eig = check_proposition1(SmplSystem({Matrix::identity(2)}), SingleMatrix{q}, 0.0, 0.0);
  CHECK(eig.certified());
}

TEST_CASE("certificate invariants on random systems", "[stability][property]") {
  SplitMix64 rng(123);
  std::size_t certified = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(3);
    std::vector<Matrix> modes;
    const std::size_t nm = 1 + rng.below(2);
    for (std::size_t l = 0; l < nm; ++l) {
      auto im = oracle::random_matrix(rng, n, -4, 4, 20);
      for (std::size_t i = 0; i < n; ++i)
        if (!im[i][i]) im[i][i] = rng.uniform_int(-4, 4);
      modes.push_back(oracle::to_matrix(im));
    }
    const SmplSystem sys(modes);
    const Matrix q = sys.mode_sum();
    const double ls = lambda_star(q).value();
    const double lm = max_cycle_mean(q).value();

    const auto u = check_uniform(sys, q, ls, lm);
    const auto p = check_path_complete(sys, {q}, ls, lm);
    REQUIRE(u.verdict == p.verdict);
    REQUIRE(u.proj_bound == p.proj_bound);
    if (!u.certified()) continue;
    ++certified;
    REQUIRE(u.cones.size() == 1);
    REQUIRE(u.edges.size() == sys.mode_count());
    for (const auto& e : u.edges) REQUIRE((e.from == 0 && e.to == 0));
    REQUIRE(edges_reverify(sys, u));
    // Widening [α, β] keeps the certificate.
    const auto wider = check_uniform(sys, q, ls - double(rng.below(3)), lm + double(rng.below(3)));
    REQUIRE(wider.certified());

    if (u.proj_bound) {
      // Certified weak bound holds along simulated trajectories.
      const Matrix& g = *u.cones.front().generators();
      std::vector<double> lam(n);
      for (auto& v : lam) v = double(rng.uniform_int(-5, 5));
      const Vector x0 = mat_otimes(g, Vector(lam));
      const auto word = gen_switching(ArbitrarySwitching{sys.mode_count()}, 200, rng.next());
      const auto traj = simulate(sys, x0, word);
      for (const auto& x : traj.states) REQUIRE(projective_norm(x) <= *u.proj_bound + 1e-9);
      if (u.lipschitz_bounds) {
        const auto m = metrics(traj);
        REQUIRE(u.lipschitz_bounds->lower <= m.delta_min + 1e-9);
        REQUIRE(m.delta_max <= u.lipschitz_bounds->upper + 1e-9);
      }
    }
  }
  CHECK(certified > 10);
}
