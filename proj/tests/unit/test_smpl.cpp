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

#include <sstream>

#include "catch_amalgamated.hpp"
#include "mpstab/ops.hpp"
#include "mpstab/smpl.hpp"
#include "oracles.hpp"

using namespace mpstab;
constexpr double E = kEps;

namespace {

SmplSystem system1() {
  return SmplSystem({Matrix::from_rows({{4, E}, {1, 1}}), Matrix::from_rows({{3, 3}, {E, 6}})});
}

Automaton no_double_mode2() {
  Automaton a;
  a.states = {"1", "2"};
  a.initial = {0, 1};
  a.transitions = {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}};
  return a;
}

SmplSystem random_system(SplitMix64& rng, std::size_t n, std::size_t modes) {
  std::vector<Matrix> ms;
  for (std::size_t l = 0; l < modes; ++l) {
    auto im = oracle::random_matrix(rng, n, -9, 9, 40);
    for (auto& row : im)
      if (std::none_of(row.begin(), row.end(), [](auto e) { return e.has_value(); }))
        row[rng.below(n)] = rng.uniform_int(-9, 9);
    ms.push_back(oracle::to_matrix(im));
  }
  return SmplSystem(std::move(ms));
}

}  // namespace

TEST_CASE("system construction", "[smpl]") {
  const SmplSystem sys = system1();
  CHECK(sys.dimension() == 2);
  CHECK(sys.mode_count() == 2);
  CHECK(sys.mode_sum() == Matrix::from_rows({{4, 3}, {1, 6}}));
  CHECK(sys.empty_rows().empty());
  CHECK_THROWS_AS(sys.mode(2), ArgumentError);
  CHECK_THROWS_AS(SmplSystem({}), ArgumentError);
  CHECK_THROWS_AS(SmplSystem({Matrix(2, 2), Matrix(3, 3)}), DimensionError);
  const SmplSystem bad({Matrix::from_rows({{0, 0}, {E, E}})});
  REQUIRE(bad.empty_rows().size() == 1);
  CHECK(bad.empty_rows().front() == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("step and simulate", "[smpl]") {
  const SmplSystem sys = system1();
  CHECK(step(sys, Vector{0, 0}, 0) == Vector{4, 1});
  CHECK(step(sys, Vector{0, 0}, 1) == Vector{3, 6});
  CHECK_THROWS_AS(step(sys, Vector{0, 0}, 5), ArgumentError);
  CHECK_THROWS_AS(step(sys, Vector{0, E}, 0), DomainError);
  const SmplSystem id({Matrix::identity(3)});
  CHECK(step(id, Vector{1, 2, 3}, 0) == Vector{1, 2, 3});

  auto t = simulate(sys, Vector{0, 0}, {0, 0});
  REQUIRE(t.states.size() == 3);
  CHECK(t.states[1] == Vector{4, 1});
  CHECK(t.states[2] == Vector{8, 5});
  CHECK(simulate(sys, Vector{0, 0}, {}).states.size() == 1);
  t = simulate(sys, Vector{0, 0}, {1});
  CHECK(t.states.back() == Vector{3, 6});
  CHECK(verify_recurrence(sys, t));
  t.states.back() = Vector{3, 7};
  CHECK_FALSE(verify_recurrence(sys, t));
  const SmplSystem bad({Matrix::from_rows({{0, 0}, {E, E}})});
  CHECK_THROWS_AS(step(bad, Vector{0, 0}, 0), DomainError);
}

TEST_CASE("switching generators", "[smpl]") {
  CHECK(gen_switching(PeriodicSwitching{{0, 1}}, 5, 0) == std::vector<std::size_t>{0, 1, 0, 1, 0});
  CHECK(gen_switching(ArbitrarySwitching{2}, 50, 9) == gen_switching(ArbitrarySwitching{2}, 50, 9));
  CHECK(gen_switching(ArbitrarySwitching{2}, 50, 9) != gen_switching(ArbitrarySwitching{2}, 50, 10));
  CHECK(gen_switching(ArbitrarySwitching{2}, 0, 1).empty());
  CHECK_THROWS_AS(gen_switching(PeriodicSwitching{{}}, 3, 0), ArgumentError);

  const auto word = gen_switching(AutomatonSwitching{no_double_mode2()}, 5000, 3);
  for (std::size_t k = 1; k < word.size(); ++k) REQUIRE_FALSE((word[k - 1] == 1 && word[k] == 1));
  CHECK(no_double_mode2().accepts(word));
  CHECK_FALSE(no_double_mode2().accepts({1, 1}));
  CHECK(no_double_mode2().accepts({0, 1, 0, 0, 1}));

  Automaton dead;
  dead.states = {"a", "sink"};
  dead.initial = {0};
  dead.transitions = {{0, 0, 1}};
  try {
    gen_switching(AutomatonSwitching{dead}, 3, 0);
    FAIL("expected a generation error");
  } catch (const GenerationError& e) {
    CHECK(std::string(e.what()).find("sink") != std::string::npos);
  }
}

TEST_CASE("empirical metrics", "[smpl]") {
  const SmplSystem sys = system1();
  const auto t = simulate(sys, Vector{0, 0}, {0, 0});
  const auto m = metrics(t);
  CHECK(m.proj_norm_trace == std::vector<double>{0, 3, 3});
  CHECK(m.delta_min == 1);
  CHECK(m.delta_max == 4);
  CHECK(m.growth_rate == std::vector<double>{4, 2.5});
  REQUIRE(m.second_differences);
  CHECK(m.second_differences->size() == 1);

  const SmplSystem lin({Matrix::from_rows({{2, E}, {E, 2}})});
  const auto l = metrics(simulate(lin, Vector{0, 0}, {0, 0, 0, 0}));
  for (double p : l.proj_norm_trace) CHECK(p == 0);
  CHECK(l.delta_min == 2);
  CHECK(l.delta_max == 2);
  for (const auto& d : *l.second_differences) CHECK(d == Vector{0, 0});

  const auto one = simulate(sys, Vector{0, 0}, {0});
  const auto m1 = metrics(one);
  CHECK_FALSE(m1.second_differences);
  CHECK_THROWS_AS(second_differences(one, 1), ArgumentError);
  CHECK_THROWS_AS(metrics(simulate(sys, Vector{0, 0}, {})), ArgumentError);
  CHECK_THROWS_AS(metrics(t, 0), ArgumentError);
}

TEST_CASE("trajectory CSV", "[smpl]") {
  const auto t = simulate(system1(), Vector{0, 0}, {0, 1});
  std::ostringstream os;
  write_trajectory_csv(os, t);
  CHECK(os.str() == "k,l,x_1,x_2,proj_norm\n0,,0,0,0\n1,1,4,1,3\n2,2,7,7,0\n");
}

TEST_CASE("simulation properties", "[smpl][property]") {
  SplitMix64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const SmplSystem sys = random_system(rng, n, 1 + rng.below(3));
    const auto word = gen_switching(ArbitrarySwitching{sys.mode_count()}, 40, rng.next());
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = double(rng.uniform_int(-9, 9));
      ys[i] = xs[i] + double(rng.uniform_int(0, 4));
    }
    const Vector x0(xs), y0(ys);
    const auto tx = simulate(sys, x0, word);
    REQUIRE(verify_recurrence(sys, tx));
    const auto ty = simulate(sys, y0, word);
    const Scalar lam(double(rng.uniform_int(-20, 20)));
    const auto tl = simulate(sys, scalar_otimes(lam, x0), word);
    std::ostringstream os;
    write_trajectory_csv(os, tx);
    std::string line;
    std::istringstream in(os.str());
    while (std::getline(in, line)) {
      REQUIRE(std::count(line.begin(), line.end(), ',') == static_cast<long>(n + 2));
      REQUIRE(line.find("-inf") == std::string::npos);
    }
    for (std::size_t k = 0; k < tx.states.size(); ++k) {
      REQUIRE(leq(tx.states[k], ty.states[k]));
      REQUIRE(tl.states[k] == scalar_otimes(lam, tx.states[k]));
    }
    const auto m = metrics(tx);
    REQUIRE(m.delta_min <= m.delta_max);
  }
}

TEST_CASE("batch results do not depend on the thread count", "[smpl][property]") {
  const SmplSystem sys = system1();
  std::vector<BatchRun> runs;
  SplitMix64 rng(2);
  for (int r = 0; r < 24; ++r)
    runs.push_back({Vector{double(rng.uniform_int(-3, 3)), double(rng.uniform_int(-3, 3))}, rng.next()});
  const SwitchingPolicy p = ArbitrarySwitching{2};
  const auto a = simulate_batch(sys, p, runs, 300, 5.0, 1);
  const auto b = simulate_batch(sys, p, runs, 300, 5.0, 7);
  CHECK(a.runs == b.runs);
  CHECK(a.steps == b.steps);
  CHECK(a.max_proj_norm == b.max_proj_norm);
  CHECK(a.delta_min == b.delta_min);
  CHECK(a.delta_max == b.delta_max);
  CHECK(a.bound_violations == b.bound_violations);
}
