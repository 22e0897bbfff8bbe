/*
 * Copyright 2026 The sps-games authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sps/objectives.hpp"

using namespace sps;
using sps::testing::fig1_game;

TEST_CASE("eval on the running example") {
  SPGame g = fig1_game();
  LassoPlay v1_loop{{0}, {1}};
  REQUIRE(v1_loop.valid_in(g.arena));
  CHECK(eval(g.p1_objectives[2], g.kind, v1_loop));  // Omega_3 = {v1, v6}
  CHECK_FALSE(eval(g.p0_objective, g.kind, v1_loop));
}

TEST_CASE("eval parity") {
  Arena a;
  a.add_vertex(Owner::p0);
  a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(1, 0);
  a.initial = 0;
  LassoPlay both{{}, {0, 1}};
  CHECK(eval(Objective::parity({0, 0}), ObjectiveKind::parity, both));
  CHECK_FALSE(eval(Objective::parity({1, 2}), ObjectiveKind::parity, both));
}

TEST_CASE("extended payoffs of the running example plays") {
  SPGame g = fig1_game();
  auto ep = [&](const LassoPlay& l) { return extended_payoff(g, l); };
  CHECK(ep({{0, 2}, {3, 5}}) ==
        ExtendedPayoff{false, Payoff::of_bits({0, 1, 0})});
  CHECK(ep({{0, 2, 3, 5}, {6}}) ==
        ExtendedPayoff{true, Payoff::of_bits({0, 1, 1})});
  CHECK(ep({{0, 2}, {4}}) ==
        ExtendedPayoff{false, Payoff::of_bits({1, 0, 0})});
}

TEST_CASE("feasible payoffs of the running example") {
  SPGame g = fig1_game();
  auto feasible = feasible_payoffs(g);
  // independent oracle: exhaustive bounded lasso enumeration
  std::vector<Payoff> oracle;
  for (const auto& l : sps::testing::enumerate_lassos(g.arena, 10)) {
    Payoff p = extended_payoff(g, l).payoff;
    if (std::find(oracle.begin(), oracle.end(), p) == oracle.end())
      oracle.push_back(p);
  }
  std::sort(oracle.begin(), oracle.end(), lex_less);
  CHECK(feasible == oracle);
  std::vector<Payoff> expect{
      Payoff::of_bits({0, 0, 1}), Payoff::of_bits({0, 1, 0}),
      Payoff::of_bits({0, 1, 1}), Payoff::of_bits({1, 0, 0}),
      Payoff::of_bits({1, 1, 0})};
  std::sort(expect.begin(), expect.end(), lex_less);
  CHECK(feasible == expect);
}

TEST_CASE("feasible payoffs of one-vertex games") {
  for (bool in_targets : {true, false}) {
    SPGame g;
    g.kind = ObjectiveKind::reachability;
    g.arena.add_vertex(Owner::p0);
    g.arena.add_edge(0, 0);
    g.arena.initial = 0;
    std::vector<int> t = in_targets ? std::vector<int>{0}
                                    : std::vector<int>{};
    g.p0_objective = Objective::reach(t);
    g.p1_objectives = {Objective::reach(t), Objective::reach(t)};
    auto feas = feasible_payoffs(g);
    REQUIRE(feas.size() == 1);
    CHECK(feas[0] == (in_targets ? Payoff::of_bits({1, 1})
                                 : Payoff::of_bits({0, 0})));
  }
}

TEST_CASE("feasible payoffs agree with the lasso oracle on random games") {
  sps::testing::Rng rng(23);
  for (int round = 0; round < 60; ++round) {
    const int n = rng.pick(2, 6);
    const int t = rng.pick(1, 3);
    SPGame g = rng.chance(0.5)
                   ? sps::testing::random_reach_game(rng, n, t, 0.4)
                   : sps::testing::random_parity_game(rng, n, t, 3, 0.4);
    std::vector<Payoff> oracle;
    for (const auto& l : sps::testing::enumerate_lassos(g.arena, 2 * n + 2)) {
      Payoff p = extended_payoff(g, l).payoff;
      if (std::find(oracle.begin(), oracle.end(), p) == oracle.end())
        oracle.push_back(p);
    }
    std::sort(oracle.begin(), oracle.end(), lex_less);
    CHECK(feasible_payoffs(g) == oracle);
  }
}
