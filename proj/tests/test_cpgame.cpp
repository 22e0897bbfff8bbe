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

#include <cmath>
#include <map>

#include "helpers.hpp"
#include "sps/cpgame.hpp"
#include "sps/strategy.hpp"

using namespace sps;
using sps::testing::fig1_game;
using sps::testing::Rng;

namespace {

Antichain fig1_announcement() {
  return Antichain({Payoff::of_bits({1, 1, 0}), Payoff::of_bits({0, 1, 1})});
}

int find_prover_state(const CPGame& cp, int v, uint32_t wmask) {
  for (size_t i = 0; i < cp.states.size(); ++i)
    if (!cp.states[i].partition && cp.states[i].v == v &&
        cp.states[i].wmask == wmask)
      return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("reach C-P game: partition fan-out at v5") {
  SPGame g = fig1_game();
  CPGame cp = build_reach_cp(g, fig1_announcement());
  // (v5, W = {p1, p2}) has one Challenger successor per ordered partition
  const int s = find_prover_state(cp, 5, 0b11);
  REQUIRE(s >= 0);
  CHECK(cp.arena.succ[s].size() == 4);
  for (int c : cp.arena.succ[s]) {
    CHECK(cp.states[c].partition);
    CHECK(cp.arena.owner[c] == Owner::p1);
    CHECK((cp.states[c].wl | cp.states[c].wr()) == 0b11u);
    CHECK((cp.states[c].wl & cp.states[c].wr()) == 0u);
  }
}

TEST_CASE("reach C-P game: partition completeness everywhere") {
  SPGame g = fig1_game();
  CPGame cp = build_reach_cp(g, fig1_announcement());
  for (size_t i = 0; i < cp.states.size(); ++i) {
    const CPState& s = cp.states[i];
    if (s.partition || g.arena.owner[s.v] != Owner::p1)
      continue;
    if (g.arena.succ[s.v].size() == 2) {
      CHECK(cp.arena.succ[i].size() ==
            (1u << __builtin_popcount(s.wmask)));
    } else {
      REQUIRE(cp.arena.succ[i].size() == 1);
      CHECK(cp.states[cp.arena.succ[i][0]].wl == s.wmask);
    }
  }
}

TEST_CASE("reach C-P game: accepting-set conditions") {
  SPGame g = fig1_game();
  Antichain P = fig1_announcement();
  CPGame cp = build_reach_cp(g, P);
  for (size_t i = 0; i < cp.states.size(); ++i) {
    const CPState& s = cp.states[i];
    if (s.partition) {
      CHECK_FALSE(cp.accept[i]);
      continue;
    }
    Payoff p(s.pbits, g.t());
    bool cond1 = s.w && __builtin_popcount(s.wmask) == 1 &&
                 P.elems[__builtin_ctz(s.wmask)] == p;
    bool cond2 = s.wmask == 0 && s.w && P.contains(p);
    bool cond3 = s.wmask == 0 && P.dominates(p);
    CHECK(cp.accept[i] == (cond1 || cond2 || cond3));
  }
  // a concrete singleton-witness state: (v7, {p1}, w=1, (1,1,0))
  for (size_t i = 0; i < cp.states.size(); ++i) {
    const CPState& s = cp.states[i];
    if (!s.partition && s.v == 7 && __builtin_popcount(s.wmask) == 1 &&
        s.w && Payoff(s.pbits, 3) == Payoff::of_bits({1, 1, 0}) &&
        P.elems[__builtin_ctz(s.wmask)] == Payoff(s.pbits, 3))
      CHECK(cp.accept[i]);
  }
}

TEST_CASE("reach C-P game: (w,p) monotone along every edge") {
  SPGame g = fig1_game();
  CPGame cp = build_reach_cp(g, fig1_announcement());
  for (int i = 0; i < cp.arena.size(); ++i)
    for (int j : cp.arena.succ[i]) {
      CHECK(leq(Payoff(cp.states[i].pbits, 3),
                Payoff(cp.states[j].pbits, 3)));
      CHECK((cp.states[j].w || !cp.states[i].w));
      // W-monotonicity: obligations never grow
      uint32_t wi = cp.states[i].partition ? cp.states[i].wmask
                                           : cp.states[i].wmask;
      CHECK((cp.states[j].wmask & ~wi) == 0u);
    }
}

TEST_CASE("reach C-P game: state count is within the paper bound") {
  SPGame g = fig1_game();
  CPGame cp = build_reach_cp(g, fig1_announcement());
  const double n = g.arena.size();
  const double t = g.t();
  const double bound = 1 + n * std::pow(2.0, std::pow(2.0, t + 1)) *
                               std::pow(2.0, t + 1) +
                       n * std::pow(2.0, 3 * std::pow(2.0, t)) *
                           std::pow(2.0, t + 1);
  CHECK(static_cast<double>(cp.states.size()) <= bound);
}

TEST_CASE("reach C-P game: the Prover wins the running example") {
  SPGame g = fig1_game();
  CPGame cp = build_reach_cp(g, fig1_announcement());
  auto sol = solve_buchi(cp.to_zero_sum());
  CHECK(sol.wins(cp.start));
}

TEST_CASE("reach C-P game rejects malformed inputs") {
  SPGame g = fig1_game();
  CHECK_THROWS_AS(build_reach_cp(g, Antichain()), error);
  SPGame wide = g;
  wide.arena.add_edge(0, 6);  // v0 now has three successors
  CHECK_THROWS_AS(build_reach_cp(wide, fig1_announcement()), error);
}

TEST_CASE("parity formula: shape for max even priority 2") {
  SPGame g;
  g.kind = ObjectiveKind::parity;
  Arena& a = g.arena;
  a.add_vertex(Owner::p0);
  a.add_edge(0, 0);
  a.initial = 0;
  g.p0_objective = Objective::parity({0});
  g.p1_objectives = {Objective::parity({2})};
  CPFormula f = build_parity_formula(g, Antichain({Payoff::of_bits({1})}));
  // parity_1 over variables x^1_0..x^1_2: x0 | (x2 & !x1)
  CHECK(f.parity[1].to_string(f.names()) ==
        "(x^1_0 | (x^1_2 & !x^1_1))");
}

TEST_CASE("parity formula: single-objective instantiation") {
  SPGame g;
  g.kind = ObjectiveKind::parity;
  g.arena.add_vertex(Owner::p0);
  g.arena.add_edge(0, 0);
  g.arena.initial = 0;
  g.p0_objective = Objective::parity({0});
  g.p1_objectives = {Objective::parity({0})};
  CPFormula f = build_parity_formula(g, Antichain({Payoff::of_bits({1})}));
  // payoff_(1) = parity_1, so single collapses to x_p & parity_1 & parity_0
  CHECK(f.cond1.to_string(f.names()) == "((x_(1) & x^1_0) & x^0_0)");
}

TEST_CASE("parity formula: domination disjunct count below the top payoff") {
  for (int t : {1, 2, 3}) {
    SPGame g;
    g.kind = ObjectiveKind::parity;
    g.arena.add_vertex(Owner::p0);
    g.arena.add_edge(0, 0);
    g.arena.initial = 0;
    g.p0_objective = Objective::parity({0});
    for (int i = 0; i < t; ++i)
      g.p1_objectives.push_back(Objective::parity({0}));
    CPFormula f = build_parity_formula(g, Antichain({Payoff::top(t)}));
    // cond3 ranges over every payoff strictly below the top: 2^t - 1 many
    const int disjuncts =
        f.cond3.kind() == BooleanFormula::Kind::disj
            ? static_cast<int>(f.cond3.parts().size())
            : 1;
    CHECK(disjuncts == (1 << t) - 1);
  }
}

TEST_CASE("parity C-P game: formula semantics against direct evaluation") {
  // the Boolean Büchi encoding of each parity_i agrees with Parity(c_i) on
  // enumerated lassos of the C-P arena
  Rng rng(61);
  for (int round = 0; round < 20; ++round) {
    SPGame g = sps::testing::random_parity_game(rng, rng.pick(2, 4),
                                                rng.pick(1, 2), 3, 0.4);
    auto feas = feasible_payoffs(g);
    if (feas.empty())
      continue;
    Antichain P({feas[rng.pick(0, static_cast<int>(feas.size()) - 1)]});
    CPGame cp = build_parity_cp(g, P);
    CPFormula f = build_parity_formula(g, P);
    for (const auto& lasso :
         sps::testing::enumerate_lassos(cp.arena, 2 * cp.arena.size() > 24
                                                      ? 12
                                                      : 2 * cp.arena.size())) {
      // valuation of the Emerson-Lei variables
      uint64_t val = 0;
      for (size_t k = 0; k < cp.sets.size(); ++k)
        for (int node : lasso.recurring())
          if (cp.sets[k][node])
            val |= 1ull << k;
      // the projected play in the game arena
      LassoPlay proj;
      for (int node : lasso.prefix)
        if (!cp.states[node].partition)
          proj.prefix.push_back(cp.states[node].v);
      for (int node : lasso.cycle)
        if (!cp.states[node].partition)
          proj.cycle.push_back(cp.states[node].v);
      if (proj.cycle.empty())
        continue;
      for (int i = 0; i <= g.t(); ++i)
        CHECK(f.parity[i].eval(val) ==
              eval(g.objective(i), ObjectiveKind::parity, proj));
    }
  }
}

TEST_CASE("parity C-P game: reach-to-parity cross-check on the example") {
  // encode each reachability target as the parity condition "priority 0 on
  // targets, 1 elsewhere" on a bit-tracking product, then compare the
  // per-announcement winner with the Büchi pipeline
  SPGame g = fig1_game();
  auto letters = TargetLetters::of(g);

  // bit-tracking product arena: (v, w, p)
  SPGame pg;
  pg.kind = ObjectiveKind::parity;
  std::vector<std::tuple<int, bool, uint32_t>> states;
  std::map<std::tuple<int, bool, uint32_t>, int> ids;
  std::function<int(int, bool, uint32_t)> intern = [&](int v, bool w,
                                                       uint32_t p) {
    bool w2 = w || letters.won[v];
    uint32_t p2 = p | letters.bits[v];
    auto key = std::make_tuple(v, w2, p2);
    auto it = ids.find(key);
    if (it != ids.end())
      return it->second;
    int id = pg.arena.add_vertex(g.arena.owner[v]);
    ids[key] = id;
    states.push_back(key);
    return id;
  };
  intern(0, false, 0);
  for (size_t i = 0; i < states.size(); ++i) {
    auto [v, w, p] = states[i];
    for (int u : g.arena.succ[v])
      pg.arena.add_edge(static_cast<int>(i), intern(u, w, p));
  }
  pg.arena.initial = 0;
  auto prio_for = [&](int obj_index) {
    std::vector<int> c(pg.arena.size());
    for (size_t i = 0; i < states.size(); ++i) {
      auto [v, w, p] = states[i];
      bool sat = obj_index == 0 ? w : ((p >> (obj_index - 1)) & 1u);
      c[i] = sat ? 0 : 1;
    }
    return c;
  };
  pg.p0_objective = Objective::parity(prio_for(0));
  for (int i = 1; i <= g.t(); ++i)
    pg.p1_objectives.push_back(Objective::parity(prio_for(i)));

  Antichain P = fig1_announcement();
  CPGame reach_cp = build_reach_cp(g, P);
  CPGame parity_cp = build_parity_cp(pg, P);
  auto reach_sol = solve_buchi(reach_cp.to_zero_sum());
  auto parity_sol = solve_emerson_lei(parity_cp.to_zero_sum());
  CHECK(reach_sol.wins(reach_cp.start));
  CHECK(parity_sol.wins(parity_cp.start));
}

TEST_CASE("parity C-P game: forced single play, the Prover wins the top") {
  // one vertex, all priorities even: the only play satisfies everything
  SPGame g;
  g.kind = ObjectiveKind::parity;
  g.arena.add_vertex(Owner::p0);
  g.arena.add_edge(0, 0);
  g.arena.initial = 0;
  g.p0_objective = Objective::parity({0});
  g.p1_objectives = {Objective::parity({2}), Objective::parity({0})};
  Antichain P({Payoff::of_bits({1, 1})});
  CPGame cp = build_parity_cp(g, P);
  auto sol = solve_emerson_lei(cp.to_zero_sum());
  CHECK(sol.wins(cp.start));
}
