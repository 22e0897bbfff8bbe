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
#include <functional>

#include "helpers.hpp"
#include "sps/zerosum.hpp"

using namespace sps;
using sps::testing::Rng;

namespace {

/**
 * Reference winning region via memoryless strategy profiles (sound for
 * positionally determined objectives such as Büchi and parity): the
 * protagonist wins from v iff some choice vector beats every opposing
 * choice vector.
 */
std::vector<char> profile_region(
    const Arena& a, const std::function<bool(const LassoPlay&)>& satisfied) {
  std::vector<int> p0_vertices, p1_vertices;
  for (int v = 0; v < a.size(); ++v)
    (a.owner[v] == Owner::p0 ? p0_vertices : p1_vertices).push_back(v);
  auto choice_vectors = [&](const std::vector<int>& vs) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> next;
    for (int v : vs) {
      next.clear();
      for (const auto& partial : out)
        for (int w : a.succ[v]) {
          auto copy = partial;
          copy.push_back(w);
          next.push_back(copy);
        }
      out.swap(next);
    }
    return out;
  };
  auto p0_choices = choice_vectors(p0_vertices);
  auto p1_choices = choice_vectors(p1_vertices);
  auto outcome = [&](int start, const std::vector<int>& c0,
                     const std::vector<int>& c1) {
    std::vector<int> succ(a.size());
    for (size_t i = 0; i < p0_vertices.size(); ++i)
      succ[p0_vertices[i]] = c0[i];
    for (size_t i = 0; i < p1_vertices.size(); ++i)
      succ[p1_vertices[i]] = c1[i];
    std::vector<int> pos(a.size(), -1);
    std::vector<int> walk;
    int v = start;
    while (pos[v] < 0) {
      pos[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      v = succ[v];
    }
    LassoPlay l;
    l.prefix.assign(walk.begin(), walk.begin() + pos[v]);
    l.cycle.assign(walk.begin() + pos[v], walk.end());
    return l;
  };
  std::vector<char> region(a.size(), 0);
  for (int v = 0; v < a.size(); ++v) {
    bool wins = false;
    for (const auto& c0 : p0_choices) {
      bool all = true;
      for (const auto& c1 : p1_choices)
        if (!satisfied(outcome(v, c0, c1))) {
          all = false;
          break;
        }
      if (all) {
        wins = true;
        break;
      }
    }
    region[v] = wins;
  }
  return region;
}

bool lasso_hits_inf(const LassoPlay& l, const std::vector<char>& set) {
  for (int v : l.recurring())
    if (set[v])
      return true;
  return false;
}

/** Consistent lassos of a positional protagonist strategy, from `start`. */
std::vector<LassoPlay> consistent_lassos(const Arena& a,
                                         const std::vector<int>& strat,
                                         int start, int max_len) {
  Arena pruned;
  pruned.owner = a.owner;
  pruned.succ.assign(a.size(), {});
  pruned.initial = start;
  pruned.names = a.names;
  for (int v = 0; v < a.size(); ++v) {
    if (a.owner[v] == Owner::p0 && strat[v] >= 0)
      pruned.succ[v] = {strat[v]};
    else
      pruned.succ[v] = a.succ[v];
  }
  return sps::testing::enumerate_lassos(pruned, max_len);
}

}  // namespace

TEST_CASE("attractor basics") {
  Arena a;
  for (int i = 0; i < 3; ++i)
    a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  a.add_edge(2, 2);
  a.initial = 0;
  CHECK(attractor(a, Owner::p0, {0, 1, 2}) == std::vector<int>{0, 1, 2});
  CHECK(attractor(a, Owner::p0, {}).empty());
  CHECK(attractor(a, Owner::p0, {2}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("attractor respects ownership") {
  // the opponent at 0 can avoid the target by moving left
  Arena a;
  a.add_vertex(Owner::p1);
  a.add_vertex(Owner::p0);
  a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(0, 2);
  a.add_edge(1, 1);
  a.add_edge(2, 2);
  a.initial = 0;
  CHECK(attractor(a, Owner::p0, {2}) == std::vector<int>{2});
  CHECK(attractor(a, Owner::p1, {2}) == std::vector<int>{0, 2});
}

TEST_CASE("attractor monotonicity and idempotence") {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 7), 0.5);
    std::vector<int> target;
    for (int v = 0; v < a.size(); ++v)
      if (rng.chance(0.3))
        target.push_back(v);
    auto once = attractor(a, Owner::p0, target);
    for (int v : target)
      CHECK(std::find(once.begin(), once.end(), v) != once.end());
    CHECK(attractor(a, Owner::p0, once) == once);
  }
}

TEST_CASE("büchi solver on one-vertex games") {
  ZeroSumGame g;
  g.arena.add_vertex(Owner::p0);
  g.arena.add_edge(0, 0);
  g.arena.initial = 0;
  g.objective = BuchiObjective{{1}};
  CHECK(solve_buchi(g).wins(0));
  g.objective = BuchiObjective{{0}};
  CHECK_FALSE(solve_buchi(g).wins(0));
}

TEST_CASE("büchi solver agrees with strategy profiles on random games") {
  Rng rng(101);
  for (int round = 0; round < 80; ++round) {
    ZeroSumGame g;
    g.arena = sps::testing::random_arena(rng, rng.pick(2, 6), 0.5);
    std::vector<char> accept(g.arena.size(), 0);
    for (int v = 0; v < g.arena.size(); ++v)
      accept[v] = rng.chance(0.35);
    g.objective = BuchiObjective{accept};
    auto res = solve_buchi(g);
    auto oracle = profile_region(g.arena, [&](const LassoPlay& l) {
      return lasso_hits_inf(l, accept);
    });
    CHECK(res.protagonist_region == oracle);
    for (int v = 0; v < g.arena.size(); ++v) {
      if (!res.wins(v))
        continue;
      for (const auto& l : consistent_lassos(g.arena, res.positional, v,
                                             2 * g.arena.size()))
        CHECK(lasso_hits_inf(l, accept));
    }
  }
}

TEST_CASE("parity solver on constant-priority games") {
  Rng rng(3);
  ZeroSumGame g;
  g.arena = sps::testing::random_arena(rng, 5, 0.5);
  auto check_const = [&](int prio, bool wins) {
    g.objective = ParityObjective{std::vector<int>(g.arena.size(), prio)};
    auto res = solve_parity(g);
    for (int v = 0; v < g.arena.size(); ++v)
      CHECK(res.wins(v) == wins);
  };
  check_const(0, true);
  check_const(1, false);
}

TEST_CASE("parity solver agrees with strategy profiles on random games") {
  Rng rng(17);
  for (int round = 0; round < 80; ++round) {
    ZeroSumGame g;
    g.arena = sps::testing::random_arena(rng, rng.pick(2, 6), 0.5);
    std::vector<int> prio(g.arena.size());
    for (auto& p : prio)
      p = rng.pick(0, round % 2 ? 1 : 3);
    g.objective = ParityObjective{prio};
    auto res = solve_parity(g);
    auto oracle = profile_region(g.arena, [&](const LassoPlay& l) {
      int mn = 1 << 20;
      for (int v : l.recurring())
        mn = std::min(mn, prio[v]);
      return mn % 2 == 0;
    });
    CHECK(res.protagonist_region == oracle);
    for (int v = 0; v < g.arena.size(); ++v) {
      if (!res.wins(v))
        continue;
      for (const auto& l : consistent_lassos(g.arena, res.positional, v,
                                             2 * g.arena.size())) {
        int mn = 1 << 20;
        for (int u : l.recurring())
          mn = std::min(mn, prio[u]);
        CHECK(mn % 2 == 0);
      }
    }
  }
}

TEST_CASE("zielonka tree automaton matches the formula semantics") {
  Rng rng(29);
  for (int round = 0; round < 150; ++round) {
    const int m = rng.pick(1, 4);
    std::function<BooleanFormula(int)> gen = [&](int depth) {
      int kind = rng.pick(0, depth > 2 ? 1 : 5);
      if (kind <= 1)
        return BooleanFormula::var(rng.pick(0, m - 1));
      if (kind == 2)
        return !gen(depth + 1);
      std::vector<BooleanFormula> parts;
      for (int i = rng.pick(2, 3); i > 0; --i)
        parts.push_back(gen(depth + 1));
      return kind <= 4 ? BooleanFormula::conj(parts)
                       : BooleanFormula::disj(parts);
    };
    BooleanFormula phi = gen(0);
    ZielonkaTree tree(phi, m);
    std::vector<uint32_t> prefix, cycle;
    for (int i = rng.pick(0, 3); i > 0; --i)
      prefix.push_back(rng.pick(0, (1 << m) - 1));
    for (int i = rng.pick(1, 4); i > 0; --i)
      cycle.push_back(rng.pick(0, (1 << m) - 1));
    int leaf = tree.initial_leaf();
    for (uint32_t a : prefix)
      leaf = tree.step(leaf, a).first;
    std::vector<int> seen;
    while (std::find(seen.begin(), seen.end(), leaf) == seen.end()) {
      seen.push_back(leaf);
      for (uint32_t a : cycle)
        leaf = tree.step(leaf, a).first;
    }
    const int start = leaf;
    int min_prio = 1 << 20;
    do {
      for (uint32_t a : cycle) {
        auto [next, prio] = tree.step(leaf, a);
        min_prio = std::min(min_prio, prio);
        leaf = next;
      }
    } while (leaf != start);
    uint32_t inf_union = 0;
    for (uint32_t a : cycle)
      inf_union |= a;
    CHECK((min_prio % 2 == 0) == phi.eval(inf_union));
  }
}

TEST_CASE("emerson-lei with a single variable matches büchi") {
  Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 6), 0.5);
    std::vector<char> accept(a.size(), 0);
    for (int v = 0; v < a.size(); ++v)
      accept[v] = rng.chance(0.4);
    ZeroSumGame gb{a, BuchiObjective{accept}};
    ZeroSumGame ge{a, EmersonLeiObjective{BooleanFormula::var(0), {accept}}};
    CHECK(solve_buchi(gb).protagonist_region ==
          solve_emerson_lei(ge).protagonist_region);
  }
}

TEST_CASE("emerson-lei of a negated full set loses everywhere") {
  Rng rng(37);
  Arena a = sps::testing::random_arena(rng, 5, 0.5);
  ZeroSumGame g{a, EmersonLeiObjective{!BooleanFormula::var(0),
                                       {std::vector<char>(a.size(), 1)}}};
  auto res = solve_emerson_lei(g);
  for (int v = 0; v < a.size(); ++v)
    CHECK_FALSE(res.wins(v));
}

TEST_CASE("emerson-lei conjunction with negation, hand instance") {
  // the protagonist can loop on 1 (in T1 only); 2 lies in both sets
  Arena a;
  a.add_vertex(Owner::p0);
  a.add_vertex(Owner::p0);
  a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(1, 1);
  a.add_edge(1, 2);
  a.add_edge(2, 2);
  a.initial = 0;
  std::vector<char> t1{0, 1, 1};
  std::vector<char> t2{0, 0, 1};
  BooleanFormula phi = BooleanFormula::var(0) && !BooleanFormula::var(1);
  ZeroSumGame g{a, EmersonLeiObjective{phi, {t1, t2}}};
  auto res = solve_emerson_lei(g);
  CHECK(res.wins(0));
  CHECK(res.wins(1));
  CHECK_FALSE(res.wins(2));
}

TEST_CASE("emerson-lei parity encoding matches the parity solver") {
  Rng rng(41);
  for (int round = 0; round < 40; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 6), 0.5);
    const int max_prio = 3;
    std::vector<int> prio(a.size());
    for (auto& p : prio)
      p = rng.pick(0, max_prio);
    std::vector<std::vector<char>> sets(max_prio + 1,
                                        std::vector<char>(a.size(), 0));
    for (int v = 0; v < a.size(); ++v)
      sets[prio[v]][v] = 1;
    std::vector<BooleanFormula> clauses;
    for (int j = 0; j <= max_prio; j += 2) {
      std::vector<BooleanFormula> lits{BooleanFormula::var(j)};
      for (int j2 = 1; j2 < j; j2 += 2)
        lits.push_back(!BooleanFormula::var(j2));
      clauses.push_back(BooleanFormula::conj(lits));
    }
    ZeroSumGame ge{
        a, EmersonLeiObjective{BooleanFormula::disj(clauses), sets}};
    ZeroSumGame gp{a, ParityObjective{prio}};
    CHECK(solve_emerson_lei(ge).protagonist_region ==
          solve_parity(gp).protagonist_region);
  }
}

TEST_CASE("emerson-lei machine wins consistent plays") {
  Rng rng(43);
  for (int round = 0; round < 25; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 5), 0.5);
    std::vector<char> t1(a.size()), t2(a.size());
    for (int v = 0; v < a.size(); ++v) {
      t1[v] = rng.chance(0.4);
      t2[v] = rng.chance(0.4);
    }
    BooleanFormula phi =
        rng.chance(0.5)
            ? (BooleanFormula::var(0) || !BooleanFormula::var(1))
            : (BooleanFormula::var(0) && !BooleanFormula::var(1));
    ZeroSumGame g{a, EmersonLeiObjective{phi, {t1, t2}}};
    auto res = solve_emerson_lei(g);
    if (!res.wins(a.initial))
      continue;
    const MooreStrategy& m = res.machine;
    Arena prod;
    std::vector<int> base;
    std::vector<std::pair<int, int>> states;
    auto intern = [&](int v, int s) {
      for (size_t i = 0; i < states.size(); ++i)
        if (states[i] == std::make_pair(v, s))
          return static_cast<int>(i);
      states.emplace_back(v, s);
      base.push_back(v);
      prod.add_vertex(a.owner[v]);
      return static_cast<int>(states.size()) - 1;
    };
    prod.initial = intern(a.initial, m.next(m.initial, a.initial));
    for (size_t i = 0; i < states.size(); ++i) {
      auto [v, s] = states[i];
      if (a.owner[v] == Owner::p0) {
        int w = m.choice(s, v);
        prod.add_edge(static_cast<int>(i), intern(w, m.next(s, w)));
      } else {
        for (int w : a.succ[v])
          prod.add_edge(static_cast<int>(i), intern(w, m.next(s, w)));
      }
    }
    for (const auto& l :
         sps::testing::enumerate_lassos(prod, 2 * prod.size())) {
      uint32_t val = 0;
      for (int node : l.recurring()) {
        if (t1[base[node]])
          val |= 1;
        if (t2[base[node]])
          val |= 2;
      }
      CHECK(phi.eval(val));
    }
  }
}

TEST_CASE("parity determinacy: the dual game wins the complement") {
  Rng rng(47);
  for (int round = 0; round < 30; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 7), 0.5);
    std::vector<int> prio(a.size());
    for (auto& p : prio)
      p = rng.pick(0, 3);
    auto full = solve_parity_full(a, prio);
    // the opponent's game: swapped owners, priorities shifted by one
    Arena swapped = a;
    for (int v = 0; v < a.size(); ++v)
      swapped.owner[v] = a.owner[v] == Owner::p0 ? Owner::p1 : Owner::p0;
    std::vector<int> shifted = prio;
    for (auto& p : shifted)
      ++p;
    auto dual = solve_parity_full(swapped, shifted);
    for (int v = 0; v < a.size(); ++v)
      CHECK(full.region0[v] != dual.region0[v]);
  }
}

TEST_CASE("conjunctive parity path existence") {
  Arena a;
  for (int i = 0; i < 2; ++i)
    a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(1, 0);
  a.initial = 0;

  CHECK(conj_parity_path_exists(a, {}, 0).has_value());
  CHECK_FALSE(conj_parity_path_exists(a, {{1, 1}}, 0).has_value());
  CHECK(conj_parity_path_exists(a, {{0, 1}}, 0).has_value());
}

TEST_CASE("conjunctive parity on a four-vertex graph") {
  // only the 2-cycle {1,2} satisfies both maps
  Arena a;
  for (int i = 0; i < 4; ++i)
    a.add_vertex(Owner::p0);
  a.add_edge(0, 1);
  a.add_edge(0, 3);
  a.add_edge(1, 2);
  a.add_edge(2, 1);
  a.add_edge(3, 3);
  a.initial = 0;
  std::vector<int> c1{3, 0, 3, 1};
  std::vector<int> c2{3, 3, 0, 1};
  auto res = conj_parity_path_exists(a, {c1, c2}, 0);
  REQUIRE(res.has_value());
  CHECK(res->valid_in(a));
  CHECK(res->recurring() == std::vector<int>{1, 2});
}

TEST_CASE("conjunctive parity agrees with lasso enumeration") {
  Rng rng(53);
  for (int round = 0; round < 80; ++round) {
    Arena a = sps::testing::random_arena(rng, rng.pick(2, 6), 0.5);
    const int k = rng.pick(1, 3);
    std::vector<std::vector<int>> maps(k, std::vector<int>(a.size()));
    for (auto& c : maps)
      for (auto& p : c)
        p = rng.pick(0, 3);
    auto got = conj_parity_path_exists(a, maps, a.initial);
    bool oracle = false;
    for (const auto& l :
         sps::testing::enumerate_lassos(a, 2 * a.size() + 2)) {
      bool all = true;
      for (const auto& c : maps) {
        int mn = 1 << 20;
        for (int v : l.recurring())
          mn = std::min(mn, c[v]);
        if (mn % 2 != 0)
          all = false;
      }
      if (all)
        oracle = true;
    }
    CHECK(got.has_value() == oracle);
    if (got) {
      CHECK(got->valid_in(a));
      for (const auto& c : maps) {
        int mn = 1 << 20;
        for (int v : got->recurring())
          mn = std::min(mn, c[v]);
        CHECK(mn % 2 == 0);
      }
    }
  }
}
