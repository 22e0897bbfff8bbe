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

#pragma once

#include <functional>
#include <random>
#include <vector>

#include "sps/core.hpp"
#include "sps/moore.hpp"
#include "sps/objectives.hpp"
#include "sps/payoff.hpp"

namespace sps::testing {

/** The running example: a reachability SP game with t = 3. */
inline SPGame fig1_game() {
  SPGame g;
  g.kind = ObjectiveKind::reachability;
  Arena& a = g.arena;
  for (int i = 0; i < 8; ++i)
    a.add_vertex(i == 0 || i == 2 || i == 5 ? Owner::p1 : Owner::p0,
                 "v" + std::to_string(i));
  a.initial = 0;
  a.add_edge(0, 1);
  a.add_edge(0, 2);
  a.add_edge(1, 1);
  a.add_edge(2, 3);
  a.add_edge(2, 4);
  a.add_edge(3, 5);
  a.add_edge(3, 7);
  a.add_edge(4, 4);
  a.add_edge(5, 3);
  a.add_edge(5, 6);
  a.add_edge(6, 6);
  a.add_edge(7, 7);
  g.p0_objective = Objective::reach({6, 7});
  g.p1_objectives = {Objective::reach({4, 7}), Objective::reach({3}),
                     Objective::reach({1, 6})};
  return g;
}

/** The two-memory-state solution of the running example. */
inline MooreStrategy fig1_sigma_prime() {
  MooreStrategy m;
  m.num_states = 3;  // pre-start, before-v5, after-v5
  m.initial = 0;
  for (int v = 0; v < 8; ++v) {
    m.set_update(0, v, 1);
    m.set_update(1, v, v == 5 ? 2 : 1);
    m.set_update(2, v, 2);
  }
  for (int s : {1, 2})
    for (int v : {1, 4, 6, 7})
      m.set_output(s, v, v);
  m.set_output(1, 3, 5);
  m.set_output(2, 3, 7);
  return m;
}

/**
 * All lassos from the initial vertex whose total walk length is at most
 * `max_len`: every walk that ends by re-entering one of its own positions.
 * An exhaustive (bounded) play oracle for small arenas.
 */
inline std::vector<LassoPlay> enumerate_lassos(const Arena& a, int max_len) {
  std::vector<LassoPlay> out;
  std::vector<int> walk{a.initial};
  std::function<void()> rec = [&]() {
    const int v = walk.back();
    for (int w : a.succ[v]) {
      for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == w) {
          LassoPlay l;
          l.prefix.assign(walk.begin(), walk.begin() + i);
          l.cycle.assign(walk.begin() + i, walk.end());
          out.push_back(l);
        }
      if (static_cast<int>(walk.size()) < max_len) {
        walk.push_back(w);
        rec();
        walk.pop_back();
      }
    }
  };
  rec();
  return out;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(uint32_t seed) : gen(seed) {}
  int pick(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(gen) < p;
  }
};

/** A random arena where every vertex has one or two successors. */
inline Arena random_arena(Rng& rng, int n, double p0_prob) {
  Arena a;
  for (int v = 0; v < n; ++v)
    a.add_vertex(rng.chance(p0_prob) ? Owner::p0 : Owner::p1);
  a.initial = 0;
  for (int v = 0; v < n; ++v) {
    int deg = rng.pick(1, 2);
    int first = rng.pick(0, n - 1);
    a.add_edge(v, first);
    if (deg == 2) {
      int second = rng.pick(0, n - 1);
      if (second != first)
        a.add_edge(v, second);
    }
  }
  return a;
}

inline SPGame random_reach_game(Rng& rng, int n, int t, double p0_prob) {
  SPGame g;
  g.kind = ObjectiveKind::reachability;
  g.arena = random_arena(rng, n, p0_prob);
  auto random_target = [&]() {
    std::vector<int> t2;
    for (int v = 0; v < n; ++v)
      if (rng.chance(0.3))
        t2.push_back(v);
    return Objective::reach(std::move(t2));
  };
  g.p0_objective = random_target();
  for (int i = 0; i < t; ++i)
    g.p1_objectives.push_back(random_target());
  return g;
}

inline SPGame random_parity_game(Rng& rng, int n, int t, int max_prio,
                                 double p0_prob) {
  SPGame g;
  g.kind = ObjectiveKind::parity;
  g.arena = random_arena(rng, n, p0_prob);
  auto random_prio = [&]() {
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v)
      c[v] = rng.pick(0, max_prio);
    return Objective::parity(std::move(c));
  };
  g.p0_objective = random_prio();
  for (int i = 0; i < t; ++i)
    g.p1_objectives.push_back(random_prio());
  return g;
}

}  // namespace sps::testing
