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

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sps/core.hpp"
#include "sps/payoff.hpp"
#include "sps/zerosum.hpp"

namespace sps {

/** Evaluates one objective on an ultimately periodic play. */
inline bool eval(const Objective& obj, ObjectiveKind kind,
                 const LassoPlay& play) {
  if (kind == ObjectiveKind::reachability) {
    for (int v : play.occurring())
      if (obj.in_target(v))
        return true;
    return false;
  }
  int mn = std::numeric_limits<int>::max();
  for (int v : play.recurring())
    mn = std::min(mn, obj.priority[v]);
  return mn % 2 == 0;
}

inline ExtendedPayoff extended_payoff(const SPGame& g, const LassoPlay& play) {
  ExtendedPayoff e;
  e.won = eval(g.p0_objective, g.kind, play);
  e.payoff = Payoff::zero(g.t());
  for (int i = 0; i < g.t(); ++i)
    e.payoff.set(i, eval(g.p1_objectives[i], g.kind, play));
  return e;
}

/**
 * Per-vertex target memberships of a reachability game, as bit masks:
 * `won` for the Player-0 target, `bits` over the t Player-1 targets.
 */
struct TargetLetters {
  std::vector<char> won;
  std::vector<uint32_t> bits;

  static TargetLetters of(const SPGame& g) {
    TargetLetters l;
    const int n = g.arena.size();
    l.won.assign(n, 0);
    l.bits.assign(n, 0);
    for (int v : g.p0_objective.target)
      l.won[v] = 1;
    for (int i = 0; i < g.t(); ++i)
      for (int v : g.p1_objectives[i].target)
        l.bits[v] |= 1u << i;
    return l;
  }
};

/** One achievable extended payoff together with a witnessing lasso. */
struct AchievablePayoff {
  ExtendedPayoff payoff;
  LassoPlay lasso;  // over the input graph's vertices
};

namespace detail {

/**
 * All extended payoffs of infinite paths from `initial` in `graph`, where
 * vertex v contributes (won[v], bits[v]) to the accumulated extended payoff.
 * Works on the product with the accumulated (w, p) vector: along any cycle
 * the accumulator is constant, so the payoffs are exactly the accumulator
 * values of reachable states inside cyclic SCCs. One shortest witness per
 * payoff, deterministic.
 */
inline std::vector<AchievablePayoff> achievable_extended(
    const Arena& graph, const std::vector<char>& won,
    const std::vector<uint32_t>& bits, int width, int initial,
    const std::vector<char>* node_filter = nullptr) {
  std::unordered_map<uint64_t, int> id_of;
  std::vector<int> base;
  std::vector<uint32_t> acc;
  std::vector<char> accw;
  Arena prod;
  auto key = [](int v, bool w, uint32_t b) {
    return (static_cast<uint64_t>(v) << 33) |
           (static_cast<uint64_t>(w ? 1 : 0) << 32) | b;
  };
  std::vector<int> worklist;
  auto intern = [&](int v, bool w, uint32_t b) {
    bool w2 = w || won[v];
    uint32_t b2 = b | bits[v];
    auto it = id_of.find(key(v, w2, b2));
    if (it != id_of.end())
      return it->second;
    int id = static_cast<int>(base.size());
    id_of.emplace(key(v, w2, b2), id);
    base.push_back(v);
    accw.push_back(w2 ? 1 : 0);
    acc.push_back(b2);
    worklist.push_back(id);
    return id;
  };
  if (node_filter && !(*node_filter)[initial])
    return {};
  int start = intern(initial, false, 0);
  std::vector<std::vector<int>> edges;
  for (size_t i = 0; i < worklist.size(); ++i) {
    int s = worklist[i];
    edges.resize(base.size());
    for (int w : graph.succ[base[s]]) {
      if (node_filter && !(*node_filter)[w])
        continue;
      edges[s].push_back(intern(w, accw[s], acc[s]));
    }
  }
  edges.resize(base.size());
  prod.succ = std::move(edges);
  prod.owner.assign(base.size(), Owner::p1);
  prod.names.resize(base.size());
  prod.initial = start;

  std::vector<char> alive(base.size(), 1);
  std::vector<AchievablePayoff> out;
  for (const auto& comp : sccs(prod, alive)) {
    if (!component_cyclic(prod, comp))
      continue;
    int s = comp.front();
    ExtendedPayoff ep{accw[s] != 0, Payoff(acc[s], width)};
    bool fresh = true;
    for (const auto& ap : out)
      if (ap.payoff == ep)
        fresh = false;
    if (!fresh)
      continue;
    // witness: shortest path to the component, then a cycle inside it
    auto to_comp = bfs_path(prod, alive, start, s);
    if (to_comp.empty())
      continue;  // unreachable component cannot witness anything
    std::vector<char> inside(base.size(), 0);
    for (int v : comp)
      inside[v] = 1;
    std::vector<int> cyc{s};
    if (comp.size() > 1 || prod.has_edge(s, s)) {
      if (comp.size() > 1) {
        // shortest closed walk through s: s -> some successor -> back
        std::vector<int> best;
        for (int w : prod.succ[s]) {
          if (!inside[w])
            continue;
          if (w == s) {
            best = {s};
            break;
          }
          auto back = bfs_path(prod, inside, w, s);
          if (back.empty())
            continue;
          if (best.empty() || back.size() + 1 < best.size()) {
            best = {s};
            best.insert(best.end(), back.begin(), back.end() - 1);
          }
        }
        cyc = best;
      }
    }
    if (cyc.empty())
      continue;
    AchievablePayoff ap;
    ap.payoff = ep;
    for (size_t i = 0; i + 1 < to_comp.size(); ++i)
      ap.lasso.prefix.push_back(base[to_comp[i]]);
    for (int v : cyc)
      ap.lasso.cycle.push_back(base[v]);
    out.push_back(std::move(ap));
  }
  return out;
}

}  // namespace detail

/**
 * Exactly the payoffs of plays of the game: forward bit-tracking product
 * exploration for reachability, per-candidate path-existence checks for
 * parity.
 */
inline std::vector<Payoff> feasible_payoffs(const SPGame& g) {
  require_valid(g);
  std::vector<Payoff> out;
  if (g.kind == ObjectiveKind::reachability) {
    auto letters = TargetLetters::of(g);
    auto ach = detail::achievable_extended(g.arena, letters.won, letters.bits,
                                           g.t(), g.arena.initial);
    for (const auto& ap : ach) {
      bool dup = false;
      for (const auto& p : out)
        if (p == ap.payoff.payoff)
          dup = true;
      if (!dup)
        out.push_back(ap.payoff.payoff);
    }
  } else {
    const uint32_t total = 1u << g.t();
    for (uint32_t bits = 0; bits < total; ++bits) {
      std::vector<std::vector<int>> maps;
      for (int i = 0; i < g.t(); ++i) {
        maps.push_back(g.p1_objectives[i].priority);
        if (!((bits >> i) & 1u))
          for (int& p : maps.back())
            ++p;  // complement: shift all priorities by one
      }
      if (conj_parity_path_exists(g.arena, maps, g.arena.initial))
        out.push_back(Payoff(bits, g.t()));
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace sps
