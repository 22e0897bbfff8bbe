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
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sps/core.hpp"
#include "sps/cpgame.hpp"
#include "sps/moore.hpp"
#include "sps/objectives.hpp"
#include "sps/payoff.hpp"
#include "sps/zerosum.hpp"

namespace sps {

/**
 * The cartesian product of the arena with a Moore machine: nodes are
 * (vertex, memory state after folding the vertex); Player-0 nodes keep only
 * the chosen edge, so infinite paths from the initial node are exactly the
 * plays consistent with the strategy.
 */
struct StrategyProduct {
  Arena graph;
  std::vector<int> base;    // arena vertex per node
  std::vector<int> mstate;  // machine state per node
  int initial = 0;

  LassoPlay project(const LassoPlay& l) const {
    LassoPlay out;
    for (int v : l.prefix)
      out.prefix.push_back(base[v]);
    for (int v : l.cycle)
      out.cycle.push_back(base[v]);
    return out;
  }
};

inline StrategyProduct product(const SPGame& g, const MooreStrategy& m) {
  require_valid(g);
  const Arena& a = g.arena;
  StrategyProduct pr;
  std::unordered_map<uint64_t, int> id_of;
  std::vector<int> worklist;
  auto intern = [&](int v, int s) {
    uint64_t k = MooreStrategy::key(s, v);
    auto it = id_of.find(k);
    if (it != id_of.end())
      return it->second;
    int id = static_cast<int>(pr.base.size());
    id_of.emplace(k, id);
    pr.base.push_back(v);
    pr.mstate.push_back(s);
    pr.graph.add_vertex(a.owner[v]);
    worklist.push_back(id);
    return id;
  };
  pr.initial = intern(a.initial, m.next(m.initial, a.initial));
  for (size_t i = 0; i < worklist.size(); ++i) {
    int id = worklist[i];
    int v = pr.base[id];
    int s = pr.mstate[id];
    if (a.owner[v] == Owner::p0) {
      int w = m.choice(s, v);
      if (!a.has_edge(v, w))
        throw error("strategy output " + a.display_name(v) + " -> " +
                    a.display_name(w) + " is not an arena edge");
      pr.graph.add_edge(id, intern(w, m.next(s, w)));
    } else {
      for (int w : a.succ[v])
        pr.graph.add_edge(id, intern(w, m.next(s, w)));
    }
  }
  pr.graph.initial = pr.initial;
  return pr;
}

/** Pareto-optimal payoffs under a strategy, with one witness lasso each. */
struct ParetoResult {
  Antichain pareto;
  // aligned with pareto.elems; lassos live in the game arena
  std::vector<LassoPlay> witnesses;
};

namespace detail {

inline std::vector<AchievablePayoff> achievable_under(
    const SPGame& g, const StrategyProduct& pr) {
  std::vector<AchievablePayoff> out;
  if (g.kind == ObjectiveKind::reachability) {
    auto letters = TargetLetters::of(g);
    std::vector<char> won(pr.base.size());
    std::vector<uint32_t> bits(pr.base.size());
    for (size_t i = 0; i < pr.base.size(); ++i) {
      won[i] = letters.won[pr.base[i]];
      bits[i] = letters.bits[pr.base[i]];
    }
    out = achievable_extended(pr.graph, won, bits, g.t(), pr.initial);
  } else {
    const uint32_t total = 1u << g.t();
    for (uint32_t pb = 0; pb < total; ++pb) {
      std::vector<std::vector<int>> maps;
      for (int i = 0; i < g.t(); ++i) {
        maps.emplace_back(pr.base.size());
        for (size_t s = 0; s < pr.base.size(); ++s)
          maps.back()[s] = g.p1_objectives[i].priority[pr.base[s]];
        if (!((pb >> i) & 1u))
          for (int& p : maps.back())
            ++p;
      }
      auto lasso = conj_parity_path_exists(pr.graph, maps, pr.initial);
      if (lasso) {
        AchievablePayoff ap;
        ap.payoff.payoff = Payoff(pb, g.t());
        ap.payoff.won = false;  // resolved below
        ap.lasso = *lasso;
        out.push_back(std::move(ap));
      }
    }
  }
  return out;
}

}  // namespace detail

inline ParetoResult pareto_under_strategy(const SPGame& g,
                                          const MooreStrategy& m) {
  StrategyProduct pr = product(g, m);
  auto ach = detail::achievable_under(g, pr);
  std::vector<Payoff> payoffs;
  for (const auto& ap : ach)
    payoffs.push_back(ap.payoff.payoff);
  ParetoResult res;
  res.pareto = pareto_max(payoffs);
  for (const auto& p : res.pareto.elems) {
    for (const auto& ap : ach)
      if (ap.payoff.payoff == p) {
        res.witnesses.push_back(pr.project(ap.lasso));
        break;
      }
  }
  return res;
}

/**
 * A verification report: the Pareto set under the strategy with witnesses,
 * and a counterexample play (consistent, Pareto-optimal payoff, lost by
 * Player 0) when the strategy is not a solution.
 */
struct VerificationReport {
  bool is_solution = false;
  Antichain pareto_set;
  std::vector<LassoPlay> witnesses;  // aligned with pareto_set.elems
  std::optional<LassoPlay> counterexample;
  std::optional<Payoff> counterexample_payoff;
};

/**
 * Checks whether a strategy solves the SPS problem: for each Pareto-optimal
 * payoff p, search for a consistent play satisfying the objectives set in p
 * while violating Player 0's objective. Any such play has payoff exactly p
 * (by maximality), so finding one refutes the strategy.
 */
inline VerificationReport verify_strategy(const SPGame& g,
                                      const MooreStrategy& m) {
  StrategyProduct pr = product(g, m);
  auto ach = detail::achievable_under(g, pr);
  std::vector<Payoff> payoffs;
  for (const auto& ap : ach)
    payoffs.push_back(ap.payoff.payoff);
  VerificationReport rep;
  rep.pareto_set = pareto_max(payoffs);
  for (const auto& p : rep.pareto_set.elems)
    for (const auto& ap : ach)
      if (ap.payoff.payoff == p) {
        rep.witnesses.push_back(pr.project(ap.lasso));
        break;
      }

  if (g.kind == ObjectiveKind::reachability) {
    auto letters = TargetLetters::of(g);
    // remove product nodes whose vertex satisfies Player 0's target: plays
    // inside the rest are exactly the lost consistent plays
    std::vector<char> keep(pr.base.size());
    for (size_t i = 0; i < pr.base.size(); ++i)
      keep[i] = !letters.won[pr.base[i]];
    if (keep[pr.initial]) {
      std::vector<char> won(pr.base.size(), 0);
      std::vector<uint32_t> bits(pr.base.size());
      for (size_t i = 0; i < pr.base.size(); ++i)
        bits[i] = letters.bits[pr.base[i]];
      auto lost = detail::achievable_extended(pr.graph, won, bits, g.t(),
                                              pr.initial, &keep);
      for (const auto& p : rep.pareto_set.elems) {
        for (const auto& ap : lost) {
          if ((p.bits & ~ap.payoff.payoff.bits) == 0) {
            rep.counterexample = pr.project(ap.lasso);
            rep.counterexample_payoff = p;
            break;
          }
        }
        if (rep.counterexample)
          break;
      }
    }
  } else {
    for (const auto& p : rep.pareto_set.elems) {
      std::vector<std::vector<int>> maps;
      for (int i = 0; i < g.t(); ++i) {
        if (!p.get(i))
          continue;
        maps.emplace_back(pr.base.size());
        for (size_t s = 0; s < pr.base.size(); ++s)
          maps.back()[s] = g.p1_objectives[i].priority[pr.base[s]];
      }
      // the complement of Player 0's parity objective, priorities shifted
      maps.emplace_back(pr.base.size());
      for (size_t s = 0; s < pr.base.size(); ++s)
        maps.back()[s] = g.p0_objective.priority[pr.base[s]] + 1;
      auto lasso = conj_parity_path_exists(pr.graph, maps, pr.initial);
      if (lasso) {
        rep.counterexample = pr.project(*lasso);
        rep.counterexample_payoff = p;
        break;
      }
    }
  }
  rep.is_solution = !rep.counterexample.has_value();
  return rep;
}

/**
 * Extracts a Player-0 strategy from a winning Prover strategy of the per-P
 * Challenger-Prover subgame: memory states are the reachable Prover
 * configurations (Challenger-Prover vertex plus solver memory), the output
 * at a Player-0 vertex is the vertex component of the Prover's move.
 */
inline MooreStrategy extract_solution(const SPGame& g, const CPGame& cp,
                                      const SolveResult& sol) {
  if (!sol.wins(cp.start))
    throw error("extract_solution: the Prover does not win this subgame");
  MooreStrategy sp = sol.as_machine(cp.arena);
  MooreStrategy out;
  out.initial = 0;
  std::unordered_map<uint64_t, int> id_of;
  std::vector<std::pair<int, int>> nodes;  // (cp prover vertex, sp state)
  std::vector<int> worklist;
  auto intern = [&](int m, int s) {
    uint64_t k =
        (static_cast<uint64_t>(static_cast<uint32_t>(m)) << 32) |
        static_cast<uint32_t>(s);
    auto it = id_of.find(k);
    if (it != id_of.end())
      return it->second;
    int id = 1 + static_cast<int>(nodes.size());
    id_of.emplace(k, id);
    nodes.emplace_back(m, s);
    worklist.push_back(id);
    return id;
  };
  const int m0 = cp.start;
  const int s0 = sp.next(sp.initial, m0);
  out.set_update(0, g.arena.initial, intern(m0, s0));
  for (size_t i = 0; i < worklist.size(); ++i) {
    const int id = worklist[i];
    auto [m, s] = nodes[id - 1];
    const int v = cp.states[m].v;
    if (g.arena.owner[v] == Owner::p0) {
      const int m2 = sp.choice(s, m);
      const int v2 = cp.states[m2].v;
      const int s2 = sp.next(s, m2);
      out.set_output(id, v, v2);
      out.set_update(id, v2, intern(m2, s2));
    } else {
      const int c = sp.choice(s, m);  // Challenger partition vertex
      const int sc = sp.next(s, c);
      for (int m2 : cp.arena.succ[c]) {
        const int v2 = cp.states[m2].v;
        const int s2 = sp.next(sc, m2);
        out.set_update(id, v2, intern(m2, s2));
      }
    }
  }
  out.num_states = 1 + static_cast<int>(nodes.size());
  return out;
}

/**
 * Translates a strategy on a binarized game back to the original arena:
 * the fresh internal vertices of each successor tree are folded into the
 * memory transition, so the pulled-back machine reads original vertices
 * only.
 */
inline MooreStrategy pull_back_strategy(const SPGame& original,
                                        const BinarizeResult& bin,
                                        const MooreStrategy& m) {
  if (!bin.changed)
    return m;
  const Arena& oa = original.arena;
  const Arena& ba = bin.game.arena;
  MooreStrategy out;
  out.initial = 0;
  std::unordered_map<uint64_t, int> id_of;
  std::vector<std::pair<int, int>> nodes;  // (machine state, orig vertex)
  std::vector<int> worklist;
  auto intern = [&](int s, int v) {
    uint64_t k = MooreStrategy::key(s, v);
    auto it = id_of.find(k);
    if (it != id_of.end())
      return it->second;
    int id = 1 + static_cast<int>(nodes.size());
    id_of.emplace(k, id);
    nodes.emplace_back(s, v);
    worklist.push_back(id);
    return id;
  };
  auto succ_index = [&](int v, int w) {
    const auto& s = oa.succ[v];
    for (size_t k = 0; k < s.size(); ++k)
      if (s[k] == w)
        return static_cast<int>(k);
    throw error("pull_back_strategy: not a successor");
  };
  // folds the machine over the internal route v -> ... -> w, returning the
  // state after w
  auto fold_route = [&](int s, int v, int w) {
    for (int inner : bin.route[v][succ_index(v, w)])
      s = m.next(s, inner);
    return m.next(s, w);
  };
  out.set_update(0, oa.initial, intern(m.next(m.initial, oa.initial),
                                       oa.initial));
  for (size_t i = 0; i < worklist.size(); ++i) {
    const int id = worklist[i];
    auto [s, v] = nodes[id - 1];
    if (oa.owner[v] == Owner::p0) {
      // walk the successor tree guided by the machine's outputs
      int cur = v;
      int scur = s;
      while (true) {
        int nxt = m.choice(scur, cur);
        if (!ba.has_edge(cur, nxt))
          throw error("pull_back_strategy: output is not an edge");
        if (bin.orig_of[nxt] >= 0) {
          const int w = nxt;
          out.set_output(id, v, w);
          out.set_update(id, w, intern(fold_route(s, v, w), w));
          break;
        }
        scur = m.next(scur, nxt);
        cur = nxt;
      }
    } else {
      for (int w : oa.succ[v])
        out.set_update(id, w, intern(fold_route(s, v, w), w));
    }
  }
  out.num_states = 1 + static_cast<int>(nodes.size());
  return out;
}

struct SpsSolution {
  bool solvable = false;
  std::optional<MooreStrategy> strategy;  // on the original arena
  std::optional<Antichain> pareto;
};

/**
 * Decides the SPS problem: binarize, restrict the Prover's announcements to
 * antichains over the feasible payoffs, and solve one Challenger-Prover
 * subgame per announcement (Büchi for reachability, Emerson-Lei for
 * parity). The first winning announcement yields the certificate strategy,
 * which is verified before being returned.
 */
inline SpsSolution solve_sps(const SPGame& g) {
  require_valid(g);
  BinarizeResult bin = binarize(g);
  auto feasible = feasible_payoffs(bin.game);
  for (const Antichain& P : enumerate_antichains(feasible)) {
    CPGame cp = build_cp(bin.game, P);
    SolveResult sol = solve(cp.to_zero_sum());
    if (!sol.wins(cp.start))
      continue;
    MooreStrategy on_bin = extract_solution(bin.game, cp, sol);
    MooreStrategy sigma = pull_back_strategy(g, bin, on_bin);
    VerificationReport rep = verify_strategy(g, sigma);
    if (!rep.is_solution || !(rep.pareto_set == P))
      throw error("solve_sps: extracted strategy failed verification");
    SpsSolution res;
    res.solvable = true;
    res.strategy = std::move(sigma);
    res.pareto = P;
    return res;
  }
  return {};
}

struct TreeSolveResult {
  bool solvable = false;
  std::optional<MooreStrategy> strategy;  // memoryless
};

/**
 * The tree-arena decision procedure: memoryless strategies suffice, so
 * enumerate Player 0's choices, accumulate leaf payoffs depth-first and
 * accept the first strategy whose Pareto-optimal leaf payoffs are all won.
 */
inline TreeSolveResult tree_solve(const SPGame& g) {
  require_valid(g);
  if (g.kind != ObjectiveKind::reachability)
    throw error("tree_solve expects a reachability game");
  if (!is_tree_arena(g.arena))
    throw error("tree_solve expects a tree arena");
  const Arena& a = g.arena;
  std::vector<int> deciders;  // Player-0 vertices with a real choice
  for (int v = 0; v < a.size(); ++v)
    if (a.owner[v] == Owner::p0 && a.succ[v].size() >= 2)
      deciders.push_back(v);
  auto letters = TargetLetters::of(g);

  std::vector<int> pick(deciders.size(), 0);
  std::vector<int> choice(a.size(), -1);
  while (true) {
    for (int v = 0; v < a.size(); ++v)
      if (a.owner[v] == Owner::p0)
        choice[v] = a.succ[v].front();
    for (size_t i = 0; i < deciders.size(); ++i)
      choice[deciders[i]] = a.succ[deciders[i]][pick[i]];

    // depth-first accumulation of extended payoffs at the leaves
    std::vector<ExtendedPayoff> leaf_payoffs;
    std::vector<std::pair<int, ExtendedPayoff>> stack;
    ExtendedPayoff init{letters.won[a.initial] != 0,
                        Payoff(letters.bits[a.initial], g.t())};
    stack.push_back({a.initial, init});
    while (!stack.empty()) {
      auto [v, ep] = stack.back();
      stack.pop_back();
      if (a.succ[v].size() == 1 && a.succ[v][0] == v) {
        leaf_payoffs.push_back(ep);
        continue;
      }
      auto follow = [&](int w) {
        ExtendedPayoff next{ep.won || letters.won[w] != 0, ep.payoff};
        next.payoff.bits |= letters.bits[w];
        stack.push_back({w, next});
      };
      if (a.owner[v] == Owner::p0)
        follow(choice[v]);
      else
        for (int w : a.succ[v])
          follow(w);
    }
    std::vector<Payoff> ps;
    for (const auto& ep : leaf_payoffs)
      ps.push_back(ep.payoff);
    Antichain pareto = pareto_max(ps);
    bool ok = true;
    for (const auto& ep : leaf_payoffs)
      if (!ep.won && pareto.contains(ep.payoff))
        ok = false;
    if (ok) {
      TreeSolveResult res;
      res.solvable = true;
      res.strategy = MooreStrategy::memoryless(a, choice);
      return res;
    }
    // next choice vector
    size_t i = 0;
    for (; i < deciders.size(); ++i) {
      if (++pick[i] < static_cast<int>(a.succ[deciders[i]].size()))
        break;
      pick[i] = 0;
    }
    if (i == deciders.size())
      return {};
  }
}

struct BruteForceResult {
  bool found = false;
  std::optional<MooreStrategy> strategy;
};

namespace detail {

/**
 * Exhaustive search over Moore machines with at most `bound` memory states,
 * enumerated in a canonical form: update entries are created lazily along
 * reachable (state, vertex) pairs and a fresh state is only ever the next
 * unused id, which quotients the space by reachable-state isomorphism.
 * Sound prunes: the memory update is frozen at vertices from which no
 * Player-0 decision is reachable, and a branch is abandoned as soon as a
 * fully decided consistent lasso is lost with a payoff that no feasible
 * payoff strictly dominates.
 */
class BruteForceSearch {
 public:
  BruteForceSearch(const SPGame& g, int bound, uint64_t budget)
      : g_(g), bound_(bound), budget_(budget) {
    const Arena& a = g_.arena;
    letters_ = TargetLetters::of(g_);
    feasible_top_ = pareto_max(feasible_payoffs(g_));
    // vertices from which a Player-0 vertex with >= 2 successors is
    // reachable: only there can memory matter
    reaches_decision_.assign(a.size(), 0);
    for (int v = 0; v < a.size(); ++v)
      reaches_decision_[v] =
          a.owner[v] == Owner::p0 && a.succ[v].size() >= 2;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v = 0; v < a.size(); ++v) {
        if (reaches_decision_[v])
          continue;
        for (int w : a.succ[v])
          if (reaches_decision_[w]) {
            reaches_decision_[v] = 1;
            grew = true;
            break;
          }
      }
    }
  }

  BruteForceResult run() {
    const Arena& a = g_.arena;
    mach_.initial = 0;
    mach_.num_states = 1;
    used_ = 1;
    mach_.set_update(0, a.initial, 1);
    bool w0 = false;
    uint32_t p0 = 0;
    if (g_.kind == ObjectiveKind::reachability) {
      w0 = letters_.won[a.initial] != 0;
      p0 = letters_.bits[a.initial];
    }
    seen_.insert(node_key({a.initial, 1, w0, p0}));
    agenda_.push_back({a.initial, 1, w0, p0});
    dfs(0);
    BruteForceResult res;
    if (found_) {
      res.found = true;
      res.strategy = std::move(found_machine_);
    }
    return res;
  }

 private:
  struct Node {
    int v;
    int s;
    bool w;       // reachability: accumulated Player-0 bit
    uint32_t p;   // reachability: accumulated payoff bits
  };

  static uint64_t node_key(const Node& n) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(n.v)) << 40) |
           (static_cast<uint64_t>(static_cast<uint32_t>(n.s)) << 16) |
           (static_cast<uint64_t>(n.w ? 1 : 0) << 15) |
           static_cast<uint64_t>(n.p & 0x7fffu);
  }

  Node step(const Node& n, int w_vertex) const {
    Node m{w_vertex, mach_.update.at(MooreStrategy::key(n.s, w_vertex)),
           n.w, n.p};
    if (g_.kind == ObjectiveKind::reachability) {
      m.w = m.w || letters_.won[w_vertex] != 0;
      m.p |= letters_.bits[w_vertex];
    }
    return m;
  }

  /**
   * True when the node closes a fully decided lost lasso whose payoff no
   * feasible payoff strictly dominates: every completion keeps this play
   * Pareto-optimal and lost, so the branch is dead.
   */
  bool doomed_by_self_loop(const Node& n) const {
    if (!g_.arena.has_edge(n.v, n.v))
      return false;
    if (g_.arena.owner[n.v] == Owner::p0 && mach_.choice(n.s, n.v) != n.v)
      return false;
    if (mach_.next(n.s, n.v) != n.s)
      return false;
    if (g_.kind == ObjectiveKind::reachability) {
      if (n.w)
        return false;
      return !feasible_top_.dominates(Payoff(n.p, g_.t()));
    }
    if (g_.p0_objective.priority[n.v] % 2 == 0)
      return false;
    Payoff p(0, g_.t());
    for (int i = 0; i < g_.t(); ++i)
      p.set(i, g_.p1_objectives[i].priority[n.v] % 2 == 0);
    return !feasible_top_.dominates(p);
  }

  void dfs(size_t agenda_pos) {
    if (found_)
      return;
    if (budget_-- == 0)
      throw error("brute_force_solve: search budget exceeded");
    if (agenda_pos == agenda_.size()) {
      finish();
      return;
    }
    const Node node = agenda_[agenda_pos];
    const Arena& a = g_.arena;
    const int v = node.v;
    const int s = node.s;
    if (a.owner[v] == Owner::p0 && !mach_.has_choice(s, v)) {
      for (int w : a.succ[v]) {
        mach_.set_output(s, v, w);
        dfs(agenda_pos);
        if (found_)
          return;
      }
      mach_.output.erase(MooreStrategy::key(s, v));
      return;
    }
    std::vector<int> targets;
    if (a.owner[v] == Owner::p0)
      targets.push_back(mach_.choice(s, v));
    else
      targets = a.succ[v];
    // define the first missing update entry, branching over states
    for (int w : targets) {
      if (mach_.has_next(s, w))
        continue;
      if (!reaches_decision_[w]) {
        // memory can no longer influence any output: freeze it
        mach_.set_update(s, w, s);
        dfs(agenda_pos);
        if (!found_)
          mach_.update.erase(MooreStrategy::key(s, w));
        return;
      }
      const int limit = std::min(used_ + 1, bound_);
      for (int t = 1; t <= limit; ++t) {
        mach_.set_update(s, w, t);
        const bool fresh = t == used_ + 1;
        if (fresh)
          ++used_;
        dfs(agenda_pos);
        if (fresh)
          --used_;
        if (found_)
          return;
      }
      mach_.update.erase(MooreStrategy::key(s, w));
      return;
    }
    // all edges of this node are decided: dead-lasso check, then enqueue
    if (doomed_by_self_loop(node))
      return;
    size_t added = 0;
    for (int w : targets) {
      Node child = step(node, w);
      if (seen_.insert(node_key(child)).second) {
        agenda_.push_back(child);
        ++added;
      }
    }
    dfs(agenda_pos + 1);
    while (added > 0) {
      seen_.erase(node_key(agenda_.back()));
      agenda_.pop_back();
      --added;
    }
  }

  void finish() {
    mach_.num_states = 1 + used_;
    VerificationReport rep = verify_strategy(g_, mach_);
    if (rep.is_solution) {
      found_ = true;
      found_machine_ = mach_;
    }
  }

  const SPGame& g_;
  int bound_;
  uint64_t budget_;
  TargetLetters letters_;
  Antichain feasible_top_;
  std::vector<char> reaches_decision_;
  MooreStrategy mach_;
  int used_ = 1;
  std::vector<Node> agenda_;
  std::unordered_set<uint64_t> seen_;
  bool found_ = false;
  MooreStrategy found_machine_;
};

}  // namespace detail

/**
 * Bounded exhaustive search for a solution among Moore machines with at
 * most `memory_bound` memory states. A positive answer is definitive; a
 * negative answer only means no solution exists within the bound.
 */
inline BruteForceResult brute_force_solve(const SPGame& g, int memory_bound,
                                          uint64_t budget = 400000000ull) {
  require_valid(g);
  if (memory_bound < 1)
    throw error("brute_force_solve: memory bound must be positive");
  detail::BruteForceSearch search(g, memory_bound, budget);
  return search.run();
}

// ---------------------------------------------------------------------------
// Witness regions and compaction.
// ---------------------------------------------------------------------------

/**
 * The region of a history inside a witness set: the extended payoff
 * accumulated so far (reachability only) and the witnesses the history is
 * still a prefix of.
 */
struct Region {
  bool has_extended = false;  // false for parity games
  bool won = false;
  Payoff payoff;
  std::vector<int> witnesses;  // indices into the witness list

  bool operator==(const Region& o) const {
    return has_extended == o.has_extended && won == o.won &&
           payoff == o.payoff && witnesses == o.witnesses;
  }
};

/** A maximal constant-region segment of a witness play. */
struct Section {
  size_t start = 0;   // position in the unrolled play
  size_t length = 0;  // 0 for the terminal (infinite) section
  bool terminal = false;
  Region region;
};

struct RegionDecomposition {
  LassoPlay play;
  std::vector<Section> sections;
  size_t stable_at = 0;  // first position of the terminal section
};

namespace detail {

/** First position where the two lassos differ, or -1 if they are equal. */
inline long first_divergence(const LassoPlay& a, const LassoPlay& b) {
  const size_t pre = std::max(a.prefix.size(), b.prefix.size());
  const size_t horizon = pre + a.cycle.size() * b.cycle.size();
  for (size_t i = 0; i < horizon; ++i)
    if (a.at(i) != b.at(i))
      return static_cast<long>(i);
  return -1;
}

}  // namespace detail

/**
 * Region decomposition of a witness against the full witness set: maximal
 * segments with constant region. Reachability regions carry the extended
 * payoff; parity regions only the surviving witness set.
 */
inline RegionDecomposition region_decompose(
    const LassoPlay& witness, const std::vector<LassoPlay>& all_witnesses,
    const SPGame& g) {
  if (!witness.valid_in(g.arena))
    throw error("region_decompose: invalid witness lasso");
  bool member = false;
  for (const auto& w : all_witnesses)
    if (detail::first_divergence(witness, w) < 0)
      member = true;
  if (!member)
    throw error("region_decompose: witness not in the provided set");

  std::vector<long> divergence;
  for (const auto& w : all_witnesses)
    divergence.push_back(detail::first_divergence(witness, w));

  const bool reach = g.kind == ObjectiveKind::reachability;
  TargetLetters letters = reach ? TargetLetters::of(g) : TargetLetters{};

  size_t horizon = witness.prefix.size() + witness.cycle.size();
  for (long d : divergence)
    if (d >= 0)
      horizon = std::max(horizon, static_cast<size_t>(d) + 1);

  auto region_at = [&](size_t j) {
    Region r;
    r.has_extended = reach;
    if (reach) {
      r.payoff = Payoff::zero(g.t());
      for (size_t k = 0; k <= j; ++k) {
        int v = witness.at(k);
        r.won = r.won || letters.won[v] != 0;
        r.payoff.bits |= letters.bits[v];
      }
    }
    for (size_t i = 0; i < all_witnesses.size(); ++i)
      if (divergence[i] < 0 || static_cast<size_t>(divergence[i]) > j)
        r.witnesses.push_back(static_cast<int>(i));
    return r;
  };

  RegionDecomposition dec;
  dec.play = witness;
  Region cur = region_at(0);
  size_t start = 0;
  // incremental recomputation would be nicer; fine at witness scale
  for (size_t j = 1; j <= horizon; ++j) {
    Region r = region_at(j);
    if (r == cur)
      continue;
    dec.sections.push_back({start, j - start, false, cur});
    cur = r;
    start = j;
  }
  dec.sections.push_back({start, 0, true, cur});
  dec.stable_at = start;
  return dec;
}

namespace detail {

/** Iterated first-revisit cycle elimination, yielding an elementary path. */
inline std::vector<int> eliminate_cycles(const std::vector<int>& path) {
  std::vector<int> out;
  for (int v : path) {
    auto it = std::find(out.begin(), out.end(), v);
    if (it != out.end())
      out.erase(it + 1, out.end());
    else
      out.push_back(v);
  }
  return out;
}

}  // namespace detail

/**
 * Compacts a decomposed witness: every internal section becomes an
 * elementary path, the terminal section is folded into a lasso at its first
 * repeated vertex. The extended payoff of the play is preserved.
 */
inline LassoPlay compact_witness(const RegionDecomposition& dec) {
  const LassoPlay& w = dec.play;
  LassoPlay out;
  for (const auto& sec : dec.sections) {
    if (sec.terminal)
      break;
    std::vector<int> path;
    for (size_t j = sec.start; j < sec.start + sec.length; ++j)
      path.push_back(w.at(j));
    for (int v : detail::eliminate_cycles(path))
      out.prefix.push_back(v);
  }
  // terminal section: walk to the first repeated vertex
  std::vector<int> tail;
  size_t j = dec.stable_at;
  while (true) {
    int v = w.at(j);
    auto it = std::find(tail.begin(), tail.end(), v);
    if (it != tail.end()) {
      size_t cut = static_cast<size_t>(it - tail.begin());
      for (size_t k = 0; k < cut; ++k)
        out.prefix.push_back(tail[k]);
      out.cycle.assign(tail.begin() + cut, tail.end());
      break;
    }
    tail.push_back(v);
    ++j;
  }
  return out;
}

}  // namespace sps
