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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sps/core.hpp"
#include "sps/payoff.hpp"

namespace sps {

/** A Set Cover instance: elements 1..n, m subsets, budget k. */
struct SCInstance {
  int n = 0;
  std::vector<std::vector<int>> subsets;
  int k = 0;

  int m() const { return static_cast<int>(subsets.size()); }
};

inline void require_valid(const SCInstance& inst) {
  if (inst.n < 1)
    throw input_error("SC instance: need at least one element");
  if (inst.m() < 1)
    throw input_error("SC instance: need at least one subset");
  if (inst.k < 1 || inst.k > inst.m())
    throw input_error("SC instance: budget must satisfy 1 <= k <= m");
  for (const auto& s : inst.subsets)
    for (int e : s)
      if (e < 1 || e > inst.n)
        throw input_error("SC instance: element out of range");
}

/**
 * True iff k subset indices (repetition allowed, which never helps) cover
 * all elements.
 */
inline bool solve_sc_bruteforce(const SCInstance& inst) {
  require_valid(inst);
  if (inst.m() > 25)
    throw error("solve_sc_bruteforce: too many subsets");
  std::vector<uint32_t> masks;
  for (const auto& s : inst.subsets) {
    uint32_t m = 0;
    for (int e : s)
      m |= 1u << (e - 1);
    masks.push_back(m);
  }
  const uint32_t all = inst.n >= 32 ? ~0u : ((1u << inst.n) - 1u);
  const uint32_t total = 1u << inst.m();
  for (uint32_t pick = 0; pick < total; ++pick) {
    if (__builtin_popcount(pick) > inst.k)
      continue;
    uint32_t cov = 0;
    for (int j = 0; j < inst.m(); ++j)
      if ((pick >> j) & 1u)
        cov |= masks[j];
    if (cov == all)
      return true;
  }
  return false;
}

/**
 * The tree-arena reduction from Set Cover: two sub-arenas under the root,
 * one enumerating the elements to cover (lost by Player 0), one with k
 * choice vertices from which Player 0 picks subsets (won by Player 0).
 * Positive instance iff the resulting SPS problem is solvable.
 */
inline SPGame sc_to_sps(const SCInstance& inst) {
  require_valid(inst);
  SPGame g;
  g.kind = ObjectiveKind::reachability;
  Arena& a = g.arena;
  const int v0 = a.add_vertex(Owner::p1, "v0");
  const int v1 = a.add_vertex(Owner::p1, "v1");
  const int v2 = a.add_vertex(Owner::p1, "v2");
  a.initial = v0;
  a.add_edge(v0, v1);
  a.add_edge(v0, v2);
  std::vector<int> elem(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    elem[i] = a.add_vertex(Owner::p0, "e" + std::to_string(i + 1));
    a.add_edge(v1, elem[i]);
    a.add_edge(elem[i], elem[i]);
  }
  // one block of subset leaves per choice vertex
  std::vector<std::vector<int>> setcopy(inst.k,
                                        std::vector<int>(inst.m()));
  for (int c = 0; c < inst.k; ++c) {
    int cv = a.add_vertex(Owner::p0, "c" + std::to_string(c + 1));
    a.add_edge(v2, cv);
    for (int j = 0; j < inst.m(); ++j) {
      setcopy[c][j] = a.add_vertex(
          Owner::p0, "S" + std::to_string(j + 1) + "@c" +
                         std::to_string(c + 1));
      a.add_edge(cv, setcopy[c][j]);
      a.add_edge(setcopy[c][j], setcopy[c][j]);
    }
  }
  g.p0_objective = Objective::reach({v2});
  for (int i = 1; i <= inst.n; ++i) {
    std::vector<int> t{elem[i - 1]};
    for (int j = 0; j < inst.m(); ++j) {
      bool has = std::find(inst.subsets[j].begin(), inst.subsets[j].end(),
                           i) != inst.subsets[j].end();
      if (has)
        for (int c = 0; c < inst.k; ++c)
          t.push_back(setcopy[c][j]);
    }
    g.p1_objectives.push_back(Objective::reach(std::move(t)));
  }
  g.p1_objectives.push_back(Objective::reach({v2}));
  return g;
}

/** The Q_k gadget: a DAG with exactly k paths from entry to exit. */
struct QkFragment {
  Arena arena;  // exit has no successors; embed or cap before use
  int entry = 0;
  int exit = 0;
};

/**
 * Builds Q_k from the binary expansion of k: a direct entry->exit edge for
 * bit 0 and, per set bit i >= 1, a chain of i diamonds contributing 2^i
 * paths. Vertex count is quadratic in the bit length of k; all vertices
 * belong to Player 1.
 */
inline QkFragment build_qk(int k) {
  if (k < 1)
    throw input_error("Q_k gadget: k must be positive");
  QkFragment q;
  Arena& a = q.arena;
  q.entry = a.add_vertex(Owner::p1, "alpha");
  q.exit = a.add_vertex(Owner::p1, "beta");
  if (k & 1)
    a.add_edge(q.entry, q.exit);
  for (int i = 1; (k >> i) != 0; ++i) {
    if (!((k >> i) & 1))
      continue;
    int cur = a.add_vertex(Owner::p1,
                           "q" + std::to_string(i) + "_0");
    a.add_edge(q.entry, cur);
    for (int j = 0; j < i; ++j) {
      int top = a.add_vertex(Owner::p1, "q" + std::to_string(i) + "_" +
                                            std::to_string(j) + "a");
      int bot = a.add_vertex(Owner::p1, "q" + std::to_string(i) + "_" +
                                            std::to_string(j) + "b");
      int join = a.add_vertex(Owner::p1, "q" + std::to_string(i) + "_" +
                                             std::to_string(j + 1));
      a.add_edge(cur, top);
      a.add_edge(cur, bot);
      a.add_edge(top, join);
      a.add_edge(bot, join);
      cur = join;
    }
    a.add_edge(cur, q.exit);
  }
  return q;
}

/** Number of distinct paths from -> to; the graph must be a DAG there. */
inline uint64_t count_paths(const Arena& a, int from, int to) {
  std::vector<int> state(a.size(), 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<uint64_t> memo(a.size(), 0);
  std::function<uint64_t(int)> go = [&](int v) -> uint64_t {
    if (v == to)
      return 1;
    if (state[v] == 1)
      throw error("count_paths: graph has a cycle");
    if (state[v] == 2)
      return memo[v];
    state[v] = 1;
    uint64_t total = 0;
    for (int w : a.succ[v])
      total += go(w);
    state[v] = 2;
    memo[v] = total;
    return total;
  };
  return go(from);
}

/** A CNF over X variables 1..num_x and Y variables num_x+1..num_x+num_y. */
struct CNF {
  int num_x = 0;
  int num_y = 0;
  std::vector<std::vector<int>> clauses;  // signed 1-based literals

  int p() const { return static_cast<int>(clauses.size()); }
};

inline void require_valid(const CNF& f) {
  if (f.num_x < 0 || f.num_y < 0)
    throw input_error("CNF: negative variable count");
  for (const auto& c : f.clauses) {
    if (c.empty())
      throw input_error("CNF: empty clause");
    for (int l : c) {
      int v = std::abs(l);
      if (v < 1 || v > f.num_x + f.num_y)
        throw input_error("CNF: literal out of range");
    }
  }
}

/**
 * The model set over the X variables, by exhaustive enumeration; a Y
 * valuation must be supplied exactly when the formula has Y variables.
 * Valuation bit i-1 holds the value of variable i.
 */
inline std::vector<uint32_t> cnf_models(
    const CNF& f, std::optional<uint32_t> fixed_y = std::nullopt) {
  require_valid(f);
  if (f.num_y > 0 && !fixed_y)
    throw input_error("cnf_models: formula has Y variables, none fixed");
  if (f.num_y == 0 && fixed_y)
    throw input_error("cnf_models: no Y variables to fix");
  if (f.num_x > 20)
    throw error("cnf_models: too many X variables");
  auto lit_true = [&](int l, uint32_t valx) {
    const int v = std::abs(l);
    bool val;
    if (v <= f.num_x)
      val = (valx >> (v - 1)) & 1u;
    else
      val = (*fixed_y >> (v - f.num_x - 1)) & 1u;
    return l > 0 ? val : !val;
  };
  std::vector<uint32_t> out;
  const uint32_t total = 1u << f.num_x;
  for (uint32_t valx = 0; valx < total; ++valx) {
    bool sat = true;
    for (const auto& c : f.clauses) {
      bool cs = false;
      for (int l : c)
        if (lit_true(l, valx)) {
          cs = true;
          break;
        }
      if (!cs) {
        sat = false;
        break;
      }
    }
    if (sat)
      out.push_back(valx);
  }
  return out;
}

/** A Succinct Set Cover instance. */
struct SSCInstance {
  CNF phi;  // over X only
  CNF psi;  // over X and Y
  int k = 0;
};

inline void require_valid(const SSCInstance& inst) {
  require_valid(inst.phi);
  require_valid(inst.psi);
  if (inst.phi.num_y != 0)
    throw input_error("SSC instance: phi must not use Y variables");
  if (inst.phi.num_x != inst.psi.num_x)
    throw input_error("SSC instance: phi and psi disagree on X width");
  if (inst.k < 1)
    throw input_error("SSC instance: budget must be positive");
}

/** A Succinct Dominating Set instance: theta over X and Y, |X| = |Y|. */
struct SDSInstance {
  CNF theta;
  int k = 0;
};

inline void require_valid(const SDSInstance& inst) {
  require_valid(inst.theta);
  if (inst.theta.num_x != inst.theta.num_y)
    throw input_error("SDS instance: theta needs |X| = |Y|");
  if (inst.theta.num_x < 1)
    throw input_error("SDS instance: need at least one variable");
  if (inst.k < 1)
    throw input_error("SDS instance: budget must be positive");
}

/**
 * Exact SSC decision: enumerate k-subsets of Y valuations (repetition
 * never helps) and test whether the models of phi are covered.
 */
inline bool solve_ssc_bruteforce(const SSCInstance& inst,
                                 uint64_t guard = 4000000ull) {
  require_valid(inst);
  if (inst.psi.num_y > 16)
    throw error("solve_ssc_bruteforce: search-space guard exceeded");
  const uint32_t ny = 1u << inst.psi.num_y;
  auto targets = cnf_models(inst.phi);
  if (targets.empty())
    return true;
  std::vector<std::vector<char>> covers(ny);
  std::vector<char> target_mask(1u << inst.phi.num_x, 0);
  for (uint32_t t : targets)
    target_mask[t] = 1;
  for (uint32_t vy = 0; vy < ny; ++vy) {
    covers[vy].assign(1u << inst.phi.num_x, 0);
    for (uint32_t m : cnf_models(inst.psi, vy))
      covers[vy][m] = 1;
  }
  const int k = std::min<int>(inst.k, static_cast<int>(ny));
  // enumerate k-combinations of Y valuations
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i)
    pick[i] = i;
  uint64_t steps = 0;
  while (true) {
    if (++steps > guard)
      throw error("solve_ssc_bruteforce: search-space guard exceeded");
    bool all = true;
    for (uint32_t t : targets) {
      bool covered = false;
      for (int i = 0; i < k; ++i)
        if (covers[pick[i]][t]) {
          covered = true;
          break;
        }
      if (!covered) {
        all = false;
        break;
      }
    }
    if (all)
      return true;
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<int>(ny) - k + i)
      --i;
    if (i < 0)
      return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

namespace detail {

/** phi with p = 0 would leave the reduction arenas malformed; an empty
 * conjunction is replaced by the tautological clause (x1 | !x1). */
inline CNF normalize_phi(const CNF& phi) {
  if (!phi.clauses.empty())
    return phi;
  CNF out = phi;
  out.clauses.push_back({1, -1});
  return out;
}

struct LiteralChain {
  std::vector<int> pos;  // vertex of literal x_i (or y_i)
  std::vector<int> neg;
  int head = -1;  // first choice vertex
  int tail_pos = -1, tail_neg = -1;  // last literal pair
};

/**
 * A chain of literal choices: head -> {x_1, !x_1} -> box -> {x_2, !x_2} ...
 * The last literal pair is left without successors; the caller connects or
 * self-loops it. Choice vertices belong to `chooser`, literal vertices to
 * Player 1.
 */
inline LiteralChain literal_chain(Arena& a, int vars, Owner chooser,
                                  const std::string& prefix,
                                  const std::string& var_name) {
  LiteralChain ch;
  ch.head = a.add_vertex(chooser, prefix + "_choice1");
  int cur = ch.head;
  for (int i = 1; i <= vars; ++i) {
    int pos = a.add_vertex(Owner::p1,
                           prefix + "_" + var_name + std::to_string(i));
    int neg = a.add_vertex(Owner::p1,
                           prefix + "_n" + var_name + std::to_string(i));
    a.add_edge(cur, pos);
    a.add_edge(cur, neg);
    ch.pos.push_back(pos);
    ch.neg.push_back(neg);
    if (i < vars) {
      int box = a.add_vertex(chooser,
                             prefix + "_choice" + std::to_string(i + 1));
      a.add_edge(pos, box);
      a.add_edge(neg, box);
      cur = box;
    } else {
      ch.tail_pos = pos;
      ch.tail_neg = neg;
    }
  }
  return ch;
}

}  // namespace detail

/**
 * The reduction from Succinct Set Cover to a reachability SP game (three
 * sub-arenas under v0: the phi-model enumerator G1, the clause-spoiler G2,
 * and the Q_k-guarded covering gadget G3).
 */
inline SPGame ssc_to_reach_sps(const SSCInstance& inst) {
  require_valid(inst);
  const CNF phi = detail::normalize_phi(inst.phi);
  const CNF& psi = inst.psi;
  const int m = phi.num_x;
  const int n = psi.num_y;
  if (m < 1 || n < 1)
    throw input_error("ssc_to_reach_sps: need at least one X and one Y "
                      "variable");
  const int p = phi.p();
  const int q = psi.p();

  SPGame g;
  g.kind = ObjectiveKind::reachability;
  Arena& a = g.arena;
  const int v0 = a.add_vertex(Owner::p1, "v0");
  a.initial = v0;

  // G1
  auto g1 = detail::literal_chain(a, m, Owner::p1, "g1", "x");
  // literal_chain names the head "_choice1"; keep v1 recognizable
  a.names[g1.head] = "v1";
  a.add_edge(g1.tail_pos, g1.tail_pos);
  a.add_edge(g1.tail_neg, g1.tail_neg);

  // G2
  const int v2 = a.add_vertex(Owner::p1, "v2");
  std::vector<int> entries;
  for (int j = 1; j <= p; ++j) {
    entries.push_back(a.add_vertex(Owner::p1, "i" + std::to_string(j)));
    a.add_edge(v2, entries.back());
  }
  auto g2 = detail::literal_chain(a, m, Owner::p1, "g2", "x");
  for (int e : entries)
    a.add_edge(e, g2.head);
  a.add_edge(g2.tail_pos, g2.tail_pos);
  a.add_edge(g2.tail_neg, g2.tail_neg);

  // G3: Q_k, then Player-0 Y choices, then Player-1 X choices
  QkFragment qk = build_qk(inst.k);
  const int offset = a.size();
  for (int v = 0; v < qk.arena.size(); ++v)
    a.add_vertex(qk.arena.owner[v], qk.arena.names[v]);
  for (int v = 0; v < qk.arena.size(); ++v)
    for (int w : qk.arena.succ[v])
      a.add_edge(offset + v, offset + w);
  const int alpha = offset + qk.entry;
  const int beta = offset + qk.exit;
  auto g3y = detail::literal_chain(a, n, Owner::p0, "g3", "y");
  a.names[g3y.head] = "v3";
  const int v3 = g3y.head;
  a.add_edge(beta, v3);
  auto g3x = detail::literal_chain(a, m, Owner::p1, "g3", "x");
  a.add_edge(g3y.tail_pos, g3x.head);
  a.add_edge(g3y.tail_neg, g3x.head);
  a.add_edge(g3x.tail_pos, g3x.tail_pos);
  a.add_edge(g3x.tail_neg, g3x.tail_neg);

  a.add_edge(v0, g1.head);
  a.add_edge(v0, v2);
  a.add_edge(v0, alpha);

  // objectives
  g.p0_objective = Objective::reach({v2, v3});
  g.p1_objectives.push_back(Objective::reach({v2, v3}));  // Omega_1
  for (int i = 1; i <= m; ++i) {
    g.p1_objectives.push_back(Objective::reach(
        {g1.pos[i - 1], g2.pos[i - 1], g3x.pos[i - 1]}));
    g.p1_objectives.push_back(Objective::reach(
        {g1.neg[i - 1], g2.neg[i - 1], g3x.neg[i - 1]}));
  }
  auto x_literal_vertices = [&](int lit,
                                const detail::LiteralChain& chain) {
    const int var = std::abs(lit);
    return lit > 0 ? chain.pos[var - 1] : chain.neg[var - 1];
  };
  for (int j = 0; j < p; ++j) {
    std::vector<int> t;
    for (int lit : phi.clauses[j]) {
      t.push_back(x_literal_vertices(lit, g1));
      t.push_back(x_literal_vertices(lit, g3x));
    }
    for (int j2 = 0; j2 < p; ++j2)
      if (j2 != j)
        t.push_back(entries[j2]);
    g.p1_objectives.push_back(Objective::reach(std::move(t)));
  }
  for (int j = 0; j < q; ++j) {
    std::vector<int> t{g1.head, v2};
    for (int lit : psi.clauses[j]) {
      const int var = std::abs(lit);
      if (var <= m)
        t.push_back(x_literal_vertices(lit, g3x));
      else {
        const int yi = var - m;
        t.push_back(lit > 0 ? g3y.pos[yi - 1] : g3y.neg[yi - 1]);
      }
    }
    g.p1_objectives.push_back(Objective::reach(std::move(t)));
  }
  return g;
}

/**
 * The reduction from Succinct Set Cover to a parity SP game. Valuations are
 * encoded by repeated choices along loops; clause satisfaction by one
 * parity objective per clause literal. G'1 carries Player-0 selectors that
 * commit to one satisfied literal per psi clause, G'2 spoils one phi clause
 * per branch, G'3 is the Q_k-guarded covering loop.
 */
inline SPGame ssc_to_parity_sps(const SSCInstance& inst) {
  require_valid(inst);
  const CNF phi = detail::normalize_phi(inst.phi);
  const CNF& psi = inst.psi;
  const int m = phi.num_x;
  const int n = psi.num_y;
  if (m < 1 || n < 1)
    throw input_error("ssc_to_parity_sps: need at least one X and one Y "
                      "variable");
  const int p = phi.p();
  const int q = psi.p();

  SPGame g;
  g.kind = ObjectiveKind::parity;
  Arena& a = g.arena;
  const int v0 = a.add_vertex(Owner::p1, "v0");
  a.initial = v0;

  // G'1: X loop plus Player-0 literal selectors per psi clause
  const int g1_begin = a.size();
  auto g1 = detail::literal_chain(a, m, Owner::p1, "G1", "x");
  a.names[g1.head] = "v1";
  const int g1_close = a.add_vertex(Owner::p1, "G1_close");
  a.add_edge(g1.tail_pos, g1_close);
  a.add_edge(g1.tail_neg, g1_close);
  std::vector<std::vector<int>> g1_sel(q);  // selection vertex per literal
  {
    std::vector<int> pending{g1_close};
    for (int j = 0; j < q; ++j) {
      const int sel =
          a.add_vertex(Owner::p0, "G1_selD" + std::to_string(j + 1));
      for (int v : pending)
        a.add_edge(v, sel);
      pending.clear();
      for (size_t li = 0; li < psi.clauses[j].size(); ++li) {
        const int sv =
            a.add_vertex(Owner::p1, "G1_D" + std::to_string(j + 1) + "l" +
                                        std::to_string(li + 1));
        a.add_edge(sel, sv);
        g1_sel[j].push_back(sv);
        pending.push_back(sv);
      }
    }
    for (int v : pending)
      a.add_edge(v, g1.head);
  }
  const int g1_end = a.size();

  // G'2: Player 1 selects one phi clause, then a spoiled X loop per branch
  const int g2_begin = a.size();
  const int v2 = a.add_vertex(Owner::p1, "v2");
  std::vector<detail::LiteralChain> branch(p);
  std::vector<int> branch_close(p);
  for (int j = 0; j < p; ++j) {
    branch[j] = detail::literal_chain(a, m, Owner::p1,
                                      "G2C" + std::to_string(j + 1), "x");
    branch_close[j] =
        a.add_vertex(Owner::p1, "G2C" + std::to_string(j + 1) + "_close");
    a.add_edge(branch[j].tail_pos, branch_close[j]);
    a.add_edge(branch[j].tail_neg, branch_close[j]);
    a.add_edge(branch_close[j], branch[j].head);
    a.add_edge(v2, branch[j].head);
  }
  const int g2_end = a.size();

  // G'3: Q_k, then the Player-0 Y loop feeding a Player-1 X loop
  const int g3_begin = a.size();
  QkFragment qk = build_qk(inst.k);
  const int offset = a.size();
  for (int v = 0; v < qk.arena.size(); ++v)
    a.add_vertex(qk.arena.owner[v], qk.arena.names[v]);
  for (int v = 0; v < qk.arena.size(); ++v)
    for (int w : qk.arena.succ[v])
      a.add_edge(offset + v, offset + w);
  const int alpha = offset + qk.entry;
  const int beta = offset + qk.exit;
  auto g3y = detail::literal_chain(a, n, Owner::p0, "G3", "y");
  a.names[g3y.head] = "v3";
  a.add_edge(beta, g3y.head);
  auto g3x = detail::literal_chain(a, m, Owner::p1, "G3", "x");
  a.add_edge(g3y.tail_pos, g3x.head);
  a.add_edge(g3y.tail_neg, g3x.head);
  const int g3_close = a.add_vertex(Owner::p1, "G3_close");
  a.add_edge(g3x.tail_pos, g3_close);
  a.add_edge(g3x.tail_neg, g3_close);
  a.add_edge(g3_close, g3y.head);
  const int g3_end = a.size();

  a.add_edge(v0, g1.head);
  a.add_edge(v0, v2);
  a.add_edge(v0, alpha);

  // priorities
  auto flat = [&](int value) { return std::vector<int>(a.size(), value); };
  auto region_map = [&]() {
    std::vector<int> c = flat(3);
    for (int v = g1_begin; v < g1_end; ++v)
      c[v] = 1;
    for (int v = g2_begin; v < g2_end; ++v)
      c[v] = 2;
    for (int v = g3_begin; v < g3_end; ++v)
      c[v] = 2;
    return c;
  };
  g.p0_objective = Objective::parity(region_map());
  g.p1_objectives.push_back(Objective::parity(region_map()));  // Omega_1

  auto lit_vertex = [](const detail::LiteralChain& ch, int lit) {
    const int var = std::abs(lit);
    return lit > 0 ? ch.pos[var - 1] : ch.neg[var - 1];
  };
  // X-valuation encodings: settle on a literal to satisfy its objective
  for (int i = 1; i <= m; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      const int lit = sign == 0 ? i : -i;
      std::vector<int> c = flat(3);
      for (const detail::LiteralChain* ch :
           {&g1, &g3x}) {
        c[lit_vertex(*ch, lit)] = 2;
        c[lit_vertex(*ch, -lit)] = 1;
      }
      for (int j = 0; j < p; ++j) {
        c[lit_vertex(branch[j], lit)] = 2;
        c[lit_vertex(branch[j], -lit)] = 1;
      }
      g.p1_objectives.push_back(Objective::parity(std::move(c)));
    }
  }
  // one objective per literal of each phi clause
  for (int j = 0; j < p; ++j) {
    for (int lit : phi.clauses[j]) {
      std::vector<int> c = flat(3);
      c[lit_vertex(g1, lit)] = 2;
      c[lit_vertex(g1, -lit)] = 1;
      c[lit_vertex(g3x, lit)] = 2;
      c[lit_vertex(g3x, -lit)] = 1;
      for (int j2 = 0; j2 < p; ++j2)
        if (j2 != j)
          c[branch_close[j2]] = 2;  // satisfied on every other branch
      g.p1_objectives.push_back(Objective::parity(std::move(c)));
    }
  }
  // one objective per literal of each psi clause
  for (int j = 0; j < q; ++j) {
    for (size_t li = 0; li < psi.clauses[j].size(); ++li) {
      const int lit = psi.clauses[j][li];
      const int var = std::abs(lit);
      std::vector<int> c = flat(3);
      if (var <= m) {
        c[lit_vertex(g3x, lit)] = 2;
        c[lit_vertex(g3x, -lit)] = 1;
      } else {
        const int ylit = lit > 0 ? var - m : -(var - m);
        c[lit_vertex(g3y, ylit)] = 2;
        c[lit_vertex(g3y, -ylit)] = 1;
      }
      c[g1_sel[j][li]] = 2;  // Player 0's commitment in G'1
      for (int j2 = 0; j2 < p; ++j2)
        c[branch_close[j2]] = 2;  // satisfied throughout G'2
      g.p1_objectives.push_back(Objective::parity(std::move(c)));
    }
  }
  return g;
}

/**
 * Reduction from Succinct Dominating Set to Succinct Set Cover: phi is the
 * empty CNF over X (every valuation must be covered) and psi is the CNF of
 * theta(X,Y) | theta(Y,X) obtained by clause-product distribution, which
 * keeps the variable set intact. The budget is unchanged.
 */
inline SSCInstance sds_to_ssc(const SDSInstance& inst,
                              int clause_guard = 4096) {
  require_valid(inst);
  const int n = inst.theta.num_x;
  SSCInstance out;
  out.k = inst.k;
  out.phi.num_x = n;
  out.phi.num_y = 0;
  out.psi.num_x = n;
  out.psi.num_y = n;
  const auto& th = inst.theta.clauses;
  if (static_cast<int>(th.size()) * static_cast<int>(th.size()) >
      clause_guard)
    throw error("sds_to_ssc: clause-product size guard exceeded");
  auto swap_xy = [&](int lit) {
    const int var = std::abs(lit);
    const int swapped = var <= n ? var + n : var - n;
    return lit > 0 ? swapped : -swapped;
  };
  for (const auto& c : th) {
    for (const auto& d : th) {
      std::vector<int> clause = c;
      for (int lit : d)
        clause.push_back(swap_xy(lit));
      std::sort(clause.begin(), clause.end());
      clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
      bool tautology = false;
      for (size_t i = 0; i + 1 < clause.size(); ++i)
        for (size_t j = i + 1; j < clause.size(); ++j)
          if (clause[i] == -clause[j])
            tautology = true;
      if (tautology)
        continue;
      if (std::find(out.psi.clauses.begin(), out.psi.clauses.end(),
                    clause) == out.psi.clauses.end())
        out.psi.clauses.push_back(std::move(clause));
    }
  }
  return out;
}

}  // namespace sps
