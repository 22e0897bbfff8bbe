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
#include <string>
#include <unordered_map>
#include <vector>

#include "sps/core.hpp"
#include "sps/formula.hpp"
#include "sps/objectives.hpp"
#include "sps/payoff.hpp"
#include "sps/zerosum.hpp"

namespace sps {

/**
 * One vertex of the Challenger-Prover arena for a fixed announced antichain
 * P. Prover vertices carry the witness-obligation set W (as a bit mask over
 * P's elements); Challenger vertices carry the announced split (Wl, Wr),
 * with Wr = W \ Wl. In the reachability case the accumulated extended
 * payoff (w, p) is part of the state.
 */
struct CPState {
  int v = 0;            // underlying game vertex
  uint32_t wmask = 0;   // W as a subset of P (by element index)
  bool partition = false;
  uint32_t wl = 0;      // only for partition (Challenger) states
  bool w = false;       // reachability only
  uint32_t pbits = 0;   // reachability only

  uint32_t wr() const { return wmask & ~wl; }
};

/**
 * A per-antichain Challenger-Prover zero-sum game. The Prover plays as the
 * protagonist. Reachability SP games yield a Büchi objective, parity SP
 * games an Emerson-Lei objective over Prover-vertex sets.
 */
struct CPGame {
  ObjectiveKind kind = ObjectiveKind::reachability;
  Arena arena;  // Owner::p0 = Prover, Owner::p1 = Challenger
  int start = 0;
  Antichain P;
  int width = 0;  // the game's t
  std::vector<CPState> states;
  std::vector<char> accept;             // reachability: the Büchi set B*
  BooleanFormula phi;                   // parity objective formula
  std::vector<std::vector<char>> sets;  // parity: vertex set per variable
  std::vector<std::string> var_names;   // parity: variable names

  ZeroSumGame to_zero_sum() const {
    ZeroSumGame g;
    g.arena = arena;
    if (kind == ObjectiveKind::reachability)
      g.objective = BuchiObjective{accept};
    else
      g.objective = EmersonLeiObjective{phi, sets};
    return g;
  }

  std::string state_label(int id, const Arena& base) const {
    const CPState& s = states[id];
    auto set_str = [&](uint32_t mask) {
      std::string out = "{";
      bool first = true;
      for (int i = 0; i < P.size(); ++i)
        if ((mask >> i) & 1u) {
          if (!first)
            out += ",";
          out += P.elems[i].to_string();
          first = false;
        }
      return out + "}";
    };
    std::string label = base.display_name(s.v);
    if (s.partition)
      label += ", (" + set_str(s.wl) + "," + set_str(s.wr()) + ")";
    else
      label += ", " + set_str(s.wmask);
    if (kind == ObjectiveKind::reachability) {
      label += ", " + ExtendedPayoff{s.w, Payoff(s.pbits, width)}.to_string();
    }
    return label;
  }
};

namespace detail {

inline uint64_t cp_key(const CPState& s) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(s.v)) << 40) |
         (static_cast<uint64_t>(s.wmask & 0xfffu) << 28) |
         (static_cast<uint64_t>(s.partition ? 1 : 0) << 27) |
         (static_cast<uint64_t>(s.wl & 0xfffu) << 15) |
         (static_cast<uint64_t>(s.w ? 1 : 0) << 14) |
         static_cast<uint64_t>(s.pbits & 0x3fffu);
}

inline void cp_guards(const SPGame& g, const Antichain& P) {
  require_valid(g);
  for (int v = 0; v < g.arena.size(); ++v)
    if (g.arena.succ[v].size() > 2)
      throw error("Challenger-Prover construction needs a binarized game "
                  "(vertex " + std::to_string(v) + " has more than two "
                  "successors)");
  if (P.empty())
    throw error("announced antichain must not be empty");
  if (!is_antichain(P.elems))
    throw error("announced payoff set is not an antichain");
  for (const auto& p : P.elems)
    if (p.width != g.t())
      throw error("announced payoff width mismatch");
  if (P.size() > 12 || g.t() > 14 || g.arena.size() >= (1 << 24))
    throw error("Challenger-Prover construction: size guards exceeded");
}

/** Shared lazy construction of the per-P Challenger-Prover arena. */
template <typename MakeProver>
inline void cp_build(const SPGame& g, const Antichain& P, CPGame& cp,
                     MakeProver&& payoff_update) {
  const Arena& a = g.arena;
  std::unordered_map<uint64_t, int> id_of;
  std::vector<int> worklist;
  auto intern = [&](CPState s) {
    uint64_t k = cp_key(s);
    auto it = id_of.find(k);
    if (it != id_of.end())
      return it->second;
    int id = static_cast<int>(cp.states.size());
    id_of.emplace(k, id);
    cp.states.push_back(s);
    cp.arena.add_vertex(s.partition ? Owner::p1 : Owner::p0);
    worklist.push_back(id);
    return id;
  };

  CPState root;
  root.v = a.initial;
  root.wmask = P.size() >= 32 ? ~0u : ((1u << P.size()) - 1u);
  payoff_update(false, 0u, a.initial, root.w, root.pbits);
  cp.start = intern(root);

  for (size_t i = 0; i < worklist.size(); ++i) {
    const int id = worklist[i];
    const CPState s = cp.states[id];  // copy: states may reallocate
    if (!s.partition) {
      if (a.owner[s.v] == Owner::p0) {
        for (int v2 : a.succ[s.v]) {
          CPState n;
          n.v = v2;
          n.wmask = s.wmask;
          payoff_update(s.w, s.pbits, v2, n.w, n.pbits);
          cp.arena.add_edge(id, intern(n));
        }
      } else {
        const bool single = a.succ[s.v].size() == 1;
        if (single) {
          CPState n = s;
          n.partition = true;
          n.wl = s.wmask;  // the only successor is the left one, Wr = {}
          cp.arena.add_edge(id, intern(n));
        } else {
          // one Challenger successor per ordered partition (Wl, Wr) of W
          uint32_t wl = 0;
          while (true) {
            CPState n = s;
            n.partition = true;
            n.wl = wl;
            cp.arena.add_edge(id, intern(n));
            if (wl == s.wmask)
              break;
            wl = (wl - s.wmask) & s.wmask;  // next submask, ascending
          }
        }
      }
    } else {
      const int vl = a.succ[s.v][0];
      CPState l;
      l.v = vl;
      l.wmask = s.wl;
      payoff_update(s.w, s.pbits, vl, l.w, l.pbits);
      cp.arena.add_edge(id, intern(l));
      if (a.succ[s.v].size() == 2) {
        const int vr = a.succ[s.v][1];
        CPState r;
        r.v = vr;
        r.wmask = s.wr();
        payoff_update(s.w, s.pbits, vr, r.w, r.pbits);
        cp.arena.add_edge(id, intern(r));
      }
    }
  }
  cp.arena.initial = cp.start;
}

}  // namespace detail

/**
 * Builds the extended Challenger-Prover Büchi game of a reachability SP
 * game for the announced antichain P: states track (v, W, w, p) and the
 * Büchi set demands, at the limit, a correctly witnessed payoff of P
 * (W = {p} and w = 1), a repeated payoff of P (W = {} with p in P won), or
 * a strictly dominated payoff (W = {} with p below P).
 */
inline CPGame build_reach_cp(const SPGame& g, const Antichain& P) {
  if (g.kind != ObjectiveKind::reachability)
    throw error("build_reach_cp expects a reachability game");
  detail::cp_guards(g, P);
  CPGame cp;
  cp.kind = ObjectiveKind::reachability;
  cp.P = P;
  cp.width = g.t();
  auto letters = TargetLetters::of(g);
  auto update = [&](bool w, uint32_t p, int v, bool& w2, uint32_t& p2) {
    w2 = w || letters.won[v];
    p2 = p | letters.bits[v];
  };
  detail::cp_build(g, P, cp, update);

  cp.accept.assign(cp.states.size(), 0);
  for (size_t i = 0; i < cp.states.size(); ++i) {
    const CPState& s = cp.states[i];
    if (s.partition)
      continue;
    const Payoff p(s.pbits, g.t());
    bool ok = false;
    if (s.w && __builtin_popcount(s.wmask) == 1) {
      int idx = __builtin_ctz(s.wmask);
      ok = cp.P.elems[idx] == p;
    }
    if (!ok && s.wmask == 0 && s.w && cp.P.contains(p))
      ok = true;
    if (!ok && s.wmask == 0 && cp.P.dominates(p))
      ok = true;
    cp.accept[i] = ok;
  }
  return cp;
}

/** The Boolean Büchi formula of the per-P parity Challenger-Prover game. */
struct CPFormula {
  struct Var {
    enum class Kind { single, empty, prio };
    Kind kind;
    std::string name;
    Payoff payoff;      // for single
    int objective = 0;  // for prio
    int priority = 0;   // for prio
  };
  std::vector<Var> vars;
  std::vector<BooleanFormula> parity;  // per objective 0..t
  BooleanFormula cond1, cond2, cond3;
  BooleanFormula phi;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : vars)
      out.push_back(v.name);
    return out;
  }
};

/**
 * Emits the formula phi_P = cond1 | cond2 | cond3 over variables
 * x_p (W = {p}), x_empty (W = {}) and x^i_j (vertices of priority j under
 * objective i), together with the variable descriptors. Since the subgame
 * fixes P the paper-level outer disjunction over antichains collapses.
 */
inline CPFormula build_parity_formula(const SPGame& g, const Antichain& P) {
  if (g.kind != ObjectiveKind::parity)
    throw error("build_parity_formula expects a parity game");
  if (P.empty())
    throw error("announced antichain must not be empty");
  CPFormula f;
  const int t = g.t();
  std::vector<int> x_single(P.size());
  for (int i = 0; i < P.size(); ++i) {
    x_single[i] = static_cast<int>(f.vars.size());
    f.vars.push_back({CPFormula::Var::Kind::single,
                      "x_" + P.elems[i].to_string(), P.elems[i], 0, 0});
  }
  const int x_empty = static_cast<int>(f.vars.size());
  f.vars.push_back({CPFormula::Var::Kind::empty, "x_{}", Payoff(), 0, 0});

  // parity_i over fresh variables x^i_j, j = 0..d_i (max even priority)
  std::vector<std::vector<int>> prio_var(t + 1);
  for (int i = 0; i <= t; ++i) {
    const auto& prio = g.objective(i).priority;
    int d = -1;
    for (int p : prio)
      if (p % 2 == 0)
        d = std::max(d, p);
    if (d < 0) {
      f.parity.push_back(BooleanFormula::constant(false));
      continue;
    }
    prio_var[i].assign(d + 1, -1);
    for (int j = 0; j <= d; ++j) {
      prio_var[i][j] = static_cast<int>(f.vars.size());
      f.vars.push_back({CPFormula::Var::Kind::prio,
                        "x^" + std::to_string(i) + "_" + std::to_string(j),
                        Payoff(), i, j});
    }
    std::vector<BooleanFormula> clauses;
    for (int j = 0; j <= d; j += 2) {
      std::vector<BooleanFormula> lits{BooleanFormula::var(prio_var[i][j])};
      for (int j2 = 1; j2 < j; j2 += 2)
        lits.push_back(!BooleanFormula::var(prio_var[i][j2]));
      clauses.push_back(BooleanFormula::conj(std::move(lits)));
    }
    f.parity.push_back(BooleanFormula::disj(std::move(clauses)));
  }

  auto payoff_formula = [&](const Payoff& p) {
    std::vector<BooleanFormula> cs;
    for (int i = 1; i <= t; ++i)
      cs.push_back(p.get(i - 1) ? f.parity[i] : !f.parity[i]);
    return BooleanFormula::conj(std::move(cs));
  };

  std::vector<BooleanFormula> singles, empties, smallers;
  for (int i = 0; i < P.size(); ++i) {
    singles.push_back(BooleanFormula::var(x_single[i]) &&
                      payoff_formula(P.elems[i]) && f.parity[0]);
    empties.push_back(BooleanFormula::var(x_empty) &&
                      payoff_formula(P.elems[i]) && f.parity[0]);
  }
  const uint32_t total = 1u << t;
  for (uint32_t bits = 0; bits < total; ++bits) {
    Payoff p(bits, t);
    if (P.dominates(p))
      smallers.push_back(BooleanFormula::var(x_empty) && payoff_formula(p));
  }
  f.cond1 = BooleanFormula::disj(std::move(singles));
  f.cond2 = BooleanFormula::disj(std::move(empties));
  f.cond3 = BooleanFormula::disj(std::move(smallers));
  f.phi = f.cond1 || f.cond2 || f.cond3;
  return f;
}

/**
 * Builds the per-P Challenger-Prover Emerson-Lei game of a parity SP game:
 * the plain C-P arena (no payoff tracking) with the Boolean Büchi objective
 * of build_parity_formula materialized over Prover vertices.
 */
inline CPGame build_parity_cp(const SPGame& g, const Antichain& P) {
  if (g.kind != ObjectiveKind::parity)
    throw error("build_parity_cp expects a parity game");
  detail::cp_guards(g, P);
  CPGame cp;
  cp.kind = ObjectiveKind::parity;
  cp.P = P;
  cp.width = g.t();
  auto update = [](bool, uint32_t, int, bool& w2, uint32_t& p2) {
    w2 = false;
    p2 = 0;
  };
  detail::cp_build(g, P, cp, update);

  CPFormula f = build_parity_formula(g, P);
  cp.phi = f.phi;
  cp.var_names = f.names();
  cp.sets.assign(f.vars.size(), std::vector<char>(cp.states.size(), 0));
  for (size_t k = 0; k < f.vars.size(); ++k) {
    const auto& var = f.vars[k];
    for (size_t i = 0; i < cp.states.size(); ++i) {
      const CPState& s = cp.states[i];
      if (s.partition)
        continue;
      bool member = false;
      switch (var.kind) {
        case CPFormula::Var::Kind::single:
          member = __builtin_popcount(s.wmask) == 1 &&
                   cp.P.elems[__builtin_ctz(s.wmask)] == var.payoff;
          break;
        case CPFormula::Var::Kind::empty:
          member = s.wmask == 0;
          break;
        case CPFormula::Var::Kind::prio:
          member =
              g.objective(var.objective).priority[s.v] == var.priority;
          break;
      }
      cp.sets[k][i] = member;
    }
  }
  return cp;
}

inline CPGame build_cp(const SPGame& g, const Antichain& P) {
  return g.kind == ObjectiveKind::reachability ? build_reach_cp(g, P)
                                               : build_parity_cp(g, P);
}

}  // namespace sps
