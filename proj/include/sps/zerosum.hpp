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
#include <limits>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sps/core.hpp"
#include "sps/formula.hpp"
#include "sps/moore.hpp"

namespace sps {

/** Büchi objective: visit `accept` infinitely often. */
struct BuchiObjective {
  std::vector<char> accept;  // membership per vertex
};

/** Min-parity objective: the least priority seen infinitely often is even. */
struct ParityObjective {
  std::vector<int> priority;
};

/**
 * Emerson-Lei (Boolean Büchi) objective: variable i of `phi` is true iff
 * vertex set i is visited infinitely often.
 */
struct EmersonLeiObjective {
  BooleanFormula phi;
  std::vector<std::vector<char>> sets;  // membership per set per vertex
};

/**
 * A zero-sum game. Owner::p0 plays as the protagonist (the side whose
 * objective is stated).
 */
struct ZeroSumGame {
  Arena arena;
  std::variant<BuchiObjective, ParityObjective, EmersonLeiObjective>
      objective;
};

struct SolveResult {
  std::vector<char> protagonist_region;
  // memoryless strategy per vertex (successor or -1), for Büchi/parity
  std::vector<int> positional;
  bool memoryless = true;
  MooreStrategy machine;  // finite-memory strategy, for Emerson-Lei

  bool wins(int v) const { return protagonist_region[v] != 0; }

  /** Uniform Moore-machine view of the protagonist strategy. */
  MooreStrategy as_machine(const Arena& a) const {
    if (!memoryless)
      return machine;
    return MooreStrategy::memoryless(a, positional);
  }
};

namespace detail {

inline std::vector<std::vector<int>> predecessors(const Arena& a) {
  std::vector<std::vector<int>> pred(a.size());
  for (int v = 0; v < a.size(); ++v)
    for (int w : a.succ[v])
      pred[w].push_back(v);
  return pred;
}

struct AttractorInfo {
  std::vector<char> in;
  std::vector<int> rank;
};

/**
 * Least fixpoint of one-step forcing for `player` toward `target`, within
 * the `alive` subgame. Ranks give the forced distance to the target.
 */
inline AttractorInfo attract(const Arena& a,
                             const std::vector<std::vector<int>>& pred,
                             const std::vector<char>& alive, Owner player,
                             const std::vector<char>& target) {
  const int n = a.size();
  AttractorInfo res;
  res.in.assign(n, 0);
  res.rank.assign(n, std::numeric_limits<int>::max());
  std::vector<int> escapes(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!alive[v])
      continue;
    for (int w : a.succ[v])
      if (alive[w])
        ++escapes[v];
  }
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (alive[v] && target[v]) {
      res.in[v] = 1;
      res.rank[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int v : pred[w]) {
      if (!alive[v] || res.in[v])
        continue;
      bool join = false;
      if (a.owner[v] == player) {
        join = true;
      } else {
        if (--escapes[v] == 0)
          join = true;
      }
      if (join) {
        res.in[v] = 1;
        res.rank[v] = res.rank[w] + 1;
        queue.push_back(v);
      }
    }
  }
  return res;
}

/**
 * Fills `strategy` for the attracting player's vertices strictly inside the
 * attractor: the lowest-numbered alive successor with a smaller rank.
 */
inline void attractor_strategy(const Arena& a, const std::vector<char>& alive,
                               Owner player, const AttractorInfo& attr,
                               const std::vector<char>& target,
                               std::vector<int>& strategy) {
  for (int v = 0; v < a.size(); ++v) {
    if (!alive[v] || !attr.in[v] || target[v] || a.owner[v] != player)
      continue;
    for (int w : a.succ[v])
      if (alive[w] && attr.in[w] && attr.rank[w] < attr.rank[v]) {
        strategy[v] = w;
        break;
      }
  }
}

}  // namespace detail

/** Public attractor: the vertex set `player` can force into `target`. */
inline std::vector<int> attractor(const Arena& a, Owner player,
                                  const std::vector<int>& target) {
  auto r = validate(a);
  if (!r.ok())
    throw input_error("invalid arena: " + r.to_string());
  auto pred = detail::predecessors(a);
  std::vector<char> alive(a.size(), 1);
  std::vector<char> t(a.size(), 0);
  for (int v : target)
    t[v] = 1;
  auto attr = detail::attract(a, pred, alive, player, t);
  std::vector<int> out;
  for (int v = 0; v < a.size(); ++v)
    if (attr.in[v])
      out.push_back(v);
  return out;
}

/**
 * Büchi game solver (classical repeated-attractor algorithm). The
 * protagonist's memoryless strategy is defined on its winning region: on
 * accepting vertices the lowest region successor, elsewhere the attractor
 * move toward the accepting set.
 */
inline SolveResult solve_buchi(const ZeroSumGame& g) {
  const auto& obj = std::get<BuchiObjective>(g.objective);
  const Arena& a = g.arena;
  const int n = a.size();
  auto pred = detail::predecessors(a);
  std::vector<char> alive(n, 1);
  detail::AttractorInfo last_attr;
  while (true) {
    std::vector<char> target(n, 0);
    bool any_alive = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v])
        any_alive = true;
      target[v] = alive[v] && obj.accept[v];
    }
    if (!any_alive)
      break;
    last_attr = detail::attract(a, pred, alive, Owner::p0, target);
    std::vector<char> escape(n, 0);
    bool any_escape = false;
    for (int v = 0; v < n; ++v)
      if (alive[v] && !last_attr.in[v]) {
        escape[v] = 1;
        any_escape = true;
      }
    if (!any_escape)
      break;
    auto bad = detail::attract(a, pred, alive, Owner::p1, escape);
    for (int v = 0; v < n; ++v)
      if (bad.in[v])
        alive[v] = 0;
  }
  SolveResult res;
  res.protagonist_region = alive;
  res.positional.assign(n, -1);
  std::vector<char> target(n, 0);
  for (int v = 0; v < n; ++v)
    target[v] = alive[v] && obj.accept[v];
  detail::attractor_strategy(a, alive, Owner::p0, last_attr, target,
                             res.positional);
  for (int v = 0; v < n; ++v) {
    if (!alive[v] || !target[v] || a.owner[v] != Owner::p0)
      continue;
    for (int w : a.succ[v])
      if (alive[w]) {
        res.positional[v] = w;
        break;
      }
  }
  return res;
}

namespace detail {

struct ZielonkaState {
  const Arena& arena;
  const std::vector<int>& priority;
  std::vector<std::vector<int>> pred;
  std::vector<char> region[2];
  std::vector<int> strategy[2];
};

inline void zielonka_rec(ZielonkaState& zs, std::vector<char> alive) {
  const Arena& a = zs.arena;
  const int n = a.size();
  int d = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v)
    if (alive[v])
      d = std::min(d, zs.priority[v]);
  if (d == std::numeric_limits<int>::max())
    return;
  const int favored = d % 2;  // 0: protagonist
  const Owner fav_owner = favored == 0 ? Owner::p0 : Owner::p1;
  const Owner opp_owner = favored == 0 ? Owner::p1 : Owner::p0;
  std::vector<char> zset(n, 0);
  for (int v = 0; v < n; ++v)
    zset[v] = alive[v] && zs.priority[v] == d;
  auto attr_a = attract(a, zs.pred, alive, fav_owner, zset);
  std::vector<char> inner = alive;
  for (int v = 0; v < n; ++v)
    if (attr_a.in[v])
      inner[v] = 0;
  zielonka_rec(zs, inner);
  bool opp_wins_some = false;
  for (int v = 0; v < n; ++v)
    if (inner[v] && zs.region[1 - favored][v])
      opp_wins_some = true;
  if (!opp_wins_some) {
    for (int v = 0; v < n; ++v)
      if (alive[v]) {
        zs.region[favored][v] = 1;
        zs.region[1 - favored][v] = 0;
      }
    attractor_strategy(a, alive, fav_owner, attr_a, zset,
                       zs.strategy[favored]);
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || !zset[v] || a.owner[v] != fav_owner)
        continue;
      for (int w : a.succ[v])
        if (alive[w]) {
          zs.strategy[favored][v] = w;
          break;
        }
    }
    return;
  }
  std::vector<char> opp_won(n, 0);
  for (int v = 0; v < n; ++v)
    opp_won[v] = inner[v] && zs.region[1 - favored][v];
  auto attr_b = attract(a, zs.pred, alive, opp_owner, opp_won);
  attractor_strategy(a, alive, opp_owner, attr_b, opp_won,
                     zs.strategy[1 - favored]);
  std::vector<char> rest = alive;
  for (int v = 0; v < n; ++v)
    if (attr_b.in[v])
      rest[v] = 0;
  zielonka_rec(zs, rest);
  for (int v = 0; v < n; ++v)
    if (attr_b.in[v]) {
      zs.region[1 - favored][v] = 1;
      zs.region[favored][v] = 0;
    }
}

}  // namespace detail

/** Regions and memoryless strategies for both players of a parity game. */
struct ParityResult {
  std::vector<char> region0;
  std::vector<int> strategy0;
  std::vector<int> strategy1;
};

/** Zielonka's recursive algorithm, min-parity convention. */
inline ParityResult solve_parity_full(const Arena& a,
                                      const std::vector<int>& priority) {
  detail::ZielonkaState zs{a, priority, detail::predecessors(a), {}, {}};
  const int n = a.size();
  zs.region[0].assign(n, 0);
  zs.region[1].assign(n, 0);
  zs.strategy[0].assign(n, -1);
  zs.strategy[1].assign(n, -1);
  std::vector<char> alive(n, 1);
  detail::zielonka_rec(zs, std::move(alive));
  return ParityResult{zs.region[0], zs.strategy[0], zs.strategy[1]};
}

inline SolveResult solve_parity(const ZeroSumGame& g) {
  const auto& obj = std::get<ParityObjective>(g.objective);
  auto full = solve_parity_full(g.arena, obj.priority);
  SolveResult res;
  res.protagonist_region = std::move(full.region0);
  res.positional = std::move(full.strategy0);
  for (int v = 0; v < g.arena.size(); ++v)
    if (!res.protagonist_region[v])
      res.positional[v] = -1;
  return res;
}

// ---------------------------------------------------------------------------
// Emerson-Lei games via the Zielonka tree of the formula.
// ---------------------------------------------------------------------------

/**
 * The Zielonka tree of a Boolean formula over m variables: the root is
 * labeled with the full variable set, children of a node are the maximal
 * subsets of its label whose formula value differs. A node is winning when
 * the formula holds on its label. Used to reduce an Emerson-Lei game to a
 * parity game with leaf-indexed memory.
 */
class ZielonkaTree {
 public:
  struct Node {
    uint32_t label;
    bool winning;
    int parent;
    int depth;
    std::vector<int> children;
    int leftmost_leaf = -1;  // index into leaves()
  };

  ZielonkaTree(const BooleanFormula& phi, int num_vars)
      : num_vars_(num_vars) {
    if (num_vars > 24)
      throw error("Zielonka tree: too many variables");
    uint32_t full = num_vars >= 32 ? ~0u : ((1u << num_vars) - 1u);
    build(phi, full, -1, 0);
    if (nodes_.empty())
      throw error("Zielonka tree: empty");
    // collect leaves in DFS (construction) order
    for (size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].children.empty()) {
        nodes_[i].leftmost_leaf = static_cast<int>(leaves_.size());
        leaves_.push_back(static_cast<int>(i));
      }
    for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
      Node& nd = nodes_[i];
      if (!nd.children.empty())
        nd.leftmost_leaf = nodes_[nd.children.front()].leftmost_leaf;
    }
  }

  int num_leaves() const { return static_cast<int>(leaves_.size()); }
  int initial_leaf() const { return nodes_[0].leftmost_leaf; }
  bool root_winning() const { return nodes_[0].winning; }

  /**
   * Priority emitted at a node: its depth, shifted by one when the root is
   * losing, so that winning nodes carry even priorities (min-parity).
   */
  int priority_of_node(int node) const {
    return nodes_[node].depth + (nodes_[0].winning ? 0 : 1);
  }

  int max_priority() const {
    int m = 0;
    for (size_t i = 0; i < nodes_.size(); ++i)
      m = std::max(m, priority_of_node(static_cast<int>(i)));
    return m;
  }

  /**
   * One automaton step from `leaf` (index into leaves()) on a letter (set of
   * variables read). Returns the next leaf index and the emitted priority:
   * locate the deepest ancestor-or-self whose label contains the letter,
   * emit its priority, and advance to the leftmost leaf of its cyclically
   * next child.
   */
  std::pair<int, int> step(int leaf, uint32_t letter) const {
    int node = leaves_[leaf];
    int below = -1;
    while ((nodes_[node].label & letter) != letter) {
      below = node;
      node = nodes_[node].parent;
    }
    const int prio = priority_of_node(node);
    if (below == -1)
      return {leaf, prio};  // the leaf itself supports the letter
    const auto& ch = nodes_[node].children;
    size_t idx = 0;
    while (ch[idx] != below)
      ++idx;
    int next_child = ch[(idx + 1) % ch.size()];
    return {nodes_[next_child].leftmost_leaf, prio};
  }

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int build(const BooleanFormula& phi, uint32_t label, int parent,
            int depth) {
    if (nodes_.size() > 100000)
      throw error("Zielonka tree: size guard exceeded");
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{label, phi.eval(label), parent, depth, {}, -1});
    const bool here = nodes_[id].winning;
    // maximal strict subsets with flipped value, largest first
    std::vector<uint32_t> flipped;
    uint32_t sub = label;
    while (true) {
      sub = (sub - 1) & label;
      if (phi.eval(sub) != here)
        flipped.push_back(sub);
      if (sub == 0)
        break;
    }
    std::stable_sort(flipped.begin(), flipped.end(),
                     [](uint32_t x, uint32_t y) {
                       return __builtin_popcount(x) > __builtin_popcount(y);
                     });
    std::vector<uint32_t> maximal;
    for (uint32_t s : flipped) {
      bool covered = false;
      for (uint32_t m : maximal)
        if ((s & m) == s) {
          covered = true;
          break;
        }
      if (!covered)
        maximal.push_back(s);
    }
    for (uint32_t s : maximal) {
      int child = build(phi, s, id, depth + 1);
      nodes_[id].children.push_back(child);
    }
    return id;
  }

  int num_vars_;
  std::vector<Node> nodes_;
  std::vector<int> leaves_;  // node ids in DFS order
};

namespace detail {

struct ElReduction {
  Arena product;
  std::vector<int> priority;
  std::vector<int> game_vertex;  // per product vertex
  std::vector<int> leaf;         // memory before processing the vertex
  std::vector<int> entry;        // per game vertex: product id of (v, init)
  ZielonkaTree tree;
};

/** Letter of a vertex: the variable sets it belongs to. */
inline std::vector<uint32_t> letters(const Arena& a,
                                     const std::vector<std::vector<char>>&
                                         sets) {
  std::vector<uint32_t> ls(a.size(), 0);
  for (size_t i = 0; i < sets.size(); ++i)
    for (int v = 0; v < a.size(); ++v)
      if (sets[i][v])
        ls[v] |= 1u << i;
  return ls;
}

}  // namespace detail

/**
 * Emerson-Lei game solver. Reduces to a parity game on the product of the
 * arena with the Zielonka-tree leaf memory of the formula, then solves with
 * Zielonka's algorithm. The returned strategy is a Moore machine whose
 * states are product vertices.
 */
inline SolveResult solve_emerson_lei(const ZeroSumGame& g) {
  const auto& obj = std::get<EmersonLeiObjective>(g.objective);
  const Arena& a = g.arena;
  const int n = a.size();
  int mv = obj.phi.max_var();
  if (mv >= static_cast<int>(obj.sets.size()))
    throw input_error("Emerson-Lei objective: unbound variable index");

  // Variable reduction: merge duplicate vertex sets and drop empty ones
  // (an empty set is never visited infinitely often, its variable is
  // constant false).
  std::vector<int> subst(obj.sets.size(), -1);
  std::vector<std::vector<char>> kept;
  for (size_t i = 0; i < obj.sets.size(); ++i) {
    bool empty = true;
    for (char c : obj.sets[i])
      if (c)
        empty = false;
    if (empty)
      continue;
    int found = -1;
    for (size_t k = 0; k < kept.size(); ++k)
      if (kept[k] == obj.sets[i])
        found = static_cast<int>(k);
    if (found < 0) {
      kept.push_back(obj.sets[i]);
      found = static_cast<int>(kept.size()) - 1;
    }
    subst[i] = found;
  }
  BooleanFormula phi = obj.phi.remap(subst);
  const int m = static_cast<int>(kept.size());

  SolveResult res;
  res.memoryless = false;
  if (phi.kind() == BooleanFormula::Kind::constant) {
    const bool win = phi.eval(0);
    res.protagonist_region.assign(n, win ? 1 : 0);
    res.machine.num_states = 1 + 1;
    res.machine.initial = 0;
    for (int v = 0; v < n; ++v) {
      res.machine.set_update(0, v, 1);
      res.machine.set_update(1, v, 1);
      if (win && a.owner[v] == Owner::p0)
        res.machine.set_output(1, v, a.succ[v].front());
    }
    return res;
  }

  ZielonkaTree tree(phi, m);
  auto letter = detail::letters(a, kept);

  // product states (v, leaf-before-v), built lazily from every entry state
  std::unordered_map<uint64_t, int> id_of;
  std::vector<int> pv, pl;
  std::vector<int> prio;
  auto key = [](int v, int l) {
    return (static_cast<uint64_t>(v) << 20) | static_cast<uint32_t>(l);
  };
  std::vector<int> worklist;
  auto intern = [&](int v, int l) {
    auto it = id_of.find(key(v, l));
    if (it != id_of.end())
      return it->second;
    int id = static_cast<int>(pv.size());
    id_of.emplace(key(v, l), id);
    pv.push_back(v);
    pl.push_back(l);
    prio.push_back(tree.step(l, letter[v]).second);
    worklist.push_back(id);
    return id;
  };
  std::vector<int> entry(n);
  for (int v = 0; v < n; ++v)
    entry[v] = intern(v, tree.initial_leaf());
  Arena prod;
  std::vector<std::vector<int>> edges;
  for (size_t i = 0; i < worklist.size(); ++i) {
    int s = worklist[i];
    int v = pv[s];
    int next_leaf = tree.step(pl[s], letter[v]).first;
    if (static_cast<int>(edges.size()) <= s)
      edges.resize(pv.size());
    for (int w : a.succ[v])
      edges[s].push_back(intern(w, next_leaf));
  }
  edges.resize(pv.size());
  prod.succ = std::move(edges);
  prod.owner.resize(pv.size());
  prod.names.resize(pv.size());
  for (size_t s = 0; s < pv.size(); ++s)
    prod.owner[s] = a.owner[pv[s]];
  prod.initial = entry[a.initial];

  auto parity = solve_parity_full(prod, prio);

  res.protagonist_region.assign(n, 0);
  for (int v = 0; v < n; ++v)
    res.protagonist_region[v] = parity.region0[entry[v]];

  // Moore machine over the original arena: state 0 is the pre-start state,
  // state 1+s corresponds to product vertex s (v with its pre-v leaf).
  MooreStrategy& mac = res.machine;
  mac.num_states = 1 + static_cast<int>(pv.size());
  mac.initial = 0;
  for (int v = 0; v < n; ++v)
    mac.set_update(0, v, 1 + entry[v]);
  for (size_t s = 0; s < pv.size(); ++s) {
    int v = pv[s];
    int next_leaf = tree.step(pl[s], letter[v]).first;
    for (int w : a.succ[v])
      mac.set_update(1 + static_cast<int>(s), w,
                     1 + id_of.at(key(w, next_leaf)));
    if (a.owner[v] == Owner::p0 && parity.region0[s] &&
        parity.strategy0[s] >= 0)
      mac.set_output(1 + static_cast<int>(s), v, pv[parity.strategy0[s]]);
  }
  return res;
}

inline SolveResult solve(const ZeroSumGame& g) {
  if (std::holds_alternative<BuchiObjective>(g.objective))
    return solve_buchi(g);
  if (std::holds_alternative<ParityObjective>(g.objective))
    return solve_parity(g);
  return solve_emerson_lei(g);
}

// ---------------------------------------------------------------------------
// Path existence for conjunctions of parity objectives (no players).
// ---------------------------------------------------------------------------

namespace detail {

/** Tarjan SCCs of the subgraph induced by `alive`, iterative. */
inline std::vector<std::vector<int>> sccs(const Arena& a,
                                          const std::vector<char>& alive) {
  const int n = a.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || index[root] >= 0)
      continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < a.succ[f.v].size()) {
        int w = a.succ[f.v][f.edge++];
        if (!alive[w])
          continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == f.v)
              break;
          }
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/** Shortest path from -> to within `alive` (inclusive ends), or empty. */
inline std::vector<int> bfs_path(const Arena& a,
                                 const std::vector<char>& alive, int from,
                                 int to) {
  if (from == to)
    return {from};
  const int n = a.size();
  std::vector<int> parent(n, -2);
  parent[from] = -1;
  std::deque<int> q{from};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : a.succ[v]) {
      if (!alive[w] || parent[w] != -2)
        continue;
      parent[w] = v;
      if (w == to) {
        std::vector<int> path;
        for (int x = to; x != -1; x = parent[x])
          path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(w);
    }
  }
  return {};
}

inline bool component_cyclic(const Arena& a, const std::vector<int>& comp) {
  if (comp.size() > 1)
    return true;
  int v = comp[0];
  return a.has_edge(v, v);
}

/**
 * Searches, inside the alive subgraph, for a strongly connected
 * sub-structure whose minimum priority is even for every map. For maps with
 * an odd minimum the vertices attaining it are removed and the search
 * recurses.
 */
inline std::optional<std::vector<int>> good_substructure(
    const Arena& a, const std::vector<std::vector<int>>& maps,
    std::vector<char> alive) {
  for (const auto& comp : sccs(a, alive)) {
    if (!component_cyclic(a, comp))
      continue;
    std::vector<char> bad(a.size(), 0);
    bool all_even = true;
    for (const auto& c : maps) {
      int mn = std::numeric_limits<int>::max();
      for (int v : comp)
        mn = std::min(mn, c[v]);
      if (mn % 2 != 0) {
        all_even = false;
        for (int v : comp)
          if (c[v] == mn)
            bad[v] = 1;
      }
    }
    if (all_even)
      return comp;
    std::vector<char> rest(a.size(), 0);
    bool any = false;
    for (int v : comp)
      if (!bad[v]) {
        rest[v] = 1;
        any = true;
      }
    if (!any)
      continue;
    auto sub = good_substructure(a, maps, std::move(rest));
    if (sub)
      return sub;
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Decides whether some infinite path from `from` satisfies every parity
 * objective in `maps` (an empty list is trivially satisfiable), ignoring
 * vertex owners. Returns a witness lasso when one exists.
 */
inline std::optional<LassoPlay> conj_parity_path_exists(
    const Arena& a, const std::vector<std::vector<int>>& maps, int from) {
  const int n = a.size();
  std::vector<char> reach(n, 0);
  {
    std::vector<int> stack{from};
    reach[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : a.succ[v])
        if (!reach[w]) {
          reach[w] = 1;
          stack.push_back(w);
        }
    }
  }
  auto comp = detail::good_substructure(a, maps, reach);
  if (!comp)
    return std::nullopt;
  const std::vector<int>& c = *comp;
  std::vector<char> inside(n, 0);
  for (int v : c)
    inside[v] = 1;
  int head = c.front();
  LassoPlay lasso;
  auto to_head = detail::bfs_path(a, reach, from, head);
  lasso.prefix.assign(to_head.begin(), to_head.end() - 1);
  // closed walk covering the whole component so each map's minimum is
  // realized on the cycle
  std::vector<int> cycle{head};
  int cur = head;
  for (int v : c) {
    if (v == cur)
      continue;
    auto p = detail::bfs_path(a, inside, cur, v);
    cycle.insert(cycle.end(), p.begin() + 1, p.end());
    cur = v;
  }
  if (cur != head) {
    auto back = detail::bfs_path(a, inside, cur, head);
    cycle.insert(cycle.end(), back.begin() + 1, back.end() - 1);
  } else if (c.size() == 1) {
    // single vertex with a self-loop
  }
  lasso.cycle = std::move(cycle);
  return lasso;
}

}  // namespace sps
