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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sps {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Raised by parsers and by validation of externally supplied documents. */
struct input_error : error {
  using error::error;
};

enum class Owner : uint8_t { p0 = 0, p1 = 1 };

/**
 * A finite game arena: owned vertices, ordered successor lists, an initial
 * vertex. Successor order is significant (it defines left/right in the
 * Challenger-Prover construction and the document edge order).
 */
struct Arena {
  std::vector<Owner> owner;
  std::vector<std::vector<int>> succ;
  int initial = 0;
  std::vector<std::string> names;  // optional; defaults to v<i>

  int size() const { return static_cast<int>(owner.size()); }

  const std::string& name(int v) const {
    static const std::string empty;
    return v >= 0 && v < static_cast<int>(names.size()) ? names[v] : empty;
  }

  std::string display_name(int v) const {
    if (v >= 0 && v < static_cast<int>(names.size()) && !names[v].empty())
      return names[v];
    return "v" + std::to_string(v);
  }

  int add_vertex(Owner o, std::string name = {}) {
    owner.push_back(o);
    succ.emplace_back();
    names.push_back(std::move(name));
    return size() - 1;
  }

  void add_edge(int from, int to) { succ[from].push_back(to); }

  bool has_edge(int from, int to) const {
    const auto& s = succ[from];
    return std::find(s.begin(), s.end(), to) != s.end();
  }
};

enum class ObjectiveKind : uint8_t { reachability, parity };

/**
 * One objective. For reachability games `target` holds the sorted target
 * vertex ids; for parity games `priority` holds one priority per vertex.
 */
struct Objective {
  std::vector<int> target;
  std::vector<int> priority;

  static Objective reach(std::vector<int> t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    Objective o;
    o.target = std::move(t);
    return o;
  }

  static Objective parity(std::vector<int> prio) {
    Objective o;
    o.priority = std::move(prio);
    return o;
  }

  bool in_target(int v) const {
    return std::binary_search(target.begin(), target.end(), v);
  }
};

/**
 * A Stackelberg-Pareto game: an arena, one Player-0 objective and t >= 1
 * Player-1 objectives, all of the same kind.
 */
struct SPGame {
  Arena arena;
  ObjectiveKind kind = ObjectiveKind::reachability;
  Objective p0_objective;
  std::vector<Objective> p1_objectives;

  int t() const { return static_cast<int>(p1_objectives.size()); }

  /** Objective by extended index: 0 is Player 0's, 1..t are Player 1's. */
  const Objective& objective(int i) const {
    return i == 0 ? p0_objective : p1_objectives[i - 1];
  }
};

/** One violated arena/game invariant, with the offending vertex when any. */
struct ValidationIssue {
  std::string message;
  int vertex = -1;
};

struct ValidationReportArena {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const {
    std::string out;
    for (const auto& i : issues) {
      if (!out.empty())
        out += "; ";
      out += i.message;
    }
    return out;
  }
};

/**
 * Checks arena well-formedness: every vertex has a successor, the initial
 * vertex and all edge endpoints are in range, successor lists are
 * duplicate-free.
 */
inline ValidationReportArena validate(const Arena& a) {
  ValidationReportArena r;
  const int n = a.size();
  if (static_cast<int>(a.succ.size()) != n)
    r.issues.push_back({"owner/successor table size mismatch", -1});
  if (a.initial < 0 || a.initial >= n)
    r.issues.push_back(
        {"initial vertex " + std::to_string(a.initial) + " out of range",
         a.initial});
  for (int v = 0; v < n && v < static_cast<int>(a.succ.size()); ++v) {
    if (a.succ[v].empty())
      r.issues.push_back({"sink at " + std::to_string(v), v});
    std::vector<int> seen;
    for (int w : a.succ[v]) {
      if (w < 0 || w >= n)
        r.issues.push_back({"edge " + std::to_string(v) + "->" +
                                std::to_string(w) + " out of range",
                            v});
      else if (std::find(seen.begin(), seen.end(), w) != seen.end())
        r.issues.push_back({"duplicate edge " + std::to_string(v) + "->" +
                                std::to_string(w),
                            v});
      seen.push_back(w);
    }
  }
  return r;
}

inline ValidationReportArena validate(const SPGame& g) {
  ValidationReportArena r = validate(g.arena);
  const int n = g.arena.size();
  if (g.t() < 1)
    r.issues.push_back({"game needs at least one Player-1 objective", -1});
  auto check = [&](const Objective& o, int idx) {
    if (g.kind == ObjectiveKind::reachability) {
      if (!o.priority.empty())
        r.issues.push_back(
            {"objective " + std::to_string(idx) + " has priorities in a "
             "reachability game", -1});
      for (int v : o.target)
        if (v < 0 || v >= n)
          r.issues.push_back({"objective " + std::to_string(idx) +
                                  " targets out-of-range vertex " +
                                  std::to_string(v),
                              v});
    } else {
      if (!o.target.empty())
        r.issues.push_back({"objective " + std::to_string(idx) +
                                " has a target set in a parity game", -1});
      if (static_cast<int>(o.priority.size()) != n)
        r.issues.push_back({"objective " + std::to_string(idx) +
                                " priority map does not cover all vertices",
                            -1});
      for (int p : o.priority)
        if (p < 0)
          r.issues.push_back({"objective " + std::to_string(idx) +
                                  " has a negative priority", -1});
    }
  };
  check(g.p0_objective, 0);
  for (int i = 0; i < g.t(); ++i)
    check(g.p1_objectives[i], i + 1);
  return r;
}

inline void require_valid(const SPGame& g) {
  auto r = validate(g);
  if (!r.ok())
    throw input_error("invalid game: " + r.to_string());
}

/**
 * Result of binarize(): the transformed game plus, per original vertex and
 * original successor index, the sequence of fresh internal vertices
 * traversed before reaching that successor.
 */
struct BinarizeResult {
  SPGame game;
  bool changed = false;
  // orig_of[v] = original vertex id, or -1 for a fresh internal vertex.
  std::vector<int> orig_of;
  // route[v][k] = internal vertices between original v and its k-th
  // original successor (possibly empty).
  std::vector<std::vector<std::vector<int>>> route;
};

namespace detail {

// Builds a full binary tree over fresh vertices whose leaves are, in order,
// the original successors listed in `leaves`. Returns the tree root and
// records, per leaf index, the internal vertices on its path (root first).
inline int build_succ_tree(Arena& a, Owner o, const std::vector<int>& leaves,
                           int lo, int hi, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& paths) {
  if (hi - lo == 1) {
    paths[lo] = prefix;
    return leaves[lo];
  }
  int node = a.add_vertex(o);
  prefix.push_back(node);
  int mid = lo + (hi - lo + 1) / 2;
  int l = build_succ_tree(a, o, leaves, lo, mid, prefix, paths);
  int r = build_succ_tree(a, o, leaves, mid, hi, prefix, paths);
  a.succ[node] = {l, r};
  prefix.pop_back();
  return node;
}

}  // namespace detail

/**
 * Two-successor normalization. Every vertex of the result has at most two
 * successors; each original vertex v with out-degree l >= 3 keeps its id and
 * points at a full binary tree of l-1 fresh internal vertices (owned like v)
 * whose leaves are v's original successors. A self-loop stays directly on v
 * and the tree covers the remaining successors. Reachability targets are
 * unchanged (internal vertices excluded); parity priorities are copied onto
 * internal vertices.
 */
inline BinarizeResult binarize(const SPGame& g) {
  require_valid(g);
  const Arena& a = g.arena;
  const int n = a.size();
  BinarizeResult res;
  Arena& b = res.game.arena;
  b.owner = a.owner;
  b.succ.assign(n, {});
  b.names = a.names;
  b.names.resize(n);
  b.initial = a.initial;
  res.orig_of.assign(n, 0);
  for (int v = 0; v < n; ++v)
    res.orig_of[v] = v;
  res.route.assign(n, {});

  for (int v = 0; v < n; ++v) {
    const auto& s = a.succ[v];
    const int l = static_cast<int>(s.size());
    res.route[v].assign(l, {});
    if (l <= 2) {
      b.succ[v] = s;
      continue;
    }
    res.changed = true;
    auto self = std::find(s.begin(), s.end(), v);
    if (self != s.end()) {
      // keep the self-loop, tree over the other l-1 successors
      std::vector<int> rest;
      std::vector<int> rest_index;
      for (int k = 0; k < l; ++k)
        if (s[k] != v) {
          rest.push_back(s[k]);
          rest_index.push_back(k);
        }
      std::vector<std::vector<int>> paths(rest.size());
      std::vector<int> prefix;
      int root = detail::build_succ_tree(b, a.owner[v], rest, 0,
                                         static_cast<int>(rest.size()),
                                         prefix, paths);
      b.succ[v] = {v, root};
      for (size_t k = 0; k < rest.size(); ++k)
        res.route[v][rest_index[k]] = paths[k];
    } else {
      std::vector<std::vector<int>> paths(l);
      std::vector<int> prefix;
      int root = detail::build_succ_tree(b, a.owner[v], s, 0, l, prefix,
                                         paths);
      // one fresh root below v so that all l-1 internal vertices are fresh
      b.succ[v] = {root};
      for (int k = 0; k < l; ++k)
        res.route[v][k] = paths[k];
    }
  }
  res.orig_of.resize(b.size(), -1);
  for (int v = n; v < b.size(); ++v)
    b.names[v] = "";

  res.game.kind = g.kind;
  res.game.p0_objective = g.p0_objective;
  res.game.p1_objectives = g.p1_objectives;
  if (g.kind == ObjectiveKind::parity) {
    // internal vertices inherit the priority of the original vertex whose
    // tree they belong to
    std::vector<int> root_of(b.size(), -1);
    for (int v = 0; v < n; ++v)
      for (const auto& path : res.route[v])
        for (int inner : path)
          root_of[inner] = v;
    auto extend = [&](Objective& o) {
      o.priority.resize(b.size());
      for (int v = n; v < b.size(); ++v)
        o.priority[v] = o.priority[root_of[v]];
    };
    extend(res.game.p0_objective);
    for (auto& o : res.game.p1_objectives)
      extend(o);
  }
  return res;
}

/**
 * True iff the arena is a tree rooted at the initial vertex in which every
 * leaf has itself as its only successor.
 */
inline bool is_tree_arena(const Arena& a) {
  if (!validate(a).ok())
    return false;
  const int n = a.size();
  std::vector<char> visited(n, 0);
  std::vector<int> stack = {a.initial};
  visited[a.initial] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& s = a.succ[v];
    if (s.size() == 1 && s[0] == v)
      continue;  // leaf
    for (int w : s) {
      if (w == v)
        return false;  // self-loop on a non-leaf vertex
      if (visited[w])
        return false;  // re-entered: a cycle or a shared child
      visited[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

/**
 * An ultimately periodic play: a finite prefix from the initial vertex
 * followed by a repeated non-empty cycle.
 */
struct LassoPlay {
  std::vector<int> prefix;
  std::vector<int> cycle;

  /** Vertex at position i of the infinite unrolling. */
  int at(size_t i) const {
    if (i < prefix.size())
      return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
  }

  bool valid_in(const Arena& a) const {
    if (cycle.empty())
      return false;
    std::vector<int> all = prefix;
    all.insert(all.end(), cycle.begin(), cycle.end());
    if (all.front() != a.initial && !prefix.empty())
      return false;
    if (prefix.empty() && cycle.front() != a.initial)
      return false;
    for (int v : all)
      if (v < 0 || v >= a.size())
        return false;
    for (size_t i = 0; i + 1 < all.size(); ++i)
      if (!a.has_edge(all[i], all[i + 1]))
        return false;
    return a.has_edge(all.back(), cycle.front());
  }

  /** Occ: every vertex of the play. */
  std::vector<int> occurring() const {
    std::vector<int> out = prefix;
    out.insert(out.end(), cycle.begin(), cycle.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /** Inf: the vertices visited infinitely often (the cycle). */
  std::vector<int> recurring() const {
    std::vector<int> out = cycle;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string to_string(const Arena& a) const {
    std::string s;
    for (int v : prefix)
      s += a.display_name(v) + " ";
    s += "( ";
    for (int v : cycle)
      s += a.display_name(v) + " ";
    s += ")^w";
    return s;
  }
};

}  // namespace sps
