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
#include <functional>
#include <string>
#include <vector>

#include "sps/core.hpp"

namespace sps {

/**
 * A payoff: a fixed-width vector of Booleans, bit i-1 holding the value for
 * objective i of Player 1. Width is the game's t.
 */
struct Payoff {
  uint32_t bits = 0;
  int width = 0;

  Payoff() = default;
  Payoff(uint32_t b, int w) : bits(b), width(w) {}

  static Payoff zero(int w) { return Payoff(0, w); }
  static Payoff top(int w) {
    return Payoff(w >= 32 ? ~0u : ((1u << w) - 1u), w);
  }
  static Payoff of_bits(std::initializer_list<int> vals) {
    Payoff p(0, static_cast<int>(vals.size()));
    int i = 0;
    for (int v : vals) {
      if (v)
        p.bits |= 1u << i;
      ++i;
    }
    return p;
  }

  bool get(int i) const { return (bits >> i) & 1u; }
  void set(int i, bool v) {
    if (v)
      bits |= 1u << i;
    else
      bits &= ~(1u << i);
  }

  bool operator==(const Payoff& o) const {
    return bits == o.bits && width == o.width;
  }
  bool operator!=(const Payoff& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < width; ++i) {
      if (i)
        s += ",";
      s += get(i) ? "1" : "0";
    }
    s += ")";
    return s;
  }
};

/** Componentwise order: p <= q iff every bit of p is below the one of q. */
inline bool leq(const Payoff& p, const Payoff& q) {
  return (p.bits & ~q.bits) == 0;
}

inline bool lt(const Payoff& p, const Payoff& q) {
  return leq(p, q) && p.bits != q.bits;
}

enum class POrder { lt, gt, eq, incomparable };

inline POrder compare(const Payoff& p, const Payoff& q) {
  if (p.width != q.width)
    throw error("payoff width mismatch");
  if (p.bits == q.bits)
    return POrder::eq;
  if (leq(p, q))
    return POrder::lt;
  if (leq(q, p))
    return POrder::gt;
  return POrder::incomparable;
}

/** Lexicographic order on the component vectors, for canonical iteration. */
inline bool lex_less(const Payoff& p, const Payoff& q) {
  for (int i = 0; i < p.width; ++i)
    if (p.get(i) != q.get(i))
      return !p.get(i);
  return false;
}

struct ExtendedPayoff {
  bool won = false;
  Payoff payoff;

  bool operator==(const ExtendedPayoff& o) const {
    return won == o.won && payoff == o.payoff;
  }

  std::string to_string() const {
    return "(" + std::string(won ? "1" : "0") + "," + payoff.to_string() +
           ")";
  }
};

/**
 * A set of pairwise incomparable payoffs, kept lexicographically sorted so
 * iteration is deterministic.
 */
struct Antichain {
  std::vector<Payoff> elems;

  Antichain() = default;
  explicit Antichain(std::vector<Payoff> e) : elems(std::move(e)) {
    std::sort(elems.begin(), elems.end(), lex_less);
  }

  int size() const { return static_cast<int>(elems.size()); }
  bool empty() const { return elems.empty(); }

  bool contains(const Payoff& p) const {
    for (const auto& q : elems)
      if (q == p)
        return true;
    return false;
  }

  /** True iff some element strictly dominates p. */
  bool dominates(const Payoff& p) const {
    for (const auto& q : elems)
      if (lt(p, q))
        return true;
    return false;
  }

  bool operator==(const Antichain& o) const { return elems == o.elems; }

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i)
        s += ",";
      s += elems[i].to_string();
    }
    s += "}";
    return s;
  }
};

inline bool is_antichain(const std::vector<Payoff>& payoffs) {
  for (size_t i = 0; i < payoffs.size(); ++i)
    for (size_t j = i + 1; j < payoffs.size(); ++j)
      if (compare(payoffs[i], payoffs[j]) != POrder::incomparable)
        return false;
  return true;
}

/** The <=-maximal elements of a payoff set. */
inline Antichain pareto_max(const std::vector<Payoff>& payoffs) {
  std::vector<Payoff> maxima;
  for (const auto& p : payoffs) {
    bool dominated = false;
    for (const auto& q : payoffs)
      if (lt(p, q)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      bool dup = false;
      for (const auto& m : maxima)
        if (m == p)
          dup = true;
      if (!dup)
        maxima.push_back(p);
    }
  }
  return Antichain(std::move(maxima));
}

/**
 * Every non-empty antichain whose elements lie in `ground`, each exactly
 * once, ordered by cardinality then lexicographically on the sorted element
 * lists. `ground` must be duplicate-free.
 */
inline std::vector<Antichain> enumerate_antichains(
    std::vector<Payoff> ground) {
  for (size_t i = 0; i < ground.size(); ++i)
    for (size_t j = i + 1; j < ground.size(); ++j)
      if (ground[i] == ground[j])
        throw error("enumerate_antichains: duplicate ground element");
  std::sort(ground.begin(), ground.end(), lex_less);
  const int n = static_cast<int>(ground.size());
  std::vector<Antichain> out;
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      std::vector<Payoff> elems;
      for (int i : pick)
        elems.push_back(ground[i]);
      if (is_antichain(elems))
        out.push_back(Antichain(std::move(elems)));
      return;
    }
    for (int i = start; i + remaining <= n + 0; ++i) {
      if (n - i < remaining)
        break;
      pick.push_back(i);
      rec(i + 1, remaining - 1);
      pick.pop_back();
    }
  };
  for (int k = 1; k <= n; ++k)
    rec(0, k);
  return out;
}

/**
 * Payoff update for reachability games: fold the target-set memberships of
 * vertex v into the extended payoff (w, p). Monotone in both components.
 */
inline ExtendedPayoff upd(bool w, const Payoff& p, int v, const SPGame& g) {
  if (g.kind != ObjectiveKind::reachability)
    throw error("upd is defined for reachability games only");
  ExtendedPayoff e{w || g.p0_objective.in_target(v), p};
  for (int i = 0; i < g.t(); ++i)
    if (g.p1_objectives[i].in_target(v))
      e.payoff.set(i, true);
  return e;
}

}  // namespace sps
