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

namespace sps {

/**
 * A finite-memory strategy for Player 0 as a Moore machine.
 *
 * Semantics: along a history v0 v1 ... vj the memory starts in `initial`
 * and is updated on every visited vertex, including the current one:
 *   s = update(...update(update(initial, v0), v1)..., vj).
 * When vj belongs to Player 0 the chosen successor is output(s, vj), i.e.
 * the output map is consulted after folding the current vertex.
 *
 * By convention state `initial` is a dedicated pre-start state that is left
 * on the first step and never re-entered, so the memory size of the
 * strategy is num_states - 1 (a memoryless strategy has memory size one).
 *
 * update must be total on the (state, vertex) pairs reachable this way;
 * output must map to an actual successor of the vertex.
 */
struct MooreStrategy {
  int num_states = 1;
  int initial = 0;
  std::unordered_map<uint64_t, int> update;
  std::unordered_map<uint64_t, int> output;

  int memory_size() const { return num_states - 1; }

  static uint64_t key(int state, int vertex) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(state)) << 32) |
           static_cast<uint32_t>(vertex);
  }

  bool has_next(int state, int vertex) const {
    return update.count(key(state, vertex)) > 0;
  }

  int next(int state, int vertex) const {
    auto it = update.find(key(state, vertex));
    if (it == update.end())
      throw error("Moore machine: update undefined on reachable pair");
    return it->second;
  }

  bool has_choice(int state, int vertex) const {
    return output.count(key(state, vertex)) > 0;
  }

  int choice(int state, int vertex) const {
    auto it = output.find(key(state, vertex));
    if (it == output.end())
      throw error("Moore machine: output undefined on reachable pair");
    return it->second;
  }

  void set_update(int state, int vertex, int to) {
    update[key(state, vertex)] = to;
  }
  void set_output(int state, int vertex, int succ) {
    output[key(state, vertex)] = succ;
  }

  /** The memoryless strategy that plays `choice[v]` everywhere. */
  static MooreStrategy memoryless(const Arena& a,
                                  const std::vector<int>& choice) {
    MooreStrategy m;
    m.num_states = 2;
    m.initial = 0;
    for (int v = 0; v < a.size(); ++v) {
      m.set_update(0, v, 1);
      m.set_update(1, v, 1);
      if (a.owner[v] == Owner::p0 && v < static_cast<int>(choice.size()) &&
          choice[v] >= 0)
        m.set_output(1, v, choice[v]);
    }
    return m;
  }
};

}  // namespace sps
