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

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sps/core.hpp"
#include "sps/cpgame.hpp"
#include "sps/moore.hpp"
#include "sps/reductions.hpp"
#include "sps/strategy.hpp"

namespace sps {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Game documents.
// ---------------------------------------------------------------------------

/**
 * Serializes a game to its canonical JSON document: fixed key order, two
 * space indentation, trailing newline, so equal games serialize to equal
 * bytes. The edge list order defines the successor order.
 */
inline std::string serialize_game(const SPGame& g) {
  json doc;
  doc["kind"] = g.kind == ObjectiveKind::reachability ? "reach" : "parity";
  json verts = json::array();
  for (int v = 0; v < g.arena.size(); ++v) {
    json jv;
    jv["id"] = v;
    jv["owner"] = g.arena.owner[v] == Owner::p0 ? 0 : 1;
    jv["name"] = g.arena.display_name(v);
    if (g.kind == ObjectiveKind::parity) {
      json prios = json::array();
      for (int i = 0; i <= g.t(); ++i)
        prios.push_back(g.objective(i).priority[v]);
      jv["priorities"] = prios;
    }
    verts.push_back(jv);
  }
  doc["vertices"] = verts;
  json edges = json::array();
  for (int v = 0; v < g.arena.size(); ++v)
    for (int w : g.arena.succ[v])
      edges.push_back(json::array({v, w}));
  doc["edges"] = edges;
  doc["initial"] = g.arena.initial;
  if (g.kind == ObjectiveKind::reachability) {
    json objs = json::array();
    for (int i = 0; i <= g.t(); ++i)
      objs.push_back(g.objective(i).target);
    doc["objectives"] = objs;
  } else {
    doc["objectives"] = g.t() + 1;  // priorities live on the vertices
  }
  return doc.dump(2) + "\n";
}

inline SPGame parse_game(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("game document: ") + e.what());
  }
  try {
    SPGame g;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "reach")
      g.kind = ObjectiveKind::reachability;
    else if (kind == "parity")
      g.kind = ObjectiveKind::parity;
    else
      throw input_error("game document: unknown kind '" + kind + "'");
    const auto& verts = doc.at("vertices");
    const int n = static_cast<int>(verts.size());
    g.arena.owner.assign(n, Owner::p1);
    g.arena.succ.assign(n, {});
    g.arena.names.assign(n, "");
    std::vector<char> seen(n, 0);
    int objective_count = -1;
    for (const auto& jv : verts) {
      const int id = jv.at("id").get<int>();
      if (id < 0 || id >= n || seen[id])
        throw input_error("game document: vertex ids must be 0..n-1, "
                          "each once");
      seen[id] = 1;
      g.arena.owner[id] =
          jv.at("owner").get<int>() == 0 ? Owner::p0 : Owner::p1;
      if (jv.contains("name"))
        g.arena.names[id] = jv.at("name").get<std::string>();
      if (g.kind == ObjectiveKind::parity) {
        const auto& prios = jv.at("priorities");
        if (objective_count < 0)
          objective_count = static_cast<int>(prios.size());
        if (static_cast<int>(prios.size()) != objective_count)
          throw input_error(
              "game document: inconsistent priority list lengths");
      }
    }
    for (const auto& je : doc.at("edges")) {
      const int from = je.at(0).get<int>();
      const int to = je.at(1).get<int>();
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw input_error("game document: edge references an undeclared "
                          "vertex");
      g.arena.succ[from].push_back(to);
    }
    g.arena.initial = doc.at("initial").get<int>();
    if (g.kind == ObjectiveKind::reachability) {
      const auto& objs = doc.at("objectives");
      if (objs.size() < 2)
        throw input_error("game document: need Player 0's objective and at "
                          "least one Player-1 objective");
      for (size_t i = 0; i < objs.size(); ++i) {
        std::vector<int> t = objs[i].get<std::vector<int>>();
        Objective o = Objective::reach(std::move(t));
        if (i == 0)
          g.p0_objective = std::move(o);
        else
          g.p1_objectives.push_back(std::move(o));
      }
    } else {
      if (objective_count < 2)
        throw input_error("game document: need priorities for Player 0 and "
                          "at least one Player-1 objective");
      std::vector<Objective> objs(objective_count);
      for (auto& o : objs)
        o.priority.assign(n, 0);
      for (const auto& jv : verts) {
        const int id = jv.at("id").get<int>();
        const auto& prios = jv.at("priorities");
        for (int i = 0; i < objective_count; ++i)
          objs[i].priority[id] = prios[i].get<int>();
      }
      g.p0_objective = std::move(objs[0]);
      g.p1_objectives.assign(objs.begin() + 1, objs.end());
    }
    auto rep = validate(g);
    if (!rep.ok())
      throw input_error("game document: " + rep.to_string());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("game document: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Strategy documents.
// ---------------------------------------------------------------------------

inline std::string serialize_strategy(const MooreStrategy& m) {
  json doc;
  doc["states"] = m.num_states;
  doc["initial"] = m.initial;
  auto dump_map = [](const std::unordered_map<uint64_t, int>& map) {
    std::vector<std::array<int, 3>> rows;
    for (const auto& [k, val] : map)
      rows.push_back({static_cast<int>(k >> 32),
                      static_cast<int>(k & 0xffffffffu), val});
    std::sort(rows.begin(), rows.end());
    json out = json::array();
    for (const auto& r : rows)
      out.push_back(json::array({r[0], r[1], r[2]}));
    return out;
  };
  doc["update"] = dump_map(m.update);
  doc["output"] = dump_map(m.output);
  return doc.dump(2) + "\n";
}

inline MooreStrategy parse_strategy(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("strategy document: ") + e.what());
  }
  try {
    MooreStrategy m;
    m.num_states = doc.at("states").get<int>();
    m.initial = doc.at("initial").get<int>();
    if (m.num_states < 1 || m.initial < 0 || m.initial >= m.num_states)
      throw input_error("strategy document: bad state count or initial");
    for (const auto& row : doc.at("update"))
      m.set_update(row.at(0).get<int>(), row.at(1).get<int>(),
                   row.at(2).get<int>());
    for (const auto& row : doc.at("output"))
      m.set_output(row.at(0).get<int>(), row.at(1).get<int>(),
                   row.at(2).get<int>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("strategy document: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Instance formats (Set Cover and CNF-based problems).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c')
      continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace detail

/**
 * Set Cover format: a header line `sc <n> <m> <k>` followed by m lines,
 * each a 0-terminated list of covered elements. Lines starting with `c`
 * are comments.
 */
inline SCInstance parse_sc(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty())
    throw input_error("sc file: empty");
  std::istringstream head(lines[0]);
  std::string tag;
  SCInstance inst;
  int m = 0;
  head >> tag >> inst.n >> m >> inst.k;
  if (!head || tag != "sc")
    throw input_error("sc file: bad header, expected 'sc n m k'");
  if (static_cast<int>(lines.size()) != m + 1)
    throw input_error("sc file: expected one line per subset");
  for (int j = 1; j <= m; ++j) {
    std::istringstream ls(lines[j]);
    std::vector<int> subset;
    int e;
    bool closed = false;
    while (ls >> e) {
      if (e == 0) {
        closed = true;
        break;
      }
      subset.push_back(e);
    }
    if (!closed)
      throw input_error("sc file: subset line must end with 0");
    inst.subsets.push_back(std::move(subset));
  }
  require_valid(inst);
  return inst;
}

inline std::string serialize_sc(const SCInstance& inst) {
  std::ostringstream out;
  out << "sc " << inst.n << " " << inst.m() << " " << inst.k << "\n";
  for (const auto& s : inst.subsets) {
    for (int e : s)
      out << e << " ";
    out << "0\n";
  }
  return out.str();
}

/**
 * DIMACS-style CNF container format. Header `p ssc NUMX NUMY K` with
 * clause lines `a <lits> 0` (phi, X variables 1..NUMX) and `b <lits> 0`
 * (psi, Y variables NUMX+1..NUMX+NUMY); or header `p sds N K` with clause
 * lines `t <lits> 0` for theta.
 */
inline SSCInstance parse_ssc(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty())
    throw input_error("ssc file: empty");
  std::istringstream head(lines[0]);
  std::string p, kind;
  int num_x = 0, num_y = 0, k = 0;
  head >> p >> kind >> num_x >> num_y >> k;
  if (!head || p != "p" || kind != "ssc")
    throw input_error("ssc file: bad header, expected 'p ssc NUMX NUMY K'");
  SSCInstance inst;
  inst.phi.num_x = num_x;
  inst.psi.num_x = num_x;
  inst.psi.num_y = num_y;
  inst.k = k;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string tag;
    ls >> tag;
    if (tag != "a" && tag != "b")
      throw input_error("ssc file: clause lines start with 'a' or 'b'");
    std::vector<int> clause;
    int lit;
    bool closed = false;
    while (ls >> lit) {
      if (lit == 0) {
        closed = true;
        break;
      }
      clause.push_back(lit);
    }
    if (!closed)
      throw input_error("ssc file: clause line must end with 0");
    (tag == "a" ? inst.phi : inst.psi).clauses.push_back(std::move(clause));
  }
  require_valid(inst);
  return inst;
}

inline std::string serialize_ssc(const SSCInstance& inst) {
  std::ostringstream out;
  out << "p ssc " << inst.phi.num_x << " " << inst.psi.num_y << " "
      << inst.k << "\n";
  for (const auto& c : inst.phi.clauses) {
    out << "a ";
    for (int l : c)
      out << l << " ";
    out << "0\n";
  }
  for (const auto& c : inst.psi.clauses) {
    out << "b ";
    for (int l : c)
      out << l << " ";
    out << "0\n";
  }
  return out.str();
}

inline SDSInstance parse_sds(const std::string& text) {
  auto lines = detail::nonempty_lines(text);
  if (lines.empty())
    throw input_error("sds file: empty");
  std::istringstream head(lines[0]);
  std::string p, kind;
  int n = 0, k = 0;
  head >> p >> kind >> n >> k;
  if (!head || p != "p" || kind != "sds")
    throw input_error("sds file: bad header, expected 'p sds N K'");
  SDSInstance inst;
  inst.theta.num_x = n;
  inst.theta.num_y = n;
  inst.k = k;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string tag;
    ls >> tag;
    if (tag != "t")
      throw input_error("sds file: clause lines start with 't'");
    std::vector<int> clause;
    int lit;
    bool closed = false;
    while (ls >> lit) {
      if (lit == 0) {
        closed = true;
        break;
      }
      clause.push_back(lit);
    }
    if (!closed)
      throw input_error("sds file: clause line must end with 0");
    inst.theta.clauses.push_back(std::move(clause));
  }
  require_valid(inst);
  return inst;
}

// ---------------------------------------------------------------------------
// DOT export.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/**
 * Renders the game arena: Player-0 vertices as ellipses, Player-1 vertices
 * as boxes, objective memberships in the label, an arrow into the initial
 * vertex. Output is deterministic.
 */
inline std::string export_dot(const SPGame& g) {
  std::ostringstream out;
  out << "digraph sp_game {\n";
  out << "  __init [shape=point, label=\"\"];\n";
  for (int v = 0; v < g.arena.size(); ++v) {
    std::string label = g.arena.display_name(v);
    if (g.kind == ObjectiveKind::reachability) {
      std::string t;
      for (int i = 0; i <= g.t(); ++i)
        if (g.objective(i).in_target(v))
          t += (t.empty() ? "" : ",") + std::to_string(i);
      if (!t.empty())
        label += "\\nT:" + t;
    } else {
      label += "\\nc:";
      for (int i = 0; i <= g.t(); ++i)
        label += (i ? "," : "") + std::to_string(g.objective(i).priority[v]);
    }
    out << "  n" << v << " [shape="
        << (g.arena.owner[v] == Owner::p0 ? "ellipse" : "box")
        << ", label=\"" << detail::dot_escape(label) << "\"];\n";
  }
  out << "  __init -> n" << g.arena.initial << ";\n";
  for (int v = 0; v < g.arena.size(); ++v)
    for (int w : g.arena.succ[v])
      out << "  n" << v << " -> n" << w << ";\n";
  out << "}\n";
  return out.str();
}

/**
 * Renders a Challenger-Prover arena. Accepting (Büchi) vertices get double
 * borders, the Prover's winning region is filled, and the moves of a
 * winning Prover strategy are bold.
 */
inline std::string export_dot(const CPGame& cp, const Arena& base,
                              const SolveResult* sol = nullptr) {
  std::ostringstream out;
  out << "digraph cp_game {\n";
  out << "  __init [shape=point, label=\"\"];\n";
  for (int v = 0; v < cp.arena.size(); ++v) {
    out << "  n" << v << " [shape="
        << (cp.states[v].partition ? "box" : "ellipse") << ", label=\""
        << detail::dot_escape(cp.state_label(v, base)) << "\"";
    if (cp.kind == ObjectiveKind::reachability && cp.accept[v])
      out << ", peripheries=2";
    if (sol && sol->protagonist_region[v])
      out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  out << "  __init -> n" << cp.start << ";\n";
  for (int v = 0; v < cp.arena.size(); ++v)
    for (int w : cp.arena.succ[v]) {
      out << "  n" << v << " -> n" << w;
      if (sol && !sol->positional.empty() && sol->positional[v] == w &&
          sol->protagonist_region[v])
        out << " [style=bold]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

/**
 * Renders the product of the arena with a strategy, with witness lassos of
 * the verification report drawn bold.
 */
inline std::string export_dot(const SPGame& g, const MooreStrategy& m,
                              const VerificationReport& rep) {
  StrategyProduct pr = product(g, m);
  std::set<std::pair<int, int>> bold;
  auto mark = [&](const LassoPlay& l) {
    std::vector<int> all = l.prefix;
    all.insert(all.end(), l.cycle.begin(), l.cycle.end());
    for (size_t i = 0; i + 1 < all.size(); ++i)
      bold.insert({all[i], all[i + 1]});
    bold.insert({all.back(), l.cycle.front()});
  };
  for (const auto& w : rep.witnesses)
    mark(w);
  std::ostringstream out;
  out << "digraph strategy_product {\n";
  for (size_t i = 0; i < pr.base.size(); ++i) {
    out << "  n" << i << " [shape="
        << (g.arena.owner[pr.base[i]] == Owner::p0 ? "ellipse" : "box")
        << ", label=\""
        << detail::dot_escape(g.arena.display_name(pr.base[i]) + " / m" +
                              std::to_string(pr.mstate[i]))
        << "\"];\n";
  }
  // bold is keyed on arena vertices; product edges inherit the mark
  for (size_t v = 0; v < pr.base.size(); ++v)
    for (int w : pr.graph.succ[static_cast<int>(v)]) {
      out << "  n" << v << " -> n" << w;
      if (bold.count({pr.base[v], pr.base[w]}))
        out << " [style=bold]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

/** Report serialization for golden tests. */
inline json report_to_json(const VerificationReport& rep, const SPGame& g) {
  json doc;
  doc["is_solution"] = rep.is_solution;
  json pareto = json::array();
  for (const auto& p : rep.pareto_set.elems)
    pareto.push_back(p.to_string());
  doc["pareto"] = pareto;
  json wit = json::array();
  for (const auto& w : rep.witnesses)
    wit.push_back(w.to_string(g.arena));
  doc["witnesses"] = wit;
  if (rep.counterexample) {
    doc["counterexample"] = rep.counterexample->to_string(g.arena);
    doc["counterexample_payoff"] = rep.counterexample_payoff->to_string();
  }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw input_error("cannot write file: " + path);
  out << text;
}

}  // namespace sps
