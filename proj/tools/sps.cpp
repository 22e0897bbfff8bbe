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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sps/io.hpp"
#include "sps/reductions.hpp"
#include "sps/strategy.hpp"

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitNotSolvable = 10;
constexpr int kExitCounterexample = 11;
constexpr int kExitInputError = 2;

int run_solve(const std::string& game_path, const std::string& emit_strategy,
              const std::string& emit_dot) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  sps::SpsSolution sol = sps::solve_sps(g);
  if (!sol.solvable) {
    std::cout << "not solvable\n";
    return kExitNotSolvable;
  }
  std::cout << "Pareto set " << sol.pareto->to_string() << "\n";
  std::cout << "memory size " << sol.strategy->memory_size() << "\n";
  if (!emit_strategy.empty())
    sps::write_file(emit_strategy, sps::serialize_strategy(*sol.strategy));
  if (!emit_dot.empty()) {
    sps::VerificationReport rep = sps::verify_strategy(g, *sol.strategy);
    sps::write_file(emit_dot, sps::export_dot(g, *sol.strategy, rep));
  }
  return kExitSolvable;
}

int run_verify(const std::string& game_path, const std::string& strat_path) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  sps::MooreStrategy m = sps::parse_strategy(sps::read_file(strat_path));
  sps::VerificationReport rep = sps::verify_strategy(g, m);
  std::cout << "Pareto set " << rep.pareto_set.to_string() << "\n";
  if (rep.is_solution) {
    std::cout << "solution\n";
    return kExitSolvable;
  }
  std::cout << "counterexample payoff "
            << rep.counterexample_payoff->to_string() << ": "
            << rep.counterexample->to_string(g.arena) << "\n";
  return kExitCounterexample;
}

int run_brute(const std::string& game_path, int memory) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  sps::BruteForceResult res = sps::brute_force_solve(g, memory);
  if (res.found) {
    std::cout << "solution with memory size "
              << res.strategy->memory_size() << "\n";
    return kExitSolvable;
  }
  std::cout << "no solution within memory bound " << memory << "\n";
  return kExitNotSolvable;
}

int run_tree_solve(const std::string& game_path) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  sps::TreeSolveResult res = sps::tree_solve(g);
  if (res.solvable) {
    std::cout << "solvable\n";
    return kExitSolvable;
  }
  std::cout << "not solvable\n";
  return kExitNotSolvable;
}

int run_feasible(const std::string& game_path) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  auto payoffs = sps::feasible_payoffs(g);
  std::string out = "{";
  for (size_t i = 0; i < payoffs.size(); ++i) {
    if (i)
      out += ",";
    out += payoffs[i].to_string();
  }
  std::cout << out << "}\n";
  return kExitSolvable;
}

int run_reduce(const std::string& kind, const std::string& in_path,
               const std::string& out_path) {
  const std::string text = sps::read_file(in_path);
  if (kind == "sc2sps") {
    sps::write_file(out_path,
                    sps::serialize_game(sps::sc_to_sps(sps::parse_sc(text))));
  } else if (kind == "ssc2reach") {
    sps::write_file(out_path, sps::serialize_game(sps::ssc_to_reach_sps(
                                  sps::parse_ssc(text))));
  } else if (kind == "ssc2parity") {
    sps::write_file(out_path, sps::serialize_game(sps::ssc_to_parity_sps(
                                  sps::parse_ssc(text))));
  } else if (kind == "sds2ssc") {
    sps::write_file(out_path,
                    sps::serialize_ssc(sps::sds_to_ssc(sps::parse_sds(text))));
  } else {
    std::cerr << "unknown reduction '" << kind << "'\n";
    return kExitInputError;
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitSolvable;
}

int run_gadget_qk(int k, const std::string& out_path) {
  sps::QkFragment q = sps::build_qk(k);
  // cap the fragment into a well-formed game document
  sps::SPGame g;
  g.arena = q.arena;
  g.arena.add_edge(q.exit, q.exit);
  g.arena.initial = q.entry;
  g.kind = sps::ObjectiveKind::reachability;
  g.p0_objective = sps::Objective::reach({q.exit});
  g.p1_objectives.push_back(sps::Objective::reach({q.exit}));
  sps::write_file(out_path, sps::serialize_game(g));
  std::cout << "wrote " << out_path << "\n";
  return kExitSolvable;
}

int run_gadget_count(const std::string& game_path) {
  sps::SPGame g = sps::parse_game(sps::read_file(game_path));
  int target = -1;
  for (int v = 0; v < g.arena.size(); ++v)
    if (g.arena.name(v) == "beta")
      target = v;
  if (target < 0)
    throw sps::input_error("gadget count: no vertex named 'beta'");
  std::cout << sps::count_paths(g.arena, g.arena.initial, target) << "\n";
  return kExitSolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stackelberg-Pareto synthesis toolkit"};
  app.require_subcommand(1);

  std::string game_path, strat_path, out_path, emit_strategy, emit_dot;
  int memory = 1;
  int qk_k = 1;
  std::string reduce_kind, reduce_in;

  auto* solve = app.add_subcommand("solve", "decide the SPS problem");
  solve->add_option("game", game_path)->required();
  solve->add_option("--emit-strategy", emit_strategy);
  solve->add_option("--emit-dot", emit_dot);

  auto* verify = app.add_subcommand("verify", "check a strategy");
  verify->add_option("game", game_path)->required();
  verify->add_option("strategy", strat_path)->required();

  auto* brute = app.add_subcommand("brute", "bounded exhaustive search");
  brute->add_option("game", game_path)->required();
  brute->add_option("--memory", memory)->required();

  auto* tree = app.add_subcommand("tree-solve", "solve on a tree arena");
  tree->add_option("game", game_path)->required();

  auto* feas = app.add_subcommand("feasible", "print feasible payoffs");
  feas->add_option("game", game_path)->required();

  auto* reduce = app.add_subcommand("reduce", "instance reductions");
  reduce->add_option("kind", reduce_kind)->required();
  reduce->add_option("instance", reduce_in)->required();
  reduce->add_option("-o,--output", out_path)->required();

  auto* gadget = app.add_subcommand("gadget", "hardness gadgets");
  auto* qk = gadget->add_subcommand("qk", "emit the Q_k gadget");
  qk->add_option("k", qk_k)->required();
  qk->add_option("-o,--output", out_path)->required();
  auto* count = gadget->add_subcommand("count", "count alpha->beta paths");
  count->add_option("game", game_path)->required();
  gadget->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve->parsed())
      return run_solve(game_path, emit_strategy, emit_dot);
    if (verify->parsed())
      return run_verify(game_path, strat_path);
    if (brute->parsed())
      return run_brute(game_path, memory);
    if (tree->parsed())
      return run_tree_solve(game_path);
    if (feas->parsed())
      return run_feasible(game_path);
    if (reduce->parsed())
      return run_reduce(reduce_kind, reduce_in, out_path);
    if (gadget->parsed()) {
      if (qk->parsed())
        return run_gadget_qk(qk_k, out_path);
      if (count->parsed())
        return run_gadget_count(game_path);
    }
  } catch (const sps::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const sps::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
