// Copyright 2026 The SRGT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srgt/report.hpp"

#include <cstdio>
#include <sstream>

#include "srgt/errors.hpp"
#include "srgt/nash2p.hpp"

namespace srgt {

namespace {

using nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

ordered_json config_to_json(const OptimizerConfig& config) {
  ordered_json doc;
  doc["seed"] = config.rng_seed;
  doc["tolerance"] = config.tolerance;
  doc["grid"] = config.grid_points_per_dim;
  doc["starts"] = config.multistarts;
  doc["max_iters"] = config.max_iters;
  return doc;
}

ordered_json game_summary(const Game& game) {
  ordered_json doc;
  doc["players"] = game.num_players();
  ordered_json actions = ordered_json::array();
  for (int i = 0; i < game.num_players(); ++i) actions.push_back(game.actions(i));
  doc["actions"] = std::move(actions);
  doc["common_actions"] = game.common_actions();
  return doc;
}

ordered_json profiles_to_json(const Game& game,
                              const std::vector<ActionProfile>& profiles) {
  ordered_json out = ordered_json::array();
  for (const ActionProfile& profile : profiles) {
    out.push_back(game.profile_string(profile));
  }
  return out;
}

ordered_json strategy_to_json(const Game& game, const MixedStrategy& strategy) {
  ordered_json out = ordered_json::object();
  for (std::size_t a = 0; a < strategy.probs.size(); ++a) {
    out[game.actions(0)[a]] = strategy.probs[a];
  }
  return out;
}

ordered_json exact_strategy_to_json(const ExactMixedStrategy& strategy) {
  ordered_json out = ordered_json::array();
  for (const Rat& p : strategy.probs) out.push_back(to_string(p));
  return out;
}

ordered_json symmetry_to_json(const Game& game, const SymmetryVerdict& verdict) {
  ordered_json doc;
  doc["symmetric"] = verdict.symmetric;
  if (verdict.witness.has_value()) {
    ordered_json witness;
    witness["reason"] = verdict.witness->reason;
    if (verdict.witness->tau.has_value()) {
      witness["tau"] = verdict.witness->tau->images();
    }
    if (verdict.witness->profile.has_value()) {
      witness["profile"] = game.profile_string(*verdict.witness->profile);
    }
    if (verdict.witness->player.has_value()) {
      witness["player"] = *verdict.witness->player;
    }
    doc["witness"] = std::move(witness);
  }
  return doc;
}

ordered_json mixed_sr_to_json(const Game& game, const SRMixedReport& report) {
  ordered_json doc;
  doc["status"] = report.status == SRMixedStatus::found ? "found" : "empty";
  doc["best_value"] = report.best_value;
  doc["grid_gap"] = report.grid_gap;
  doc["converged"] = report.converged;
  ordered_json maximizers = ordered_json::array();
  for (const Maximizer& m : report.maximizers) {
    ordered_json entry;
    entry["strategy"] = strategy_to_json(game, m.strategy);
    entry["value"] = m.value;
    entry["stationarity"] = m.stationarity;
    maximizers.push_back(std::move(entry));
  }
  doc["maximizers"] = std::move(maximizers);
  if (!report.per_player.empty()) {
    ordered_json per_player = ordered_json::array();
    for (const PlayerDiagonalMax& pm : report.per_player) {
      ordered_json entry;
      entry["player"] = pm.player;
      entry["argmax"] = strategy_to_json(game, pm.argmax);
      entry["value"] = pm.value;
      per_player.push_back(std::move(entry));
    }
    doc["per_player"] = std::move(per_player);
    doc["consensus_gap"] = report.consensus_gap;
  }
  return doc;
}

}  // namespace

ordered_json run_analyze(const Game& game, const AnalyzeOptions& options,
                         const std::string& input_name) {
  options.config.validate();
  ordered_json doc;
  doc["command"] = "analyze";
  doc["input"] = input_name;
  doc["config"] = config_to_json(options.config);
  doc["game"] = game_summary(game);

  std::vector<std::string> warnings;
  ordered_json results;

  const SymmetryVerdict symmetric = is_symmetric(game);
  results["symmetry"] = symmetry_to_json(game, symmetric);
  results["pure_nash"] = profiles_to_json(game, pure_nash(game));

  if (!game.common_actions()) {
    warnings.push_back(
        "players have differing action sets: superrational analysis does not"
        " apply, reporting pure Nash equilibria only");
  } else {
    if (!symmetric.symmetric) {
      warnings.push_back(
          "game is not symmetric: superrational results use the common-action"
          " reading and may differ between players");
    }
    results["diagonal"] = profiles_to_json(game, diagonal(game));
    ordered_json justifiable = ordered_json::array();
    for (int a : sr_justifiable_actions(game)) {
      justifiable.push_back(game.actions(0)[a]);
    }
    results["sr_justifiable"] = std::move(justifiable);
    results["sr_profiles"] = profiles_to_json(game, superrational_profiles(game));

    if (options.mixed) {
      const SRMixedReport mixed = superrational_mixed(game, options.config);
      results["mixed_sr"] = mixed_sr_to_json(game, mixed);
      for (const std::string& note : mixed.notes) warnings.push_back(note);
      if (!mixed.converged) {
        warnings.push_back(
            "mixed-strategy ascent hit the iteration cap before reaching the"
            " stationarity tolerance; values are best-so-far");
      }
    }
  }

  if (options.nash2p) {
    if (game.num_players() != 2) {
      warnings.push_back("mixed Nash enumeration skipped: it needs exactly 2"
                         " players");
    } else {
      const MixedNashResult nash = mixed_nash_2p(game);
      ordered_json section;
      section["degenerate"] = nash.degenerate;
      ordered_json equilibria = ordered_json::array();
      for (const MixedEquilibrium& eq : nash.equilibria) {
        ordered_json entry;
        entry["row"] = exact_strategy_to_json(eq.row);
        entry["col"] = exact_strategy_to_json(eq.col);
        equilibria.push_back(std::move(entry));
      }
      section["equilibria"] = std::move(equilibria);
      results["mixed_nash"] = std::move(section);
      if (nash.degenerate) {
        warnings.push_back(
            "the game has a continuum of mixed Nash equilibria; the list"
            " holds vertex representatives");
      }
    }
  }

  doc["results"] = std::move(results);
  doc["warnings"] = warnings;
  return doc;
}

namespace {

template <typename Space>
std::string move_name(const Space& space, int player, int move) {
  if (space.mode() == BeliefMode::pure) {
    return space.game().actions(player)[move];
  }
  return "#" + std::to_string(move);
}

ordered_json harsanyi_results(const HarsanyiSpace& space,
                              const std::optional<Assignment>& assignment,
                              const TypesOptions& options,
                              std::vector<std::string>& warnings) {
  ordered_json results;

  // The mixed-mode checks compare against the optimizer's value; compute it
  // once for the whole report.
  std::optional<double> optimum;
  if (space.mode() == BeliefMode::mixed) {
    const SRMixedReport report =
        superrational_mixed(space.game(), options.config);
    if (report.status == SRMixedStatus::found) {
      optimum = report.best_value;
      results["superrational_value"] = report.best_value;
    } else {
      warnings.push_back("the game has no superrational mixed strategy; every"
                         " mixed-mode check fails");
    }
  }

  const auto check_type = [&](int i, int t) -> TypeVerdict {
    if (space.mode() == BeliefMode::pure) {
      return is_superrational_type(space, i, t);
    }
    if (!optimum.has_value()) {
      return {std::nullopt, "the game has no superrational mixed strategy"};
    }
    return is_superrational_type_mixed(space, i, t, options.config, *optimum);
  };

  try {
    ordered_json checks = ordered_json::array();
    for (int i = 0; i < space.num_players(); ++i) {
      for (int t = 0; t < space.num_types(i); ++t) {
        const TypeVerdict verdict = check_type(i, t);
        ordered_json entry;
        entry["player"] = i;
        entry["type"] = space.types(i)[t];
        entry["superrational"] = verdict.ok();
        if (verdict.ok()) {
          entry["move"] = move_name(space, i, *verdict.move);
        } else {
          entry["reason"] = verdict.reason;
        }
        checks.push_back(std::move(entry));
      }
    }
    results["type_checks"] = std::move(checks);
  } catch (const Error& e) {
    warnings.push_back(std::string("superrational-type checks skipped: ") +
                       e.what());
  }

  if (assignment.has_value() && !assignment->strategies.empty()) {
    ordered_json checks = ordered_json::array();
    bool all_ok = true;
    for (const BayesianStrategy& strategy : assignment->strategies) {
      ordered_json entry;
      entry["player"] = strategy.player;
      try {
        const StrategyVerdict verdict = is_superrational_bayesian_strategy(
            space, strategy, options.config);
        entry["superrational"] = verdict.ok;
        all_ok = all_ok && verdict.ok;
        if (!verdict.ok) {
          entry["violating_type"] =
              space.types(strategy.player)[*verdict.violating_type];
          entry["reason"] = verdict.reason;
        }
      } catch (const Error& e) {
        entry["superrational"] = false;
        entry["reason"] = e.what();
        all_ok = false;
      }
      checks.push_back(std::move(entry));
    }
    results["strategy_checks"] = std::move(checks);

    // Realized types: from the file, or each player's only type.
    std::vector<int> realized = assignment->types;
    if (realized.empty()) {
      bool single = true;
      for (int i = 0; i < space.num_players() && single; ++i) {
        single = space.num_types(i) == 1;
      }
      if (single) realized.assign(space.num_players(), 0);
    }
    if (realized.empty()) {
      warnings.push_back("play skipped: no realized types given and some"
                         " player has several types");
    } else {
      const PlayOutcome outcome =
          play(space, realized, assignment->strategies, options.config);
      ordered_json section;
      ordered_json moves = ordered_json::array();
      for (int i = 0; i < space.num_players(); ++i) {
        moves.push_back(move_name(space, i, outcome.moves[i]));
      }
      section["moves"] = std::move(moves);
      section["theorem_flag"] = outcome.theorem_flag;
      results["play"] = std::move(section);
    }
  }
  return results;
}

ordered_json bk_results(const BKSpace& space,
                        const std::optional<Assignment>& assignment,
                        const TypesOptions& options,
                        std::vector<std::string>& warnings) {
  ordered_json results;

  std::optional<double> optimum;
  if (space.mode() == BeliefMode::mixed) {
    const SRMixedReport report =
        superrational_mixed(space.game(), options.config);
    if (report.status == SRMixedStatus::found) {
      optimum = report.best_value;
      results["superrational_value"] = report.best_value;
    } else {
      warnings.push_back("the game has no superrational mixed strategy; every"
                         " mixed-mode check fails");
    }
  }

  try {
    ordered_json checks = ordered_json::array();
    for (int i = 0; i < space.num_players(); ++i) {
      for (int t = 0; t < space.num_types(i); ++t) {
        TypeVerdict verdict;
        if (space.mode() == BeliefMode::pure) {
          verdict = is_bk_superrational_type(space, i, t);
        } else if (optimum.has_value()) {
          verdict = is_bk_superrational_type_mixed(space, i, t, options.config,
                                                   *optimum);
        } else {
          verdict = {std::nullopt,
                     "the game has no superrational mixed strategy"};
        }
        ordered_json entry;
        entry["player"] = i;
        entry["type"] = space.types(i)[t];
        entry["superrational"] = verdict.ok();
        if (verdict.ok()) {
          entry["move"] = move_name(space, i, *verdict.move);
        } else {
          entry["reason"] = verdict.reason;
        }
        checks.push_back(std::move(entry));
      }
    }
    results["type_checks"] = std::move(checks);
  } catch (const Error& e) {
    warnings.push_back(std::string("BK superrational-type checks skipped: ") +
                       e.what());
  }

  RefinementStats stats;
  const IdentificationRelation greatest =
      greatest_identification_relation(space, &stats);
  {
    ordered_json section;
    section["rounds"] = stats.rounds;
    ordered_json blocks = ordered_json::array();
    for (const auto& block : greatest.blocks()) {
      ordered_json members = ordered_json::array();
      for (const TaggedType& t : block) {
        members.push_back(std::to_string(t.player) + ":" +
                          space.types(t.player)[t.type]);
      }
      blocks.push_back(std::move(members));
    }
    section["blocks"] = std::move(blocks);
    results["identification"] = std::move(section);
  }

  {
    ordered_json checks = ordered_json::array();
    for (int i = 0; i < space.num_players(); ++i) {
      const int move_limit = space.mode() == BeliefMode::pure
                                 ? space.game().num_actions(i)
                                 : static_cast<int>(space.candidates().size());
      for (int t = 0; t < space.num_types(i); ++t) {
        for (int move = 0; move < move_limit; ++move) {
          const PlayerState state{move, t};
          ordered_json entry;
          entry["player"] = i;
          entry["move"] = move_name(space, i, move);
          entry["type"] = space.types(i)[t];
          entry["strict"] = is_superrational_state_dissimilar(
              space, i, state, StateCheck::strict, options.config);
          if (options.weak) {
            entry["weak"] = is_superrational_state_dissimilar(
                space, i, state, StateCheck::weak, options.config);
          }
          checks.push_back(std::move(entry));
        }
      }
    }
    results["state_checks"] = std::move(checks);
  }

  if (assignment.has_value() && !assignment->states.empty()) {
    const BKOutcome outcome =
        bk_outcome(space, assignment->states, options.config);
    ordered_json section;
    ordered_json moves = ordered_json::array();
    for (int i = 0; i < space.num_players(); ++i) {
      moves.push_back(move_name(space, i, outcome.moves[i]));
    }
    section["moves"] = std::move(moves);
    section["theorem_flag"] = outcome.theorem_flag;
    results["outcome"] = std::move(section);
  }
  return results;
}

}  // namespace

ordered_json run_types(const TypeSpaceFile& file,
                       const std::optional<Assignment>& assignment,
                       const TypesOptions& options,
                       const std::string& input_name) {
  options.config.validate();
  ordered_json doc;
  doc["command"] = "types";
  doc["input"] = input_name;
  doc["config"] = config_to_json(options.config);
  doc["kind"] = file.is_bk() ? "bk" : "harsanyi";
  doc["mode"] = to_string(file.mode());
  doc["game"] = game_summary(file.game());

  std::vector<std::string> warnings;
  if (!is_symmetric(file.game()).symmetric) {
    warnings.push_back("game is not symmetric: superrational conditions use"
                       " the common-action reading");
  }
  if (file.is_bk()) {
    doc["results"] = bk_results(std::get<BKSpace>(file.space), assignment,
                                options, warnings);
  } else {
    doc["results"] = harsanyi_results(std::get<HarsanyiSpace>(file.space),
                                      assignment, options, warnings);
  }
  doc["warnings"] = warnings;
  return doc;
}

namespace {

std::string scalar_to_text(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "yes" : "no";
  if (value.is_number_float()) return format_double(value.get<double>());
  return value.dump();
}

std::string list_to_text(const ordered_json& list, const char* empty = "{}") {
  if (list.empty()) return empty;
  std::string out = "{";
  bool first = true;
  for (const auto& item : list) {
    if (!first) out += ", ";
    out += scalar_to_text(item);
    first = false;
  }
  out += "}";
  return out;
}

std::string object_to_text(const ordered_json& object) {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, value] : object.items()) {
    if (!first) out += ", ";
    out += key + "=" + scalar_to_text(value);
    first = false;
  }
  out += "]";
  return out;
}

}  // namespace

std::string render_table(const ordered_json& report) {
  std::ostringstream out;
  out << "command: " << report.at("command").get<std::string>() << "\n";
  out << "input: " << report.at("input").get<std::string>() << "\n";
  const ordered_json& config = report.at("config");
  out << "config: seed=" << config.at("seed") << " tolerance="
      << scalar_to_text(config.at("tolerance")) << " grid=" << config.at("grid")
      << " starts=" << config.at("starts") << " max_iters="
      << config.at("max_iters") << "\n";
  if (report.contains("kind")) {
    out << "kind: " << report.at("kind").get<std::string>()
        << "  mode: " << report.at("mode").get<std::string>() << "\n";
  }
  const ordered_json& game = report.at("game");
  out << "game: players=" << game.at("players") << " actions=";
  for (std::size_t i = 0; i < game.at("actions").size(); ++i) {
    if (i > 0) out << "|";
    out << list_to_text(game.at("actions")[i]);
  }
  out << "\n";

  const ordered_json& results = report.at("results");
  if (results.contains("symmetry")) {
    const ordered_json& symmetry = results.at("symmetry");
    out << "symmetric: " << scalar_to_text(symmetry.at("symmetric"));
    if (symmetry.contains("witness")) {
      const ordered_json& witness = symmetry.at("witness");
      out << "  (" << witness.at("reason").get<std::string>();
      if (witness.contains("profile")) {
        out << " at " << witness.at("profile").get<std::string>() << ", player "
            << witness.at("player") << ", tau=" << witness.at("tau").dump();
      }
      out << ")";
    }
    out << "\n";
  }
  for (const char* key : {"diagonal", "sr_justifiable", "sr_profiles",
                          "pure_nash"}) {
    if (results.contains(key)) {
      out << key << ": " << list_to_text(results.at(key)) << "\n";
    }
  }
  if (results.contains("mixed_sr")) {
    const ordered_json& mixed = results.at("mixed_sr");
    out << "mixed_sr: status=" << mixed.at("status").get<std::string>()
        << " best_value=" << scalar_to_text(mixed.at("best_value"))
        << " grid_gap=" << scalar_to_text(mixed.at("grid_gap"))
        << " converged=" << scalar_to_text(mixed.at("converged")) << "\n";
    for (const auto& m : mixed.at("maximizers")) {
      out << "  maximizer: " << object_to_text(m.at("strategy"))
          << " value=" << scalar_to_text(m.at("value"))
          << " stationarity=" << scalar_to_text(m.at("stationarity")) << "\n";
    }
    if (mixed.contains("per_player")) {
      for (const auto& pm : mixed.at("per_player")) {
        out << "  player " << pm.at("player") << " diagonal max: "
            << object_to_text(pm.at("argmax"))
            << " value=" << scalar_to_text(pm.at("value")) << "\n";
      }
      out << "  consensus_gap: " << scalar_to_text(mixed.at("consensus_gap"))
          << "\n";
    }
  }
  if (results.contains("mixed_nash")) {
    const ordered_json& nash = results.at("mixed_nash");
    out << "mixed_nash: degenerate="
        << scalar_to_text(nash.at("degenerate")) << "\n";
    for (const auto& eq : nash.at("equilibria")) {
      out << "  equilibrium: row=" << list_to_text(eq.at("row"))
          << " col=" << list_to_text(eq.at("col")) << "\n";
    }
  }
  if (results.contains("superrational_value")) {
    out << "superrational_value: "
        << scalar_to_text(results.at("superrational_value")) << "\n";
  }
  if (results.contains("type_checks")) {
    out << "type_checks:\n";
    for (const auto& check : results.at("type_checks")) {
      out << "  player " << check.at("player") << " type '"
          << check.at("type").get<std::string>() << "': ";
      if (check.at("superrational").get<bool>()) {
        out << "superrational, move " << scalar_to_text(check.at("move"));
      } else {
        out << "not superrational (" << check.at("reason").get<std::string>()
            << ")";
      }
      out << "\n";
    }
  }
  if (results.contains("strategy_checks")) {
    out << "strategy_checks:\n";
    for (const auto& check : results.at("strategy_checks")) {
      out << "  player " << check.at("player") << ": "
          << (check.at("superrational").get<bool>() ? "superrational"
                                                    : "not superrational");
      if (check.contains("reason")) {
        out << " (" << check.at("reason").get<std::string>() << ")";
      }
      out << "\n";
    }
  }
  if (results.contains("play")) {
    out << "play: " << list_to_text(results.at("play").at("moves"))
        << " theorem_flag="
        << scalar_to_text(results.at("play").at("theorem_flag")) << "\n";
  }
  if (results.contains("identification")) {
    const ordered_json& ident = results.at("identification");
    out << "identification: rounds=" << ident.at("rounds") << " blocks:";
    for (const auto& block : ident.at("blocks")) {
      out << " " << list_to_text(block);
    }
    out << "\n";
  }
  if (results.contains("state_checks")) {
    out << "state_checks:\n";
    for (const auto& check : results.at("state_checks")) {
      out << "  player " << check.at("player") << " ("
          << scalar_to_text(check.at("move")) << ", "
          << check.at("type").get<std::string>()
          << "): strict=" << scalar_to_text(check.at("strict"));
      if (check.contains("weak")) {
        out << " weak=" << scalar_to_text(check.at("weak"));
      }
      out << "\n";
    }
  }
  if (results.contains("outcome")) {
    out << "outcome: " << list_to_text(results.at("outcome").at("moves"))
        << " theorem_flag="
        << scalar_to_text(results.at("outcome").at("theorem_flag")) << "\n";
  }

  const ordered_json& warnings = report.at("warnings");
  if (warnings.empty()) {
    out << "warnings: (none)\n";
  } else {
    out << "warnings:\n";
    for (const auto& warning : warnings) {
      out << "  - " << warning.get<std::string>() << "\n";
    }
  }
  return out.str();
}

}  // namespace srgt
