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

#include "srgt/harsanyi.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "srgt/errors.hpp"

namespace srgt {

namespace {

bool label_sets_equal(const std::vector<std::vector<std::string>>& types) {
  const std::set<std::string> first(types[0].begin(), types[0].end());
  return std::all_of(types.begin() + 1, types.end(),
                     [&](const std::vector<std::string>& t) {
                       return std::set<std::string>(t.begin(), t.end()) == first;
                     });
}

}  // namespace

HarsanyiSpace::HarsanyiSpace(
    Game game, BeliefMode mode, std::vector<std::vector<std::string>> types,
    std::vector<ExactMixedStrategy> candidates,
    std::vector<std::vector<FiniteDistribution<BeliefPoint>>> beliefs)
    : game_(std::move(game)),
      mode_(mode),
      types_(std::move(types)),
      candidates_(std::move(candidates)),
      beliefs_(std::move(beliefs)) {
  const int n = game_.num_players();
  if (static_cast<int>(types_.size()) != n) {
    throw std::invalid_argument("type lists must cover every player");
  }
  for (int i = 0; i < n; ++i) {
    if (types_[i].empty()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has no types");
    }
    std::set<std::string> unique(types_[i].begin(), types_[i].end());
    if (unique.size() != types_[i].size()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has duplicate type labels");
    }
  }
  if (mode_ == BeliefMode::pure) {
    if (!candidates_.empty()) {
      throw std::invalid_argument("pure mode takes no candidate strategies");
    }
  } else {
    if (candidates_.empty()) {
      throw std::invalid_argument("mixed mode needs candidate strategies");
    }
    for (int j = 1; j < n; ++j) {
      if (game_.num_actions(j) != game_.num_actions(0)) {
        throw std::invalid_argument(
            "mixed mode needs equal action counts for all players");
      }
    }
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (static_cast<int>(candidates_[c].probs.size()) !=
              game_.num_actions(0) ||
          !is_simplex_point(candidates_[c].probs)) {
        throw std::invalid_argument("candidate " + std::to_string(c) +
                                    " is not a probability vector over the"
                                    " action list");
      }
    }
  }
  if (static_cast<int>(beliefs_.size()) != n) {
    throw std::invalid_argument("beliefs must cover every player");
  }
  for (int i = 0; i < n; ++i) {
    if (beliefs_[i].size() != types_[i].size()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " needs one belief per type");
    }
    for (std::size_t t = 0; t < types_[i].size(); ++t) {
      const std::string where =
          "belief of player " + std::to_string(i) + " type '" + types_[i][t] + "'";
      for (const auto& [point, prob] : beliefs_[i][t].entries()) {
        if (static_cast<int>(point.size()) != n - 1) {
          throw std::invalid_argument(where + ": outcome tuple needs " +
                                      std::to_string(n - 1) + " entries");
        }
        for (int j = 0, slot = 0; j < n; ++j) {
          if (j == i) continue;
          const OpponentEntry& entry = point[slot++];
          const int move_limit = mode_ == BeliefMode::pure
                                     ? game_.num_actions(j)
                                     : static_cast<int>(candidates_.size());
          if (entry.move < 0 || entry.move >= move_limit) {
            throw std::invalid_argument(where + ": move index " +
                                        std::to_string(entry.move) +
                                        " out of range for player " +
                                        std::to_string(j));
          }
          if (entry.type < 0 ||
              entry.type >= static_cast<int>(types_[j].size())) {
            throw std::invalid_argument(where + ": type index " +
                                        std::to_string(entry.type) +
                                        " out of range for player " +
                                        std::to_string(j));
          }
        }
      }
    }
  }
  common_type_sets_ = label_sets_equal(types_);
}

const FiniteDistribution<BeliefPoint>& HarsanyiSpace::belief(int player,
                                                             int type) const {
  if (player < 0 || player >= num_players()) {
    throw UnknownType("player index " + std::to_string(player) +
                      " out of range");
  }
  if (type < 0 || type >= num_types(player)) {
    throw UnknownType("type index " + std::to_string(type) +
                      " out of range for player " + std::to_string(player));
  }
  return beliefs_[player][type];
}

int HarsanyiSpace::type_index(int player, std::string_view label) const {
  const auto& list = types_[player];
  for (std::size_t t = 0; t < list.size(); ++t) {
    if (list[t] == label) return static_cast<int>(t);
  }
  throw UnknownType("player " + std::to_string(player) + " has no type '" +
                    std::string(label) + "'");
}

int HarsanyiSpace::opponent_slot(int player, int opponent) const {
  return opponent < player ? opponent : opponent - 1;
}

FiniteDistribution<int> marginal(const HarsanyiSpace& space, int player,
                                 int type, int opponent, MarginalKind kind) {
  const FiniteDistribution<BeliefPoint>& belief = space.belief(player, type);
  if (opponent == player || opponent < 0 || opponent >= space.num_players()) {
    throw BadCoordinate("player " + std::to_string(opponent) +
                        " is not an opponent of player " +
                        std::to_string(player));
  }
  const int slot = space.opponent_slot(player, opponent);
  return belief.pushforward<int>([&](const BeliefPoint& point) {
    return kind == MarginalKind::action ? point[slot].move : point[slot].type;
  });
}

namespace {

void require_common_types(const HarsanyiSpace& space) {
  if (!space.common_type_sets()) {
    throw TypeSetsDiffer(
        "superrational-type checks need all players to draw types from the"
        " same label set");
  }
}

// Shared certainty conditions: the type believes every opponent has its own
// label and every opponent makes one common move. Returns that move, or a
// reason. `player`/`type` already validated.
TypeVerdict certainty_conditions(const HarsanyiSpace& space, int player,
                                 int type) {
  const std::string& label = space.types(player)[type];
  std::optional<int> common_move;
  for (int j = 0; j < space.num_players(); ++j) {
    if (j == player) continue;
    const auto type_dirac = marginal(space, player, type, j,
                                     MarginalKind::type)
                                .as_dirac();
    if (!type_dirac.has_value()) {
      return {std::nullopt, "beliefs about player " + std::to_string(j) +
                                "'s type are not Dirac"};
    }
    if (space.types(j)[*type_dirac] != label) {
      return {std::nullopt, "certain player " + std::to_string(j) +
                                " has type '" + space.types(j)[*type_dirac] +
                                "', not '" + label + "'"};
    }
    const auto move_dirac = marginal(space, player, type, j,
                                     MarginalKind::action)
                                .as_dirac();
    if (!move_dirac.has_value()) {
      return {std::nullopt, "beliefs about player " + std::to_string(j) +
                                "'s play are not Dirac"};
    }
    if (common_move.has_value() && *common_move != *move_dirac) {
      return {std::nullopt, "certain of different plays for different"
                            " opponents"};
    }
    common_move = *move_dirac;
  }
  return {common_move, ""};
}

}  // namespace

TypeVerdict is_superrational_type(const HarsanyiSpace& space, int player,
                                  int type) {
  if (space.mode() != BeliefMode::pure) {
    throw ModeMismatch("is_superrational_type needs a pure-mode space");
  }
  space.belief(player, type);  // validates player/type
  require_common_types(space);
  const std::vector<int> justifiable = sr_justifiable_actions(space.game());
  if (space.num_players() == 1) {
    if (justifiable.empty()) {
      return {std::nullopt, "no superrationally justifiable action"};
    }
    return {justifiable.front(), ""};
  }
  TypeVerdict verdict = certainty_conditions(space, player, type);
  if (!verdict.ok()) return verdict;
  if (!std::binary_search(justifiable.begin(), justifiable.end(),
                          *verdict.move)) {
    return {std::nullopt,
            "action '" + space.game().actions(player)[*verdict.move] +
                "' is not superrationally justifiable"};
  }
  return verdict;
}

TypeVerdict is_superrational_type_mixed(const HarsanyiSpace& space, int player,
                                        int type, const OptimizerConfig& config,
                                        double superrational_value) {
  if (space.mode() != BeliefMode::mixed) {
    throw ModeMismatch("is_superrational_type_mixed needs a mixed-mode space");
  }
  space.belief(player, type);
  require_common_types(space);
  const auto candidate_value = [&](int c) {
    return diagonal_expected_payoff(space.game(),
                                    to_float(space.candidates()[c]), 0);
  };
  if (space.num_players() == 1) {
    for (std::size_t c = 0; c < space.candidates().size(); ++c) {
      if (candidate_value(static_cast<int>(c)) >=
          superrational_value - config.tolerance) {
        return {static_cast<int>(c), ""};
      }
    }
    return {std::nullopt, "no candidate attains the superrational value"};
  }
  TypeVerdict verdict = certainty_conditions(space, player, type);
  if (!verdict.ok()) return verdict;
  if (candidate_value(*verdict.move) < superrational_value - config.tolerance) {
    return {std::nullopt, "candidate " + std::to_string(*verdict.move) +
                              " does not attain the superrational value"};
  }
  return verdict;
}

TypeVerdict is_superrational_type_mixed(const HarsanyiSpace& space, int player,
                                        int type,
                                        const OptimizerConfig& config) {
  const SRMixedReport report = superrational_mixed(space.game(), config);
  if (report.status != SRMixedStatus::found) {
    return {std::nullopt, "the game has no superrational mixed strategy"};
  }
  return is_superrational_type_mixed(space, player, type, config,
                                     report.best_value);
}

namespace {

void validate_strategy(const HarsanyiSpace& space,
                       const BayesianStrategy& strategy) {
  if (strategy.player < 0 || strategy.player >= space.num_players()) {
    throw std::invalid_argument("strategy player index out of range");
  }
  if (strategy.mode != space.mode()) {
    throw ModeMismatch("strategy mode " + std::string(to_string(strategy.mode)) +
                       " does not match space mode " +
                       std::string(to_string(space.mode())));
  }
  if (static_cast<int>(strategy.choice.size()) !=
      space.num_types(strategy.player)) {
    throw std::invalid_argument("strategy must assign a move to every type");
  }
  const int move_limit = space.mode() == BeliefMode::pure
                             ? space.game().num_actions(strategy.player)
                             : static_cast<int>(space.candidates().size());
  for (int move : strategy.choice) {
    if (move < 0 || move >= move_limit) {
      throw std::invalid_argument("strategy move index out of range");
    }
  }
}

}  // namespace

StrategyVerdict is_superrational_bayesian_strategy(
    const HarsanyiSpace& space, const BayesianStrategy& strategy,
    const OptimizerConfig& config) {
  validate_strategy(space, strategy);
  std::optional<double> optimum;  // computed on first superrational check
  for (int t = 0; t < space.num_types(strategy.player); ++t) {
    TypeVerdict verdict;
    if (space.mode() == BeliefMode::pure) {
      verdict = is_superrational_type(space, strategy.player, t);
    } else {
      if (!optimum.has_value()) {
        const SRMixedReport report = superrational_mixed(space.game(), config);
        optimum = report.status == SRMixedStatus::found
                      ? report.best_value
                      : std::numeric_limits<double>::infinity();
      }
      verdict = is_superrational_type_mixed(space, strategy.player, t, config,
                                            *optimum);
    }
    if (verdict.ok() && strategy.choice[t] != *verdict.move) {
      return {false, t,
              "type '" + space.types(strategy.player)[t] +
                  "' is certain of move " + std::to_string(*verdict.move) +
                  " but the strategy plays " +
                  std::to_string(strategy.choice[t])};
    }
  }
  return {true, std::nullopt, ""};
}

PlayOutcome play(const HarsanyiSpace& space, const std::vector<int>& types,
                 const std::vector<BayesianStrategy>& strategies,
                 const OptimizerConfig& config) {
  const int n = space.num_players();
  if (static_cast<int>(types.size()) != n ||
      static_cast<int>(strategies.size()) != n) {
    throw std::invalid_argument("play needs one type and one strategy per"
                                " player");
  }
  for (int i = 0; i < n; ++i) {
    if (types[i] < 0 || types[i] >= space.num_types(i)) {
      throw UnknownType("type index " + std::to_string(types[i]) +
                        " out of range for player " + std::to_string(i));
    }
    if (strategies[i].player != i) {
      throw std::invalid_argument("strategies must be listed in player order");
    }
    validate_strategy(space, strategies[i]);
  }

  PlayOutcome outcome;
  outcome.moves.resize(n);
  for (int i = 0; i < n; ++i) outcome.moves[i] = strategies[i].choice[types[i]];

  outcome.theorem_flag = false;
  try {
    bool unique_move = false;
    std::optional<double> optimum;
    if (space.mode() == BeliefMode::pure) {
      unique_move = sr_justifiable_actions(space.game()).size() == 1;
    } else {
      const SRMixedReport report = superrational_mixed(space.game(), config);
      unique_move = report.status == SRMixedStatus::found &&
                    report.maximizers.size() == 1;
      optimum = report.best_value;
    }
    if (unique_move) {
      bool all_superrational = true;
      for (int i = 0; i < n && all_superrational; ++i) {
        for (int t = 0; t < space.num_types(i) && all_superrational; ++t) {
          const TypeVerdict verdict =
              space.mode() == BeliefMode::pure
                  ? is_superrational_type(space, i, t)
                  : is_superrational_type_mixed(space, i, t, config, *optimum);
          all_superrational = verdict.ok();
        }
      }
      for (int i = 0; i < n && all_superrational; ++i) {
        all_superrational =
            is_superrational_bayesian_strategy(space, strategies[i], config).ok;
      }
      outcome.theorem_flag = all_superrational;
    }
  } catch (const Error&) {
    outcome.theorem_flag = false;
  }
  return outcome;
}

bool nash_epistemic_check(const HarsanyiSpace& space,
                          const std::vector<int>& types,
                          const std::vector<BayesianStrategy>& strategies,
                          const ActionProfile& target) {
  if (space.mode() != BeliefMode::pure) {
    throw ModeMismatch("nash_epistemic_check needs a pure-mode space");
  }
  const Game& game = space.game();
  const int n = space.num_players();
  if (static_cast<int>(types.size()) != n ||
      static_cast<int>(strategies.size()) != n ||
      static_cast<int>(target.actions.size()) != n) {
    throw std::invalid_argument("nash_epistemic_check needs one type, one"
                                " strategy and one target action per player");
  }
  for (int i = 0; i < n; ++i) {
    if (types[i] < 0 || types[i] >= space.num_types(i)) {
      throw UnknownType("type index " + std::to_string(types[i]) +
                        " out of range for player " + std::to_string(i));
    }
    if (strategies[i].player != i) {
      throw std::invalid_argument("strategies must be listed in player order");
    }
    validate_strategy(space, strategies[i]);
    if (target.actions[i] < 0 || target.actions[i] >= game.num_actions(i)) {
      throw std::invalid_argument("target profile action out of range");
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto dirac =
          marginal(space, i, types[i], j, MarginalKind::action).as_dirac();
      if (!dirac.has_value() || *dirac != target.actions[j]) return false;
    }
    if (strategies[i].choice[types[i]] != target.actions[i]) return false;
    const std::size_t target_index = game.index_of(target);
    const std::size_t base =
        target_index - target.actions[i] * game.stride(i);
    for (int a = 0; a < game.num_actions(i); ++a) {
      if (game.payoff(target_index, i) <
          game.payoff(base + a * game.stride(i), i)) {
        return false;
      }
    }
  }
  return true;
}

HarsanyiSpace make_superrational_space(const Game& game, BeliefMode mode,
                                       const OptimizerConfig& config) {
  const int n = game.num_players();
  std::vector<std::vector<std::string>> types(n, std::vector<std::string>{"t"});
  std::vector<ExactMixedStrategy> candidates;
  int move = 0;
  if (mode == BeliefMode::pure) {
    const std::vector<int> justifiable = sr_justifiable_actions(game);
    if (justifiable.empty()) {
      throw Error("empty_superrational_set",
                  "the game has no superrationally justifiable action");
    }
    move = justifiable.front();
  } else {
    const SRMixedReport report = superrational_mixed(game, config);
    if (report.status != SRMixedStatus::found || report.maximizers.empty()) {
      throw Error("empty_superrational_set",
                  "the game has no superrational mixed strategy");
    }
    // Exact dyadic conversion of the float maximizer, then an exact
    // renormalization so the candidate satisfies the simplex invariant.
    ExactMixedStrategy candidate;
    Rat sum = 0;
    for (double p : report.maximizers.front().strategy.probs) {
      candidate.probs.emplace_back(p);
      sum += candidate.probs.back();
    }
    for (Rat& p : candidate.probs) p /= sum;
    candidates.push_back(std::move(candidate));
    move = 0;
  }

  std::vector<std::vector<FiniteDistribution<BeliefPoint>>> beliefs;
  beliefs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const BeliefPoint point(n - 1, OpponentEntry{move, 0});
    beliefs.push_back({FiniteDistribution<BeliefPoint>::dirac(point)});
  }
  return HarsanyiSpace(game, mode, std::move(types), std::move(candidates),
                       std::move(beliefs));
}

}  // namespace srgt
