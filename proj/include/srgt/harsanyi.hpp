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

#ifndef SRGT_HARSANYI_HPP_
#define SRGT_HARSANYI_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "srgt/belief.hpp"
#include "srgt/distribution.hpp"
#include "srgt/game.hpp"
#include "srgt/mixed.hpp"
#include "srgt/simplex_opt.hpp"

namespace srgt {

// A finite type space with probabilistic beliefs: each type of player i
// carries a distribution over tuples of (what each opponent plays, which
// type each opponent has). In mixed mode the "plays" coordinate indexes a
// declared finite candidate set of mixed strategies.
class HarsanyiSpace {
 public:
  HarsanyiSpace(Game game, BeliefMode mode,
                std::vector<std::vector<std::string>> types,
                std::vector<ExactMixedStrategy> candidates,
                std::vector<std::vector<FiniteDistribution<BeliefPoint>>> beliefs);

  const Game& game() const { return game_; }
  BeliefMode mode() const { return mode_; }
  int num_players() const { return game_.num_players(); }
  const std::vector<std::string>& types(int player) const {
    return types_[player];
  }
  int num_types(int player) const {
    return static_cast<int>(types_[player].size());
  }
  const std::vector<ExactMixedStrategy>& candidates() const {
    return candidates_;
  }
  const FiniteDistribution<BeliefPoint>& belief(int player, int type) const;

  // Index of `label` in `player`'s type list; throws UnknownType.
  int type_index(int player, std::string_view label) const;
  // Position of opponent `j` inside player `i`'s belief tuples.
  int opponent_slot(int player, int opponent) const;
  // True iff all players draw from the same set of type labels.
  bool common_type_sets() const { return common_type_sets_; }

  bool operator==(const HarsanyiSpace&) const = default;

 private:
  Game game_;
  BeliefMode mode_;
  std::vector<std::vector<std::string>> types_;
  std::vector<ExactMixedStrategy> candidates_;
  std::vector<std::vector<FiniteDistribution<BeliefPoint>>> beliefs_;
  bool common_type_sets_ = false;
};

enum class MarginalKind { action, type };

// Pushforward of player i's belief at type t onto one opponent coordinate:
// what player j plays (MarginalKind::action) or which type player j has
// (MarginalKind::type). Outcomes are indices. Throws BadCoordinate when j is
// not an opponent of i, UnknownType for bad i/t.
FiniteDistribution<int> marginal(const HarsanyiSpace& space, int player,
                                 int type, int opponent, MarginalKind kind);

// A type is superrational when it is certain every opponent has this very
// type and certain every opponent plays one common superrationally
// justifiable action. Pure mode; requires a common pool of type labels
// (throws TypeSetsDiffer) and a common action list (DifferentActionSets).
TypeVerdict is_superrational_type(const HarsanyiSpace& space, int player,
                                  int type);

// Mixed-mode analogue: the certainty must land on a candidate strategy whose
// diagonal expected payoff is within config.tolerance of the optimizer's
// superrational value.
TypeVerdict is_superrational_type_mixed(const HarsanyiSpace& space, int player,
                                        int type, const OptimizerConfig& config);
// Same, with the optimum precomputed (for callers checking many types).
TypeVerdict is_superrational_type_mixed(const HarsanyiSpace& space, int player,
                                        int type, const OptimizerConfig& config,
                                        double superrational_value);

// A function from one player's types to moves (action indices in pure mode,
// candidate indices in mixed mode).
struct BayesianStrategy {
  int player = 0;
  BeliefMode mode = BeliefMode::pure;
  std::vector<int> choice;  // one move per type, in type-list order

  bool operator==(const BayesianStrategy&) const = default;
};

struct StrategyVerdict {
  bool ok = false;
  // First type whose prescribed move differs from the certified one.
  std::optional<int> violating_type;
  std::string reason;
};

// Checks that the strategy maps every superrational type to the move that
// type is certain of. Vacuously true when no type is superrational. Throws
// ModeMismatch when the strategy's mode disagrees with the space.
StrategyVerdict is_superrational_bayesian_strategy(
    const HarsanyiSpace& space, const BayesianStrategy& strategy,
    const OptimizerConfig& config = {});

struct PlayOutcome {
  std::vector<int> moves;  // one per player
  // True when a single superrationally justifiable move exists, every type
  // of every player is superrational and every strategy is a superrational
  // bayesian strategy; the outcome is then the superrational profile.
  bool theorem_flag = false;
};

// Componentwise application of each player's strategy to their realized
// type. Throws UnknownType on bad type indices.
PlayOutcome play(const HarsanyiSpace& space, const std::vector<int>& types,
                 const std::vector<BayesianStrategy>& strategies,
                 const OptimizerConfig& config = {});

// Epistemic sufficient conditions for a pure Nash equilibrium: everyone is
// certain of the others' target actions, plays their own target action, and
// that action is a best response. Pure mode only.
bool nash_epistemic_check(const HarsanyiSpace& space,
                          const std::vector<int>& types,
                          const std::vector<BayesianStrategy>& strategies,
                          const ActionProfile& target);

// The canonical one-type-per-player space whose beliefs are Dirac at the
// first superrational move; it passes every check above by construction.
// Throws Error("empty_superrational_set") when the game admits no
// superrational move.
HarsanyiSpace make_superrational_space(const Game& game,
                                       BeliefMode mode = BeliefMode::pure,
                                       const OptimizerConfig& config = {});

}  // namespace srgt

#endif  // SRGT_HARSANYI_HPP_
