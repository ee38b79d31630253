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

#ifndef SRGT_BK_HPP_
#define SRGT_BK_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgt/belief.hpp"
#include "srgt/game.hpp"
#include "srgt/mixed.hpp"
#include "srgt/simplex_opt.hpp"

namespace srgt {

// A possibility structure: each type of player i maps to a nonempty finite
// set of tuples of opponents' (move, type) pairs. Mixed mode replaces action
// indices by indices into a declared candidate set of mixed strategies.
class BKSpace {
 public:
  BKSpace(Game game, BeliefMode mode,
          std::vector<std::vector<std::string>> types,
          std::vector<ExactMixedStrategy> candidates,
          std::vector<std::vector<std::vector<BeliefPoint>>> beliefs);

  const Game& game() const { return game_; }
  BeliefMode mode() const { return mode_; }
  int num_players() const { return game_.num_players(); }
  const std::vector<std::string>& types(int player) const {
    return types_[player];
  }
  int num_types(int player) const {
    return static_cast<int>(types_[player].size());
  }
  int total_types() const { return total_types_; }
  const std::vector<ExactMixedStrategy>& candidates() const {
    return candidates_;
  }
  // Canonical form: sorted, duplicates removed, never empty.
  const std::vector<BeliefPoint>& belief(int player, int type) const;

  int type_index(int player, std::string_view label) const;
  int opponent_slot(int player, int opponent) const;
  bool common_type_sets() const { return common_type_sets_; }
  // The label of the move an opponent entry names (action label in pure
  // mode, "#<index>" in mixed mode); used for cross-player matching.
  const std::string& move_label(int player, int move) const;

  bool operator==(const BKSpace&) const = default;

 private:
  Game game_;
  BeliefMode mode_;
  std::vector<std::vector<std::string>> types_;
  std::vector<ExactMixedStrategy> candidates_;
  std::vector<std::vector<std::vector<BeliefPoint>>> beliefs_;
  std::vector<std::string> candidate_labels_;
  int total_types_ = 0;
  bool common_type_sets_ = false;
};

// A type tagged with its owning player, so identically named types of
// different players stay distinct in the disjoint union.
struct TaggedType {
  int player = 0;
  int type = 0;

  auto operator<=>(const TaggedType&) const = default;
};

// An equivalence relation on the disjoint union of all players' type sets,
// stored as a partition. Blocks and members are kept in canonical order.
class IdentificationRelation {
 public:
  static IdentificationRelation single_block(const BKSpace& space);
  static IdentificationRelation identity(const BKSpace& space);
  // Equivalence closure of the given pairs (plus reflexivity).
  static IdentificationRelation from_pairs(
      const BKSpace& space,
      const std::vector<std::pair<TaggedType, TaggedType>>& pairs);
  // Validates that `blocks` partitions exactly the disjoint union of type
  // sets; throws NotAPartition otherwise.
  static IdentificationRelation from_blocks(
      const BKSpace& space, std::vector<std::vector<TaggedType>> blocks);

  bool related(TaggedType a, TaggedType b) const;
  int block_of(TaggedType t) const;
  const std::vector<std::vector<TaggedType>>& blocks() const { return blocks_; }
  // Every block of *this lies inside a block of `other`.
  bool refines(const IdentificationRelation& other) const;

  bool operator==(const IdentificationRelation&) const = default;

 private:
  IdentificationRelation() = default;
  void rebuild_index(const BKSpace& space);

  std::vector<std::vector<TaggedType>> blocks_;
  std::vector<std::vector<int>> block_index_;  // [player][type] -> block id
};

// The type is certain of one world where every opponent has this very type
// and plays one common superrationally justifiable move. Requires a common
// pool of type labels (throws TypeSetsDiffer). Mixed mode: pass the
// optimizer config (and optionally a precomputed optimum) so justifiability
// means attaining the superrational value within tolerance.
TypeVerdict is_bk_superrational_type(const BKSpace& space, int player, int type);
TypeVerdict is_bk_superrational_type_mixed(const BKSpace& space, int player,
                                           int type,
                                           const OptimizerConfig& config);
TypeVerdict is_bk_superrational_type_mixed(const BKSpace& space, int player,
                                           int type,
                                           const OptimizerConfig& config,
                                           double superrational_value);

// A player's (move, type) pair.
struct PlayerState {
  int move = 0;
  int type = 0;

  auto operator<=>(const PlayerState&) const = default;
};

// True iff `state` is (a, t) where t is a BK superrational type certain of
// exactly the move a. Same-type-set setting.
bool is_superrational_state(const BKSpace& space, int player,
                            const PlayerState& state);

struct IdentificationVerdict {
  bool ok = false;
  std::string reason;
  // The related pair that fails, and the belief tuple with no match.
  std::optional<std::pair<TaggedType, TaggedType>> pair;
  std::optional<BeliefPoint> unmatched;
};

// Checks the matching condition: for every related ordered pair (t_i, t_j)
// some permutation tau with tau(i) = j matches every belief tuple of t_i to
// one of t_j with equal move labels and related types, coordinatewise
// through tau. The permutation is chosen once per ordered pair.
IdentificationVerdict is_identification_relation(
    const BKSpace& space, const IdentificationRelation& relation);

struct RefinementStats {
  int rounds = 0;
  std::vector<int> block_counts;  // after each round
};

// The coarsest identification relation, by partition refinement from the
// single-block partition: each round keeps only the pairs that pass the
// matching condition relative to the current partition and splits blocks
// into the connected components of those pairs. Monotone; at most
// total_types() rounds.
IdentificationRelation greatest_identification_relation(
    const BKSpace& space, RefinementStats* stats = nullptr);

enum class StateCheck {
  strict,  // the move must be superrationally justifiable
  weak     // every condition except justifiability
};

// Superrational state for possibly dissimilar type spaces: the belief is the
// singleton where everyone plays the state's move, the move is justifiable
// (strict check only), and every believed opponent type is related to this
// type in the greatest identification relation.
bool is_superrational_state_dissimilar(const BKSpace& space, int player,
                                       const PlayerState& state,
                                       StateCheck check = StateCheck::strict,
                                       const OptimizerConfig& config = {});

struct BKOutcome {
  std::vector<int> moves;  // one per player
  // True when the game is symmetric, a single superrational move exists and
  // every player's state passes the applicable superrational-state check.
  bool theorem_flag = false;
};

// Projects the move coordinates of one state per player. Throws UnknownType.
BKOutcome bk_outcome(const BKSpace& space, const std::vector<PlayerState>& states,
                     const OptimizerConfig& config = {});

}  // namespace srgt

#endif  // SRGT_BK_HPP_
