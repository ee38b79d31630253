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

#ifndef SRGT_GAME_HPP_
#define SRGT_GAME_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgt/rational.hpp"

namespace srgt {

// One action per player, stored as indices into each player's action list.
struct ActionProfile {
  std::vector<int> actions;

  auto operator<=>(const ActionProfile&) const = default;
};

// A bijection on {0,...,n-1}, stored as the image array: tau(i) = images[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Swaps positions k and k+1, fixes everything else.
  static Permutation adjacent_transposition(int n, int k);
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  Permutation inverse() const;
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// A finite normal-form game with exact rational payoffs. The payoff table is
// total: one entry per action profile per player. Profiles are indexed
// lexicographically with player 0 as the most significant digit, which fixes
// the iteration order everywhere in the library.
class Game {
 public:
  // `payoffs` is flat, profile-major: payoffs[profile_index * n + player].
  Game(std::vector<std::vector<std::string>> actions, std::vector<Rat> payoffs);

  // Convenience constructor for games where every player draws from the same
  // action list.
  static Game common(int num_players, std::vector<std::string> actions,
                     std::vector<Rat> payoffs);

  int num_players() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& actions(int player) const {
    return actions_[player];
  }
  int num_actions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  // True iff all players' action label lists are identical as ordered lists.
  bool common_actions() const { return common_actions_; }

  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t index_of(const ActionProfile& profile) const;
  ActionProfile profile_at(std::size_t index) const;
  // Profile index arithmetic: the stride of one step in `player`'s action.
  std::size_t stride(int player) const { return strides_[player]; }

  const Rat& payoff(std::size_t profile_index, int player) const {
    return payoffs_[profile_index * actions_.size() + player];
  }
  const Rat& payoff(const ActionProfile& profile, int player) const {
    return payoff(index_of(profile), player);
  }

  std::vector<std::string> labels(const ActionProfile& profile) const;
  std::string profile_string(const ActionProfile& profile) const;
  // Index of `label` in `player`'s action list, or nullopt.
  std::optional<int> action_index(int player, std::string_view label) const;

  bool operator==(const Game&) const = default;

 private:
  std::vector<std::vector<std::string>> actions_;
  std::vector<Rat> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 1;
  bool common_actions_ = true;
};

struct SymmetryViolation {
  // Human-readable description of what failed.
  std::string reason;
  // Present when the failure is a concrete payoff-invariance witness.
  std::optional<Permutation> tau;
  std::optional<ActionProfile> profile;
  std::optional<int> player;
};

struct SymmetryVerdict {
  bool symmetric = false;
  std::optional<SymmetryViolation> witness;

  explicit operator bool() const { return symmetric; }
};

// Payoff invariance under simultaneous permutation of players and profile
// coordinates. Only the n-1 adjacent transpositions are checked: they
// generate the full symmetric group and invariance composes, so checking the
// generators decides the property. A game whose players do not share one
// action list is not symmetric; the witness says so.
SymmetryVerdict is_symmetric(const Game& game);

// The profiles (a,...,a), one per common action, in action-list order.
// Throws DifferentActionSets when the players' action lists differ.
std::vector<ActionProfile> diagonal(const Game& game);

// Actions a* with payoff(a*,...,a*) >= payoff(a,...,a) for every player and
// every common action a. Exact comparison; may be empty. Returned as indices
// into the common action list, ascending. Throws DifferentActionSets.
std::vector<int> sr_justifiable_actions(const Game& game);

// Diagonal profiles that weakly dominate every diagonal profile for every
// player. Equals the diagonal profiles built from sr_justifiable_actions.
// Throws DifferentActionSets.
std::vector<ActionProfile> superrational_profiles(const Game& game);

// All pure Nash equilibria by exhaustive enumeration, exact comparison.
std::vector<ActionProfile> pure_nash(const Game& game);

}  // namespace srgt

#endif  // SRGT_GAME_HPP_
