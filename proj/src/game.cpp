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

#include "srgt/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "srgt/errors.hpp"

namespace srgt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= static_cast<int>(images_.size()) || seen[image]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent_transposition(int n, int k) {
  Permutation tau = identity(n);
  std::swap(tau.images_[k], tau.images_[k + 1]);
  return tau;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Game::Game(std::vector<std::vector<std::string>> actions,
           std::vector<Rat> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (actions_.empty()) {
    throw std::invalid_argument("game needs at least one player");
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].empty()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has an empty action list");
    }
    std::set<std::string> unique(actions_[i].begin(), actions_[i].end());
    if (unique.size() != actions_[i].size()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has duplicate action labels");
    }
  }
  strides_.assign(actions_.size(), 1);
  for (int i = static_cast<int>(actions_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * actions_[i + 1].size();
  }
  num_profiles_ = strides_[0] * actions_[0].size();
  if (payoffs_.size() != num_profiles_ * actions_.size()) {
    throw std::invalid_argument(
        "payoff table has " + std::to_string(payoffs_.size()) +
        " entries, expected " + std::to_string(num_profiles_ * actions_.size()));
  }
  common_actions_ = std::all_of(
      actions_.begin() + 1, actions_.end(),
      [&](const std::vector<std::string>& a) { return a == actions_[0]; });
}

Game Game::common(int num_players, std::vector<std::string> actions,
                  std::vector<Rat> payoffs) {
  return Game(std::vector<std::vector<std::string>>(num_players, actions),
              std::move(payoffs));
}

std::size_t Game::index_of(const ActionProfile& profile) const {
  std::size_t index = 0;
  for (int i = 0; i < num_players(); ++i) {
    index += static_cast<std::size_t>(profile.actions[i]) * strides_[i];
  }
  return index;
}

ActionProfile Game::profile_at(std::size_t index) const {
  ActionProfile profile;
  profile.actions.resize(num_players());
  for (int i = 0; i < num_players(); ++i) {
    profile.actions[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return profile;
}

std::vector<std::string> Game::labels(const ActionProfile& profile) const {
  std::vector<std::string> out;
  out.reserve(profile.actions.size());
  for (int i = 0; i < num_players(); ++i) {
    out.push_back(actions_[i][profile.actions[i]]);
  }
  return out;
}

std::string Game::profile_string(const ActionProfile& profile) const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) out << ',';
    out << actions_[i][profile.actions[i]];
  }
  out << ')';
  return out.str();
}

std::optional<int> Game::action_index(int player,
                                      std::string_view label) const {
  const auto& list = actions_[player];
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k] == label) return static_cast<int>(k);
  }
  return std::nullopt;
}

SymmetryVerdict is_symmetric(const Game& game) {
  if (!game.common_actions()) {
    return {false, SymmetryViolation{"players have differing action sets",
                                     std::nullopt, std::nullopt, std::nullopt}};
  }
  const int n = game.num_players();
  for (int k = 0; k + 1 < n; ++k) {
    const Permutation tau = Permutation::adjacent_transposition(n, k);
    for (std::size_t index = 0; index < game.num_profiles(); ++index) {
      const ActionProfile profile = game.profile_at(index);
      ActionProfile permuted;
      permuted.actions.resize(n);
      for (int j = 0; j < n; ++j) permuted.actions[j] = profile.actions[tau(j)];
      const std::size_t permuted_index = game.index_of(permuted);
      for (int i = 0; i < n; ++i) {
        // Adjacent transpositions are self-inverse, so tau^{-1}(i) = tau(i).
        if (game.payoff(index, i) != game.payoff(permuted_index, tau(i))) {
          return {false, SymmetryViolation{"payoff not invariant", tau, profile, i}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void require_common_actions(const Game& game, const char* operation) {
  if (!game.common_actions()) {
    throw DifferentActionSets(std::string(operation) +
                              " requires all players to share one action list");
  }
}

}  // namespace

std::vector<ActionProfile> diagonal(const Game& game) {
  require_common_actions(game, "diagonal");
  std::vector<ActionProfile> result;
  result.reserve(game.num_actions(0));
  for (int a = 0; a < game.num_actions(0); ++a) {
    result.push_back(ActionProfile{std::vector<int>(game.num_players(), a)});
  }
  return result;
}

std::vector<int> sr_justifiable_actions(const Game& game) {
  require_common_actions(game, "sr_justifiable_actions");
  const int m = game.num_actions(0);
  const int n = game.num_players();
  std::vector<std::size_t> diag_index(m);
  for (int a = 0; a < m; ++a) {
    diag_index[a] = game.index_of(ActionProfile{std::vector<int>(n, a)});
  }
  std::vector<int> result;
  for (int star = 0; star < m; ++star) {
    bool justifiable = true;
    for (int i = 0; i < n && justifiable; ++i) {
      for (int a = 0; a < m; ++a) {
        if (game.payoff(diag_index[star], i) < game.payoff(diag_index[a], i)) {
          justifiable = false;
          break;
        }
      }
    }
    if (justifiable) result.push_back(star);
  }
  return result;
}

std::vector<ActionProfile> superrational_profiles(const Game& game) {
  require_common_actions(game, "superrational_profiles");
  const std::vector<ActionProfile> diag = diagonal(game);
  std::vector<ActionProfile> result;
  for (const ActionProfile& candidate : diag) {
    bool best = true;
    for (int i = 0; i < game.num_players() && best; ++i) {
      for (const ActionProfile& other : diag) {
        if (game.payoff(candidate, i) < game.payoff(other, i)) {
          best = false;
          break;
        }
      }
    }
    if (best) result.push_back(candidate);
  }
  return result;
}

std::vector<ActionProfile> pure_nash(const Game& game) {
  const int n = game.num_players();
  std::vector<ActionProfile> result;
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile profile = game.profile_at(index);
    bool equilibrium = true;
    for (int i = 0; i < n && equilibrium; ++i) {
      const std::size_t base = index - profile.actions[i] * game.stride(i);
      for (int a = 0; a < game.num_actions(i); ++a) {
        if (game.payoff(index, i) < game.payoff(base + a * game.stride(i), i)) {
          equilibrium = false;
          break;
        }
      }
    }
    if (equilibrium) result.push_back(profile);
  }
  return result;
}

}  // namespace srgt
