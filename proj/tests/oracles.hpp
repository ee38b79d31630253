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

// Independent reference implementations and random-instance generators.
// Everything here recomputes results from first principles (full
// enumeration, direct summation) and stays off the library's code paths it
// is used to check.

#ifndef SRGT_TESTS_ORACLES_HPP_
#define SRGT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "srgt/game.hpp"
#include "srgt/mixed.hpp"

namespace srgt::oracles {

using Rng = std::mt19937_64;

inline Rat random_rational(Rng& rng, int max_abs_num = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline std::vector<std::string> action_labels(int m) {
  const std::vector<std::string> pool{"a", "b", "c", "d", "e"};
  return {pool.begin(), pool.begin() + m};
}

// Arbitrary payoffs; with several players/actions this is almost surely not
// symmetric.
inline Game random_game(Rng& rng, int n, int m) {
  std::size_t num_profiles = 1;
  for (int i = 0; i < n; ++i) num_profiles *= m;
  std::vector<Rat> payoffs;
  payoffs.reserve(num_profiles * n);
  for (std::size_t p = 0; p < num_profiles * n; ++p) {
    payoffs.push_back(random_rational(rng));
  }
  return Game::common(n, action_labels(m), std::move(payoffs));
}

inline Game random_game_mixed_counts(Rng& rng, const std::vector<int>& counts) {
  std::vector<std::vector<std::string>> actions;
  std::size_t num_profiles = 1;
  for (int m : counts) {
    actions.push_back(action_labels(m));
    num_profiles *= m;
  }
  std::vector<Rat> payoffs;
  for (std::size_t p = 0; p < num_profiles * counts.size(); ++p) {
    payoffs.push_back(random_rational(rng));
  }
  return Game(std::move(actions), std::move(payoffs));
}

// Random symmetric game: the payoff of a player depends only on their own
// action and the multiset of everyone else's actions.
inline Game random_symmetric_game(Rng& rng, int n, int m,
                                  int max_abs_num = 9, int max_den = 4) {
  std::map<std::pair<int, std::vector<int>>, Rat> table;
  std::size_t num_profiles = 1;
  for (int i = 0; i < n; ++i) num_profiles *= m;
  std::vector<Rat> payoffs(num_profiles * n);
  // Enumerate profiles by odometer so the oracle does not depend on the
  // library's profile indexing.
  std::vector<int> profile(n, 0);
  for (std::size_t index = 0;; ++index) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> others;
      for (int j = 0; j < n; ++j) {
        if (j != i) others.push_back(profile[j]);
      }
      std::sort(others.begin(), others.end());
      const auto key = std::make_pair(profile[i], others);
      auto it = table.find(key);
      if (it == table.end()) {
        it = table.emplace(key, random_rational(rng, max_abs_num, max_den))
                 .first;
      }
      payoffs[index * n + i] = it->second;
    }
    int pos = n - 1;
    while (pos >= 0 && profile[pos] == m - 1) profile[pos--] = 0;
    if (pos < 0) break;
    ++profile[pos];
  }
  return Game::common(n, action_labels(m), std::move(payoffs));
}

// Full-enumeration symmetry check over all n! permutations.
inline bool symmetric_full_enumeration(const Game& game) {
  if (!game.common_actions()) return false;
  const int n = game.num_players();
  for (const Permutation& tau : Permutation::all(n)) {
    const Permutation inv = tau.inverse();
    for (std::size_t index = 0; index < game.num_profiles(); ++index) {
      const ActionProfile profile = game.profile_at(index);
      ActionProfile permuted;
      permuted.actions.resize(n);
      for (int j = 0; j < n; ++j) permuted.actions[j] = profile.actions[tau(j)];
      for (int i = 0; i < n; ++i) {
        if (game.payoff(profile, i) != game.payoff(permuted, inv(i))) {
          return false;
        }
      }
    }
  }
  return true;
}

// Pure Nash via best-response sets: precompute, per opponent context, the
// best payoff; a profile is an equilibrium iff every player attains it.
inline std::vector<ActionProfile> pure_nash_oracle(const Game& game) {
  const int n = game.num_players();
  std::vector<ActionProfile> result;
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile profile = game.profile_at(index);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Rat best = game.payoff(profile, i);
      for (int a = 0; a < game.num_actions(i); ++a) {
        ActionProfile deviation = profile;
        deviation.actions[i] = a;
        best = std::max(best, game.payoff(deviation, i));
      }
      ok = game.payoff(profile, i) == best;
    }
    if (ok) result.push_back(profile);
  }
  return result;
}

// Expected payoff by direct odometer summation, exact.
inline Rat expected_payoff_oracle(const Game& game,
                                  const std::vector<ExactMixedStrategy>& profile,
                                  int player) {
  const int n = game.num_players();
  std::vector<int> actions(n, 0);
  Rat total = 0;
  while (true) {
    Rat weight = 1;
    for (int i = 0; i < n; ++i) weight *= profile[i].probs[actions[i]];
    total += weight * game.payoff(ActionProfile{actions}, player);
    int pos = n - 1;
    while (pos >= 0 && actions[pos] == game.num_actions(pos) - 1) {
      actions[pos--] = 0;
    }
    if (pos < 0) break;
    ++actions[pos];
  }
  return total;
}

// Float diagonal payoff by direct summation (no monomial collection).
inline double diagonal_value_oracle(const Game& game, int player,
                                    const std::vector<double>& sigma) {
  const int n = game.num_players();
  std::vector<int> actions(n, 0);
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int i = 0; i < n; ++i) weight *= sigma[actions[i]];
    total += to_double(game.payoff(ActionProfile{actions}, player)) * weight;
    int pos = n - 1;
    while (pos >= 0 && actions[pos] == game.num_actions(pos) - 1) {
      actions[pos--] = 0;
    }
    if (pos < 0) break;
    ++actions[pos];
  }
  return total;
}

// Dense simplex grid search plus a derivative-free pairwise-exchange polish,
// all on the direct-summation evaluator. Independent of the gradient-ascent
// path it is used to check.
inline double dense_grid_diagonal_max(const Game& game, int player,
                                      int points_per_dim = 1001) {
  const int m = game.num_actions(0);
  std::vector<std::pair<double, std::vector<double>>> top;
  const auto offer = [&](double value, const std::vector<double>& x) {
    top.emplace_back(value, x);
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (top.size() > 5) top.pop_back();
  };

  std::vector<int> counts(m, 0);
  const int denom = points_per_dim - 1;
  const std::function<void(int, int)> enumerate = [&](int coord, int left) {
    if (coord == m - 1) {
      counts[coord] = left;
      std::vector<double> x(m);
      for (int v = 0; v < m; ++v) {
        x[v] = static_cast<double>(counts[v]) / denom;
      }
      offer(diagonal_value_oracle(game, player, x), x);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      counts[coord] = k;
      enumerate(coord + 1, left - k);
    }
  };
  if (m == 1) return diagonal_value_oracle(game, player, {1.0});
  enumerate(0, denom);

  double best = top.front().first;
  for (const auto& [value, seed] : top) {
    std::vector<double> x = seed;
    double fx = value;
    double step = 1.0 / denom;
    while (step > 1e-12) {
      bool improved = false;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i == j || x[j] <= 0.0) continue;
          const double amount = std::min(step, x[j]);
          std::vector<double> candidate = x;
          candidate[i] += amount;
          candidate[j] -= amount;
          const double fc = diagonal_value_oracle(game, player, candidate);
          if (fc > fx) {
            x = std::move(candidate);
            fx = fc;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, fx);
  }
  return best;
}

inline ExactMixedStrategy random_exact_strategy(Rng& rng, int m) {
  // Random nonnegative rationals, exactly normalized.
  std::vector<Rat> raw(m);
  Rat sum = 0;
  for (Rat& p : raw) {
    std::uniform_int_distribution<int> num(0, 8);
    std::uniform_int_distribution<int> den(1, 4);
    p = Rat(num(rng), den(rng));
    sum += p;
  }
  if (sum == 0) {
    raw[0] = 1;
    sum = 1;
  }
  for (Rat& p : raw) p /= sum;
  return ExactMixedStrategy{std::move(raw)};
}

}  // namespace srgt::oracles

#endif  // SRGT_TESTS_ORACLES_HPP_
