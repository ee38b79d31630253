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

#include "srgt/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "srgt/errors.hpp"

namespace srgt {

bool is_simplex_point(std::span<const double> probs, double tol) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= tol;
}

bool is_simplex_point(std::span<const Rat> probs) {
  Rat sum = 0;
  for (const Rat& p : probs) {
    if (p < 0) return false;
    sum += p;
  }
  return sum == 1;
}

MixedStrategy to_float(const ExactMixedStrategy& strategy) {
  MixedStrategy out;
  out.probs.reserve(strategy.probs.size());
  for (const Rat& p : strategy.probs) out.probs.push_back(to_double(p));
  return out;
}

ExactMixedStrategy dirac_strategy(int num_actions, int action) {
  ExactMixedStrategy out;
  out.probs.assign(num_actions, Rat(0));
  out.probs[action] = 1;
  return out;
}

bool lex_less(const ExactMixedStrategy& a, const ExactMixedStrategy& b) {
  return std::lexicographical_compare(a.probs.begin(), a.probs.end(),
                                      b.probs.begin(), b.probs.end());
}

namespace {

template <typename Strategy>
void check_dimensions(const Game& game, const std::vector<Strategy>& profile,
                      int player) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw DimensionMismatch("profile has " + std::to_string(profile.size()) +
                            " strategies for " +
                            std::to_string(game.num_players()) + " players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(profile[i].probs.size()) != game.num_actions(i)) {
      throw DimensionMismatch("strategy " + std::to_string(i) + " has " +
                              std::to_string(profile[i].probs.size()) +
                              " entries, expected " +
                              std::to_string(game.num_actions(i)));
    }
  }
  if (player < 0 || player >= game.num_players()) {
    throw DimensionMismatch("player index " + std::to_string(player) +
                            " out of range");
  }
}

}  // namespace

Rat expected_payoff(const Game& game,
                    const std::vector<ExactMixedStrategy>& profile,
                    int player) {
  check_dimensions(game, profile, player);
  Rat total = 0;
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile a = game.profile_at(index);
    Rat weight = 1;
    for (int k = 0; k < game.num_players(); ++k) {
      weight *= profile[k].probs[a.actions[k]];
      if (weight == 0) break;
    }
    if (weight != 0) total += game.payoff(index, player) * weight;
  }
  return total;
}

double expected_payoff(const Game& game,
                       const std::vector<MixedStrategy>& profile, int player) {
  check_dimensions(game, profile, player);
  double total = 0.0;
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile a = game.profile_at(index);
    double weight = 1.0;
    for (int k = 0; k < game.num_players(); ++k) {
      weight *= profile[k].probs[a.actions[k]];
    }
    total += to_double(game.payoff(index, player)) * weight;
  }
  return total;
}

namespace {

void require_common(const Game& game) {
  if (!game.common_actions()) {
    throw DifferentActionSets(
        "diagonal payoffs need all players to share one action list");
  }
}

}  // namespace

Rat diagonal_expected_payoff(const Game& game, const ExactMixedStrategy& sigma,
                             int player) {
  require_common(game);
  return expected_payoff(
      game, std::vector<ExactMixedStrategy>(game.num_players(), sigma), player);
}

double diagonal_expected_payoff(const Game& game, const MixedStrategy& sigma,
                                int player) {
  require_common(game);
  return expected_payoff(
      game, std::vector<MixedStrategy>(game.num_players(), sigma), player);
}

DiagonalPoly::DiagonalPoly(const Game& game, int player) {
  require_common(game);
  num_vars_ = game.num_actions(0);
  // Profiles with the same action counts collapse into one monomial.
  std::map<std::vector<std::uint8_t>, Rat> monomials;
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile a = game.profile_at(index);
    std::vector<std::uint8_t> counts(num_vars_, 0);
    for (int k = 0; k < game.num_players(); ++k) ++counts[a.actions[k]];
    monomials[counts] += game.payoff(index, player);
  }
  for (const auto& [counts, weight] : monomials) {
    weights_.push_back(to_double(weight));
    exponents_.insert(exponents_.end(), counts.begin(), counts.end());
  }
}

double DiagonalPoly::eval(std::span<const double> x) const {
  double out;
  // SoA with count 1 is just the point itself.
  kernels::eval_batch_scalar(view(), x.data(), 1, &out);
  return out;
}

void DiagonalPoly::eval_batch(const double* xs, std::size_t count,
                              double* out) const {
  kernels::eval_batch(view(), xs, count, out);
}

std::vector<double> DiagonalPoly::gradient(std::span<const double> x) const {
  std::vector<double> grad(num_vars_, 0.0);
  const std::size_t num_monomials = weights_.size();
  for (std::size_t m = 0; m < num_monomials; ++m) {
    const std::uint8_t* exps = exponents_.data() + m * num_vars_;
    for (int v = 0; v < num_vars_; ++v) {
      if (exps[v] == 0) continue;
      double term = weights_[m] * exps[v];
      for (int u = 0; u < num_vars_; ++u) {
        const std::uint8_t e = u == v ? exps[u] - 1 : exps[u];
        for (std::uint8_t i = 0; i < e; ++i) term *= x[u];
      }
      grad[v] += term;
    }
  }
  return grad;
}

}  // namespace srgt
