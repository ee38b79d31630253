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

#ifndef SRGT_MIXED_HPP_
#define SRGT_MIXED_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "srgt/game.hpp"
#include "srgt/kernels.hpp"
#include "srgt/rational.hpp"

namespace srgt {

// A probability vector over one player's action list, float64 representation.
struct MixedStrategy {
  std::vector<double> probs;

  bool operator==(const MixedStrategy&) const = default;
};

// Exact-rational representation of the same thing.
struct ExactMixedStrategy {
  std::vector<Rat> probs;

  bool operator==(const ExactMixedStrategy&) const = default;
};

// Lexicographic; used for deterministic set-valued results.
bool lex_less(const ExactMixedStrategy& a, const ExactMixedStrategy& b);

// Entries >= 0 and |sum - 1| <= tol.
bool is_simplex_point(std::span<const double> probs, double tol = 1e-12);
// Entries >= 0 and sum exactly 1.
bool is_simplex_point(std::span<const Rat> probs);

MixedStrategy to_float(const ExactMixedStrategy& strategy);
ExactMixedStrategy dirac_strategy(int num_actions, int action);

// E pi_i(sigma) = sum over profiles of payoff * product of coordinate
// probabilities. Exact when every strategy is exact. Throws
// DimensionMismatch when the profile does not match the game.
Rat expected_payoff(const Game& game,
                    const std::vector<ExactMixedStrategy>& profile, int player);
double expected_payoff(const Game& game,
                       const std::vector<MixedStrategy>& profile, int player);

// Expected payoff when every player uses the same strategy. Throws
// DifferentActionSets when the players' action lists differ.
Rat diagonal_expected_payoff(const Game& game, const ExactMixedStrategy& sigma,
                             int player);
double diagonal_expected_payoff(const Game& game, const MixedStrategy& sigma,
                                int player);

// One player's diagonal expected payoff as a polynomial in the common
// strategy's coordinates, collected by monomial. With m actions and n
// players this turns m^n profile terms into at most C(n+m-1, m-1) monomials
// and is the form the batch kernels evaluate.
class DiagonalPoly {
 public:
  DiagonalPoly(const Game& game, int player);

  int num_vars() const { return num_vars_; }
  kernels::PolyView view() const {
    return {weights_.data(), exponents_.data(), weights_.size(),
            static_cast<std::size_t>(num_vars_)};
  }

  // Scalar reference evaluation (same operation order as the kernels).
  double eval(std::span<const double> x) const;
  // Kernel-dispatched batch evaluation; xs is SoA with stride `count`.
  void eval_batch(const double* xs, std::size_t count, double* out) const;
  std::vector<double> gradient(std::span<const double> x) const;

 private:
  int num_vars_;
  std::vector<double> weights_;
  std::vector<std::uint8_t> exponents_;  // row-major, monomials x num_vars
};

}  // namespace srgt

#endif  // SRGT_MIXED_HPP_
