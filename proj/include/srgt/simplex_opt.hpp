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

#ifndef SRGT_SIMPLEX_OPT_HPP_
#define SRGT_SIMPLEX_OPT_HPP_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "srgt/game.hpp"
#include "srgt/mixed.hpp"

namespace srgt {

struct OptimizerConfig {
  double tolerance = 1e-9;       // stationarity and value tolerance
  int grid_points_per_dim = 101; // seeding grid resolution
  int multistarts = 32;          // random restarts on top of the grid maxima
  int max_iters = 10000;         // ascent iteration cap per start
  unsigned int rng_seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> point);

// Visits every grid point {k_v / (points_per_dim - 1)} with sum 1. The
// callback receives the coordinate vector; enumeration order is fixed.
void for_each_simplex_grid_point(
    int dims, int points_per_dim,
    const std::function<void(const std::vector<double>&)>& visit);

std::vector<double> random_simplex_point(int dims, std::mt19937_64& rng);

enum class SRMixedStatus { found, empty };

struct Maximizer {
  MixedStrategy strategy;
  double value = 0.0;
  double stationarity = 0.0;  // max-norm of the projected gradient
};

// Per-player maximum of the diagonal expected payoff; reported for games
// that are not symmetric, where the players' objectives can disagree.
struct PlayerDiagonalMax {
  int player = 0;
  MixedStrategy argmax;
  double value = 0.0;
};

struct SRMixedReport {
  SRMixedStatus status = SRMixedStatus::found;
  // Distinct local maximizers within tolerance of the best value, clustered
  // at 1e-6 in max-norm, deterministic order.
  std::vector<Maximizer> maximizers;
  double best_value = 0.0;
  // best_value minus the best raw grid value: certifies that ascent only
  // improved on the seeding sweep.
  double grid_gap = 0.0;
  // False when some retained run exhausted max_iters with the projected
  // gradient still above tolerance.
  bool converged = true;
  // Non-symmetric games only: each player's own diagonal maximum.
  std::vector<PlayerDiagonalMax> per_player;
  // Non-symmetric games only: max over sigma of min_i(E_i(sigma) - M_i).
  // Zero within the emptiness tolerance means a common maximizer exists.
  double consensus_gap = 0.0;
  std::vector<std::string> notes;
};

// Decision tolerance for emptiness on non-symmetric games (minimax
// reformulation); reported gaps let callers tighten the call by hand.
inline constexpr double kEmptinessTol = 1e-6;

// Maximizes the diagonal expected payoff over the simplex: grid seeding plus
// projected-gradient ascent from every grid maximum and `multistarts` random
// seeds. Symmetric games always yield status `found`. For non-symmetric
// common-action games the per-player maxima are computed separately and
// status is `empty` unless one strategy attains all of them within
// kEmptinessTol. Throws DifferentActionSets.
SRMixedReport superrational_mixed(const Game& game,
                                  const OptimizerConfig& config = {});

}  // namespace srgt

#endif  // SRGT_SIMPLEX_OPT_HPP_
