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

#include "srgt/simplex_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "srgt/errors.hpp"

namespace srgt {

void OptimizerConfig::validate() const {
  if (!(tolerance > 0)) {
    throw std::invalid_argument("optimizer tolerance must be positive");
  }
  if (grid_points_per_dim < 2) {
    throw std::invalid_argument("grid_points_per_dim must be at least 2");
  }
  if (multistarts < 1) {
    throw std::invalid_argument("multistarts must be at least 1");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }
}

std::vector<double> project_to_simplex(std::vector<double> point) {
  const int n = static_cast<int>(point.size());
  std::vector<double> sorted = point;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (int j = 0; j < n; ++j) {
    cumulative += sorted[j];
    const double candidate = (1.0 - cumulative) / (j + 1);
    if (sorted[j] + candidate > 0.0) threshold = candidate;
  }
  for (double& x : point) x = std::max(x + threshold, 0.0);
  return point;
}

namespace {

void grid_recurse(int dims, int denominator, int coordinate, int remaining,
                  std::vector<double>& point,
                  const std::function<void(const std::vector<double>&)>& visit) {
  if (coordinate == dims - 1) {
    point[coordinate] = static_cast<double>(remaining) / denominator;
    visit(point);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    point[coordinate] = static_cast<double>(k) / denominator;
    grid_recurse(dims, denominator, coordinate + 1, remaining - k, point, visit);
  }
}

}  // namespace

void for_each_simplex_grid_point(
    int dims, int points_per_dim,
    const std::function<void(const std::vector<double>&)>& visit) {
  if (dims == 1) {
    const std::vector<double> point{1.0};
    visit(point);
    return;
  }
  std::vector<double> point(dims, 0.0);
  grid_recurse(dims, points_per_dim - 1, 0, points_per_dim - 1, point, visit);
}

std::vector<double> random_simplex_point(int dims, std::mt19937_64& rng) {
  // Exponential spacings, with an explicit uint64 -> double conversion so
  // the stream is identical on every platform.
  std::vector<double> point(dims);
  double sum = 0.0;
  for (double& x : point) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 +
                     0x1.0p-54;  // in (0,1)
    x = -std::log(u);
    sum += x;
  }
  for (double& x : point) x /= sum;
  return point;
}

namespace {

double linf_distance(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

std::vector<double> shifted(std::span<const double> x,
                            std::span<const double> g, double step) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + step * g[i];
  return out;
}

double projected_gradient_norm(const DiagonalPoly& poly,
                               const std::vector<double>& x) {
  const std::vector<double> pg =
      project_to_simplex(shifted(x, poly.gradient(x), 1.0));
  return linf_distance(pg, x);
}

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  double stationarity = 0.0;
  bool converged = false;
};

// Projected-gradient ascent with Armijo backtracking. Stops when the
// unit-step projected gradient drops below tolerance or the line search
// cannot make progress any more.
AscentResult ascend(const DiagonalPoly& poly, std::vector<double> x,
                    const OptimizerConfig& config) {
  constexpr double kArmijo = 1e-4;
  constexpr double kAlphaMin = 1e-18;
  constexpr double kAlphaMax = 1e6;
  double value = poly.eval(x);
  double alpha = 1.0;
  for (int iter = 0; iter < config.max_iters; ++iter) {
    const std::vector<double> grad = poly.gradient(x);
    const std::vector<double> unit_step =
        project_to_simplex(shifted(x, grad, 1.0));
    if (linf_distance(unit_step, x) <= config.tolerance) break;
    bool stepped = false;
    while (alpha >= kAlphaMin) {
      std::vector<double> candidate =
          project_to_simplex(shifted(x, grad, alpha));
      double move_sq = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = candidate[i] - x[i];
        move_sq += d * d;
      }
      if (move_sq == 0.0) break;  // projection clipped the step away: stationary
      const double candidate_value = poly.eval(candidate);
      if (candidate_value >= value + kArmijo * move_sq / alpha) {
        x = std::move(candidate);
        value = candidate_value;
        alpha = std::min(alpha * 1.5, kAlphaMax);
        stepped = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!stepped) break;
  }
  AscentResult result;
  result.stationarity = projected_gradient_norm(poly, x);
  result.converged = result.stationarity <= config.tolerance;
  result.value = poly.eval(x);
  result.x = std::move(x);
  return result;
}

struct SingleObjectiveResult {
  std::vector<AscentResult> runs;  // deterministic order
  double grid_best = -std::numeric_limits<double>::infinity();
  double best_value = -std::numeric_limits<double>::infinity();
};

SingleObjectiveResult maximize_diagonal(const DiagonalPoly& poly,
                                        const OptimizerConfig& config) {
  constexpr std::size_t kMaxGridSeeds = 32;
  const int dims = poly.num_vars();

  SingleObjectiveResult result;
  std::vector<std::vector<double>> seeds;

  // Grid sweep in batches; keep every tie for the running grid maximum.
  constexpr std::size_t kBatch = 1024;
  std::vector<double> xs(kBatch * dims);
  std::vector<double> values(kBatch);
  std::vector<std::vector<double>> batch_points;
  batch_points.reserve(kBatch);
  auto flush = [&]() {
    const std::size_t count = batch_points.size();
    if (count == 0) return;
    for (std::size_t k = 0; k < count; ++k) {
      for (int v = 0; v < dims; ++v) xs[v * count + k] = batch_points[k][v];
    }
    poly.eval_batch(xs.data(), count, values.data());
    for (std::size_t k = 0; k < count; ++k) {
      if (values[k] > result.grid_best + 1e-12) {
        result.grid_best = values[k];
        seeds.clear();
        seeds.push_back(batch_points[k]);
      } else if (values[k] >= result.grid_best - 1e-12 &&
                 seeds.size() < kMaxGridSeeds) {
        result.grid_best = std::max(result.grid_best, values[k]);
        seeds.push_back(batch_points[k]);
      }
    }
    batch_points.clear();
  };
  for_each_simplex_grid_point(dims, config.grid_points_per_dim,
                              [&](const std::vector<double>& point) {
                                batch_points.push_back(point);
                                if (batch_points.size() == kBatch) flush();
                              });
  flush();

  std::mt19937_64 rng(config.rng_seed);
  for (int s = 0; s < config.multistarts; ++s) {
    seeds.push_back(random_simplex_point(dims, rng));
  }

  // Sequential reduction in seed order keeps the outcome independent of any
  // internal parallelism.
  for (const std::vector<double>& seed : seeds) {
    result.runs.push_back(ascend(poly, seed, config));
    result.best_value = std::max(result.best_value, result.runs.back().value);
  }
  result.best_value = std::max(result.best_value, result.grid_best);
  return result;
}

bool lex_less(std::span<const double> a, std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Maximizer> cluster_maximizers(std::vector<AscentResult> runs,
                                          double best_value, double value_tol) {
  constexpr double kClusterRadius = 1e-6;
  std::erase_if(runs, [&](const AscentResult& r) {
    return r.value < best_value - value_tol;
  });
  std::sort(runs.begin(), runs.end(), [](const AscentResult& a,
                                         const AscentResult& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a.x, b.x);
  });
  std::vector<Maximizer> out;
  for (const AscentResult& run : runs) {
    const bool fresh = std::none_of(
        out.begin(), out.end(), [&](const Maximizer& kept) {
          return linf_distance(kept.strategy.probs, run.x) <= kClusterRadius;
        });
    if (fresh) {
      out.push_back(Maximizer{MixedStrategy{run.x}, run.value,
                              run.stationarity});
    }
  }
  return out;
}

// Derivative-free polish for the minimax objective: pairwise exchange moves
// on the simplex with a shrinking step.
template <typename Objective>
std::pair<std::vector<double>, double> pattern_search(
    const Objective& objective, std::vector<double> x, double initial_step) {
  const int dims = static_cast<int>(x.size());
  double best = objective(x);
  double step = initial_step;
  for (int iter = 0; iter < 500 && step > 1e-10; ++iter) {
    bool improved = false;
    std::vector<double> best_move;
    double best_move_value = best;
    for (int i = 0; i < dims; ++i) {
      for (int j = 0; j < dims; ++j) {
        if (i == j) continue;
        const double amount = std::min(step, x[j]);
        if (amount <= 0.0) continue;
        std::vector<double> candidate = x;
        candidate[i] += amount;
        candidate[j] -= amount;
        const double value = objective(candidate);
        if (value > best_move_value) {
          best_move_value = value;
          best_move = std::move(candidate);
          improved = true;
        }
      }
    }
    if (improved) {
      x = std::move(best_move);
      best = best_move_value;
    } else {
      step *= 0.5;
    }
  }
  return {std::move(x), best};
}

// Exact diagonal payoff coefficients for a 2-player 2-action game, as a
// polynomial in p = P(first action): c2 p^2 + c1 p + c0.
struct DiagonalQuadratic {
  Rat c2, c1, c0;
};

DiagonalQuadratic diagonal_quadratic(const Game& game, int player) {
  const auto pay = [&](int a, int b) {
    return game.payoff(ActionProfile{{a, b}}, player);
  };
  DiagonalQuadratic q;
  q.c2 = pay(0, 0) - pay(0, 1) - pay(1, 0) + pay(1, 1);
  q.c1 = pay(0, 1) + pay(1, 0) - 2 * pay(1, 1);
  q.c0 = pay(1, 1);
  return q;
}

}  // namespace

SRMixedReport superrational_mixed(const Game& game,
                                  const OptimizerConfig& config) {
  config.validate();
  if (!game.common_actions()) {
    throw DifferentActionSets(
        "superrational_mixed needs all players to share one action list");
  }

  SRMixedReport report;
  const SymmetryVerdict symmetric = is_symmetric(game);

  if (symmetric.symmetric) {
    // One shared objective; a maximum always exists on the compact simplex.
    const DiagonalPoly poly(game, 0);
    SingleObjectiveResult opt = maximize_diagonal(poly, config);
    report.status = SRMixedStatus::found;
    report.best_value = opt.best_value;
    report.grid_gap = opt.best_value - opt.grid_best;
    report.maximizers =
        cluster_maximizers(std::move(opt.runs), opt.best_value, config.tolerance);
    report.converged =
        std::all_of(report.maximizers.begin(), report.maximizers.end(),
                    [&](const Maximizer& m) {
                      return m.stationarity <= config.tolerance;
                    });
    return report;
  }

  // Non-symmetric: every player maximizes their own diagonal payoff; the
  // set of superrational strategies is nonempty only if someone attains all
  // of the individual maxima simultaneously.
  const int n = game.num_players();
  std::vector<DiagonalPoly> polys;
  polys.reserve(n);
  for (int i = 0; i < n; ++i) polys.emplace_back(game, i);

  std::vector<double> player_max(n);
  for (int i = 0; i < n; ++i) {
    SingleObjectiveResult opt = maximize_diagonal(polys[i], config);
    std::vector<Maximizer> tops =
        cluster_maximizers(std::move(opt.runs), opt.best_value, config.tolerance);
    player_max[i] = opt.best_value;
    report.per_player.push_back(
        PlayerDiagonalMax{i, tops.front().strategy, opt.best_value});
  }

  const auto consensus = [&](const std::vector<double>& x) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      worst = std::min(worst, polys[i].eval(x) - player_max[i]);
    }
    return worst;
  };

  // Grid sweep of the minimax objective, batched per player.
  const int dims = game.num_actions(0);
  constexpr std::size_t kBatch = 1024;
  std::vector<double> xs(kBatch * dims);
  std::vector<double> values(kBatch);
  std::vector<double> worst(kBatch);
  std::vector<std::vector<double>> batch_points;
  constexpr std::size_t kTopK = 8;
  std::vector<std::pair<double, std::vector<double>>> top;
  auto offer = [&](double value, const std::vector<double>& point) {
    top.emplace_back(value, point);
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (top.size() > kTopK) top.pop_back();
  };
  auto flush = [&]() {
    const std::size_t count = batch_points.size();
    if (count == 0) return;
    for (std::size_t k = 0; k < count; ++k) {
      for (int v = 0; v < dims; ++v) xs[v * count + k] = batch_points[k][v];
    }
    std::fill(worst.begin(), worst.begin() + count,
              std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i) {
      polys[i].eval_batch(xs.data(), count, values.data());
      for (std::size_t k = 0; k < count; ++k) {
        worst[k] = std::min(worst[k], values[k] - player_max[i]);
      }
    }
    for (std::size_t k = 0; k < count; ++k) offer(worst[k], batch_points[k]);
    batch_points.clear();
  };
  for_each_simplex_grid_point(dims, config.grid_points_per_dim,
                              [&](const std::vector<double>& point) {
                                batch_points.push_back(point);
                                if (batch_points.size() == kBatch) flush();
                              });
  flush();
  for (const PlayerDiagonalMax& pm : report.per_player) {
    offer(consensus(pm.argmax.probs), pm.argmax.probs);
  }

  const double step = 1.0 / (config.grid_points_per_dim - 1);
  std::vector<AscentResult> candidates;
  double best_gap = -std::numeric_limits<double>::infinity();
  for (const auto& [value, point] : top) {
    auto [polished, gap] = pattern_search(consensus, point, step);
    AscentResult run;
    run.value = gap;
    double stationarity = 0.0;
    for (int i = 0; i < n; ++i) {
      stationarity =
          std::max(stationarity, projected_gradient_norm(polys[i], polished));
    }
    run.stationarity = stationarity;
    run.converged = true;
    run.x = std::move(polished);
    candidates.push_back(std::move(run));
    best_gap = std::max(best_gap, gap);
  }
  report.consensus_gap = best_gap;

  if (best_gap >= -kEmptinessTol) {
    report.status = SRMixedStatus::found;
    std::vector<Maximizer> picks =
        cluster_maximizers(std::move(candidates), best_gap, kEmptinessTol);
    for (Maximizer& pick : picks) {
      // Report the attained payoff floor rather than the gap.
      double floor = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        floor = std::min(floor, polys[i].eval(pick.strategy.probs));
      }
      pick.value = floor;
      report.maximizers.push_back(std::move(pick));
    }
    report.best_value =
        report.maximizers.empty() ? 0.0 : report.maximizers.front().value;
  } else {
    report.status = SRMixedStatus::empty;
    report.best_value = 0.0;
  }

  // A strictly convex per-player diagonal payoff has its interior stationary
  // point at a minimum; flag it so nobody mistakes that point for the
  // reported maximum.
  if (n == 2 && game.num_actions(0) == 2) {
    for (int i = 0; i < n; ++i) {
      const DiagonalQuadratic q = diagonal_quadratic(game, i);
      if (q.c2 <= 0) continue;
      const Rat stationary = Rat(-q.c1) / (2 * q.c2);
      if (stationary > 0 && stationary < 1) {
        std::ostringstream note;
        note << "player " << i << ": diagonal payoff is strictly convex in p"
             << " = P(" << game.actions(i)[0] << "); its stationary point p = "
             << srgt::to_string(stationary)
             << " is a minimum, not a maximum; the maximum lies on the"
             << " boundary (see the reported argmax)";
        report.notes.push_back(note.str());
      }
    }
  }

  return report;
}

}  // namespace srgt
