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

#include "srgt/nash2p.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "srgt/errors.hpp"

namespace srgt {

namespace {

// Dense exact linear solver, any shape. rows x cols matrix, augmented with
// the right-hand side during elimination.
struct LinearOutcome {
  enum Kind { kUnique, kInconsistent, kUnderdetermined } kind = kInconsistent;
  std::vector<Rat> solution;  // valid when kUnique
  int rank = 0;
};

LinearOutcome solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(b[rank], b[pivot]);
    const Rat lead = a[rank][col];
    for (int c = col; c < cols; ++c) a[rank][c] /= lead;
    b[rank] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (b[r] != 0) return {LinearOutcome::kInconsistent, {}, rank};
  }
  if (rank < cols) return {LinearOutcome::kUnderdetermined, {}, rank};
  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
  return {LinearOutcome::kUnique, std::move(x), rank};
}

// Candidate strategies for `mover`'s opponent: distributions over `support`
// that make `mover` exactly indifferent across `mover_support`. When the
// system is underdetermined, returns the basic solutions (vertices of the
// solution polytope) and sets `underdetermined`.
std::vector<std::vector<Rat>> opponent_candidates(
    const Game& game, int mover, const std::vector<int>& mover_support,
    const std::vector<int>& support, bool* underdetermined) {
  const int k = static_cast<int>(support.size());
  const auto payoff = [&](int own, int other) {
    ActionProfile profile{{0, 0}};
    profile.actions[mover] = own;
    profile.actions[1 - mover] = other;
    return game.payoff(profile, mover);
  };

  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (std::size_t i = 0; i + 1 < mover_support.size(); ++i) {
    std::vector<Rat> row(k);
    for (int c = 0; c < k; ++c) {
      row[c] = payoff(mover_support[i], support[c]) -
               payoff(mover_support[i + 1], support[c]);
    }
    rows.push_back(std::move(row));
    rhs.push_back(Rat(0));
  }
  rows.push_back(std::vector<Rat>(k, Rat(1)));
  rhs.push_back(Rat(1));

  const LinearOutcome base = solve_exact(rows, rhs);
  std::vector<std::vector<Rat>> out;
  if (base.kind == LinearOutcome::kUnique) {
    out.push_back(base.solution);
    return out;
  }
  if (base.kind == LinearOutcome::kInconsistent) return out;

  *underdetermined = true;
  // Pin free variables at zero in every possible way; the feasible basic
  // solutions are the vertices of the solution polytope.
  const int nullity = k - base.rank;
  std::vector<int> choice(nullity);
  const auto try_subset = [&](const std::vector<int>& zeros) {
    std::vector<std::vector<Rat>> pinned_rows = rows;
    std::vector<Rat> pinned_rhs = rhs;
    for (int z : zeros) {
      std::vector<Rat> row(k, Rat(0));
      row[z] = 1;
      pinned_rows.push_back(std::move(row));
      pinned_rhs.push_back(Rat(0));
    }
    const LinearOutcome pinned = solve_exact(pinned_rows, pinned_rhs);
    if (pinned.kind == LinearOutcome::kUnique) out.push_back(pinned.solution);
  };
  // Enumerate ascending index subsets of size `nullity`.
  std::vector<int> subset;
  const std::function<void(int)> recurse = [&](int from) {
    if (static_cast<int>(subset.size()) == nullity) {
      try_subset(subset);
      return;
    }
    for (int i = from; i < k; ++i) {
      subset.push_back(i);
      recurse(i + 1);
      subset.pop_back();
    }
  };
  recurse(0);
  return out;
}

bool lex_less_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

MixedNashResult mixed_nash_2p(const Game& game) {
  if (game.num_players() != 2) {
    throw NotTwoPlayers("mixed_nash_2p needs exactly 2 players, got " +
                        std::to_string(game.num_players()));
  }
  const int m0 = game.num_actions(0);
  const int m1 = game.num_actions(1);

  const auto expected = [&](int player, int own, const std::vector<Rat>& other) {
    Rat value = 0;
    const int other_count = player == 0 ? m1 : m0;
    for (int b = 0; b < other_count; ++b) {
      if (other[b] == 0) continue;
      ActionProfile profile{{0, 0}};
      profile.actions[player] = own;
      profile.actions[1 - player] = b;
      value += game.payoff(profile, player) * other[b];
    }
    return value;
  };

  // Exact best-response verification: every action played with positive
  // probability must attain the maximum expected payoff.
  const auto is_equilibrium = [&](const std::vector<Rat>& sigma0,
                                  const std::vector<Rat>& sigma1) {
    for (int player = 0; player < 2; ++player) {
      const std::vector<Rat>& own = player == 0 ? sigma0 : sigma1;
      const std::vector<Rat>& other = player == 0 ? sigma1 : sigma0;
      const int count = player == 0 ? m0 : m1;
      Rat best;
      bool first = true;
      std::vector<Rat> values(count);
      for (int a = 0; a < count; ++a) {
        values[a] = expected(player, a, other);
        if (first || values[a] > best) {
          best = values[a];
          first = false;
        }
      }
      for (int a = 0; a < count; ++a) {
        if (own[a] > 0 && values[a] != best) return false;
      }
    }
    return true;
  };

  const auto feasible = [&](const std::vector<Rat>& sigma) {
    Rat sum = 0;
    for (const Rat& p : sigma) {
      if (p < 0) return false;
      sum += p;
    }
    return sum == 1;
  };

  const auto expand = [](const std::vector<Rat>& compact,
                         const std::vector<int>& support, int full) {
    std::vector<Rat> out(full, Rat(0));
    for (std::size_t i = 0; i < support.size(); ++i) {
      out[support[i]] = compact[i];
    }
    return out;
  };

  std::set<std::pair<std::vector<Rat>, std::vector<Rat>>> found;
  bool degenerate = false;

  std::vector<int> support0, support1;
  for (unsigned mask0 = 1; mask0 < (1u << m0); ++mask0) {
    support0.clear();
    for (int a = 0; a < m0; ++a) {
      if (mask0 & (1u << a)) support0.push_back(a);
    }
    for (unsigned mask1 = 1; mask1 < (1u << m1); ++mask1) {
      support1.clear();
      for (int b = 0; b < m1; ++b) {
        if (mask1 & (1u << b)) support1.push_back(b);
      }

      bool under0 = false;
      bool under1 = false;
      // Player 0's indifference pins sigma1; player 1's pins sigma0.
      const std::vector<std::vector<Rat>> sigma1_candidates =
          opponent_candidates(game, 0, support0, support1, &under1);
      if (sigma1_candidates.empty()) continue;
      const std::vector<std::vector<Rat>> sigma0_candidates =
          opponent_candidates(game, 1, support1, support0, &under0);
      if (sigma0_candidates.empty()) continue;
      const bool pair_underdetermined = under0 || under1;

      for (const std::vector<Rat>& compact0 : sigma0_candidates) {
        if (!feasible(compact0)) continue;
        const std::vector<Rat> sigma0 = expand(compact0, support0, m0);
        for (const std::vector<Rat>& compact1 : sigma1_candidates) {
          if (!feasible(compact1)) continue;
          const std::vector<Rat> sigma1 = expand(compact1, support1, m1);
          // Unique-solution candidates must realize the support exactly;
          // basic solutions of a degenerate system may sit on a sub-face
          // (the sub-support pair re-finds them, and the set dedupes).
          if (!pair_underdetermined) {
            bool exact_support = true;
            for (std::size_t i = 0; i < support0.size() && exact_support; ++i) {
              exact_support = sigma0[support0[i]] > 0;
            }
            for (std::size_t i = 0; i < support1.size() && exact_support; ++i) {
              exact_support = sigma1[support1[i]] > 0;
            }
            if (!exact_support) continue;
          }
          if (!is_equilibrium(sigma0, sigma1)) continue;
          found.insert({sigma0, sigma1});
          // A verified equilibrium out of an underdetermined indifference
          // system witnesses a positive-dimensional equilibrium set.
          if (pair_underdetermined) degenerate = true;
        }
      }
    }
  }

  MixedNashResult result;
  result.degenerate = degenerate;
  for (const auto& [sigma0, sigma1] : found) {
    result.equilibria.push_back(
        MixedEquilibrium{ExactMixedStrategy{sigma0}, ExactMixedStrategy{sigma1}});
  }
  std::sort(result.equilibria.begin(), result.equilibria.end(),
            [](const MixedEquilibrium& a, const MixedEquilibrium& b) {
              if (a.row.probs != b.row.probs) {
                return lex_less_vec(a.row.probs, b.row.probs);
              }
              return lex_less_vec(a.col.probs, b.col.probs);
            });
  return result;
}

}  // namespace srgt
