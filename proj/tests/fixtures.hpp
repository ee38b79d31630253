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

#ifndef SRGT_TESTS_FIXTURES_HPP_
#define SRGT_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "srgt/game.hpp"
#include "srgt/mixed.hpp"

namespace srgt::fixtures {

// 2-player game from a row-major table: rows[a0][a1] = {payoff0, payoff1}.
inline Game table_game(std::vector<std::string> row_actions,
                       std::vector<std::string> col_actions,
                       std::vector<std::vector<std::pair<int, int>>> rows) {
  std::vector<Rat> payoffs;
  for (const auto& row : rows) {
    for (const auto& [p0, p1] : row) {
      payoffs.emplace_back(p0);
      payoffs.emplace_back(p1);
    }
  }
  return Game({std::move(row_actions), std::move(col_actions)},
              std::move(payoffs));
}

inline Game prisoners_dilemma() {
  return table_game({"C", "D"}, {"C", "D"},
                    {{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}});
}

// Non-symmetric 3-action coordination game: two equally good diagonal
// outcomes plus a worse third one, with unequal player payoffs.
inline Game asym_coordination() {
  return table_game({"a", "b", "c"}, {"a", "b", "c"},
                    {{{2, 3}, {0, 0}, {0, 0}},
                     {{0, 0}, {2, 3}, {0, 0}},
                     {{0, 0}, {0, 0}, {2, 2}}});
}

// Symmetric variant of the same shape: two tied best diagonal outcomes.
inline Game two_peak_coordination() {
  return table_game({"a", "b", "c"}, {"a", "b", "c"},
                    {{{3, 3}, {0, 0}, {0, 0}},
                     {{0, 0}, {3, 3}, {0, 0}},
                     {{0, 0}, {0, 0}, {2, 2}}});
}

inline Game battle_of_sexes() {
  return table_game({"Box", "Ballet"}, {"Box", "Ballet"},
                    {{{2, 1}, {0, 0}}, {{0, 0}, {1, 2}}});
}

// Non-symmetric game whose only superrational profile is dominated by an
// off-diagonal profile.
inline Game dominated_diagonal() {
  return table_game({"a", "b"}, {"a", "b"}, {{{0, 0}, {0, 0}}, {{2, 2}, {1, 1}}});
}

// Symmetric anti-coordination: players want to mismatch.
inline Game anti_coordination() {
  return table_game({"a", "b"}, {"a", "b"}, {{{0, 0}, {1, 1}}, {{1, 1}, {0, 0}}});
}

inline Game chicken() {
  return table_game({"S", "Y"}, {"S", "Y"},
                    {{{-10, -10}, {1, -1}}, {{-1, 1}, {0, 0}}});
}

// n players send (S) or don't send (D) a letter; a lone sender wins
// 1,000,000, everyone else always gets 0.
inline Game platonia(int n) {
  const std::vector<std::string> actions{"S", "D"};
  const std::size_t num_profiles = std::size_t{1} << n;
  std::vector<Rat> payoffs(num_profiles * n, Rat(0));
  for (std::size_t index = 0; index < num_profiles; ++index) {
    int senders = 0;
    int sender = -1;
    for (int i = 0; i < n; ++i) {
      // Player 0 owns the most significant digit; action 0 is "S".
      if (((index >> (n - 1 - i)) & 1u) == 0) {
        ++senders;
        sender = i;
      }
    }
    if (senders == 1) payoffs[index * n + sender] = 1000000;
  }
  return Game::common(n, actions, std::move(payoffs));
}

}  // namespace srgt::fixtures

#endif  // SRGT_TESTS_FIXTURES_HPP_
