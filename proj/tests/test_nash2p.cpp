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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "srgt/errors.hpp"
#include "srgt/nash2p.hpp"

using namespace srgt;

namespace {

// Exact best-response scan used to verify every returned equilibrium.
bool no_improving_pure_deviation(const Game& game, const MixedEquilibrium& eq) {
  for (int player = 0; player < 2; ++player) {
    const ExactMixedStrategy& own = player == 0 ? eq.row : eq.col;
    const ExactMixedStrategy& other = player == 0 ? eq.col : eq.row;
    Rat current = 0;
    for (int a = 0; a < game.num_actions(player); ++a) {
      for (int b = 0; b < game.num_actions(1 - player); ++b) {
        ActionProfile p{{0, 0}};
        p.actions[player] = a;
        p.actions[1 - player] = b;
        current += own.probs[a] * other.probs[b] * game.payoff(p, player);
      }
    }
    for (int a = 0; a < game.num_actions(player); ++a) {
      Rat deviation = 0;
      for (int b = 0; b < game.num_actions(1 - player); ++b) {
        ActionProfile p{{0, 0}};
        p.actions[player] = a;
        p.actions[1 - player] = b;
        deviation += other.probs[b] * game.payoff(p, player);
      }
      if (deviation > current) return false;
    }
  }
  return true;
}

bool contains(const MixedNashResult& result, const std::vector<Rat>& row,
              const std::vector<Rat>& col) {
  return std::any_of(result.equilibria.begin(), result.equilibria.end(),
                     [&](const MixedEquilibrium& eq) {
                       return eq.row.probs == row && eq.col.probs == col;
                     });
}

}  // namespace

TEST_CASE("battle of the sexes has the textbook mixed equilibrium") {
  const MixedNashResult result = mixed_nash_2p(fixtures::battle_of_sexes());
  CHECK_FALSE(result.degenerate);
  CHECK(result.equilibria.size() == 3);
  CHECK(contains(result, {Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}));
  CHECK(contains(result, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}));
  CHECK(contains(result, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}));
}

TEST_CASE("anti-coordination has two pure and one uniform equilibrium") {
  const MixedNashResult result = mixed_nash_2p(fixtures::anti_coordination());
  CHECK_FALSE(result.degenerate);
  CHECK(result.equilibria.size() == 3);
  CHECK(contains(result, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}));
  CHECK(contains(result, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}));
  CHECK(contains(result, {Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("prisoner's dilemma has exactly the pure defect equilibrium") {
  const MixedNashResult result = mixed_nash_2p(fixtures::prisoners_dilemma());
  CHECK_FALSE(result.degenerate);
  REQUIRE(result.equilibria.size() == 1);
  CHECK(result.equilibria[0].row.probs == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(result.equilibria[0].col.probs == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("two-player platonia is degenerate with vertex representatives") {
  const MixedNashResult result = mixed_nash_2p(fixtures::platonia(2));
  CHECK(result.degenerate);
  CHECK(contains(result, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}));
  CHECK(contains(result, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}));
  CHECK(contains(result, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}));
  for (const MixedEquilibrium& eq : result.equilibria) {
    CHECK(no_improving_pure_deviation(fixtures::platonia(2), eq));
  }
  // All-send is not an equilibrium: a sender by deviating earns the prize.
  CHECK_FALSE(contains(result, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}));
}

TEST_CASE("support enumeration needs two players") {
  CHECK_THROWS_AS(mixed_nash_2p(fixtures::platonia(3)), NotTwoPlayers);
  CHECK_THROWS_AS(mixed_nash_2p(Game({{"x"}}, {Rat(0)})), NotTwoPlayers);
}

TEST_CASE("every returned equilibrium survives an exact deviation scan") {
  oracles::Rng rng(37);
  int equilibria_seen = 0;
  for (int round = 0; round < 250; ++round) {
    std::uniform_int_distribution<int> acts(1, 3);
    const Game g = oracles::random_game_mixed_counts(rng, {acts(rng), acts(rng)});
    const MixedNashResult result = mixed_nash_2p(g);
    for (const MixedEquilibrium& eq : result.equilibria) {
      CHECK(no_improving_pure_deviation(g, eq));
      CHECK(is_simplex_point(eq.row.probs));
      CHECK(is_simplex_point(eq.col.probs));
      ++equilibria_seen;
    }
    // Support enumeration finds every pure equilibrium.
    for (const ActionProfile& p : pure_nash(g)) {
      std::vector<Rat> row(g.num_actions(0), Rat(0));
      std::vector<Rat> col(g.num_actions(1), Rat(0));
      row[p.actions[0]] = 1;
      col[p.actions[1]] = 1;
      CHECK(contains(result, row, col));
    }
  }
  CHECK(equilibria_seen > 250);  // odd-number theorem: at least one per game
}

TEST_CASE("results are deterministically ordered") {
  const MixedNashResult a = mixed_nash_2p(fixtures::anti_coordination());
  const MixedNashResult b = mixed_nash_2p(fixtures::anti_coordination());
  REQUIRE(a.equilibria.size() == b.equilibria.size());
  for (std::size_t i = 0; i < a.equilibria.size(); ++i) {
    CHECK(a.equilibria[i] == b.equilibria[i]);
  }
  for (std::size_t i = 1; i < a.equilibria.size(); ++i) {
    CHECK(lex_less(a.equilibria[i - 1].row, a.equilibria[i].row));
  }
}
