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
#include "srgt/game.hpp"

using namespace srgt;

namespace {

std::vector<std::string> profile_strings(const Game& game,
                                         const std::vector<ActionProfile>& ps) {
  std::vector<std::string> out;
  for (const ActionProfile& p : ps) out.push_back(game.profile_string(p));
  return out;
}

std::vector<std::string> action_names(const Game& game,
                                      const std::vector<int>& actions) {
  std::vector<std::string> out;
  for (int a : actions) out.push_back(game.actions(0)[a]);
  return out;
}

}  // namespace

TEST_CASE("game construction validates its invariants") {
  CHECK_THROWS_AS(Game({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Game({{"a", "a"}}, {Rat(1), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(Game({{}}, {}), std::invalid_argument);
  // Wrong payoff count: 2 profiles x 1 player needs 2 entries.
  CHECK_THROWS_AS(Game({{"a", "b"}}, {Rat(1)}), std::invalid_argument);

  const Game pd = fixtures::prisoners_dilemma();
  CHECK(pd.num_players() == 2);
  CHECK(pd.common_actions());
  CHECK(pd.num_profiles() == 4);
  CHECK(pd.payoff(ActionProfile{{0, 1}}, 1) == Rat(5));

  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK_FALSE(uneven.common_actions());
}

TEST_CASE("profile indexing is lexicographic with player 0 most significant") {
  const Game g = fixtures::asym_coordination();
  std::size_t index = 0;
  for (int a0 = 0; a0 < 3; ++a0) {
    for (int a1 = 0; a1 < 3; ++a1) {
      const ActionProfile p{{a0, a1}};
      CHECK(g.index_of(p) == index);
      CHECK(g.profile_at(index) == p);
      ++index;
    }
  }
}

TEST_CASE("permutations validate and invert") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2}), std::invalid_argument);
  const Permutation tau({2, 0, 1});
  const Permutation inv = tau.inverse();
  for (int i = 0; i < 3; ++i) CHECK(inv(tau(i)) == i);
  CHECK(Permutation::all(3).size() == 6);
  CHECK(Permutation::all(4).size() == 24);
}

TEST_CASE("symmetry verdicts on the fixture games") {
  CHECK(is_symmetric(fixtures::prisoners_dilemma()).symmetric);
  CHECK(is_symmetric(fixtures::anti_coordination()).symmetric);
  CHECK(is_symmetric(fixtures::chicken()).symmetric);
  CHECK(is_symmetric(fixtures::two_peak_coordination()).symmetric);
  for (int n = 2; n <= 5; ++n) {
    CHECK(is_symmetric(fixtures::platonia(n)).symmetric);
  }

  const SymmetryVerdict asym = is_symmetric(fixtures::asym_coordination());
  CHECK_FALSE(asym.symmetric);
  REQUIRE(asym.witness.has_value());
  CHECK(asym.witness->tau.has_value());
  CHECK(asym.witness->profile.has_value());
  CHECK(asym.witness->player.has_value());
  // The witness is concrete: re-check the failed equation.
  {
    const Game g = fixtures::asym_coordination();
    const Permutation& tau = *asym.witness->tau;
    const ActionProfile& profile = *asym.witness->profile;
    ActionProfile permuted{{profile.actions[tau(0)], profile.actions[tau(1)]}};
    const int i = *asym.witness->player;
    CHECK(g.payoff(profile, i) != g.payoff(permuted, tau.inverse()(i)));
  }

  CHECK_FALSE(is_symmetric(fixtures::battle_of_sexes()).symmetric);
  CHECK_FALSE(is_symmetric(fixtures::dominated_diagonal()).symmetric);

  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  const SymmetryVerdict verdict = is_symmetric(uneven);
  CHECK_FALSE(verdict.symmetric);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->reason == "players have differing action sets");

  const Game solo = Game({{"x", "y"}}, {Rat(1), Rat(0)});
  CHECK(is_symmetric(solo).symmetric);
}

TEST_CASE("adjacent transpositions decide symmetry like full enumeration") {
  oracles::Rng rng(20260809);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> players(2, 4);
    std::uniform_int_distribution<int> acts(1, 3);
    std::uniform_int_distribution<int> shape(0, 2);
    const int n = players(rng);
    const int m = acts(rng);
    Game g = [&] {
      switch (shape(rng)) {
        case 0:
          return oracles::random_symmetric_game(rng, n, m);
        case 1:
          return oracles::random_game(rng, n, m);
        default: {
          // Near-symmetric: perturb one payoff entry of a symmetric game.
          Game sym = oracles::random_symmetric_game(rng, n, m);
          std::vector<Rat> payoffs;
          for (std::size_t p = 0; p < sym.num_profiles(); ++p) {
            for (int i = 0; i < n; ++i) payoffs.push_back(sym.payoff(p, i));
          }
          std::uniform_int_distribution<std::size_t> pick(0, payoffs.size() - 1);
          payoffs[pick(rng)] += Rat(1, 7);
          return Game::common(n, sym.actions(0), std::move(payoffs));
        }
      }
    }();
    CHECK(is_symmetric(g).symmetric == oracles::symmetric_full_enumeration(g));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("diagonal profiles") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK(profile_strings(pd, diagonal(pd)) ==
        std::vector<std::string>{"(C,C)", "(D,D)"});

  const Game p3 = fixtures::platonia(3);
  CHECK(profile_strings(p3, diagonal(p3)) ==
        std::vector<std::string>{"(S,S,S)", "(D,D,D)"});

  const Game solo = Game({{"only"}}, {Rat(7)});
  CHECK(diagonal(solo).size() == 1);

  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK_THROWS_AS(diagonal(uneven), DifferentActionSets);
}

TEST_CASE("superrationally justifiable actions") {
  CHECK(action_names(fixtures::asym_coordination(),
                     sr_justifiable_actions(fixtures::asym_coordination())) ==
        std::vector<std::string>{"a", "b"});
  CHECK(sr_justifiable_actions(fixtures::battle_of_sexes()).empty());
  CHECK(action_names(fixtures::prisoners_dilemma(),
                     sr_justifiable_actions(fixtures::prisoners_dilemma())) ==
        std::vector<std::string>{"C"});

  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK_THROWS_AS(sr_justifiable_actions(uneven), DifferentActionSets);
}

TEST_CASE("superrational profiles") {
  CHECK(profile_strings(fixtures::anti_coordination(),
                        superrational_profiles(fixtures::anti_coordination())) ==
        std::vector<std::string>{"(a,a)", "(b,b)"});
  CHECK(profile_strings(fixtures::dominated_diagonal(),
                        superrational_profiles(fixtures::dominated_diagonal())) ==
        std::vector<std::string>{"(b,b)"});
  for (int n = 2; n <= 5; ++n) {
    const Game p = fixtures::platonia(n);
    const auto profiles = superrational_profiles(p);
    REQUIRE(profiles.size() == 2);
    CHECK(profiles[0] == ActionProfile{std::vector<int>(n, 0)});
    CHECK(profiles[1] == ActionProfile{std::vector<int>(n, 1)});
  }
}

TEST_CASE("pure Nash equilibria on the fixtures") {
  CHECK(profile_strings(fixtures::prisoners_dilemma(),
                        pure_nash(fixtures::prisoners_dilemma())) ==
        std::vector<std::string>{"(D,D)"});
  CHECK(profile_strings(fixtures::anti_coordination(),
                        pure_nash(fixtures::anti_coordination())) ==
        std::vector<std::string>{"(a,b)", "(b,a)"});
  CHECK(profile_strings(fixtures::platonia(2), pure_nash(fixtures::platonia(2))) ==
        std::vector<std::string>{"(S,S)", "(S,D)", "(D,S)"});
  CHECK(profile_strings(fixtures::asym_coordination(),
                        pure_nash(fixtures::asym_coordination())) ==
        std::vector<std::string>{"(a,a)", "(b,b)", "(c,c)"});
  // Works for games without a common action list.
  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(pure_nash(uneven).size() == 1);
}

TEST_CASE("pure Nash agrees with the best-response oracle") {
  oracles::Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<int> players(1, 3);
    std::uniform_int_distribution<int> acts(1, 3);
    const int n = players(rng);
    std::vector<int> counts;
    for (int i = 0; i < n; ++i) counts.push_back(acts(rng));
    const Game g = oracles::random_game_mixed_counts(rng, counts);
    CHECK(pure_nash(g) == oracles::pure_nash_oracle(g));
  }
}

TEST_CASE("equal diagonal payoffs in symmetric games") {
  oracles::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> players(2, 4);
    std::uniform_int_distribution<int> acts(1, 4);
    const Game g = oracles::random_symmetric_game(rng, players(rng), acts(rng));
    for (const ActionProfile& p : diagonal(g)) {
      for (int i = 1; i < g.num_players(); ++i) {
        CHECK(g.payoff(p, i) == g.payoff(p, 0));
      }
    }
  }
}

TEST_CASE("symmetric games always have superrational profiles") {
  oracles::Rng rng(13);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> players(2, 4);
    std::uniform_int_distribution<int> acts(1, 4);
    const Game g = oracles::random_symmetric_game(rng, players(rng), acts(rng));
    CHECK_FALSE(superrational_profiles(g).empty());
  }
}

TEST_CASE("superrational profiles sit on the diagonal of justifiable actions") {
  oracles::Rng rng(17);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> players(2, 3);
    std::uniform_int_distribution<int> acts(1, 4);
    std::uniform_int_distribution<int> shape(0, 1);
    const int n = players(rng);
    const int m = acts(rng);
    const Game g = shape(rng) == 0 ? oracles::random_symmetric_game(rng, n, m)
                                   : oracles::random_game(rng, n, m);
    const std::vector<ActionProfile> diag = diagonal(g);
    const std::vector<int> justifiable = sr_justifiable_actions(g);
    std::vector<ActionProfile> expected;
    for (int a : justifiable) {
      expected.push_back(ActionProfile{std::vector<int>(n, a)});
    }
    const std::vector<ActionProfile> profiles = superrational_profiles(g);
    CHECK(profiles == expected);
    for (const ActionProfile& p : profiles) {
      CHECK(std::find(diag.begin(), diag.end(), p) != diag.end());
    }
  }
}

TEST_CASE("justifiable actions do not make off-diagonal profiles superrational") {
  const Game g = fixtures::asym_coordination();
  const std::vector<ActionProfile> profiles = superrational_profiles(g);
  const ActionProfile ab{{0, 1}};
  const ActionProfile ba{{1, 0}};
  CHECK(std::find(profiles.begin(), profiles.end(), ab) == profiles.end());
  CHECK(std::find(profiles.begin(), profiles.end(), ba) == profiles.end());
  const std::vector<int> justifiable = sr_justifiable_actions(g);
  CHECK(std::binary_search(justifiable.begin(), justifiable.end(), 0));
  CHECK(std::binary_search(justifiable.begin(), justifiable.end(), 1));
}
