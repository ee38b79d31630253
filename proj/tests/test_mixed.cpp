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

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "srgt/errors.hpp"
#include "srgt/mixed.hpp"
#include "srgt/simplex_opt.hpp"

using namespace srgt;

namespace {

ExactMixedStrategy exact(std::vector<Rat> probs) {
  return ExactMixedStrategy{std::move(probs)};
}

OptimizerConfig test_config() {
  OptimizerConfig config;
  config.grid_points_per_dim = 101;
  config.multistarts = 16;
  return config;
}

}  // namespace

TEST_CASE("expected payoff: uniform play in the prisoner's dilemma") {
  const Game pd = fixtures::prisoners_dilemma();
  const std::vector<ExactMixedStrategy> uniform(
      2, exact({Rat(1, 2), Rat(1, 2)}));
  // Frozen from the direct four-term summation: (3+0+5+1)/4.
  CHECK(expected_payoff(pd, uniform, 0) == Rat(9, 4));
  CHECK(expected_payoff(pd, uniform, 0) ==
        oracles::expected_payoff_oracle(pd, uniform, 0));
  CHECK(expected_payoff(pd, uniform, 1) == Rat(9, 4));
}

TEST_CASE("expected payoff at Dirac profiles is the pure payoff") {
  oracles::Rng rng(21);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<int> players(1, 3);
    std::uniform_int_distribution<int> acts(1, 3);
    const int n = players(rng);
    const int m = acts(rng);
    const Game g = oracles::random_game(rng, n, m);
    std::uniform_int_distribution<int> act(0, m - 1);
    std::vector<ExactMixedStrategy> profile;
    ActionProfile pure;
    for (int i = 0; i < n; ++i) {
      const int a = act(rng);
      pure.actions.push_back(a);
      profile.push_back(dirac_strategy(m, a));
    }
    for (int i = 0; i < n; ++i) {
      CHECK(expected_payoff(g, profile, i) == g.payoff(pure, i));
    }
  }
}

TEST_CASE("expected payoff agrees with the summation oracle on random mixes") {
  oracles::Rng rng(22);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<int> players(1, 3);
    std::uniform_int_distribution<int> acts(1, 3);
    const int n = players(rng);
    const int m = acts(rng);
    const Game g = oracles::random_game(rng, n, m);
    std::vector<ExactMixedStrategy> profile;
    for (int i = 0; i < n; ++i) {
      profile.push_back(oracles::random_exact_strategy(rng, m));
    }
    for (int i = 0; i < n; ++i) {
      CHECK(expected_payoff(g, profile, i) ==
            oracles::expected_payoff_oracle(g, profile, i));
    }
  }
}

TEST_CASE("expected payoff rejects mismatched dimensions") {
  const Game pd = fixtures::prisoners_dilemma();
  CHECK_THROWS_AS(
      expected_payoff(pd, std::vector<ExactMixedStrategy>{exact({Rat(1)})}, 0),
      DimensionMismatch);
  const std::vector<ExactMixedStrategy> bad{exact({Rat(1)}),
                                            exact({Rat(1), Rat(0)})};
  CHECK_THROWS_AS(expected_payoff(pd, bad, 0), DimensionMismatch);
  const std::vector<ExactMixedStrategy> ok(2, exact({Rat(1, 2), Rat(1, 2)}));
  CHECK_THROWS_AS(expected_payoff(pd, ok, 2), DimensionMismatch);
}

TEST_CASE("chicken diagonal payoff is -10 p^2") {
  const Game chicken = fixtures::chicken();
  for (const Rat& p : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)}) {
    const ExactMixedStrategy sigma = exact({p, 1 - p});
    const Rat expected = Rat(-10) * p * p;
    CHECK(diagonal_expected_payoff(chicken, sigma, 0) == expected);
    CHECK(diagonal_expected_payoff(chicken, sigma, 1) == expected);
  }
}

TEST_CASE("platonia diagonal payoff is 1e6 * d * (1-d)^(n-1)") {
  for (int n = 2; n <= 6; ++n) {
    const Game p = fixtures::platonia(n);
    for (const Rat& d : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(7, 9), Rat(1)}) {
      Rat expected = Rat(1000000) * d;
      for (int k = 0; k < n - 1; ++k) expected *= (1 - d);
      CHECK(diagonal_expected_payoff(p, exact({d, 1 - d}), 0) == expected);
    }
  }
}

TEST_CASE("battle of the sexes diagonal payoffs") {
  const Game bos = fixtures::battle_of_sexes();
  for (const Rat& p : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)}) {
    const ExactMixedStrategy sigma = exact({p, 1 - p});
    CHECK(diagonal_expected_payoff(bos, sigma, 0) == 1 - 2 * p + 3 * p * p);
    CHECK(diagonal_expected_payoff(bos, sigma, 1) == 2 - 4 * p + 3 * p * p);
  }
}

TEST_CASE("diagonal payoffs are player-independent in symmetric games") {
  oracles::Rng rng(23);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> players(2, 3);
    std::uniform_int_distribution<int> acts(1, 4);
    const int m = acts(rng);
    const Game g = oracles::random_symmetric_game(rng, players(rng), m);
    for (int trial = 0; trial < 5; ++trial) {
      const ExactMixedStrategy sigma = oracles::random_exact_strategy(rng, m);
      const Rat reference = diagonal_expected_payoff(g, sigma, 0);
      for (int i = 1; i < g.num_players(); ++i) {
        CHECK(diagonal_expected_payoff(g, sigma, i) == reference);
      }
      ++checked;
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("simplex projection") {
  CHECK(project_to_simplex({0.5, 0.5}) == std::vector<double>{0.5, 0.5});
  CHECK(project_to_simplex({2.0, 0.0}) == std::vector<double>{1.0, 0.0});
  const std::vector<double> p = project_to_simplex({0.4, -3.0, 0.9});
  CHECK(p[1] == 0.0);
  CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p[2] - p[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("simplex grid enumerates compositions") {
  int count = 0;
  for_each_simplex_grid_point(3, 11, [&](const std::vector<double>& x) {
    CHECK(is_simplex_point(x, 1e-12));
    ++count;
  });
  CHECK(count == 66);  // C(12, 2)
  count = 0;
  for_each_simplex_grid_point(1, 11, [&](const std::vector<double>&) {
    ++count;
  });
  CHECK(count == 1);
}

TEST_CASE("chicken: mixed superrational maximizer stays on yield") {
  const SRMixedReport report =
      superrational_mixed(fixtures::chicken(), test_config());
  CHECK(report.status == SRMixedStatus::found);
  REQUIRE(report.maximizers.size() == 1);
  CHECK(report.maximizers[0].strategy.probs[0] ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report.best_value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report.converged);
}

TEST_CASE("platonia: mixed superrational maximizer sends with probability 1/n") {
  for (int n = 2; n <= 10; ++n) {
    const SRMixedReport report =
        superrational_mixed(fixtures::platonia(n), test_config());
    CHECK(report.status == SRMixedStatus::found);
    REQUIRE_FALSE(report.maximizers.empty());
    const double delta = report.maximizers[0].strategy.probs[0];
    CHECK(std::abs(delta - 1.0 / n) <= 1e-6);
    const double expected =
        1e6 * (1.0 / n) * std::pow(1.0 - 1.0 / n, n - 1);
    CHECK(std::abs(report.best_value - expected) <= 1e-6 * expected);
  }
}

TEST_CASE("anti-coordination: uniform mixing is the unique maximizer") {
  const SRMixedReport report =
      superrational_mixed(fixtures::anti_coordination(), test_config());
  CHECK(report.status == SRMixedStatus::found);
  REQUIRE(report.maximizers.size() == 1);
  CHECK(report.maximizers[0].strategy.probs[0] ==
        doctest::Approx(0.5).epsilon(1e-6));
  CHECK(report.best_value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("tied coordination peaks are both reported") {
  const SRMixedReport report =
      superrational_mixed(fixtures::two_peak_coordination(), test_config());
  CHECK(report.status == SRMixedStatus::found);
  CHECK(report.best_value == doctest::Approx(3.0).epsilon(1e-9));
  REQUIRE(report.maximizers.size() == 2);
  for (const Maximizer& m : report.maximizers) {
    CHECK(m.value == doctest::Approx(3.0).epsilon(1e-9));
    const double top = *std::max_element(m.strategy.probs.begin(),
                                         m.strategy.probs.end());
    CHECK(top == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("battle of the sexes: no common diagonal maximizer") {
  const SRMixedReport report =
      superrational_mixed(fixtures::battle_of_sexes(), test_config());
  CHECK(report.status == SRMixedStatus::empty);
  REQUIRE(report.per_player.size() == 2);
  CHECK(report.per_player[0].argmax.probs[0] ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.per_player[0].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.per_player[1].argmax.probs[0] ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report.per_player[1].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.consensus_gap == doctest::Approx(-1.0).epsilon(1e-6));
  // The convex-diagonal warnings name both interior stationary points.
  REQUIRE(report.notes.size() == 2);
  CHECK(report.notes[0].find("1/3") != std::string::npos);
  CHECK(report.notes[1].find("2/3") != std::string::npos);
}

TEST_CASE("non-symmetric game with a shared diagonal maximizer is found") {
  const SRMixedReport report =
      superrational_mixed(fixtures::dominated_diagonal(), test_config());
  CHECK(report.status == SRMixedStatus::found);
  REQUIRE_FALSE(report.maximizers.empty());
  // Both players' diagonal payoff is 1 - p^2, maximized at the pure second
  // action.
  CHECK(report.maximizers[0].strategy.probs[0] ==
        doctest::Approx(0.0).epsilon(1e-6));
  CHECK(report.maximizers[0].value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("optimizer value dominates every pure diagonal payoff") {
  oracles::Rng rng(29);
  OptimizerConfig config = test_config();
  config.grid_points_per_dim = 51;
  config.multistarts = 6;
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<int> players(2, 3);
    std::uniform_int_distribution<int> acts(2, 3);
    const Game g = oracles::random_symmetric_game(rng, players(rng), acts(rng));
    const SRMixedReport report = superrational_mixed(g, config);
    double best_pure = -1e300;
    for (const ActionProfile& p : diagonal(g)) {
      best_pure = std::max(best_pure, to_double(g.payoff(p, 0)));
    }
    CHECK(report.best_value >= best_pure - 1e-9);
    // Maximizers live on the simplex and are first-order stationary.
    for (const Maximizer& m : report.maximizers) {
      CHECK(is_simplex_point(m.strategy.probs, 1e-9));
      if (report.converged) CHECK(m.stationarity <= config.tolerance);
    }
  }
}

TEST_CASE("optimizer matches the dense-grid oracle") {
  oracles::Rng rng(31);
  OptimizerConfig config = test_config();
  for (int round = 0; round < 25; ++round) {
    std::uniform_int_distribution<int> players(2, 3);
    std::uniform_int_distribution<int> acts(2, 3);
    const Game g = oracles::random_symmetric_game(rng, players(rng), acts(rng));
    const SRMixedReport report = superrational_mixed(g, config);
    const double oracle = oracles::dense_grid_diagonal_max(g, 0, 301);
    CHECK(std::abs(report.best_value - oracle) <= 1e-6);
  }
}

TEST_CASE("superrational_mixed validates its inputs") {
  const Game uneven = Game({{"l", "r"}, {"x"}},
                           {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK_THROWS_AS(superrational_mixed(uneven, test_config()),
                  DifferentActionSets);
  OptimizerConfig bad = test_config();
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(superrational_mixed(fixtures::chicken(), bad),
                  std::invalid_argument);
  bad = test_config();
  bad.grid_points_per_dim = 1;
  CHECK_THROWS_AS(superrational_mixed(fixtures::chicken(), bad),
                  std::invalid_argument);
  bad = test_config();
  bad.multistarts = 0;
  CHECK_THROWS_AS(superrational_mixed(fixtures::chicken(), bad),
                  std::invalid_argument);
}

TEST_CASE("identical runs produce identical reports") {
  const OptimizerConfig config = test_config();
  const SRMixedReport a = superrational_mixed(fixtures::platonia(4), config);
  const SRMixedReport b = superrational_mixed(fixtures::platonia(4), config);
  REQUIRE(a.maximizers.size() == b.maximizers.size());
  CHECK(a.best_value == b.best_value);
  for (std::size_t i = 0; i < a.maximizers.size(); ++i) {
    CHECK(a.maximizers[i].strategy.probs == b.maximizers[i].strategy.probs);
  }
}
