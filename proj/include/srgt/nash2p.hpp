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

#ifndef SRGT_NASH2P_HPP_
#define SRGT_NASH2P_HPP_

#include <vector>

#include "srgt/game.hpp"
#include "srgt/mixed.hpp"

namespace srgt {

struct MixedEquilibrium {
  ExactMixedStrategy row;  // player 0
  ExactMixedStrategy col;  // player 1

  bool operator==(const MixedEquilibrium&) const = default;
};

struct MixedNashResult {
  // Deterministic order: lexicographic by (row, col) probabilities.
  std::vector<MixedEquilibrium> equilibria;
  // True when some support's indifference system was underdetermined and
  // still produced verified equilibria: the game has a continuum of
  // equilibria and `equilibria` holds vertex representatives of it.
  bool degenerate = false;
};

// All mixed Nash equilibria of a 2-player game by support enumeration with
// exact rational arithmetic. Every returned profile passes an exact
// best-response check. Throws NotTwoPlayers.
MixedNashResult mixed_nash_2p(const Game& game);

}  // namespace srgt

#endif  // SRGT_NASH2P_HPP_
