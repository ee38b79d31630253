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

#ifndef SRGT_BELIEF_HPP_
#define SRGT_BELIEF_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace srgt {

// Whether a type space's beliefs range over opponents' actions or over
// indices into a declared finite set of candidate mixed strategies.
enum class BeliefMode { pure, mixed };

inline const char* to_string(BeliefMode mode) {
  return mode == BeliefMode::pure ? "pure" : "mixed";
}

// One opponent's coordinate inside a belief outcome: what they play (action
// index in pure mode, candidate index in mixed mode) and their type index.
struct OpponentEntry {
  int move = 0;
  int type = 0;

  auto operator<=>(const OpponentEntry&) const = default;
};

// A full belief outcome: one entry per opponent, in ascending player order.
using BeliefPoint = std::vector<OpponentEntry>;

// Result of a superrational-type check: on success, the move (action or
// candidate index) the type is certain of; otherwise the reason it fails.
struct TypeVerdict {
  std::optional<int> move;
  std::string reason;

  bool ok() const { return move.has_value(); }
};

}  // namespace srgt

#endif  // SRGT_BELIEF_HPP_
