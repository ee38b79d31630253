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

#ifndef SRGT_IO_HPP_
#define SRGT_IO_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "srgt/bk.hpp"
#include "srgt/game.hpp"
#include "srgt/harsanyi.hpp"

namespace srgt {

// All loaders throw ParseError with a message naming what is wrong.

nlohmann::json read_json_file(const std::string& path);

// Game documents:
//   {"players": 2,
//    "actions": [["C","D"],["C","D"]],
//    "payoffs": {"C,C": ["3","3"], ...}}
// Payoff keys are comma-joined action labels in player order; one rational
// string per player. The table must be total. Labels must not contain ','
// or ':' so the key syntax stays unambiguous.
Game parse_game(const nlohmann::json& doc);
Game load_game(const std::string& path);
nlohmann::ordered_json game_to_json(const Game& game);

// Type-space documents:
//   {"kind": "harsanyi"|"bk",
//    "mode": "pure"|"mixed",
//    "game": {...} | "path.json",          (path relative to the document)
//    "types": [["t"],["t"]],
//    "candidates": ["1/3 2/3", ...],       (mixed mode only)
//    "beliefs": {"<player>:<type>": ...}}
// Harsanyi belief values: [{"prob": "1", "actions": {"1": "C"},
// "types": {"1": "t"}}, ...]; in mixed mode "actions" values are candidate
// indices. BK belief values: [[["C","u"]], ...] — a list of tuples, one
// [move, type] pair per opponent in ascending player order.
struct TypeSpaceFile {
  std::variant<HarsanyiSpace, BKSpace> space;

  bool is_bk() const { return std::holds_alternative<BKSpace>(space); }
  const Game& game() const;
  BeliefMode mode() const;
};

TypeSpaceFile parse_type_space(const nlohmann::json& doc,
                               const std::string& base_dir);
TypeSpaceFile load_type_space(const std::string& path);
nlohmann::ordered_json type_space_to_json(const HarsanyiSpace& space);
nlohmann::ordered_json type_space_to_json(const BKSpace& space);

// Assignment documents (the --strategies file):
//   {"strategies": {"0": {"t": "C"}, ...},   (move per type; candidate
//                                             indices in mixed mode)
//    "types": {"0": "t", ...},               (optional realized types)
//    "states": {"0": ["C","r"], ...}}        (optional BK player states)
struct Assignment {
  std::vector<BayesianStrategy> strategies;  // empty when absent
  std::vector<int> types;                    // empty when absent
  std::vector<PlayerState> states;           // empty when absent
};

Assignment parse_assignment(const nlohmann::json& doc,
                            const HarsanyiSpace& space);
Assignment parse_assignment(const nlohmann::json& doc, const BKSpace& space);
Assignment load_assignment(const std::string& path, const TypeSpaceFile& file);

}  // namespace srgt

#endif  // SRGT_IO_HPP_
