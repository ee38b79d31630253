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

#include "srgt/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srgt/errors.hpp"

namespace srgt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

int int_field(const json& doc, const char* key) {
  const json& value = field(doc, key);
  if (!value.is_number_integer()) {
    fail(std::string("field '") + key + "' must be an integer");
  }
  return value.get<int>();
}

std::string string_field(const json& doc, const char* key) {
  const json& value = field(doc, key);
  if (!value.is_string()) {
    fail(std::string("field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

void check_label(const std::string& label, const char* what) {
  if (label.empty() || label.find(',') != std::string::npos ||
      label.find(':') != std::string::npos) {
    fail(std::string(what) + " '" + label +
         "' must be nonempty and contain no ',' or ':'");
  }
}

Rat rational_field(const json& value, const std::string& where) {
  if (!value.is_string()) {
    fail(where + ": rationals must be strings like \"3\" or \"1/2\"");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    fail(where + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return doc;
}

Game parse_game(const json& doc) {
  const int players = int_field(doc, "players");
  if (players < 1) fail("'players' must be at least 1");
  const json& actions_doc = field(doc, "actions");
  if (!actions_doc.is_array() ||
      static_cast<int>(actions_doc.size()) != players) {
    fail("'actions' must list one action list per player");
  }
  std::vector<std::vector<std::string>> actions;
  for (const json& list : actions_doc) {
    if (!list.is_array() || list.empty()) {
      fail("each action list must be a nonempty array of labels");
    }
    std::vector<std::string> labels;
    for (const json& label : list) {
      if (!label.is_string()) fail("action labels must be strings");
      labels.push_back(label.get<std::string>());
      check_label(labels.back(), "action label");
    }
    actions.push_back(std::move(labels));
  }

  const json& payoffs_doc = field(doc, "payoffs");
  if (!payoffs_doc.is_object()) fail("'payoffs' must be an object");

  // Assemble the flat table in profile order, then verify totality.
  std::size_t num_profiles = 1;
  for (const auto& list : actions) num_profiles *= list.size();

  std::vector<Rat> payoffs(num_profiles * players, Rat(0));
  std::vector<bool> filled(num_profiles, false);

  const auto index_of_key = [&](const std::string& key) -> std::size_t {
    const std::vector<std::string> parts = split(key, ',');
    if (static_cast<int>(parts.size()) != players) {
      fail("payoff key '" + key + "' must name one action per player");
    }
    std::size_t index = 0;
    for (int i = 0; i < players; ++i) {
      const auto& list = actions[i];
      const auto it = std::find(list.begin(), list.end(), parts[i]);
      if (it == list.end()) {
        fail("payoff key '" + key + "': '" + parts[i] +
             "' is not an action of player " + std::to_string(i));
      }
      index = index * list.size() + (it - list.begin());
    }
    return index;
  };

  for (const auto& [key, value] : payoffs_doc.items()) {
    const std::size_t index = index_of_key(key);
    if (filled[index]) fail("duplicate payoff entry '" + key + "'");
    filled[index] = true;
    if (!value.is_array() || static_cast<int>(value.size()) != players) {
      fail("payoff entry '" + key + "' must list one rational per player");
    }
    for (int i = 0; i < players; ++i) {
      payoffs[index * players + i] =
          rational_field(value[i], "payoff entry '" + key + "'");
    }
  }
  for (std::size_t index = 0; index < num_profiles; ++index) {
    if (!filled[index]) {
      // Reconstruct the missing key for the message.
      std::string key;
      std::size_t rest = index;
      std::vector<std::size_t> digits(players);
      for (int i = players - 1; i >= 0; --i) {
        digits[i] = rest % actions[i].size();
        rest /= actions[i].size();
      }
      for (int i = 0; i < players; ++i) {
        if (i > 0) key += ',';
        key += actions[i][digits[i]];
      }
      fail("missing payoff entry '" + key + "'");
    }
  }
  try {
    return Game(std::move(actions), std::move(payoffs));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Game load_game(const std::string& path) {
  return parse_game(read_json_file(path));
}

ordered_json game_to_json(const Game& game) {
  ordered_json doc;
  doc["players"] = game.num_players();
  ordered_json actions = ordered_json::array();
  for (int i = 0; i < game.num_players(); ++i) actions.push_back(game.actions(i));
  doc["actions"] = std::move(actions);
  ordered_json payoffs = ordered_json::object();
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const ActionProfile profile = game.profile_at(index);
    std::string key;
    for (int i = 0; i < game.num_players(); ++i) {
      if (i > 0) key += ',';
      key += game.actions(i)[profile.actions[i]];
    }
    ordered_json row = ordered_json::array();
    for (int i = 0; i < game.num_players(); ++i) {
      row.push_back(to_string(game.payoff(index, i)));
    }
    payoffs[key] = std::move(row);
  }
  doc["payoffs"] = std::move(payoffs);
  return doc;
}

const Game& TypeSpaceFile::game() const {
  return is_bk() ? std::get<BKSpace>(space).game()
                 : std::get<HarsanyiSpace>(space).game();
}

BeliefMode TypeSpaceFile::mode() const {
  return is_bk() ? std::get<BKSpace>(space).mode()
                 : std::get<HarsanyiSpace>(space).mode();
}

namespace {

struct SpaceSkeleton {
  Game game;
  BeliefMode mode;
  std::vector<std::vector<std::string>> types;
  std::vector<ExactMixedStrategy> candidates;
};

SpaceSkeleton parse_skeleton(const json& doc, const std::string& base_dir) {
  const std::string mode_text = string_field(doc, "mode");
  if (mode_text != "pure" && mode_text != "mixed") {
    fail("'mode' must be \"pure\" or \"mixed\"");
  }
  const BeliefMode mode =
      mode_text == "pure" ? BeliefMode::pure : BeliefMode::mixed;

  const json& game_doc = field(doc, "game");
  Game game = [&] {
    if (game_doc.is_string()) {
      const std::filesystem::path path =
          std::filesystem::path(base_dir) / game_doc.get<std::string>();
      return load_game(path.string());
    }
    return parse_game(game_doc);
  }();

  const json& types_doc = field(doc, "types");
  if (!types_doc.is_array() ||
      static_cast<int>(types_doc.size()) != game.num_players()) {
    fail("'types' must list one type list per player");
  }
  std::vector<std::vector<std::string>> types;
  for (const json& list : types_doc) {
    if (!list.is_array() || list.empty()) {
      fail("each type list must be a nonempty array of labels");
    }
    std::vector<std::string> labels;
    for (const json& label : list) {
      if (!label.is_string()) fail("type labels must be strings");
      labels.push_back(label.get<std::string>());
      check_label(labels.back(), "type label");
    }
    types.push_back(std::move(labels));
  }

  std::vector<ExactMixedStrategy> candidates;
  if (mode == BeliefMode::mixed) {
    const json& candidates_doc = field(doc, "candidates");
    if (!candidates_doc.is_array() || candidates_doc.empty()) {
      fail("mixed mode needs a nonempty 'candidates' array");
    }
    for (const json& entry : candidates_doc) {
      if (!entry.is_string()) {
        fail("candidates must be probability-vector strings like"
             " \"1/3 2/3\"");
      }
      ExactMixedStrategy candidate;
      std::istringstream in(entry.get<std::string>());
      std::string token;
      while (in >> token) candidate.probs.push_back(parse_rational(token));
      candidates.push_back(std::move(candidate));
    }
  } else if (doc.contains("candidates")) {
    fail("'candidates' is only valid in mixed mode");
  }

  return {std::move(game), mode, std::move(types), std::move(candidates)};
}

// Parses "player:type" keys and hands out (player, type index) pairs.
std::pair<int, int> parse_belief_key(const std::string& key,
                                     const SpaceSkeleton& skeleton) {
  const std::size_t colon = key.find(':');
  if (colon == std::string::npos) {
    fail("belief key '" + key + "' must look like \"<player>:<type>\"");
  }
  int player = -1;
  try {
    player = std::stoi(key.substr(0, colon));
  } catch (const std::exception&) {
    fail("belief key '" + key + "' has a bad player index");
  }
  if (player < 0 || player >= skeleton.game.num_players()) {
    fail("belief key '" + key + "' names player " + std::to_string(player) +
         ", which does not exist");
  }
  const std::string label = key.substr(colon + 1);
  const auto& list = skeleton.types[player];
  const auto it = std::find(list.begin(), list.end(), label);
  if (it == list.end()) {
    fail("belief key '" + key + "' names unknown type '" + label + "'");
  }
  return {player, static_cast<int>(it - list.begin())};
}

int parse_move(const json& value, const SpaceSkeleton& skeleton, int player,
               const std::string& where) {
  if (skeleton.mode == BeliefMode::pure) {
    if (!value.is_string()) {
      fail(where + ": pure-mode moves must be action labels");
    }
    const auto& list = skeleton.game.actions(player);
    const auto it =
        std::find(list.begin(), list.end(), value.get<std::string>());
    if (it == list.end()) {
      fail(where + ": '" + value.get<std::string>() +
           "' is not an action of player " + std::to_string(player));
    }
    return static_cast<int>(it - list.begin());
  }
  if (!value.is_number_integer()) {
    fail(where + ": mixed-mode moves must be candidate indices");
  }
  const int index = value.get<int>();
  if (index < 0 || index >= static_cast<int>(skeleton.candidates.size())) {
    fail(where + ": candidate index " + std::to_string(index) +
         " out of range");
  }
  return index;
}

int parse_type_label(const json& value, const SpaceSkeleton& skeleton,
                     int player, const std::string& where) {
  if (!value.is_string()) fail(where + ": types must be labels");
  const auto& list = skeleton.types[player];
  const auto it = std::find(list.begin(), list.end(), value.get<std::string>());
  if (it == list.end()) {
    fail(where + ": '" + value.get<std::string>() +
         "' is not a type of player " + std::to_string(player));
  }
  return static_cast<int>(it - list.begin());
}

}  // namespace

TypeSpaceFile parse_type_space(const json& doc, const std::string& base_dir) {
  const std::string kind = string_field(doc, "kind");
  if (kind != "harsanyi" && kind != "bk") {
    fail("'kind' must be \"harsanyi\" or \"bk\"");
  }
  SpaceSkeleton skeleton = parse_skeleton(doc, base_dir);
  const int n = skeleton.game.num_players();
  const json& beliefs_doc = field(doc, "beliefs");
  if (!beliefs_doc.is_object()) fail("'beliefs' must be an object");

  // Collect raw belief entries per (player, type); then check totality.
  std::vector<std::vector<const json*>> raw(n);
  for (int i = 0; i < n; ++i) {
    raw[i].assign(skeleton.types[i].size(), nullptr);
  }
  for (const auto& [key, value] : beliefs_doc.items()) {
    const auto [player, type] = parse_belief_key(key, skeleton);
    if (raw[player][type] != nullptr) {
      fail("duplicate belief entry '" + key + "'");
    }
    raw[player][type] = &value;
  }
  for (int i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < skeleton.types[i].size(); ++t) {
      if (raw[i][t] == nullptr) {
        fail("missing belief entry '" + std::to_string(i) + ":" +
             skeleton.types[i][t] + "'");
      }
    }
  }

  const auto parse_point = [&](const json& actions_doc, const json& types_doc,
                               int player,
                               const std::string& where) -> BeliefPoint {
    BeliefPoint point;
    for (int j = 0; j < n; ++j) {
      if (j == player) continue;
      const std::string jkey = std::to_string(j);
      if (!actions_doc.contains(jkey) || !types_doc.contains(jkey)) {
        fail(where + ": needs 'actions' and 'types' entries for player " +
             jkey);
      }
      point.push_back(OpponentEntry{
          parse_move(actions_doc.at(jkey), skeleton, j, where),
          parse_type_label(types_doc.at(jkey), skeleton, j, where)});
    }
    return point;
  };

  try {
    if (kind == "harsanyi") {
      std::vector<std::vector<FiniteDistribution<BeliefPoint>>> beliefs;
      for (int i = 0; i < n; ++i) {
        std::vector<FiniteDistribution<BeliefPoint>> row;
        for (std::size_t t = 0; t < skeleton.types[i].size(); ++t) {
          const std::string where = "belief '" + std::to_string(i) + ":" +
                                    skeleton.types[i][t] + "'";
          const json& entries_doc = *raw[i][t];
          if (!entries_doc.is_array() || entries_doc.empty()) {
            fail(where + " must be a nonempty array");
          }
          std::vector<std::pair<BeliefPoint, Rat>> entries;
          for (const json& entry : entries_doc) {
            if (!entry.is_object()) fail(where + ": entries must be objects");
            const Rat prob = rational_field(field(entry, "prob"), where);
            entries.emplace_back(
                parse_point(field(entry, "actions"), field(entry, "types"), i,
                            where),
                prob);
          }
          try {
            row.emplace_back(std::move(entries));
          } catch (const std::invalid_argument& e) {
            fail(where + ": " + e.what());
          }
        }
        beliefs.push_back(std::move(row));
      }
      return TypeSpaceFile{HarsanyiSpace(
          std::move(skeleton.game), skeleton.mode, std::move(skeleton.types),
          std::move(skeleton.candidates), std::move(beliefs))};
    }

    std::vector<std::vector<std::vector<BeliefPoint>>> beliefs(n);
    for (int i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < skeleton.types[i].size(); ++t) {
        const std::string where = "belief '" + std::to_string(i) + ":" +
                                  skeleton.types[i][t] + "'";
        const json& tuples_doc = *raw[i][t];
        if (!tuples_doc.is_array()) {
          fail(where + " must be an array of tuples");
        }
        std::vector<BeliefPoint> set;
        for (const json& tuple_doc : tuples_doc) {
          if (!tuple_doc.is_array() ||
              static_cast<int>(tuple_doc.size()) != n - 1) {
            fail(where + ": each tuple needs one [move, type] pair per"
                 " opponent");
          }
          BeliefPoint point;
          int slot = 0;
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const json& pair_doc = tuple_doc[slot++];
            if (!pair_doc.is_array() || pair_doc.size() != 2) {
              fail(where + ": tuple entries must be [move, type] pairs");
            }
            point.push_back(OpponentEntry{
                parse_move(pair_doc[0], skeleton, j, where),
                parse_type_label(pair_doc[1], skeleton, j, where)});
          }
          set.push_back(std::move(point));
        }
        beliefs[i].push_back(std::move(set));
      }
    }
    return TypeSpaceFile{BKSpace(
        std::move(skeleton.game), skeleton.mode, std::move(skeleton.types),
        std::move(skeleton.candidates), std::move(beliefs))};
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

TypeSpaceFile load_type_space(const std::string& path) {
  const std::string base_dir =
      std::filesystem::path(path).parent_path().string();
  return parse_type_space(read_json_file(path), base_dir);
}

namespace {

ordered_json candidates_to_json(const std::vector<ExactMixedStrategy>& list) {
  ordered_json out = ordered_json::array();
  for (const ExactMixedStrategy& candidate : list) {
    std::string text;
    for (std::size_t i = 0; i < candidate.probs.size(); ++i) {
      if (i > 0) text += ' ';
      text += to_string(candidate.probs[i]);
    }
    out.push_back(text);
  }
  return out;
}

template <typename Space>
ordered_json space_header(const Space& space, const char* kind) {
  ordered_json doc;
  doc["kind"] = kind;
  doc["mode"] = to_string(space.mode());
  doc["game"] = game_to_json(space.game());
  ordered_json types = ordered_json::array();
  for (int i = 0; i < space.num_players(); ++i) types.push_back(space.types(i));
  doc["types"] = std::move(types);
  if (space.mode() == BeliefMode::mixed) {
    doc["candidates"] = candidates_to_json(space.candidates());
  }
  return doc;
}

ordered_json move_to_json(const HarsanyiSpace& space, int player, int move) {
  if (space.mode() == BeliefMode::pure) {
    return ordered_json(space.game().actions(player)[move]);
  }
  return ordered_json(move);
}

}  // namespace

ordered_json type_space_to_json(const HarsanyiSpace& space) {
  ordered_json doc = space_header(space, "harsanyi");
  ordered_json beliefs = ordered_json::object();
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) {
      ordered_json entries = ordered_json::array();
      for (const auto& [point, prob] : space.belief(i, t).entries()) {
        ordered_json actions = ordered_json::object();
        ordered_json types = ordered_json::object();
        for (int j = 0, slot = 0; j < space.num_players(); ++j) {
          if (j == i) continue;
          const OpponentEntry& entry = point[slot++];
          actions[std::to_string(j)] = move_to_json(space, j, entry.move);
          types[std::to_string(j)] = space.types(j)[entry.type];
        }
        ordered_json record;
        record["prob"] = to_string(prob);
        record["actions"] = std::move(actions);
        record["types"] = std::move(types);
        entries.push_back(std::move(record));
      }
      beliefs[std::to_string(i) + ":" + space.types(i)[t]] = std::move(entries);
    }
  }
  doc["beliefs"] = std::move(beliefs);
  return doc;
}

ordered_json type_space_to_json(const BKSpace& space) {
  ordered_json doc = space_header(space, "bk");
  ordered_json beliefs = ordered_json::object();
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) {
      ordered_json tuples = ordered_json::array();
      for (const BeliefPoint& point : space.belief(i, t)) {
        ordered_json tuple = ordered_json::array();
        for (int j = 0, slot = 0; j < space.num_players(); ++j) {
          if (j == i) continue;
          const OpponentEntry& entry = point[slot++];
          ordered_json pair = ordered_json::array();
          if (space.mode() == BeliefMode::pure) {
            pair.push_back(space.game().actions(j)[entry.move]);
          } else {
            pair.push_back(entry.move);
          }
          pair.push_back(space.types(j)[entry.type]);
          tuple.push_back(std::move(pair));
        }
        tuples.push_back(std::move(tuple));
      }
      beliefs[std::to_string(i) + ":" + space.types(i)[t]] = std::move(tuples);
    }
  }
  doc["beliefs"] = std::move(beliefs);
  return doc;
}

namespace {

// Shared pieces of assignment parsing, parameterized over the space.
template <typename Space>
std::vector<BayesianStrategy> parse_strategies(const json& doc,
                                               const Space& space) {
  std::vector<BayesianStrategy> out;
  if (!doc.contains("strategies")) return out;
  const json& strategies_doc = doc.at("strategies");
  if (!strategies_doc.is_object()) fail("'strategies' must be an object");
  for (int i = 0; i < space.num_players(); ++i) {
    const std::string key = std::to_string(i);
    if (!strategies_doc.contains(key)) {
      fail("'strategies' must cover player " + key);
    }
    const json& map = strategies_doc.at(key);
    if (!map.is_object()) fail("strategy of player " + key + " must map types");
    BayesianStrategy strategy;
    strategy.player = i;
    strategy.mode = space.mode();
    strategy.choice.assign(space.num_types(i), -1);
    for (const auto& [label, value] : map.items()) {
      int type = -1;
      try {
        type = space.type_index(i, label);
      } catch (const UnknownType& e) {
        fail(std::string("strategy of player ") + key + ": " + e.what());
      }
      const std::string where = "strategy of player " + key + " at type '" +
                                label + "'";
      if (space.mode() == BeliefMode::pure) {
        if (!value.is_string()) fail(where + ": moves must be action labels");
        const auto index =
            space.game().action_index(i, value.template get<std::string>());
        if (!index.has_value()) {
          fail(where + ": '" + value.template get<std::string>() +
               "' is not an action of player " + key);
        }
        strategy.choice[type] = *index;
      } else {
        if (!value.is_number_integer()) {
          fail(where + ": moves must be candidate indices");
        }
        const int index = value.template get<int>();
        if (index < 0 ||
            index >= static_cast<int>(space.candidates().size())) {
          fail(where + ": candidate index out of range");
        }
        strategy.choice[type] = index;
      }
    }
    for (int t = 0; t < space.num_types(i); ++t) {
      if (strategy.choice[t] < 0) {
        fail("strategy of player " + key + " misses type '" +
             space.types(i)[t] + "'");
      }
    }
    out.push_back(std::move(strategy));
  }
  return out;
}

template <typename Space>
std::vector<int> parse_realized_types(const json& doc, const Space& space) {
  std::vector<int> out;
  if (!doc.contains("types")) return out;
  const json& types_doc = doc.at("types");
  if (!types_doc.is_object()) fail("'types' must be an object");
  for (int i = 0; i < space.num_players(); ++i) {
    const std::string key = std::to_string(i);
    if (!types_doc.contains(key)) fail("'types' must cover player " + key);
    const json& value = types_doc.at(key);
    if (!value.is_string()) fail("realized types must be labels");
    try {
      out.push_back(space.type_index(i, value.template get<std::string>()));
    } catch (const UnknownType& e) {
      fail(e.what());
    }
  }
  return out;
}

}  // namespace

Assignment parse_assignment(const json& doc, const HarsanyiSpace& space) {
  if (!doc.is_object()) fail("assignment document must be an object");
  if (doc.contains("states")) {
    fail("'states' only applies to bk type spaces");
  }
  Assignment assignment;
  assignment.strategies = parse_strategies(doc, space);
  assignment.types = parse_realized_types(doc, space);
  return assignment;
}

Assignment parse_assignment(const json& doc, const BKSpace& space) {
  if (!doc.is_object()) fail("assignment document must be an object");
  if (doc.contains("strategies") || doc.contains("types")) {
    fail("'strategies'/'types' only apply to harsanyi type spaces");
  }
  Assignment assignment;
  if (!doc.contains("states")) return assignment;
  const json& states_doc = doc.at("states");
  if (!states_doc.is_object()) fail("'states' must be an object");
  for (int i = 0; i < space.num_players(); ++i) {
    const std::string key = std::to_string(i);
    if (!states_doc.contains(key)) fail("'states' must cover player " + key);
    const json& pair = states_doc.at(key);
    if (!pair.is_array() || pair.size() != 2) {
      fail("state of player " + key + " must be a [move, type] pair");
    }
    PlayerState state;
    const std::string where = "state of player " + key;
    if (space.mode() == BeliefMode::pure) {
      if (!pair[0].is_string()) fail(where + ": moves must be action labels");
      const auto index =
          space.game().action_index(i, pair[0].get<std::string>());
      if (!index.has_value()) {
        fail(where + ": '" + pair[0].get<std::string>() +
             "' is not an action of player " + key);
      }
      state.move = *index;
    } else {
      if (!pair[0].is_number_integer()) {
        fail(where + ": moves must be candidate indices");
      }
      state.move = pair[0].get<int>();
      if (state.move < 0 ||
          state.move >= static_cast<int>(space.candidates().size())) {
        fail(where + ": candidate index out of range");
      }
    }
    if (!pair[1].is_string()) fail(where + ": types must be labels");
    try {
      state.type = space.type_index(i, pair[1].get<std::string>());
    } catch (const UnknownType& e) {
      fail(e.what());
    }
    assignment.states.push_back(state);
  }
  return assignment;
}

Assignment load_assignment(const std::string& path, const TypeSpaceFile& file) {
  const json doc = read_json_file(path);
  if (file.is_bk()) {
    return parse_assignment(doc, std::get<BKSpace>(file.space));
  }
  return parse_assignment(doc, std::get<HarsanyiSpace>(file.space));
}

}  // namespace srgt
