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

#include "srgt/bk.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "srgt/errors.hpp"

namespace srgt {

BKSpace::BKSpace(Game game, BeliefMode mode,
                 std::vector<std::vector<std::string>> types,
                 std::vector<ExactMixedStrategy> candidates,
                 std::vector<std::vector<std::vector<BeliefPoint>>> beliefs)
    : game_(std::move(game)),
      mode_(mode),
      types_(std::move(types)),
      candidates_(std::move(candidates)),
      beliefs_(std::move(beliefs)) {
  const int n = game_.num_players();
  if (static_cast<int>(types_.size()) != n) {
    throw std::invalid_argument("type lists must cover every player");
  }
  for (int i = 0; i < n; ++i) {
    if (types_[i].empty()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has no types");
    }
    std::set<std::string> unique(types_[i].begin(), types_[i].end());
    if (unique.size() != types_[i].size()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " has duplicate type labels");
    }
    total_types_ += static_cast<int>(types_[i].size());
  }
  if (mode_ == BeliefMode::pure) {
    if (!candidates_.empty()) {
      throw std::invalid_argument("pure mode takes no candidate strategies");
    }
  } else {
    if (candidates_.empty()) {
      throw std::invalid_argument("mixed mode needs candidate strategies");
    }
    for (int j = 1; j < n; ++j) {
      if (game_.num_actions(j) != game_.num_actions(0)) {
        throw std::invalid_argument(
            "mixed mode needs equal action counts for all players");
      }
    }
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (static_cast<int>(candidates_[c].probs.size()) !=
              game_.num_actions(0) ||
          !is_simplex_point(candidates_[c].probs)) {
        throw std::invalid_argument("candidate " + std::to_string(c) +
                                    " is not a probability vector over the"
                                    " action list");
      }
      candidate_labels_.push_back("#" + std::to_string(c));
    }
  }
  if (static_cast<int>(beliefs_.size()) != n) {
    throw std::invalid_argument("beliefs must cover every player");
  }
  for (int i = 0; i < n; ++i) {
    if (beliefs_[i].size() != types_[i].size()) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " needs one belief set per type");
    }
    for (std::size_t t = 0; t < types_[i].size(); ++t) {
      const std::string where =
          "belief of player " + std::to_string(i) + " type '" + types_[i][t] + "'";
      std::vector<BeliefPoint>& set = beliefs_[i][t];
      if (set.empty()) {
        throw std::invalid_argument(where + ": belief set is empty");
      }
      for (const BeliefPoint& point : set) {
        if (static_cast<int>(point.size()) != n - 1) {
          throw std::invalid_argument(where + ": tuple needs " +
                                      std::to_string(n - 1) + " entries");
        }
        for (int j = 0, slot = 0; j < n; ++j) {
          if (j == i) continue;
          const OpponentEntry& entry = point[slot++];
          const int move_limit = mode_ == BeliefMode::pure
                                     ? game_.num_actions(j)
                                     : static_cast<int>(candidates_.size());
          if (entry.move < 0 || entry.move >= move_limit) {
            throw std::invalid_argument(where + ": move index " +
                                        std::to_string(entry.move) +
                                        " out of range for player " +
                                        std::to_string(j));
          }
          if (entry.type < 0 ||
              entry.type >= static_cast<int>(types_[j].size())) {
            throw std::invalid_argument(where + ": type index " +
                                        std::to_string(entry.type) +
                                        " out of range for player " +
                                        std::to_string(j));
          }
        }
      }
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
  }
  common_type_sets_ = [&] {
    const std::set<std::string> first(types_[0].begin(), types_[0].end());
    return std::all_of(types_.begin() + 1, types_.end(),
                       [&](const std::vector<std::string>& t) {
                         return std::set<std::string>(t.begin(), t.end()) ==
                                first;
                       });
  }();
}

const std::vector<BeliefPoint>& BKSpace::belief(int player, int type) const {
  if (player < 0 || player >= num_players()) {
    throw UnknownType("player index " + std::to_string(player) +
                      " out of range");
  }
  if (type < 0 || type >= num_types(player)) {
    throw UnknownType("type index " + std::to_string(type) +
                      " out of range for player " + std::to_string(player));
  }
  return beliefs_[player][type];
}

int BKSpace::type_index(int player, std::string_view label) const {
  const auto& list = types_[player];
  for (std::size_t t = 0; t < list.size(); ++t) {
    if (list[t] == label) return static_cast<int>(t);
  }
  throw UnknownType("player " + std::to_string(player) + " has no type '" +
                    std::string(label) + "'");
}

int BKSpace::opponent_slot(int player, int opponent) const {
  return opponent < player ? opponent : opponent - 1;
}

const std::string& BKSpace::move_label(int player, int move) const {
  return mode_ == BeliefMode::pure ? game_.actions(player)[move]
                                   : candidate_labels_[move];
}

void IdentificationRelation::rebuild_index(const BKSpace& space) {
  // Canonical order: members sorted, blocks sorted by first member.
  for (auto& block : blocks_) std::sort(block.begin(), block.end());
  std::sort(blocks_.begin(), blocks_.end());
  block_index_.clear();
  for (int i = 0; i < space.num_players(); ++i) {
    block_index_.emplace_back(space.num_types(i), -1);
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (const TaggedType& t : blocks_[b]) {
      block_index_[t.player][t.type] = static_cast<int>(b);
    }
  }
}

IdentificationRelation IdentificationRelation::single_block(
    const BKSpace& space) {
  IdentificationRelation r;
  std::vector<TaggedType> everyone;
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) everyone.push_back({i, t});
  }
  r.blocks_.push_back(std::move(everyone));
  r.rebuild_index(space);
  return r;
}

IdentificationRelation IdentificationRelation::identity(const BKSpace& space) {
  IdentificationRelation r;
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) {
      r.blocks_.push_back({TaggedType{i, t}});
    }
  }
  r.rebuild_index(space);
  return r;
}

IdentificationRelation IdentificationRelation::from_pairs(
    const BKSpace& space,
    const std::vector<std::pair<TaggedType, TaggedType>>& pairs) {
  // Union-find over the disjoint union.
  std::vector<int> offset(space.num_players(), 0);
  for (int i = 1; i < space.num_players(); ++i) {
    offset[i] = offset[i - 1] + space.num_types(i - 1);
  }
  const auto id = [&](TaggedType t) { return offset[t.player] + t.type; };
  std::vector<int> parent(space.total_types());
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : pairs) {
    if (a.player < 0 || a.player >= space.num_players() || a.type < 0 ||
        a.type >= space.num_types(a.player) || b.player < 0 ||
        b.player >= space.num_players() || b.type < 0 ||
        b.type >= space.num_types(b.player)) {
      throw UnknownType("identification pair names a type that does not exist");
    }
    parent[find(id(a))] = find(id(b));
  }
  std::vector<std::vector<TaggedType>> groups(space.total_types());
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) {
      groups[find(offset[i] + t)].push_back({i, t});
    }
  }
  IdentificationRelation r;
  for (auto& group : groups) {
    if (!group.empty()) r.blocks_.push_back(std::move(group));
  }
  r.rebuild_index(space);
  return r;
}

IdentificationRelation IdentificationRelation::from_blocks(
    const BKSpace& space, std::vector<std::vector<TaggedType>> blocks) {
  std::set<TaggedType> seen;
  int count = 0;
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw NotAPartition("partition contains an empty block");
    }
    for (const TaggedType& t : block) {
      if (t.player < 0 || t.player >= space.num_players() || t.type < 0 ||
          t.type >= space.num_types(t.player)) {
        throw NotAPartition("partition names a type that does not exist");
      }
      if (!seen.insert(t).second) {
        throw NotAPartition("partition repeats a type");
      }
      ++count;
    }
  }
  if (count != space.total_types()) {
    throw NotAPartition("partition covers " + std::to_string(count) +
                        " types, expected " +
                        std::to_string(space.total_types()));
  }
  IdentificationRelation r;
  r.blocks_ = std::move(blocks);
  r.rebuild_index(space);
  return r;
}

bool IdentificationRelation::related(TaggedType a, TaggedType b) const {
  return block_of(a) == block_of(b);
}

int IdentificationRelation::block_of(TaggedType t) const {
  return block_index_[t.player][t.type];
}

bool IdentificationRelation::refines(const IdentificationRelation& other) const {
  for (const auto& block : blocks_) {
    const int target = other.block_of(block.front());
    for (const TaggedType& t : block) {
      if (other.block_of(t) != target) return false;
    }
  }
  return true;
}

namespace {

std::vector<Permutation> permutations_mapping(int n, int from, int to) {
  std::vector<Permutation> out;
  for (Permutation& tau : Permutation::all(n)) {
    if (tau(from) == to) out.push_back(std::move(tau));
  }
  return out;
}

// One ordered matching check: does some permutation tau with tau(i) = j send
// every belief tuple of (i, ti) to a matching tuple of (j, tj), with equal
// move labels and `relation`-related types coordinatewise? On failure,
// reports the tuple left unmatched under the first permutation tried.
bool ordered_pair_passes(const BKSpace& space,
                         const IdentificationRelation& relation, TaggedType x,
                         TaggedType y, BeliefPoint* unmatched) {
  const int n = space.num_players();
  const std::vector<BeliefPoint>& from = space.belief(x.player, x.type);
  const std::vector<BeliefPoint>& to = space.belief(y.player, y.type);
  bool first_tau = true;
  for (const Permutation& tau : permutations_mapping(n, x.player, y.player)) {
    bool all_matched = true;
    for (const BeliefPoint& u : from) {
      bool matched = false;
      for (const BeliefPoint& v : to) {
        bool fits = true;
        for (int k = 0; k < n && fits; ++k) {
          if (k == x.player) continue;
          const OpponentEntry& uk = u[space.opponent_slot(x.player, k)];
          const OpponentEntry& vk = v[space.opponent_slot(y.player, tau(k))];
          fits = space.move_label(k, uk.move) ==
                     space.move_label(tau(k), vk.move) &&
                 relation.related({k, uk.type}, {tau(k), vk.type});
        }
        if (fits) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (first_tau && unmatched != nullptr) *unmatched = u;
        all_matched = false;
        break;
      }
    }
    if (all_matched) return true;
    first_tau = false;
  }
  return false;
}

}  // namespace

IdentificationVerdict is_identification_relation(
    const BKSpace& space, const IdentificationRelation& relation) {
  // from_blocks already guarantees a partition; re-validate the coverage so
  // relations built against another space are rejected.
  int count = 0;
  for (const auto& block : relation.blocks()) {
    for (const TaggedType& t : block) {
      if (t.player < 0 || t.player >= space.num_players() || t.type < 0 ||
          t.type >= space.num_types(t.player)) {
        throw NotAPartition("partition names a type that does not exist");
      }
      ++count;
    }
  }
  if (count != space.total_types()) {
    throw NotAPartition("partition does not cover the disjoint union of type"
                        " sets");
  }

  for (const auto& block : relation.blocks()) {
    for (const TaggedType& x : block) {
      for (const TaggedType& y : block) {
        if (x == y) continue;
        BeliefPoint unmatched;
        if (!ordered_pair_passes(space, relation, x, y, &unmatched)) {
          IdentificationVerdict verdict;
          verdict.ok = false;
          verdict.reason =
              "no permutation matches every belief tuple of (player " +
              std::to_string(x.player) + ", '" +
              space.types(x.player)[x.type] + "') into those of (player " +
              std::to_string(y.player) + ", '" +
              space.types(y.player)[y.type] + "')";
          verdict.pair = {x, y};
          verdict.unmatched = unmatched;
          return verdict;
        }
      }
    }
  }
  return {true, "", std::nullopt, std::nullopt};
}

IdentificationRelation greatest_identification_relation(const BKSpace& space,
                                                        RefinementStats* stats) {
  IdentificationRelation current = IdentificationRelation::single_block(space);
  if (stats != nullptr) {
    stats->rounds = 0;
    stats->block_counts.clear();
  }

  std::vector<TaggedType> everyone;
  for (int i = 0; i < space.num_players(); ++i) {
    for (int t = 0; t < space.num_types(i); ++t) everyone.push_back({i, t});
  }
  const int total = static_cast<int>(everyone.size());
  const auto index_of = [&](TaggedType t) {
    return static_cast<int>(std::lower_bound(everyone.begin(), everyone.end(),
                                             t) -
                            everyone.begin());
  };

  while (true) {
    // Keep the pairs that pass both ordered checks relative to the current
    // partition, then split every block into the connected components of
    // those pairs. Types that an identification relation keeps together
    // always pass, so no valid relation is ever split apart.
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const auto& block : current.blocks()) {
      for (std::size_t p = 0; p < block.size(); ++p) {
        for (std::size_t q = p + 1; q < block.size(); ++q) {
          if (ordered_pair_passes(space, current, block[p], block[q], nullptr) &&
              ordered_pair_passes(space, current, block[q], block[p], nullptr)) {
            parent[find(index_of(block[p]))] = find(index_of(block[q]));
          }
        }
      }
    }
    std::vector<std::vector<TaggedType>> groups(total);
    for (int a = 0; a < total; ++a) groups[find(a)].push_back(everyone[a]);
    std::vector<std::vector<TaggedType>> blocks;
    for (auto& group : groups) {
      if (!group.empty()) blocks.push_back(std::move(group));
    }
    IdentificationRelation next =
        IdentificationRelation::from_blocks(space, std::move(blocks));
    if (stats != nullptr) {
      ++stats->rounds;
      stats->block_counts.push_back(static_cast<int>(next.blocks().size()));
    }
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

namespace {

// Singleton-belief certainty: every opponent entry names the same move label
// and carries the entry's own... nullopt when the belief is not a singleton
// all-same-move set; otherwise the common move label and the tuple.
struct SingletonCertainty {
  std::string move_label;
  BeliefPoint tuple;
};

std::optional<SingletonCertainty> singleton_certainty(const BKSpace& space,
                                                      int player, int type) {
  const std::vector<BeliefPoint>& belief = space.belief(player, type);
  if (belief.size() != 1) return std::nullopt;
  const BeliefPoint& tuple = belief.front();
  std::optional<std::string> common;
  for (int j = 0; j < space.num_players(); ++j) {
    if (j == player) continue;
    const OpponentEntry& entry = tuple[space.opponent_slot(player, j)];
    const std::string& label = space.move_label(j, entry.move);
    if (common.has_value() && *common != label) return std::nullopt;
    common = label;
  }
  return SingletonCertainty{common.value_or(""), tuple};
}

// Index of the common move in `player`'s own frame (action index in pure
// mode, candidate index in mixed mode), or nullopt when the label does not
// exist for this player.
std::optional<int> own_move_index(const BKSpace& space, int player,
                                  const std::string& label) {
  if (space.mode() == BeliefMode::mixed) {
    // Candidate labels are "#<index>".
    return std::stoi(label.substr(1));
  }
  return space.game().action_index(player, label);
}

std::vector<int> justifiable_pure(const BKSpace& space) {
  return sr_justifiable_actions(space.game());
}

bool candidate_attains(const BKSpace& space, int candidate,
                       const OptimizerConfig& config, double optimum) {
  const double value = diagonal_expected_payoff(
      space.game(), to_float(space.candidates()[candidate]), 0);
  return value >= optimum - config.tolerance;
}

TypeVerdict bk_type_check(const BKSpace& space, int player, int type,
                          const OptimizerConfig* config, double optimum) {
  space.belief(player, type);
  if (!space.common_type_sets()) {
    throw TypeSetsDiffer(
        "BK superrational-type checks need all players to draw types from"
        " the same label set");
  }
  const bool mixed = space.mode() == BeliefMode::mixed;

  if (space.num_players() == 1) {
    if (!mixed) {
      const std::vector<int> justifiable = justifiable_pure(space);
      if (justifiable.empty()) {
        return {std::nullopt, "no superrationally justifiable action"};
      }
      return {justifiable.front(), ""};
    }
    for (std::size_t c = 0; c < space.candidates().size(); ++c) {
      if (candidate_attains(space, static_cast<int>(c), *config, optimum)) {
        return {static_cast<int>(c), ""};
      }
    }
    return {std::nullopt, "no candidate attains the superrational value"};
  }

  const auto certainty = singleton_certainty(space, player, type);
  if (!certainty.has_value()) {
    return {std::nullopt,
            "belief is not a singleton where every opponent makes one common"
            " move"};
  }
  // Everyone must carry this very type's label.
  const std::string& label = space.types(player)[type];
  for (int j = 0; j < space.num_players(); ++j) {
    if (j == player) continue;
    const OpponentEntry& entry =
        certainty->tuple[space.opponent_slot(player, j)];
    if (space.types(j)[entry.type] != label) {
      return {std::nullopt, "certain player " + std::to_string(j) +
                                " has type '" + space.types(j)[entry.type] +
                                "', not '" + label + "'"};
    }
  }
  const std::optional<int> move =
      own_move_index(space, player, certainty->move_label);
  if (!move.has_value()) {
    return {std::nullopt, "move '" + certainty->move_label +
                              "' does not exist for player " +
                              std::to_string(player)};
  }
  if (!mixed) {
    const std::vector<int> justifiable = justifiable_pure(space);
    if (!std::binary_search(justifiable.begin(), justifiable.end(), *move)) {
      return {std::nullopt, "action '" + certainty->move_label +
                                "' is not superrationally justifiable"};
    }
  } else if (!candidate_attains(space, *move, *config, optimum)) {
    return {std::nullopt, "candidate " + std::to_string(*move) +
                              " does not attain the superrational value"};
  }
  return {*move, ""};
}

}  // namespace

TypeVerdict is_bk_superrational_type(const BKSpace& space, int player,
                                     int type) {
  if (space.mode() != BeliefMode::pure) {
    throw ModeMismatch("is_bk_superrational_type needs a pure-mode space");
  }
  return bk_type_check(space, player, type, nullptr, 0.0);
}

TypeVerdict is_bk_superrational_type_mixed(const BKSpace& space, int player,
                                           int type,
                                           const OptimizerConfig& config,
                                           double superrational_value) {
  if (space.mode() != BeliefMode::mixed) {
    throw ModeMismatch("is_bk_superrational_type_mixed needs a mixed-mode"
                       " space");
  }
  return bk_type_check(space, player, type, &config, superrational_value);
}

TypeVerdict is_bk_superrational_type_mixed(const BKSpace& space, int player,
                                           int type,
                                           const OptimizerConfig& config) {
  const SRMixedReport report = superrational_mixed(space.game(), config);
  if (report.status != SRMixedStatus::found) {
    return {std::nullopt, "the game has no superrational mixed strategy"};
  }
  return is_bk_superrational_type_mixed(space, player, type, config,
                                        report.best_value);
}

bool is_superrational_state(const BKSpace& space, int player,
                            const PlayerState& state) {
  const TypeVerdict verdict = is_bk_superrational_type(space, player,
                                                       state.type);
  return verdict.ok() && *verdict.move == state.move;
}

bool is_superrational_state_dissimilar(const BKSpace& space, int player,
                                       const PlayerState& state,
                                       StateCheck check,
                                       const OptimizerConfig& config) {
  if (player < 0 || player >= space.num_players()) {
    throw UnknownType("player index " + std::to_string(player) +
                      " out of range");
  }
  space.belief(player, state.type);
  const int move_limit = space.mode() == BeliefMode::pure
                             ? space.game().num_actions(player)
                             : static_cast<int>(space.candidates().size());
  if (state.move < 0 || state.move >= move_limit) {
    throw UnknownType("state move index " + std::to_string(state.move) +
                      " out of range for player " + std::to_string(player));
  }

  const auto certainty = singleton_certainty(space, player, state.type);
  if (!certainty.has_value()) return false;
  if (space.num_players() > 1 &&
      certainty->move_label != space.move_label(player, state.move)) {
    return false;
  }

  if (check == StateCheck::strict) {
    if (space.mode() == BeliefMode::pure) {
      const std::vector<int> justifiable = justifiable_pure(space);
      if (!std::binary_search(justifiable.begin(), justifiable.end(),
                              state.move)) {
        return false;
      }
    } else {
      const SRMixedReport report = superrational_mixed(space.game(), config);
      if (report.status != SRMixedStatus::found ||
          !candidate_attains(space, state.move, config, report.best_value)) {
        return false;
      }
    }
  }

  const IdentificationRelation greatest =
      greatest_identification_relation(space);
  for (int j = 0; j < space.num_players(); ++j) {
    if (j == player) continue;
    const OpponentEntry& entry =
        certainty->tuple[space.opponent_slot(player, j)];
    if (!greatest.related({j, entry.type}, {player, state.type})) return false;
  }
  return true;
}

BKOutcome bk_outcome(const BKSpace& space,
                     const std::vector<PlayerState>& states,
                     const OptimizerConfig& config) {
  const int n = space.num_players();
  if (static_cast<int>(states.size()) != n) {
    throw std::invalid_argument("bk_outcome needs one state per player");
  }
  BKOutcome outcome;
  outcome.moves.resize(n);
  for (int i = 0; i < n; ++i) {
    space.belief(i, states[i].type);
    const int move_limit = space.mode() == BeliefMode::pure
                               ? space.game().num_actions(i)
                               : static_cast<int>(space.candidates().size());
    if (states[i].move < 0 || states[i].move >= move_limit) {
      throw UnknownType("state move index " + std::to_string(states[i].move) +
                        " out of range for player " + std::to_string(i));
    }
    outcome.moves[i] = states[i].move;
  }

  outcome.theorem_flag = false;
  try {
    if (!is_symmetric(space.game()).symmetric) return outcome;
    bool unique_move = false;
    std::optional<double> optimum;
    if (space.mode() == BeliefMode::pure) {
      unique_move = sr_justifiable_actions(space.game()).size() == 1;
    } else {
      const SRMixedReport report = superrational_mixed(space.game(), config);
      unique_move = report.status == SRMixedStatus::found &&
                    report.maximizers.size() == 1;
      optimum = report.best_value;
    }
    if (!unique_move) return outcome;
    bool all_pass = true;
    for (int i = 0; i < n && all_pass; ++i) {
      if (space.common_type_sets()) {
        if (space.mode() == BeliefMode::pure) {
          all_pass = is_superrational_state(space, i, states[i]);
        } else {
          const TypeVerdict verdict = is_bk_superrational_type_mixed(
              space, i, states[i].type, config, *optimum);
          all_pass = verdict.ok() && *verdict.move == states[i].move;
        }
      } else {
        all_pass = is_superrational_state_dissimilar(
            space, i, states[i], StateCheck::strict, config);
      }
    }
    outcome.theorem_flag = all_pass;
  } catch (const Error&) {
    outcome.theorem_flag = false;
  }
  return outcome;
}

}  // namespace srgt
