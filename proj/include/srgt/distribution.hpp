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

#ifndef SRGT_DISTRIBUTION_HPP_
#define SRGT_DISTRIBUTION_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "srgt/rational.hpp"

namespace srgt {

// A finitely supported probability distribution with exact rational masses.
// Entries are kept sorted by outcome, unique, nonnegative, summing to one.
// Zero-mass entries are legal in the representation and ignored by
// as_dirac(); they let non-minimal inputs round-trip unchanged.
template <typename Outcome>
class FiniteDistribution {
 public:
  using Entry = std::pair<Outcome, Rat>;

  explicit FiniteDistribution(std::vector<Entry> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Rat sum = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0 && entries_[i].first == entries_[i - 1].first) {
        throw std::invalid_argument("distribution support has duplicates");
      }
      if (entries_[i].second < 0) {
        throw std::invalid_argument("distribution has a negative probability");
      }
      sum += entries_[i].second;
    }
    if (sum != 1) {
      throw std::invalid_argument("distribution masses sum to " +
                                  srgt::to_string(sum) + ", expected 1");
    }
  }

  static FiniteDistribution dirac(Outcome outcome) {
    return FiniteDistribution({{std::move(outcome), Rat(1)}});
  }

  const std::vector<Entry>& entries() const { return entries_; }

  Rat total_mass() const {
    Rat sum = 0;
    for (const Entry& entry : entries_) sum += entry.second;
    return sum;
  }

  // The unique outcome carrying probability exactly one, after dropping
  // zero-mass support entries; nullopt when the distribution is not Dirac.
  std::optional<Outcome> as_dirac() const {
    std::optional<Outcome> result;
    for (const Entry& entry : entries_) {
      if (entry.second == 0) continue;
      if (entry.second != 1 || result.has_value()) return std::nullopt;
      result = entry.first;
    }
    return result;
  }

  // Image distribution under `fn`; masses of merged outcomes add exactly.
  template <typename Target, typename Fn>
  FiniteDistribution<Target> pushforward(Fn&& fn) const {
    std::map<Target, Rat> image;
    for (const Entry& entry : entries_) {
      image[fn(entry.first)] += entry.second;
    }
    std::vector<typename FiniteDistribution<Target>::Entry> entries(
        image.begin(), image.end());
    return FiniteDistribution<Target>(std::move(entries));
  }

  bool operator==(const FiniteDistribution&) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace srgt

#endif  // SRGT_DISTRIBUTION_HPP_
