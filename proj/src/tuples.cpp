// Copyright 2026 The rankarg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include "rankarg/error.hpp"
#include "rankarg/semantics.hpp"

namespace rankarg {
namespace {

std::uint64_t total(const std::map<int, std::uint64_t>& m) {
  std::uint64_t s = 0;
  for (const auto& [len, count] : m) s += count;
  return s;
}

std::vector<int> expand(const std::map<int, std::uint64_t>& m) {
  std::vector<int> out;
  for (const auto& [len, count] : m) out.insert(out.end(), count, len);
  return out;
}

}  // namespace

std::uint64_t TupledValue::defense_size() const { return total(defense); }
std::uint64_t TupledValue::attack_size() const { return total(attack); }
std::vector<int> TupledValue::defense_tuple() const { return expand(defense); }
std::vector<int> TupledValue::attack_tuple() const { return expand(attack); }

std::weak_ordering compare_tuples(const std::map<int, std::uint64_t>& v,
                                  const std::map<int, std::uint64_t>& w) {
  auto i = v.begin();
  auto j = w.begin();
  std::uint64_t left_i = i == v.end() ? 0 : i->second;
  std::uint64_t left_j = j == w.end() ? 0 : j->second;
  while (i != v.end() && j != w.end()) {
    if (i->first != j->first) {
      return i->first < j->first ? std::weak_ordering::less
                                 : std::weak_ordering::greater;
    }
    std::uint64_t step = std::min(left_i, left_j);
    left_i -= step;
    left_j -= step;
    if (left_i == 0 && ++i != v.end()) left_i = i->second;
    if (left_j == 0 && ++j != w.end()) left_j = j->second;
  }
  // A proper prefix comes first.
  if (i == v.end() && j == w.end()) return std::weak_ordering::equivalent;
  return i == v.end() ? std::weak_ordering::less : std::weak_ordering::greater;
}

std::optional<int> tuples_compare(const TupledValue& v, const TupledValue& w) {
  if (v == w) return 0;
  const std::uint64_t vi = v.attack_size(), wi = w.attack_size();
  const std::uint64_t vp = v.defense_size(), wp = w.defense_size();
  if (vi == wi && vp == wp) {
    auto p = compare_tuples(v.defense, w.defense);
    auto i = compare_tuples(v.attack, w.attack);
    if (p <= 0 && i >= 0) return 1;
    if (p >= 0 && i <= 0) return -1;
    return std::nullopt;
  }
  if (vi >= wi && vp <= wp) return -1;
  if (vi <= wi && vp >= wp) return 1;
  return std::nullopt;
}

std::vector<TupledValue> tuples_values(const ArgFramework& f) {
  auto profiles = branch_profiles(f);
  std::vector<TupledValue> out(f.size());
  for (ArgIndex a = 0; a < f.size(); ++a) {
    out[a].defense = profiles[a].defense_lengths;
    out[a].attack = profiles[a].attack_lengths;
  }
  return out;
}

Ranking tuples_ranking(const ArgFramework& f) {
  auto values = tuples_values(f);
  Ranking r(f.names());
  for (ArgIndex a = 0; a < f.size(); ++a) {
    for (ArgIndex b = a + 1; b < f.size(); ++b) {
      const bool ua = f.unattacked(a), ub = f.unattacked(b);
      std::optional<int> verdict;
      if (ua || ub) {
        verdict = ua == ub ? 0 : (ua ? 1 : -1);
      } else {
        verdict = tuples_compare(values[a], values[b]);
      }
      if (!verdict) continue;
      if (*verdict >= 0) r.set_geq(a, b);
      if (*verdict <= 0) r.set_geq(b, a);
    }
  }
  return r;
}

}  // namespace rankarg
