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

#include "rankarg/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace rankarg {

Ranking::Ranking(std::vector<std::string> arguments)
    : names_(std::move(arguments)), geq_(names_.size() * names_.size(), 0) {
  for (ArgIndex a = 0; a < size(); ++a) set_geq(a, a);
}

ArgIndex Ranking::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownArgument(name);
  return static_cast<ArgIndex>(it - names_.begin());
}

bool Ranking::is_reflexive() const {
  for (ArgIndex a = 0; a < size(); ++a) {
    if (!geq(a, a)) return false;
  }
  return true;
}

bool Ranking::is_transitive() const {
  const int n = size();
  for (ArgIndex a = 0; a < n; ++a) {
    for (ArgIndex b = 0; b < n; ++b) {
      if (!geq(a, b)) continue;
      for (ArgIndex c = 0; c < n; ++c) {
        if (geq(b, c) && !geq(a, c)) return false;
      }
    }
  }
  return true;
}

bool Ranking::is_total() const {
  for (ArgIndex a = 0; a < size(); ++a) {
    for (ArgIndex b = a + 1; b < size(); ++b) {
      if (incomparable(a, b)) return false;
    }
  }
  return true;
}

std::vector<std::vector<ArgIndex>> Ranking::classes() const {
  const int n = size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<ArgIndex>> groups;
  for (ArgIndex a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(groups.size());
    groups.push_back({a});
    for (ArgIndex b = a + 1; b < n; ++b) {
      if (cls[b] < 0 && equivalent(a, b)) {
        cls[b] = cls[a];
        groups.back().push_back(b);
      }
    }
  }
  // Layer by the longest chain of strictly better classes above, then by
  // first member, which is a linear extension for any preorder.
  const int k = static_cast<int>(groups.size());
  std::vector<int> depth(k, -1);
  auto above = [&](int x, int y) {  // class x strictly above class y
    return strictly(groups[x].front(), groups[y].front());
  };
  auto compute = [&](auto& self, int c) -> int {
    if (depth[c] >= 0) return depth[c];
    int d = 0;
    for (int o = 0; o < k; ++o) {
      if (o != c && above(o, c)) d = std::max(d, self(self, o) + 1);
    }
    return depth[c] = d;
  };
  for (int c = 0; c < k; ++c) compute(compute, c);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return depth[x] < depth[y]; });
  std::vector<std::vector<ArgIndex>> sorted;
  sorted.reserve(k);
  for (int c : order) sorted.push_back(std::move(groups[c]));
  return sorted;
}

std::vector<std::pair<ArgIndex, ArgIndex>> Ranking::incomparable_pairs() const {
  std::vector<std::pair<ArgIndex, ArgIndex>> pairs;
  for (ArgIndex a = 0; a < size(); ++a) {
    for (ArgIndex b = a + 1; b < size(); ++b) {
      if (incomparable(a, b)) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

Ranking ranking_from_scores(const std::vector<std::string>& names,
                            std::span<const double> scores,
                            Direction direction) {
  if (scores.size() != names.size()) {
    throw Error("ranking_from_scores: score count does not match arguments");
  }
  std::vector<std::vector<double>> keys;
  keys.reserve(scores.size());
  for (double s : scores) {
    if (!std::isfinite(s)) throw Error("ranking_from_scores: non-finite score");
    keys.push_back({s});
  }
  return ranking_from_vectors(names, keys, direction, kScoreTieTolerance);
}

Ranking ranking_from_vectors(const std::vector<std::string>& names,
                             const std::vector<std::vector<double>>& keys,
                             Direction direction, double tolerance) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(keys.size()) != n) {
    throw Error("ranking_from_vectors: key count does not match arguments");
  }
  const std::size_t width = keys.empty() ? 0 : keys[0].size();
  for (const auto& k : keys) {
    if (k.size() != width) throw Error("ranking_from_vectors: length mismatch");
  }
  if (n == 0) return Ranking(names);
  // Refine one block per coordinate: sort the block and split it wherever
  // consecutive values are more than `tolerance` apart. Blocks stay ordered
  // best first, so the result is a total preorder even with near-ties.
  std::vector<std::vector<ArgIndex>> blocks(1);
  for (ArgIndex a = 0; a < n; ++a) blocks[0].push_back(a);
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<std::vector<ArgIndex>> next;
    for (auto& block : blocks) {
      std::stable_sort(block.begin(), block.end(), [&](ArgIndex x, ArgIndex y) {
        return direction == Direction::kHigherIsBetter ? keys[x][i] > keys[y][i]
                                                       : keys[x][i] < keys[y][i];
      });
      next.push_back({block.front()});
      for (std::size_t j = 1; j < block.size(); ++j) {
        if (std::abs(keys[block[j]][i] - keys[block[j - 1]][i]) > tolerance) {
          next.push_back({});
        }
        next.back().push_back(block[j]);
      }
    }
    blocks = std::move(next);
  }
  std::vector<int> level(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (ArgIndex a : blocks[b]) level[a] = static_cast<int>(b);
  }
  return ranking_from_levels(names, level);
}

Ranking ranking_from_levels(const std::vector<std::string>& names,
                            const std::vector<int>& levels) {
  if (levels.size() != names.size()) {
    throw Error("ranking_from_levels: level count does not match arguments");
  }
  const int n = static_cast<int>(names.size());
  Ranking r(names);
  for (ArgIndex a = 0; a < n; ++a) {
    for (ArgIndex b = 0; b < n; ++b) r.set_geq(a, b, levels[a] <= levels[b]);
  }
  return r;
}

LexOutcome lex_compare(std::span<const double> v, std::span<const double> w,
                       double tolerance) {
  if (v.size() != w.size()) throw Error("lex_compare: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i] - w[i]) <= tolerance) continue;
    return {v[i] < w[i] ? std::weak_ordering::less
                        : std::weak_ordering::greater,
            i};
  }
  return {};
}

namespace {

// Matchability of S2 into S1 with S2[skip2] and S1[skip1] removed.
bool saturates(std::span<const ArgIndex> s1, std::span<const ArgIndex> s2,
               const Ranking& ranking, int skip1 = -1, int skip2 = -1) {
  std::vector<ArgIndex> left, right;
  for (int i = 0; i < static_cast<int>(s2.size()); ++i) {
    if (i != skip2) left.push_back(s2[i]);
  }
  for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
    if (i != skip1) right.push_back(s1[i]);
  }
  if (left.size() > right.size()) return false;
  int matched = max_matching(
      static_cast<int>(left.size()), static_cast<int>(right.size()),
      [&](int l, int r) { return ranking.geq(right[r], left[l]); });
  return matched == static_cast<int>(left.size());
}

}  // namespace

bool group_geq(std::span<const ArgIndex> s1, std::span<const ArgIndex> s2,
               const Ranking& ranking) {
  return saturates(s1, s2, ranking);
}

bool group_gt(std::span<const ArgIndex> s1, std::span<const ArgIndex> s2,
              const Ranking& ranking) {
  if (!group_geq(s1, s2, ranking)) return false;
  if (s2.size() < s1.size()) return true;
  for (int i = 0; i < static_cast<int>(s2.size()); ++i) {
    for (int j = 0; j < static_cast<int>(s1.size()); ++j) {
      if (ranking.strictly(s1[j], s2[i]) && saturates(s1, s2, ranking, j, i)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace rankarg
