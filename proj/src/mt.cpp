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
#include <bit>
#include <mutex>
#include <string>
#include <unordered_map>

#include "rankarg/error.hpp"
#include "rankarg/semantics.hpp"

namespace rankarg {

namespace detail {
extern std::mutex totals_mu;
extern SolverTotals totals;
}  // namespace detail

namespace {

constexpr int kMaxGameArguments = 24;

struct LocalGame {
  int size = 0;
  std::vector<std::uint32_t> out;  // targets of each argument as a mask

  double reward(std::uint32_t p, std::uint32_t o) const {
    int into_p = 0;
    int into_o = 0;
    for (std::uint32_t s = p; s; s &= s - 1) {
      int x = std::countr_zero(s);
      if (out[x] & p) return 0.0;
      into_o += std::popcount(out[x] & o);
    }
    for (std::uint32_t s = o; s; s &= s - 1) {
      into_p += std::popcount(out[std::countr_zero(s)] & p);
    }
    if (into_p == 0) return 1.0;
    auto f = [](int n) { return n / (n + 1.0); };
    return 0.5 * (1.0 + f(into_o) - f(into_p));
  }
};

LocalGame local_game(const ArgFramework& f) {
  if (f.size() > 31) throw SizeCapExceeded(f.size(), 31);
  LocalGame g;
  g.size = f.size();
  g.out.assign(f.size(), 0);
  for (auto [x, y] : f.attack_pairs()) g.out[x] |= 1u << y;
  return g;
}

struct CachedGame {
  double value;
  double gap;
  int lp_solves;
};

// Games on isomorphic, identically ordered components recur constantly in
// the clone-and-graft constructions, so solved games are memoized by their
// local structure.
class GameCache {
 public:
  std::optional<CachedGame> find(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::string& key, CachedGame g) {
    std::lock_guard lock(mu_);
    if (map_.size() >= kCapacity) map_.clear();
    map_.emplace(key, g);
  }

 private:
  static constexpr std::size_t kCapacity = 1 << 18;
  std::mutex mu_;
  std::unordered_map<std::string, CachedGame> map_;
};

GameCache& cache() {
  static GameCache c;
  return c;
}

std::string cache_key(const LocalGame& g, int a) {
  std::string key = std::to_string(g.size) + ":" + std::to_string(a) + ":";
  for (std::uint32_t m : g.out) key += std::to_string(m) + ",";
  return key;
}

CachedGame solve(const LocalGame& g, int a) {
  const std::uint32_t self = 1u << a;
  if (g.out[a] & self) return {0.0, 0.0, 0};
  // Conflicting proponent sets earn 0 against everything, so they are
  // dominated by {a} and dropped from the row space.
  std::vector<std::uint32_t> rows;
  const std::uint32_t others = ((1u << g.size) - 1) & ~self;
  for (std::uint32_t s = others;; s = (s - 1) & others) {
    std::uint32_t p = s | self;
    bool conflict = false;
    for (std::uint32_t t = p; t && !conflict; t &= t - 1) {
      conflict = (g.out[std::countr_zero(t)] & p) != 0;
    }
    if (!conflict) rows.push_back(p);
    if (s == 0) break;
  }
  std::reverse(rows.begin(), rows.end());  // {a} first
  const int cols = 1 << g.size;
  GameSolution s = game_value_oracle(
      static_cast<int>(rows.size()), cols,
      [&](int i, int j) { return g.reward(rows[i], static_cast<std::uint32_t>(j)); },
      0, cols - 1);
  return {s.value, s.duality_gap(), s.lp_solves};
}

}  // namespace

double mt_reward(const ArgFramework& f, std::uint32_t p, std::uint32_t o) {
  return local_game(f).reward(p, o);
}

GameMatrix mt_reward_matrix(const ArgFramework& f, ArgIndex a) {
  if (f.size() > 14) throw SizeCapExceeded(f.size(), 14);
  LocalGame g = local_game(f);
  const std::uint32_t self = 1u << a;
  std::vector<std::uint32_t> rows;
  for (std::uint32_t p = 0; p < (1u << f.size()); ++p) {
    if (p & self) rows.push_back(p);
  }
  GameMatrix m(static_cast<int>(rows.size()), 1 << f.size());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = g.reward(rows[i], j);
  }
  return m;
}

double mt_value(const ArgFramework& f, ArgIndex a, const SolverConfig& cfg,
                MtDiagnostics* diag) {
  ArgFramework scope;
  ArgIndex local = a;
  if (cfg.mt_component_reduction) {
    auto ids = component_ids(f);
    std::vector<ArgIndex> keep;
    for (ArgIndex x = 0; x < f.size(); ++x) {
      if (ids[x] != ids[a]) continue;
      if (x == a) local = static_cast<ArgIndex>(keep.size());
      keep.push_back(x);
    }
    scope = induced(f, keep);
  } else {
    scope = f;
  }
  if (scope.size() > cfg.mt_cap) throw SizeCapExceeded(scope.size(), cfg.mt_cap);
  if (scope.size() > kMaxGameArguments) {
    throw SizeCapExceeded(scope.size(), kMaxGameArguments);
  }
  LocalGame g = local_game(scope);
  const std::string key = cache_key(g, local);
  std::optional<CachedGame> hit = cache().find(key);
  CachedGame result = hit ? *hit : solve(g, local);
  if (!hit) cache().insert(key, result);
  {
    std::lock_guard lock(detail::totals_mu);
    auto& t = detail::totals;
    if (hit) {
      ++t.games_reused;
    } else {
      ++t.games_solved;
      t.lp_solves += result.lp_solves;
      t.max_duality_gap = std::max(t.max_duality_gap, result.gap);
    }
  }
  if (diag) {
    diag->max_duality_gap = std::max(diag->max_duality_gap, result.gap);
    diag->games += 1;
    diag->lp_solves += result.lp_solves;
    diag->largest_game = std::max(diag->largest_game, scope.size());
  }
  return result.value;
}

ScoreTable mt_scores(const ArgFramework& f, const SolverConfig& cfg,
                     MtDiagnostics* diag) {
  ScoreTable t;
  t.names = f.names();
  t.values.reserve(f.size());
  for (ArgIndex a = 0; a < f.size(); ++a) {
    t.values.push_back(mt_value(f, a, cfg, diag));
  }
  return t;
}

}  // namespace rankarg
