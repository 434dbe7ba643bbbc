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

#include "rankarg/framework.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rankarg/error.hpp"

namespace rankarg {

bool valid_argument_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

ArgFramework::ArgFramework(std::vector<std::string> arguments,
                           const std::vector<Attack>& attacks)
    : names_(std::move(arguments)) {
  for (ArgIndex i = 0; i < size(); ++i) {
    if (!valid_argument_name(names_[i])) {
      throw InvalidFramework("invalid argument name '" + names_[i] + "'");
    }
    if (!lookup_.emplace(names_[i], i).second) {
      throw InvalidFramework("duplicate argument '" + names_[i] + "'");
    }
  }
  attacks_.reserve(attacks.size());
  for (const Attack& att : attacks) {
    auto from = lookup_.find(att.attacker);
    auto to = lookup_.find(att.target);
    if (from == lookup_.end()) {
      throw InvalidFramework("attack references undeclared argument '" +
                             att.attacker + "'");
    }
    if (to == lookup_.end()) {
      throw InvalidFramework("attack references undeclared argument '" +
                             att.target + "'");
    }
    attacks_.emplace_back(from->second, to->second);
  }
  index();
}

ArgFramework ArgFramework::from_indices(
    std::vector<std::string> arguments,
    const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks) {
  ArgFramework f;
  f.names_ = std::move(arguments);
  for (ArgIndex i = 0; i < f.size(); ++i) {
    if (!f.lookup_.emplace(f.names_[i], i).second) {
      throw InvalidFramework("duplicate argument '" + f.names_[i] + "'");
    }
  }
  for (auto [from, to] : attacks) {
    if (from < 0 || to < 0 || from >= f.size() || to >= f.size()) {
      throw InvalidFramework("attack index out of range");
    }
  }
  f.attacks_ = attacks;
  f.index();
  return f;
}

void ArgFramework::index() {
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()),
                 attacks_.end());
  in_.assign(size(), {});
  out_.assign(size(), {});
  for (auto [from, to] : attacks_) {
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool ArgFramework::contains(const std::string& name) const {
  return lookup_.count(name) != 0;
}

ArgIndex ArgFramework::index_of(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw UnknownArgument(name);
  return it->second;
}

bool ArgFramework::attacks(ArgIndex from, ArgIndex to) const {
  const auto& targets = out_[from];
  return std::binary_search(targets.begin(), targets.end(), to);
}

bool ArgFramework::is_acyclic() const {
  // Kahn's algorithm; a self-attack is a cycle of length one.
  std::vector<int> indegree(size());
  for (ArgIndex a = 0; a < size(); ++a) {
    indegree[a] = static_cast<int>(in_[a].size());
  }
  std::vector<ArgIndex> ready;
  for (ArgIndex a = 0; a < size(); ++a) {
    if (indegree[a] == 0) ready.push_back(a);
  }
  int seen = 0;
  while (!ready.empty()) {
    ArgIndex a = ready.back();
    ready.pop_back();
    ++seen;
    for (ArgIndex t : out_[a]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  return seen == size();
}

bool operator==(const ArgFramework& lhs, const ArgFramework& rhs) {
  if (lhs.size() != rhs.size() || lhs.attack_count() != rhs.attack_count()) {
    return false;
  }
  for (const auto& name : lhs.names_) {
    if (!rhs.contains(name)) return false;
  }
  for (auto [from, to] : lhs.attacks_) {
    if (!rhs.attacks(rhs.index_of(lhs.name(from)),
                     rhs.index_of(lhs.name(to)))) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> direct_attackers(const ArgFramework& framework,
                                          const std::string& argument) {
  std::vector<std::string> result;
  for (ArgIndex b : framework.attackers(framework.index_of(argument))) {
    result.push_back(framework.name(b));
  }
  std::sort(result.begin(), result.end());
  return result;
}

WalkCountTable::WalkCountTable(const ArgFramework& framework, int max_len)
    : max_len_(max_len), size_(framework.size()) {
  if (max_len < 1) throw Error("walk counts need max_len >= 1");
  counts_.assign(static_cast<std::size_t>(max_len) * size_, BigInt(0));
  for (ArgIndex a = 0; a < size_; ++a) {
    counts_[a] = static_cast<long>(framework.attackers(a).size());
  }
  for (int n = 2; n <= max_len; ++n) {
    const std::size_t prev = static_cast<std::size_t>(n - 2) * size_;
    const std::size_t cur = static_cast<std::size_t>(n - 1) * size_;
    for (ArgIndex a = 0; a < size_; ++a) {
      BigInt sum = 0;
      for (ArgIndex b : framework.attackers(a)) sum += counts_[prev + b];
      counts_[cur + a] = std::move(sum);
    }
  }
}

const BigInt& WalkCountTable::count_in(ArgIndex a, int n) const {
  if (n < 1 || n > max_len_ || a < 0 || a >= size_) {
    throw Error("walk count query out of range");
  }
  return counts_[static_cast<std::size_t>(n - 1) * size_ + a];
}

BigInt WalkCountTable::total(int n) const {
  BigInt sum = 0;
  for (ArgIndex a = 0; a < size_; ++a) sum += count_in(a, n);
  return sum;
}

WalkCountTable walk_counts(const ArgFramework& framework, int max_len) {
  return WalkCountTable(framework, max_len);
}

std::uint64_t BranchProfile::defense_count() const {
  std::uint64_t n = 0;
  for (const auto& [len, mult] : defense_lengths) n += mult;
  return n;
}

std::uint64_t BranchProfile::attack_count() const {
  std::uint64_t n = 0;
  for (const auto& [len, mult] : attack_lengths) n += mult;
  return n;
}

std::vector<BranchProfile> branch_profiles(const ArgFramework& framework) {
  if (!framework.is_acyclic()) throw CyclicFramework();
  const int n = framework.size();
  // from_roots[len][a]: walks of length len from an unattacked argument to a.
  // On an acyclic framework no walk is longer than n - 1.
  std::vector<std::vector<std::uint64_t>> from_roots(
      std::max(n, 1), std::vector<std::uint64_t>(n, 0));
  for (ArgIndex a = 0; a < n; ++a) {
    if (framework.unattacked(a)) from_roots[0][a] = 1;
  }
  for (int len = 1; len < n; ++len) {
    for (ArgIndex a = 0; a < n; ++a) {
      std::uint64_t sum = 0;
      for (ArgIndex b : framework.attackers(a)) sum += from_roots[len - 1][b];
      from_roots[len][a] = sum;
    }
  }
  std::vector<BranchProfile> profiles(n);
  for (ArgIndex a = 0; a < n; ++a) {
    for (int len = 0; len < n; ++len) {
      if (from_roots[len][a] == 0) continue;
      auto& bucket = len % 2 == 0 ? profiles[a].defense_lengths
                                  : profiles[a].attack_lengths;
      bucket[len] = from_roots[len][a];
    }
  }
  return profiles;
}

BranchProfile branch_profile(const ArgFramework& framework, ArgIndex a) {
  return branch_profiles(framework).at(a);
}

BranchRoots branch_roots(const ArgFramework& framework, ArgIndex a) {
  // Backward search over (argument, parity) states starting at a.
  const int n = framework.size();
  std::vector<char> seen(2 * n, 0);
  std::vector<std::pair<ArgIndex, int>> stack{{a, 0}};
  seen[2 * a] = 1;
  while (!stack.empty()) {
    auto [x, parity] = stack.back();
    stack.pop_back();
    for (ArgIndex y : framework.attackers(x)) {
      int p = parity ^ 1;
      if (!seen[2 * y + p]) {
        seen[2 * y + p] = 1;
        stack.emplace_back(y, p);
      }
    }
  }
  BranchRoots roots;
  for (ArgIndex x = 0; x < n; ++x) {
    if (!framework.unattacked(x)) continue;
    if (seen[2 * x]) roots.defense_roots.push_back(x);
    if (seen[2 * x + 1]) roots.attack_roots.push_back(x);
  }
  return roots;
}

std::vector<int> component_ids(const ArgFramework& framework) {
  const int n = framework.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [from, to] : framework.attack_pairs()) {
    int rf = find(from), rt = find(to);
    if (rf != rt) parent[std::max(rf, rt)] = std::min(rf, rt);
  }
  std::vector<int> ids(n, -1);
  std::vector<int> root_id(n, -1);
  int next = 0;
  for (ArgIndex a = 0; a < n; ++a) {
    int r = find(a);
    if (root_id[r] < 0) root_id[r] = next++;
    ids[a] = root_id[r];
  }
  return ids;
}

ArgFramework induced(const ArgFramework& framework,
                     std::span<const ArgIndex> keep) {
  std::vector<int> local(framework.size(), -1);
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<int>(i);
    names.push_back(framework.name(keep[i]));
  }
  std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
  for (auto [from, to] : framework.attack_pairs()) {
    if (local[from] >= 0 && local[to] >= 0) {
      attacks.emplace_back(local[from], local[to]);
    }
  }
  return ArgFramework::from_indices(std::move(names), attacks);
}

std::vector<ArgFramework> connected_components(const ArgFramework& framework) {
  std::vector<int> ids = component_ids(framework);
  int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<ArgIndex>> members(count);
  for (ArgIndex a = 0; a < framework.size(); ++a) members[ids[a]].push_back(a);
  std::vector<ArgFramework> result;
  result.reserve(count);
  for (const auto& m : members) result.push_back(induced(framework, m));
  return result;
}

}  // namespace rankarg
