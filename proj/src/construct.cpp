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

// Isomorphism search and the framework constructions used by the change
// properties: union, fresh clones and grafted branches.

#include <algorithm>
#include <tuple>

#include "rankarg/error.hpp"
#include "rankarg/framework.hpp"

namespace rankarg {
namespace {

using Signature = std::tuple<std::size_t, std::size_t, bool>;

Signature signature(const ArgFramework& f, ArgIndex a) {
  return {f.attackers(a).size(), f.targets(a).size(), f.self_attacking(a)};
}

class IsoSearch {
 public:
  IsoSearch(const ArgFramework& f, const ArgFramework& g) : f_(f), g_(g) {
    // Most constrained arguments first.
    order_.resize(f.size());
    for (ArgIndex a = 0; a < f.size(); ++a) order_[a] = a;
    std::sort(order_.begin(), order_.end(), [&](ArgIndex x, ArgIndex y) {
      auto dx = f.attackers(x).size() + f.targets(x).size();
      auto dy = f.attackers(y).size() + f.targets(y).size();
      return dx != dy ? dx > dy : x < y;
    });
    image_.assign(f.size(), -1);
    used_.assign(g.size(), 0);
  }

  std::optional<std::vector<ArgIndex>> run() {
    if (step(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(ArgIndex x, ArgIndex y) const {
    for (ArgIndex z = 0; z < f_.size(); ++z) {
      ArgIndex w = image_[z];
      if (w < 0) continue;
      if (f_.attacks(x, z) != g_.attacks(y, w)) return false;
      if (f_.attacks(z, x) != g_.attacks(w, y)) return false;
    }
    return true;
  }

  bool step(std::size_t depth) {
    if (depth == order_.size()) return true;
    ArgIndex x = order_[depth];
    Signature want = signature(f_, x);
    for (ArgIndex y = 0; y < g_.size(); ++y) {
      if (used_[y] || signature(g_, y) != want || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = 1;
      if (step(depth + 1)) return true;
      image_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  const ArgFramework& f_;
  const ArgFramework& g_;
  std::vector<ArgIndex> order_;
  std::vector<ArgIndex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Bijection> find_isomorphism(const ArgFramework& f,
                                          const ArgFramework& g) {
  if (f.size() != g.size() || f.attack_count() != g.attack_count()) {
    return std::nullopt;
  }
  std::vector<Signature> sf, sg;
  for (ArgIndex a = 0; a < f.size(); ++a) sf.push_back(signature(f, a));
  for (ArgIndex a = 0; a < g.size(); ++a) sg.push_back(signature(g, a));
  std::sort(sf.begin(), sf.end());
  std::sort(sg.begin(), sg.end());
  if (sf != sg) return std::nullopt;

  auto image = IsoSearch(f, g).run();
  if (!image) return std::nullopt;
  Bijection mapping;
  for (ArgIndex a = 0; a < f.size(); ++a) {
    mapping[f.name(a)] = g.name((*image)[a]);
  }
  return mapping;
}

bool is_isomorphism(const ArgFramework& f, const ArgFramework& g,
                    const Bijection& mapping) {
  if (f.size() != g.size() || static_cast<int>(mapping.size()) != f.size()) {
    return false;
  }
  std::vector<ArgIndex> image(f.size(), -1);
  std::vector<char> hit(g.size(), 0);
  for (ArgIndex a = 0; a < f.size(); ++a) {
    auto it = mapping.find(f.name(a));
    if (it == mapping.end() || !g.contains(it->second)) return false;
    image[a] = g.index_of(it->second);
    if (hit[image[a]]) return false;
    hit[image[a]] = 1;
  }
  for (ArgIndex x = 0; x < f.size(); ++x) {
    for (ArgIndex y = 0; y < f.size(); ++y) {
      if (f.attacks(x, y) != g.attacks(image[x], image[y])) return false;
    }
  }
  return true;
}

ArgFramework disjoint_union(const ArgFramework& f, const ArgFramework& g) {
  std::vector<std::string> names = f.names();
  for (const auto& name : g.names()) {
    if (!f.contains(name)) names.push_back(name);
  }
  std::vector<Attack> attacks;
  for (const auto* part : {&f, &g}) {
    for (auto [from, to] : part->attack_pairs()) {
      attacks.push_back({part->name(from), part->name(to)});
    }
  }
  return ArgFramework(std::move(names), attacks);
}

Clone clone_fresh(const ArgFramework& framework, const std::string& suffix) {
  Clone clone;
  std::vector<std::string> names;
  for (const auto& name : framework.names()) {
    names.push_back(name + suffix);
    clone.mapping[name] = names.back();
  }
  clone.framework =
      ArgFramework::from_indices(std::move(names), framework.attack_pairs());
  return clone;
}

Clone clone_avoiding(const ArgFramework& framework, const std::string& suffix,
                     const ArgFramework& avoid) {
  std::string s = suffix;
  for (;;) {
    bool clash = std::any_of(
        framework.names().begin(), framework.names().end(),
        [&](const std::string& name) { return avoid.contains(name + s); });
    if (!clash) return clone_fresh(framework, s);
    s += "_";
  }
}

Graft graft_branch(const ArgFramework& framework, const std::string& target,
                   BranchKind kind, int length) {
  framework.index_of(target);  // throws UnknownArgument
  if (kind == BranchKind::kDefense && (length < 2 || length % 2 != 0)) {
    throw InvalidFramework("defense branch length must be even and >= 2");
  }
  if (kind == BranchKind::kAttack && (length < 1 || length % 2 != 1)) {
    throw InvalidFramework("attack branch length must be odd and >= 1");
  }
  std::string stem = target + (kind == BranchKind::kDefense ? "_d" : "_t");
  while (std::any_of(framework.names().begin(), framework.names().end(),
                     [&](const std::string& name) {
                       return name.rfind(stem, 0) == 0;
                     })) {
    stem += "_";
  }
  Graft graft;
  std::vector<std::string> names = framework.names();
  std::vector<Attack> attacks;
  for (auto [from, to] : framework.attack_pairs()) {
    attacks.push_back({framework.name(from), framework.name(to)});
  }
  std::string previous = target;
  for (int i = 1; i <= length; ++i) {
    std::string x = stem + std::to_string(i);
    names.push_back(x);
    graft.added.push_back(x);
    attacks.push_back({x, previous});
    previous = x;
  }
  graft.framework = ArgFramework(std::move(names), attacks);
  return graft;
}

}  // namespace rankarg
