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

#include "rankarg/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>
#include <tuple>

#include "rankarg/error.hpp"

namespace rankarg {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

int in_degree(const ArgFramework& f, ArgIndex a) {
  return static_cast<int>(f.attackers(a).size());
}

// |R2(a)| counted as walks: sum of the in-degrees of a's attackers.
int defender_walks(const ArgFramework& f, ArgIndex a) {
  int n = 0;
  for (ArgIndex x : f.attackers(a)) n += in_degree(f, x);
  return n;
}

bool relation_holds(const Ranking& r, ArgIndex x, ArgIndex y,
                    const std::string& rel) {
  if (rel == ">") return r.strictly(x, y);
  if (rel == ">=") return r.geq(x, y);
  if (rel == "=") return r.equivalent(x, y);
  if (rel == "~") return !r.incomparable(x, y);
  throw Error("unknown relation '" + rel + "'");
}

// Stops a property at its first failed demand.
struct Stop {};

class InstanceChecker {
 public:
  InstanceChecker(const ArgFramework& f, const SemanticsRef& sem,
                  const CheckOptions& opts)
      : f_(f), sem_(sem), opts_(opts) {}

  PropertyVerdict run(PropertyId p) {
    verdict_ = PropertyVerdict{};
    verdict_.property = p;
    verdict_.semantics = sem_.id;
    try {
      if (sem_.id == SemanticsId::kTuples && !f_.is_acyclic()) {
        return not_applicable("cyclic framework");
      }
      if (sem_.id == SemanticsId::kTuples && p == PropertyId::kSC) {
        return not_applicable("Tuples* is only defined without cycles");
      }
      dispatch(p);
    } catch (const Stop&) {
      return verdict_;
    } catch (const SemanticsError& e) {
      verdict_.status = Status::kInconclusive;
      verdict_.reason = e.what();
      verdict_.witness.reset();
      return verdict_;
    }
    if (verdict_.instances == 0 && verdict_.status == Status::kHolds) {
      verdict_.status = Status::kNotApplicable;
      if (verdict_.reason.empty()) verdict_.reason = "premise never satisfied";
    }
    return verdict_;
  }

 private:
  PropertyVerdict not_applicable(std::string why) {
    verdict_.status = Status::kNotApplicable;
    verdict_.reason = std::move(why);
    return verdict_;
  }

  const Ranking& base() {
    if (!base_) base_ = rank(f_, sem_.id, sem_.cfg);
    return *base_;
  }

  struct StarEntry {
    StarFramework star;
    Ranking ranking;
  };

  const StarEntry& star(const std::string& target, BranchKind kind,
                        int length) {
    auto key = std::make_tuple(target, static_cast<int>(kind), length);
    auto it = stars_.find(key);
    if (it == stars_.end()) {
      StarFramework s = build_star(f_, target, kind, length);
      Ranking r = rank(s.framework, sem_.id, sem_.cfg);
      it = stars_.emplace(key, StarEntry{std::move(s), std::move(r)}).first;
    }
    return it->second;
  }

  std::vector<int> lengths(BranchKind kind) const {
    const int first = kind == BranchKind::kDefense ? 2 : 1;
    std::vector<int> out{first};
    if (opts_.sweep_lengths) {
      for (int l = first + 2; l <= opts_.max_branch_length; l += 2) {
        out.push_back(l);
      }
    }
    return out;
  }

  // Records one premise instance; throws Stop when the demand fails.
  void demand(const ArgFramework& where, const Ranking& r, ArgIndex x,
              ArgIndex y, const std::string& rel, std::string details = {}) {
    ++verdict_.instances;
    if (relation_holds(r, x, y, rel)) return;
    fail(where, where.name(x), where.name(y), rel, std::move(details));
  }

  [[noreturn]] void fail(const ArgFramework& where, std::string x,
                         std::string y, std::string rel, std::string details) {
    verdict_.status = Status::kViolated;
    verdict_.witness = Witness{f_, where, std::move(x), std::move(y),
                               std::move(rel), std::move(details)};
    throw Stop{};
  }

  void dispatch(PropertyId p) {
    const int n = f_.size();
    switch (p) {
      case PropertyId::kAbs: return abs();
      case PropertyId::kIn: return independence();
      case PropertyId::kVP:
        for (ArgIndex a = 0; a < n; ++a) {
          if (!f_.unattacked(a)) continue;
          for (ArgIndex b = 0; b < n; ++b) {
            if (!f_.unattacked(b)) demand(f_, base(), a, b, ">");
          }
        }
        return;
      case PropertyId::kSC:
        for (ArgIndex a = 0; a < n; ++a) {
          if (f_.self_attacking(a)) continue;
          for (ArgIndex b = 0; b < n; ++b) {
            if (f_.self_attacking(b)) demand(f_, base(), a, b, ">");
          }
        }
        return;
      case PropertyId::kCP:
        for (ArgIndex a = 0; a < n; ++a) {
          for (ArgIndex b = 0; b < n; ++b) {
            if (in_degree(f_, a) < in_degree(f_, b)) {
              demand(f_, base(), a, b, ">");
            }
          }
        }
        return;
      case PropertyId::kQP: return quality_precedence();
      case PropertyId::kCT:
      case PropertyId::kSCT: return counter_transitivity(p == PropertyId::kSCT);
      case PropertyId::kDP:
        for (ArgIndex a = 0; a < n; ++a) {
          if (defender_walks(f_, a) == 0) continue;
          for (ArgIndex b = 0; b < n; ++b) {
            if (in_degree(f_, a) == in_degree(f_, b) &&
                defender_walks(f_, b) == 0) {
              demand(f_, base(), a, b, ">");
            }
          }
        }
        return;
      case PropertyId::kDDP:
        for (ArgIndex a = 0; a < n; ++a) {
          if (!defense_is_simple(f_, a) || !defense_is_distributed(f_, a)) {
            continue;
          }
          for (ArgIndex b = 0; b < n; ++b) {
            if (in_degree(f_, a) == in_degree(f_, b) &&
                defender_walks(f_, a) == defender_walks(f_, b) &&
                defense_is_simple(f_, b) && !defense_is_distributed(f_, b)) {
              demand(f_, base(), a, b, ">");
            }
          }
        }
        return;
      case PropertyId::kTot:
        for (ArgIndex a = 0; a < n; ++a) {
          for (ArgIndex b = a + 1; b < n; ++b) demand(f_, base(), a, b, "~");
        }
        return;
      case PropertyId::kNaE:
        for (ArgIndex a = 0; a < n; ++a) {
          for (ArgIndex b = a + 1; b < n; ++b) {
            if (f_.unattacked(a) && f_.unattacked(b)) {
              demand(f_, base(), a, b, "=");
            }
          }
        }
        return;
      case PropertyId::kAvsFD:
        if (!f_.is_acyclic()) return;
        for (ArgIndex a = 0; a < n; ++a) {
          if (!branch_roots(f_, a).attack_roots.empty()) continue;
          for (ArgIndex b = 0; b < n; ++b) {
            if (in_degree(f_, b) == 1 && defender_walks(f_, b) == 0) {
              demand(f_, base(), a, b, ">");
            }
          }
        }
        return;
      case PropertyId::kPlusDBStrict:
      case PropertyId::kPlusDB:
        for (ArgIndex a = 0; a < n; ++a) {
          if (p == PropertyId::kPlusDB && f_.unattacked(a)) continue;
          for (int len : lengths(BranchKind::kDefense)) {
            change_demand(a, a, BranchKind::kDefense, len, true);
          }
        }
        return;
      case PropertyId::kPlusAB:
        for (ArgIndex a = 0; a < n; ++a) {
          for (int len : lengths(BranchKind::kAttack)) {
            change_demand(a, a, BranchKind::kAttack, len, false);
          }
        }
        return;
      case PropertyId::kIncAB:
      case PropertyId::kIncDB: {
        const bool attack = p == PropertyId::kIncAB;
        for (ArgIndex a = 0; a < n; ++a) {
          BranchRoots roots = branch_roots(f_, a);
          const auto& mine = attack ? roots.attack_roots : roots.defense_roots;
          const auto& other = attack ? roots.defense_roots : roots.attack_roots;
          for (ArgIndex b : mine) {
            if (std::find(other.begin(), other.end(), b) != other.end()) {
              continue;
            }
            for (int len : lengths(BranchKind::kDefense)) {
              change_demand(a, b, BranchKind::kDefense, len, attack);
            }
          }
        }
        return;
      }
    }
  }

  // In AF* built on γ(target), demand γa > a (clone_wins) or a > γa.
  void change_demand(ArgIndex a, ArgIndex target, BranchKind kind, int len,
                     bool clone_wins) {
    const StarEntry& e = star(f_.name(target), kind, len);
    const ArgFramework& g = e.star.framework;
    ArgIndex orig = g.index_of(f_.name(a));
    ArgIndex image = g.index_of(e.star.clone.at(f_.name(a)));
    std::string details = std::string(kind == BranchKind::kDefense
                                          ? "defense"
                                          : "attack") +
                          " branch of length " + std::to_string(len) +
                          " grafted on " + e.star.clone.at(f_.name(target));
    if (clone_wins) {
      demand(g, e.ranking, image, orig, ">", std::move(details));
    } else {
      demand(g, e.ranking, orig, image, ">", std::move(details));
    }
  }

  void quality_precedence() {
    const Ranking& r = base();
    const int n = f_.size();
    for (ArgIndex a = 0; a < n; ++a) {
      // Unattacked a is left to VP. Read vacuously, QP would demand a > b
      // between two IN arguments under grounded.
      if (f_.unattacked(a)) continue;
      for (ArgIndex b = 0; b < n; ++b) {
        if (a == b) continue;
        bool premise = false;
        for (ArgIndex c : f_.attackers(b)) {
          bool above_all = true;
          for (ArgIndex d : f_.attackers(a)) {
            if (!r.strictly(c, d)) {
              above_all = false;
              break;
            }
          }
          if (above_all) {
            premise = true;
            break;
          }
        }
        if (premise) demand(f_, r, a, b, ">");
      }
    }
  }

  // SCT is stated as strengthening CT, so its check carries the CT demands
  // before the strict ones.
  void counter_transitivity(bool strict) {
    if (strict) counter_transitivity(false);
    const Ranking& r = base();
    const int n = f_.size();
    for (ArgIndex a = 0; a < n; ++a) {
      for (ArgIndex b = 0; b < n; ++b) {
        if (a == b) continue;
        auto ra = f_.attackers(a);
        auto rb = f_.attackers(b);
        if (strict ? group_gt(rb, ra, r) : group_geq(rb, ra, r)) {
          demand(f_, r, a, b, strict ? ">" : ">=");
        }
      }
    }
  }

  void independence() {
    auto comps = connected_components(f_);
    if (comps.size() <= 1) {
      verdict_.instances = 1;  // the only component is F itself
      return;
    }
    const Ranking& whole = base();
    for (const ArgFramework& c : comps) {
      Ranking part = rank(c, sem_.id, sem_.cfg);
      for (ArgIndex a = 0; a < c.size(); ++a) {
        for (ArgIndex b = 0; b < c.size(); ++b) {
          if (a == b || !part.geq(a, b)) continue;
          demand(f_, whole, f_.index_of(c.name(a)), f_.index_of(c.name(b)),
                 ">=", "holds in the connected component");
        }
      }
    }
  }

  void abs() {
    const Ranking& r = base();
    const int n = f_.size();
    std::mt19937_64 rng(opts_.seed);
    for (int k = 0; k < opts_.abs_renamings; ++k) {
      // Fisher-Yates with modulo draws keeps the stream portable.
      std::vector<ArgIndex> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[static_cast<int>(rng() % (i + 1))]);
      }
      std::vector<std::string> names(n);
      for (int i = 0; i < n; ++i) names[perm[i]] = "v" + std::to_string(perm[i]);
      std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
      for (auto [x, y] : f_.attack_pairs()) attacks.emplace_back(perm[x], perm[y]);
      ArgFramework g = ArgFramework::from_indices(names, attacks);
      Ranking rg = rank(g, sem_.id, sem_.cfg);
      for (ArgIndex a = 0; a < n; ++a) {
        for (ArgIndex b = 0; b < n; ++b) {
          ++verdict_.instances;
          if (r.geq(a, b) == rg.geq(perm[a], perm[b])) continue;
          fail(g, f_.name(a), f_.name(b), "<=>",
               "renamed to " + g.name(perm[a]) + ", " + g.name(perm[b]) +
                   " in renaming " + std::to_string(k));
        }
      }
    }
  }

  const ArgFramework& f_;
  const SemanticsRef& sem_;
  const CheckOptions& opts_;
  PropertyVerdict verdict_;
  std::optional<Ranking> base_;
  std::map<std::tuple<std::string, int, int>, StarEntry> stars_;
};

bool cp_demands(const ArgFramework& g, ArgIndex x, ArgIndex y) {
  return in_degree(g, x) < in_degree(g, y);
}

// QP demands x > y whenever some attacker c of y is above every attacker of
// x; here "above" is what CP already forces.
bool qp_demands_via_cp(const ArgFramework& g, ArgIndex x, ArgIndex y) {
  if (g.attackers(x).empty()) return false;
  for (ArgIndex c : g.attackers(y)) {
    bool all = true;
    for (ArgIndex d : g.attackers(x)) all = all && cp_demands(g, c, d);
    if (all) return true;
  }
  return false;
}

bool avsfd_demands(const ArgFramework& g, ArgIndex x, ArgIndex y) {
  return g.is_acyclic() && branch_roots(g, x).attack_roots.empty() &&
         in_degree(g, y) == 1 && defender_walks(g, y) == 0;
}

ArgFramework figure2() {
  return parse_apx(
      "arg(a). arg(a1). arg(a2). arg(a3). arg(a4). arg(a5). arg(a6).\n"
      "arg(a7). arg(a8). arg(b). arg(b1).\n"
      "att(a1,a). att(a3,a). att(a5,a). att(a7,a).\n"
      "att(a2,a1). att(a4,a3). att(a6,a5). att(a8,a7). att(b1,b).\n");
}

IncompatibilityWitness search_cp_qp() {
  static const char* kNames[] = {"a", "b", "c", "d", "e"};
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<ArgIndex, ArgIndex>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) slots.emplace_back(i, j);
      }
    }
    std::vector<std::string> names(kNames, kNames + n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
         ++mask) {
      std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) attacks.push_back(slots[s]);
      }
      ArgFramework g = ArgFramework::from_indices(names, attacks);
      if (!g.is_acyclic()) continue;
      for (ArgIndex x = 0; x < n; ++x) {
        for (ArgIndex y = 0; y < n; ++y) {
          if (x == y || !cp_demands(g, x, y) || !qp_demands_via_cp(g, y, x)) {
            continue;
          }
          return {IncompatiblePair::kCpQp, g, g, g.name(x), g.name(y),
                  "CP demands " + g.name(x) + " > " + g.name(y) +
                      " (fewer direct attackers); CP also ranks an attacker "
                      "of " + g.name(x) + " above every attacker of " +
                      g.name(y) + ", so QP demands " + g.name(y) + " > " +
                      g.name(x)};
        }
      }
    }
  }
  throw Error("no CP/QP clash found on five arguments");
}

}  // namespace

std::string_view property_name(PropertyId id) {
  switch (id) {
    case PropertyId::kAbs: return "Abs";
    case PropertyId::kIn: return "In";
    case PropertyId::kVP: return "VP";
    case PropertyId::kDP: return "DP";
    case PropertyId::kCT: return "CT";
    case PropertyId::kSCT: return "SCT";
    case PropertyId::kCP: return "CP";
    case PropertyId::kQP: return "QP";
    case PropertyId::kDDP: return "DDP";
    case PropertyId::kSC: return "SC";
    case PropertyId::kPlusDBStrict: return "PlusDB_strict";
    case PropertyId::kPlusDB: return "PlusDB";
    case PropertyId::kIncAB: return "IncAB";
    case PropertyId::kIncDB: return "IncDB";
    case PropertyId::kPlusAB: return "PlusAB";
    case PropertyId::kTot: return "Tot";
    case PropertyId::kNaE: return "NaE";
    case PropertyId::kAvsFD: return "AvsFD";
  }
  return "?";
}

std::string_view property_label(PropertyId id) {
  switch (id) {
    case PropertyId::kPlusDBStrict: return "⊕DB";
    case PropertyId::kPlusDB: return "+DB";
    case PropertyId::kIncAB: return "↑AB";
    case PropertyId::kIncDB: return "↑DB";
    case PropertyId::kPlusAB: return "+AB";
    default: return property_name(id);
  }
}

std::optional<PropertyId> parse_property(std::string_view text) {
  const std::string t = lower(text);
  for (PropertyId p : kAllProperties) {
    if (t == lower(property_name(p)) || t == lower(property_label(p))) return p;
  }
  if (t == "plusdbstrict") return PropertyId::kPlusDBStrict;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kHolds: return "Holds";
    case Status::kViolated: return "Violated";
    case Status::kNotApplicable: return "NotApplicable";
    case Status::kInconclusive: return "Inconclusive";
  }
  return "?";
}

StarFramework build_star(const ArgFramework& f, const std::string& target,
                         BranchKind kind, int length) {
  Clone c = clone_avoiding(f, "_g", f);
  ArgFramework both = disjoint_union(f, c.framework);
  Graft g = graft_branch(both, c.mapping.at(target), kind, length);
  return {std::move(g.framework), std::move(c.mapping), std::move(g.added)};
}

PropertyVerdict check(PropertyId property, const ArgFramework& framework,
                      const SemanticsRef& sem, const CheckOptions& opts) {
  InstanceChecker checker(framework, sem, opts);
  return checker.run(property);
}

std::vector<PropertyVerdict> check_all(const ArgFramework& framework,
                                       const SemanticsRef& sem,
                                       const std::vector<PropertyId>& props,
                                       const CheckOptions& opts) {
  InstanceChecker checker(framework, sem, opts);
  std::vector<PropertyVerdict> out;
  out.reserve(props.size());
  for (PropertyId p : props) out.push_back(checker.run(p));
  return out;
}

bool replay(const PropertyVerdict& verdict, const SemanticsRef& sem,
            const CheckOptions& opts) {
  if (verdict.status != Status::kViolated || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  PropertyVerdict again = check(verdict.property, w.input, sem, opts);
  if (again.status != Status::kViolated) return false;
  if (w.relation == "<=>") return true;  // spans two frameworks
  try {
    Ranking r = rank(w.framework, sem.id, sem.cfg);
    return !relation_holds(r, w.framework.index_of(w.a),
                           w.framework.index_of(w.b), w.relation);
  } catch (const SemanticsError&) {
    return false;
  }
}

bool defense_is_simple(const ArgFramework& f, ArgIndex a) {
  auto direct = f.attackers(a);
  for (ArgIndex x : direct) {
    for (ArgIndex d : f.attackers(x)) {
      int hits = 0;
      for (ArgIndex y : direct) hits += f.attacks(d, y) ? 1 : 0;
      if (hits != 1) return false;
    }
  }
  return true;
}

bool defense_is_distributed(const ArgFramework& f, ArgIndex a) {
  for (ArgIndex x : f.attackers(a)) {
    if (f.attackers(x).size() > 1) return false;
  }
  return true;
}

std::string_view pair_name(IncompatiblePair pair) {
  switch (pair) {
    case IncompatiblePair::kCpQp: return "CP,QP";
    case IncompatiblePair::kCpAvsFD: return "CP,AvsFD";
    case IncompatiblePair::kCpPlusDB: return "CP,PlusDB";
    case IncompatiblePair::kVpPlusDBStrict: return "VP,PlusDB_strict";
  }
  return "?";
}

std::optional<IncompatiblePair> parse_pair(std::string_view text) {
  std::string t = lower(text);
  std::erase_if(t, [](char c) { return c == ' ' || c == '{' || c == '}'; });
  for (IncompatiblePair p : kAllIncompatiblePairs) {
    if (t == lower(pair_name(p))) return p;
  }
  if (t == "cp,+db") return IncompatiblePair::kCpPlusDB;
  if (t == "vp,⊕db" || t == "vp,plusdbstrict") {
    return IncompatiblePair::kVpPlusDBStrict;
  }
  return std::nullopt;
}

IncompatibilityWitness incompatibility_witness(IncompatiblePair pair) {
  switch (pair) {
    case IncompatiblePair::kCpQp:
      return search_cp_qp();
    case IncompatiblePair::kCpAvsFD: {
      ArgFramework f = figure2();
      return {pair, f, f, "b", "a",
              "CP demands b > a (one direct attacker against four); AvsFD "
              "demands a > b (a has no attack branch, b is attacked only by "
              "the unattacked b1)"};
    }
    case IncompatiblePair::kCpPlusDB: {
      ArgFramework f = parse_apx("arg(a). arg(c). att(c,a).");
      StarFramework s = build_star(f, "a", BranchKind::kDefense, 2);
      const std::string ga = s.clone.at("a");
      return {pair, f, s.framework, "a", ga,
              "in AF*, CP demands a > " + ga + " (one direct attacker "
              "against two); +DB demands " + ga + " > a since a is attacked"};
    }
    case IncompatiblePair::kVpPlusDBStrict: {
      ArgFramework f = parse_apx("arg(a).");
      StarFramework s = build_star(f, "a", BranchKind::kDefense, 2);
      const std::string ga = s.clone.at("a");
      return {pair, f, s.framework, "a", ga,
              "in AF*, VP demands a > " + ga + " (a is unattacked, " + ga +
                  " is attacked by the new branch); ⊕DB demands " + ga +
                  " > a"};
    }
  }
  throw Error("unknown property pair");
}

bool replay_incompatibility(const IncompatibilityWitness& w) {
  const ArgFramework& g = w.framework;
  if (!g.contains(w.x) || !g.contains(w.y) || w.x == w.y) return false;
  const ArgIndex x = g.index_of(w.x), y = g.index_of(w.y);
  auto star_matches = [&] {
    if (!w.base.contains(w.x)) return false;
    StarFramework s = build_star(w.base, w.x, BranchKind::kDefense, 2);
    return s.framework == g && s.clone.at(w.x) == w.y;
  };
  switch (w.pair) {
    case IncompatiblePair::kCpQp:
      return cp_demands(g, x, y) && qp_demands_via_cp(g, y, x);
    case IncompatiblePair::kCpAvsFD:
      return cp_demands(g, x, y) && avsfd_demands(g, y, x);
    case IncompatiblePair::kCpPlusDB:
      // +DB demands γa > a for every a attacked in F.
      return star_matches() &&
             !w.base.unattacked(w.base.index_of(w.x)) && cp_demands(g, x, y);
    case IncompatiblePair::kVpPlusDBStrict:
      // ⊕DB demands γa > a unconditionally; VP the reverse.
      return star_matches() && g.unattacked(x) && !g.unattacked(y);
  }
  return false;
}

std::vector<std::string> audit_dependencies(
    const std::map<PropertyId, Status>& statuses) {
  auto known = [&](PropertyId p) {
    auto it = statuses.find(p);
    return it != statuses.end() && it->second != Status::kInconclusive;
  };
  auto sat = [&](PropertyId p) {
    Status s = statuses.at(p);
    return s == Status::kHolds || s == Status::kNotApplicable;
  };
  struct Rule {
    const char* name;
    std::vector<PropertyId> premises;
    PropertyId conclusion;
  };
  static const std::vector<Rule> kRules = {
      {"SCT=>VP", {PropertyId::kSCT}, PropertyId::kVP},
      {"CT&SCT=>DP", {PropertyId::kCT, PropertyId::kSCT}, PropertyId::kDP},
      {"SCT=>CT", {PropertyId::kSCT}, PropertyId::kCT},
      {"CT=>NaE", {PropertyId::kCT}, PropertyId::kNaE},
      {"PlusDB_strict=>PlusDB", {PropertyId::kPlusDBStrict},
       PropertyId::kPlusDB},
  };
  std::vector<std::string> failed;
  for (const Rule& r : kRules) {
    bool applicable = known(r.conclusion);
    for (PropertyId p : r.premises) applicable = applicable && known(p);
    if (!applicable) continue;
    // A premise counts only when it was actually exercised; a vacuous
    // premise says nothing about the instance.
    bool premises = true;
    for (PropertyId p : r.premises) {
      premises = premises && statuses.at(p) == Status::kHolds;
    }
    if (premises && !sat(r.conclusion)) failed.push_back(r.name);
  }
  return failed;
}

std::string framework_hash(const ArgFramework& f) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : serialize_apx(f)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json verdict_record(const PropertyVerdict& v, const ArgFramework& f) {
  nlohmann::json j;
  j["property"] = property_name(v.property);
  j["semantics"] = semantics_name(v.semantics);
  j["framework_hash"] = framework_hash(f);
  j["status"] = status_name(v.status);
  j["instances"] = v.instances;
  if (v.witness) {
    j["witness_apx"] = serialize_apx(v.witness->framework);
    j["details"] = {{"a", v.witness->a},
                    {"b", v.witness->b},
                    {"relation", v.witness->relation},
                    {"note", v.witness->details}};
  } else {
    j["witness_apx"] = nullptr;
    j["details"] = v.reason;
  }
  return j;
}

}  // namespace rankarg
