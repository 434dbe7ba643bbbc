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

// Abstract argumentation frameworks: arguments, the attack relation and the
// graph queries the ranking semantics are built on.

#ifndef RANKARG_FRAMEWORK_HPP_
#define RANKARG_FRAMEWORK_HPP_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankarg {

using BigInt = boost::multiprecision::cpp_int;

// Arguments are addressed by their position in the framework. Positions are
// stable for the lifetime of a framework; names are the external identity.
using ArgIndex = int;

struct Attack {
  std::string attacker;
  std::string target;
};

// F = <A, R>. Immutable once built; every derived framework is a new value.
class ArgFramework {
 public:
  ArgFramework() = default;

  // Throws InvalidFramework on a malformed name, duplicate argument or an
  // attack endpoint that is not declared. Duplicate attacks are merged.
  ArgFramework(std::vector<std::string> arguments,
               const std::vector<Attack>& attacks);

  // Index-based construction for generators; names must already be valid.
  static ArgFramework from_indices(
      std::vector<std::string> arguments,
      const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  int attack_count() const { return static_cast<int>(attacks_.size()); }

  const std::string& name(ArgIndex i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(const std::string& name) const;
  // Throws UnknownArgument.
  ArgIndex index_of(const std::string& name) const;

  // Direct attackers R1(a), ascending by index.
  std::span<const ArgIndex> attackers(ArgIndex a) const { return in_[a]; }
  std::span<const ArgIndex> targets(ArgIndex a) const { return out_[a]; }
  bool attacks(ArgIndex from, ArgIndex to) const;
  bool self_attacking(ArgIndex a) const { return attacks(a, a); }
  bool unattacked(ArgIndex a) const { return in_[a].empty(); }

  // Sorted (attacker, target) pairs.
  const std::vector<std::pair<ArgIndex, ArgIndex>>& attack_pairs() const {
    return attacks_;
  }

  bool is_acyclic() const;

  friend bool operator==(const ArgFramework& lhs, const ArgFramework& rhs);

 private:
  void index();

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> lookup_;
  std::vector<std::pair<ArgIndex, ArgIndex>> attacks_;
  std::vector<std::vector<ArgIndex>> in_;
  std::vector<std::vector<ArgIndex>> out_;
};

bool valid_argument_name(const std::string& name);

// APX: `arg(X).` and `att(X,Y).` facts, `%` starts a comment line.
ArgFramework parse_apx(std::istream& in);
ArgFramework parse_apx(const std::string& text);
ArgFramework load_apx(const std::string& path);
// Arguments sorted by name, then attacks sorted by (attacker, target) name.
std::string serialize_apx(const ArgFramework& framework);

// Names of the direct attackers of `argument`, sorted.
std::vector<std::string> direct_attackers(const ArgFramework& framework,
                                          const std::string& argument);

// count_in(a, n) for n = 1..max_len: walks of length n ending at a.
class WalkCountTable {
 public:
  WalkCountTable(const ArgFramework& framework, int max_len);
  int max_len() const { return max_len_; }
  const BigInt& count_in(ArgIndex a, int n) const;
  // Number of walks of length n in the whole framework.
  BigInt total(int n) const;

 private:
  int max_len_ = 0;
  int size_ = 0;
  // counts_[(n - 1) * size_ + a]
  std::vector<BigInt> counts_;
};

WalkCountTable walk_counts(const ArgFramework& framework, int max_len);

// Branch lengths from unattacked roots to an argument, with multiplicity.
// Keys ascend; values are multiplicities.
struct BranchProfile {
  std::map<int, std::uint64_t> defense_lengths;
  std::map<int, std::uint64_t> attack_lengths;

  std::uint64_t defense_count() const;
  std::uint64_t attack_count() const;
  friend bool operator==(const BranchProfile&, const BranchProfile&) = default;
};

// Throws CyclicFramework.
BranchProfile branch_profile(const ArgFramework& framework, ArgIndex a);
std::vector<BranchProfile> branch_profiles(const ArgFramework& framework);

// Unattacked arguments reaching `a` by odd-length (attack roots) and
// even-length (defense roots) walks. Defined on cyclic frameworks too; an
// unattacked `a` is its own defense root through the empty walk.
struct BranchRoots {
  std::vector<ArgIndex> attack_roots;
  std::vector<ArgIndex> defense_roots;
};
BranchRoots branch_roots(const ArgFramework& framework, ArgIndex a);

// Weakly connected components, each with its induced attacks. Components are
// ordered by their smallest argument index; argument order is preserved.
std::vector<ArgFramework> connected_components(const ArgFramework& framework);
// Component id per argument, using the same ordering as above.
std::vector<int> component_ids(const ArgFramework& framework);

// Induced sub-framework on `keep` (in the given order).
ArgFramework induced(const ArgFramework& framework,
                     std::span<const ArgIndex> keep);

using Bijection = std::map<std::string, std::string>;

// An attack-preserving bijection F -> G, or nullopt.
std::optional<Bijection> find_isomorphism(const ArgFramework& f,
                                          const ArgFramework& g);
bool is_isomorphism(const ArgFramework& f, const ArgFramework& g,
                    const Bijection& mapping);

ArgFramework disjoint_union(const ArgFramework& f, const ArgFramework& g);

struct Clone {
  ArgFramework framework;
  Bijection mapping;  // original name -> clone name
};
Clone clone_fresh(const ArgFramework& framework, const std::string& suffix);
// Like clone_fresh, but extends the suffix until no clone name collides with
// `avoid`.
Clone clone_avoiding(const ArgFramework& framework, const std::string& suffix,
                     const ArgFramework& avoid);

enum class BranchKind { kDefense, kAttack };

struct Graft {
  ArgFramework framework;
  std::vector<std::string> added;  // x1 ... xn, x1 attacks the target
};
// Adds x1..xn with (x_{i+1}, x_i) and x0 = target. Throws InvalidFramework on
// a length whose parity does not match `kind`.
Graft graft_branch(const ArgFramework& framework, const std::string& target,
                   BranchKind kind, int length);

}  // namespace rankarg

#endif  // RANKARG_FRAMEWORK_HPP_
