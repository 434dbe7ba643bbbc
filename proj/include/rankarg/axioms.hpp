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

// Instance-level checks of the eighteen ranking properties.

#ifndef RANKARG_AXIOMS_HPP_
#define RANKARG_AXIOMS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rankarg/framework.hpp"
#include "rankarg/semantics.hpp"

namespace rankarg {

enum class PropertyId {
  kAbs, kIn, kVP, kDP, kCT, kSCT, kCP, kQP, kDDP, kSC,
  kPlusDBStrict, kPlusDB, kIncAB, kIncDB, kPlusAB, kTot, kNaE, kAvsFD
};

inline constexpr std::array<PropertyId, 18> kAllProperties = {
    PropertyId::kAbs,    PropertyId::kIn,           PropertyId::kVP,
    PropertyId::kDP,     PropertyId::kCT,           PropertyId::kSCT,
    PropertyId::kCP,     PropertyId::kQP,           PropertyId::kDDP,
    PropertyId::kSC,     PropertyId::kPlusDBStrict, PropertyId::kPlusDB,
    PropertyId::kIncAB,  PropertyId::kIncDB,        PropertyId::kPlusAB,
    PropertyId::kTot,    PropertyId::kNaE,          PropertyId::kAvsFD};

std::string_view property_name(PropertyId id);   // ASCII: "PlusDB_strict"
std::string_view property_label(PropertyId id);  // display: "⊕DB"
// Accepts either form (and "PlusDBStrict"), case-insensitively.
std::optional<PropertyId> parse_property(std::string_view text);

enum class Status { kHolds, kViolated, kNotApplicable, kInconclusive };
std::string_view status_name(Status s);

struct SemanticsRef {
  SemanticsId id = SemanticsId::kCat;
  SolverConfig cfg;
};

struct CheckOptions {
  std::uint64_t seed = 0;   // Abs renamings
  int abs_renamings = 5;
  // Graft every branch length up to max_branch_length instead of only the
  // shortest one.
  bool sweep_lengths = false;
  int max_branch_length = 6;
};

struct Witness {
  ArgFramework input;      // framework handed to check()
  ArgFramework framework;  // framework the failed comparison lives in
  // The failed demand reads `a relation b`. Relations: ">" strict, ">="
  // weak, "=" equivalent, "~" comparable, "<=>" same in both frameworks.
  std::string a;
  std::string b;
  std::string relation;
  std::string details;
};

struct PropertyVerdict {
  PropertyId property = PropertyId::kAbs;
  SemanticsId semantics = SemanticsId::kCat;
  Status status = Status::kHolds;
  int instances = 0;  // premise instances examined
  std::optional<Witness> witness;
  std::string reason;  // NotApplicable / Inconclusive explanation
};

PropertyVerdict check(PropertyId property, const ArgFramework& framework,
                      const SemanticsRef& sem, const CheckOptions& opts = {});

// Checks several properties on one framework, sharing the base ranking and
// the constructed frameworks between them.
std::vector<PropertyVerdict> check_all(const ArgFramework& framework,
                                       const SemanticsRef& sem,
                                       const std::vector<PropertyId>& props,
                                       const CheckOptions& opts = {});

// Re-runs the check on the witness input and re-evaluates the recorded
// comparison in the witness framework. True iff both still fail.
bool replay(const PropertyVerdict& verdict, const SemanticsRef& sem,
            const CheckOptions& opts = {});

bool defense_is_simple(const ArgFramework& framework, ArgIndex a);
bool defense_is_distributed(const ArgFramework& framework, ArgIndex a);

// AF* = F ∪ γ(F) ∪ P(γ(target)) with a branch of the given kind and length.
struct StarFramework {
  ArgFramework framework;
  Bijection clone;  // F name -> clone name
  std::vector<std::string> branch;
};
StarFramework build_star(const ArgFramework& framework,
                         const std::string& target, BranchKind kind,
                         int length);

// The pairs of properties no semantics can satisfy together.
enum class IncompatiblePair { kCpQp, kCpAvsFD, kCpPlusDB, kVpPlusDBStrict };
inline constexpr std::array<IncompatiblePair, 4> kAllIncompatiblePairs = {
    IncompatiblePair::kCpQp, IncompatiblePair::kCpAvsFD,
    IncompatiblePair::kCpPlusDB, IncompatiblePair::kVpPlusDBStrict};
std::string_view pair_name(IncompatiblePair pair);
std::optional<IncompatiblePair> parse_pair(std::string_view text);

struct IncompatibilityWitness {
  IncompatiblePair pair;
  ArgFramework base;       // F
  ArgFramework framework;  // where the demands clash (F or AF*)
  // First property demands x > y, second demands y > x.
  std::string x;
  std::string y;
  std::string explanation;
};

IncompatibilityWitness incompatibility_witness(IncompatiblePair pair);
// Recomputes both demands from the structure of the witness alone.
bool replay_incompatibility(const IncompatibilityWitness& witness);

// Per-instance consequences between properties. Each failed implication is
// named, e.g. "SCT=>VP".
std::vector<std::string> audit_dependencies(
    const std::map<PropertyId, Status>& statuses);

// {property, semantics, framework-hash, status, witness-apx, details}
nlohmann::json verdict_record(const PropertyVerdict& verdict,
                              const ArgFramework& framework);
std::string framework_hash(const ArgFramework& framework);

}  // namespace rankarg

#endif  // RANKARG_AXIOMS_HPP_
