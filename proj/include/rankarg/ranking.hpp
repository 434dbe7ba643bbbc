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

// Preorders over arguments, lexicographic comparison of step vectors and the
// group comparison between sets of arguments.

#ifndef RANKARG_RANKING_HPP_
#define RANKARG_RANKING_HPP_

#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankarg/error.hpp"
#include "rankarg/framework.hpp"

namespace rankarg {

// Absolute tolerance under which two scores are declared tied.
inline constexpr double kScoreTieTolerance = 1e-9;

// A preorder over the arguments of one framework. geq(a, b) means a is at
// least as acceptable as b.
class Ranking {
 public:
  Ranking() = default;
  // Starts as the identity relation (reflexive only).
  explicit Ranking(std::vector<std::string> arguments);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ArgIndex a) const { return names_[a]; }
  ArgIndex index_of(const std::string& name) const;

  bool geq(ArgIndex a, ArgIndex b) const { return geq_[a * size() + b]; }
  bool strictly(ArgIndex a, ArgIndex b) const {
    return geq(a, b) && !geq(b, a);
  }
  bool equivalent(ArgIndex a, ArgIndex b) const {
    return geq(a, b) && geq(b, a);
  }
  bool incomparable(ArgIndex a, ArgIndex b) const {
    return !geq(a, b) && !geq(b, a);
  }
  bool geq(const std::string& a, const std::string& b) const {
    return geq(index_of(a), index_of(b));
  }
  bool strictly(const std::string& a, const std::string& b) const {
    return strictly(index_of(a), index_of(b));
  }
  bool equivalent(const std::string& a, const std::string& b) const {
    return equivalent(index_of(a), index_of(b));
  }

  void set_geq(ArgIndex a, ArgIndex b, bool value = true) {
    geq_[a * size() + b] = value;
  }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_total() const;

  // Equivalence classes ordered so that no class is strictly below a later
  // one (a linear extension of the strict part). Members keep index order.
  std::vector<std::vector<ArgIndex>> classes() const;
  std::vector<std::pair<ArgIndex, ArgIndex>> incomparable_pairs() const;

 private:
  std::vector<std::string> names_;
  std::vector<char> geq_;
};

// Builds the total preorder a >= b iff key(a) >= key(b) (or <= for
// lower-is-better), ties within kScoreTieTolerance.
enum class Direction { kHigherIsBetter, kLowerIsBetter };
Ranking ranking_from_scores(const std::vector<std::string>& names,
                            std::span<const double> scores,
                            Direction direction);
// Lexicographic analogue over equal-length key vectors; entries within
// `tolerance` are tied.
Ranking ranking_from_vectors(const std::vector<std::string>& names,
                             const std::vector<std::vector<double>>& keys,
                             Direction direction, double tolerance);

// Total preorder from integer levels: lower level ranks higher.
Ranking ranking_from_levels(const std::vector<std::string>& names,
                            const std::vector<int>& levels);

// Outcome of comparing two equal-length vectors position by position.
struct LexOutcome {
  std::weak_ordering order = std::weak_ordering::equivalent;
  // Position (0-based) of the first deciding entry, absent when equal.
  std::optional<std::size_t> decided_at;
};

// Standard lexicographic order: the first differing entry decides. Throws
// Error on a length mismatch.
template <class T>
LexOutcome lex_compare(std::span<const T> v, std::span<const T> w) {
  if (v.size() != w.size()) throw Error("lex_compare: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < w[i]) return {std::weak_ordering::less, i};
    if (w[i] < v[i]) return {std::weak_ordering::greater, i};
  }
  return {};
}

// Floating-point variant: entries within `tolerance` compare equal.
LexOutcome lex_compare(std::span<const double> v, std::span<const double> w,
                       double tolerance);

inline LexOutcome lex_compare(const std::vector<double>& v,
                              const std::vector<double>& w,
                              double tolerance = 0.0) {
  return lex_compare(std::span<const double>(v), std::span<const double>(w),
                     tolerance);
}

// S1 >=_S S2: an injective f: S2 -> S1 with f(x) >= x for every x in S2.
bool group_geq(std::span<const ArgIndex> s1, std::span<const ArgIndex> s2,
               const Ranking& ranking);
// Strict version: group_geq and (|S2| < |S1| or a single witness f has at
// least one strict pair).
bool group_gt(std::span<const ArgIndex> s1, std::span<const ArgIndex> s2,
              const Ranking& ranking);

// Maximum bipartite matching of `left` into `right` where edge(l, r) holds.
// Returns the matching size.
template <class Edge>
int max_matching(int left, int right, Edge edge);

}  // namespace rankarg

#include "rankarg/matching_impl.hpp"

#endif  // RANKARG_RANKING_HPP_
