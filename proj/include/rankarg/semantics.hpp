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

// Ranking-based semantics: Categoriser, SAF simple product, discussion and
// burden counts, Tuples*, Matt & Toni games, and the grounded labelling.

#ifndef RANKARG_SEMANTICS_HPP_
#define RANKARG_SEMANTICS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankarg/framework.hpp"
#include "rankarg/game.hpp"
#include "rankarg/ranking.hpp"

namespace rankarg {

struct SolverConfig {
  double epsilon = 0.1;
  double tol = 1e-12;
  int max_iter = 10'000;
  std::optional<int> lex_depth;  // 2|A| + 2 when unset
  int mt_cap = 14;
  // Solve each M&T game on the connected component of its argument. The
  // value does not change; only the game size does.
  bool mt_component_reduction = true;

  int depth_for(const ArgFramework& framework) const {
    return lex_depth ? *lex_depth : 2 * framework.size() + 2;
  }
};

struct ScoreTable {
  std::vector<std::string> names;
  std::vector<double> values;
  // Largest violation of the defining equation at the returned point.
  double residual = 0.0;
  int iterations = 0;

  double at(const std::string& name) const;
};

ScoreTable categoriser_scores(const ArgFramework& framework,
                              const SolverConfig& cfg = {});
ScoreTable saf_scores(const ArgFramework& framework,
                      const SolverConfig& cfg = {});
// Cat and SAF ranking. Scores span many orders of magnitude (SAF reaches
// 1e-7 on a dozen arguments) and acyclic inputs are solved exactly, so a
// fixed absolute tie cutoff would merge distinct scores. Neighbours tie when
// they differ by at most kFixpointRelativeTie relative to the larger one, or
// kFixpointResidualTie times the solve's residual.
inline constexpr double kFixpointRelativeTie = 1e-12;
inline constexpr double kFixpointResidualTie = 1e3;
Ranking fixpoint_ranking(const ScoreTable& scores);

// Entry i - 1 holds step i: +walks of length i into the argument for odd i,
// -walks for even i. Lower vectors rank higher.
std::vector<std::vector<BigInt>> dbs_vectors(const ArgFramework& framework,
                                             const SolverConfig& cfg = {});
Ranking dbs_ranking(const ArgFramework& framework,
                    const SolverConfig& cfg = {});

// Entry i holds Bur_i for i = 0..lex_depth. Lower vectors rank higher.
std::vector<std::vector<double>> bbs_vectors(const ArgFramework& framework,
                                             const SolverConfig& cfg = {});
Ranking bbs_ranking(const ArgFramework& framework,
                    const SolverConfig& cfg = {});

// Ascending tuples kept as length -> multiplicity, since the multiplicities
// grow exponentially with depth.
struct TupledValue {
  std::map<int, std::uint64_t> defense;  // v_p, even lengths
  std::map<int, std::uint64_t> attack;   // v_i, odd lengths

  std::uint64_t defense_size() const;
  std::uint64_t attack_size() const;
  // Expanded form, for display and tests on small inputs.
  std::vector<int> defense_tuple() const;
  std::vector<int> attack_tuple() const;
  friend bool operator==(const TupledValue&, const TupledValue&) = default;
};

// Lexicographic comparison of two ascending tuples of equal size given as
// multiplicity maps.
std::weak_ordering compare_tuples(const std::map<int, std::uint64_t>& v,
                                  const std::map<int, std::uint64_t>& w);

// Pairwise verdict of the tuple comparison for attacked arguments.
// Returns +1 (a above b), -1 (below), 0 (equivalent) or nullopt
// (incomparable).
std::optional<int> tuples_compare(const TupledValue& v, const TupledValue& w);

// Both throw CyclicFramework.
std::vector<TupledValue> tuples_values(const ArgFramework& framework);
// Unattacked arguments form the top class; attacked ones are related by
// tuples_compare.
Ranking tuples_ranking(const ArgFramework& framework);

struct MtDiagnostics {
  double max_duality_gap = 0.0;
  int games = 0;
  int lp_solves = 0;
  int largest_game = 0;  // arguments in the largest solved game
};

// Reward of proponent set P against opponent set O, as bitmasks over the
// framework's arguments (frameworks up to 31 arguments).
double mt_reward(const ArgFramework& framework, std::uint32_t p,
                 std::uint32_t o);
// Full reward matrix for argument a: rows are all P containing a in
// increasing mask order, columns all O. Only for small frameworks.
GameMatrix mt_reward_matrix(const ArgFramework& framework, ArgIndex a);
double mt_value(const ArgFramework& framework, ArgIndex a,
                const SolverConfig& cfg = {}, MtDiagnostics* diag = nullptr);
ScoreTable mt_scores(const ArgFramework& framework,
                     const SolverConfig& cfg = {},
                     MtDiagnostics* diag = nullptr);

enum class Label { kIn, kUndec, kOut };
std::vector<Label> grounded_labelling(const ArgFramework& framework);
std::vector<std::string> grounded_extension(const ArgFramework& framework);
// IN above UNDEC above OUT.
Ranking grounded_ranking(const ArgFramework& framework);

// Process-wide counters over every solve since the last reset, including
// the ones made inside property checks.
struct SolverTotals {
  long cat_solves = 0;
  long saf_solves = 0;
  long nonconvergent = 0;
  double max_cat_residual = 0.0;  // over converged solves
  double max_saf_residual = 0.0;
  long games_solved = 0;          // cache misses
  long games_reused = 0;          // cache hits
  long lp_solves = 0;
  double max_duality_gap = 0.0;
};
SolverTotals solver_totals();
void reset_solver_totals();

enum class SemanticsId { kCat, kSaf, kDbs, kBbs, kTuples, kMt, kGrounded };

inline constexpr std::array<SemanticsId, 7> kAllSemantics = {
    SemanticsId::kSaf, SemanticsId::kCat,    SemanticsId::kDbs,
    SemanticsId::kBbs, SemanticsId::kTuples, SemanticsId::kMt,
    SemanticsId::kGrounded};

std::string_view semantics_name(SemanticsId id);   // "cat", "saf", ...
std::string_view semantics_label(SemanticsId id);  // "Cat", "SAF", ...
// Accepts either form, case-insensitively.
std::optional<SemanticsId> parse_semantics(std::string_view text);

struct Evaluation {
  SemanticsId id = SemanticsId::kCat;
  Ranking ranking;
  std::optional<ScoreTable> scores;                      // cat, saf, mt
  std::optional<std::vector<std::vector<BigInt>>> dbs;   // dbs
  std::optional<std::vector<std::vector<double>>> bbs;   // bbs
  std::optional<std::vector<TupledValue>> tuples;        // tuples
  std::optional<std::vector<Label>> labels;              // grounded
  std::optional<MtDiagnostics> mt;                       // mt
  int lex_depth = 0;                                     // dbs, bbs
};

// Throws CyclicFramework (tuples) or a SemanticsError.
Evaluation evaluate(const ArgFramework& framework, SemanticsId id,
                    const SolverConfig& cfg = {});
Ranking rank(const ArgFramework& framework, SemanticsId id,
             const SolverConfig& cfg = {});

}  // namespace rankarg

#endif  // RANKARG_SEMANTICS_HPP_
