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

// Framework generators and the corpus-wide satisfaction matrix.

#ifndef RANKARG_FUZZ_HPP_
#define RANKARG_FUZZ_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rankarg/axioms.hpp"
#include "rankarg/framework.hpp"
#include "rankarg/semantics.hpp"

namespace rankarg {

struct GenSpec {
  int min_args = 2;
  int max_args = 7;
  double edge_density = 0.3;
  bool allow_self_attacks = true;
  bool acyclic_only = false;
  std::uint64_t seed = 0;
};

// Deterministic stream: the same spec yields the same frameworks.
class RandomFrameworks {
 public:
  explicit RandomFrameworks(const GenSpec& spec);
  ArgFramework next();

 private:
  double uniform();  // [0, 1) from the top 53 bits
  GenSpec spec_;
  std::mt19937_64 rng_;
};

std::vector<ArgFramework> gen_random(const GenSpec& spec, int count);

// Every labeled digraph on n <= 4 arguments, in attack-bitmask order.
std::vector<ArgFramework> enumerate_all(int n, bool allow_self_attacks);

// Argument names used by the generators: a, b, ..., z, a26, a27, ...
std::vector<std::string> generated_names(int n);

struct CorpusItem {
  ArgFramework framework;
  std::string origin;  // "exhaustive", "random", "acyclic", "layered"
};

// The default is the budget the satisfaction matrix is calibrated on: the
// rarest premises (DDP under M&T, AvsFD under SAF) need nine-argument
// cycles and thirteen-argument layered DAGs respectively.
struct CorpusSpec {
  int exhaustive_max = 3;  // all digraphs with self-attacks, n <= this
  int random_trials = 4000;
  int acyclic_trials = 2000;
  int layered_trials = 10000;  // up to 16 arguments in 3 to 7 layers
  int min_args = 2;
  int max_args = 9;
  std::vector<double> densities = {0.15, 0.3, 0.5};
  std::uint64_t seed = 20150725;
};

std::vector<CorpusItem> build_corpus(const CorpusSpec& spec);

// Which corpus items a cell evaluates.
bool cell_applies(SemanticsId sem, const ArgFramework& framework);
inline constexpr int kMtCorpusMaxArgs = 12;

enum class Expectation { kSatisfied, kViolated, kNotApplicable };
// The published satisfaction table.
Expectation reference_expectation(SemanticsId sem, PropertyId prop);

struct CellReport {
  int trials = 0;
  int holds = 0;
  int violations = 0;
  int not_applicable = 0;
  int inconclusive = 0;
  int first_index = -1;  // corpus index of the first violation
  std::optional<PropertyVerdict> first;   // as found
  std::optional<PropertyVerdict> shrunk;  // after greedy deletion
  bool replayed = false;                  // shrunk witness replays

  Expectation observed(SemanticsId sem, PropertyId prop) const;
};

struct AuditFailure {
  int corpus_index;
  SemanticsId semantics;
  std::string rule;
};

struct MatrixReport {
  std::vector<SemanticsId> semantics;
  std::vector<PropertyId> properties;
  std::map<std::pair<SemanticsId, PropertyId>, CellReport> cells;
  std::vector<AuditFailure> audit_failures;
  int corpus_size = 0;
  SolverTotals totals;
  double seconds = 0.0;

  const CellReport& cell(SemanticsId s, PropertyId p) const {
    return cells.at({s, p});
  }
};

struct MatrixOptions {
  SolverConfig cfg;
  CheckOptions check;
  bool shrink = true;
  // Called after each corpus item with (done, total).
  std::function<void(int, int)> progress;
};

MatrixReport build_matrix(const std::vector<CorpusItem>& corpus,
                          const std::vector<SemanticsId>& semantics,
                          const std::vector<PropertyId>& properties,
                          const MatrixOptions& opts = {});

// Greedy deletion of arguments, then attacks, while the property stays
// violated. The result admits no further single deletion.
PropertyVerdict shrink_witness(const ArgFramework& framework, PropertyId prop,
                               const SemanticsRef& sem,
                               const CheckOptions& opts = {});

// Grid in the layout of the published table: one row per property.
std::string render_matrix(const MatrixReport& report);
// One JSON object per line: cells, audit failures, then a summary.
std::vector<nlohmann::json> matrix_records(const MatrixReport& report);

}  // namespace rankarg

#endif  // RANKARG_FUZZ_HPP_
