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

// Text and JSON renderings of rankings and evaluations.

#ifndef RANKARG_REPORT_HPP_
#define RANKARG_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rankarg/axioms.hpp"
#include "rankarg/ranking.hpp"
#include "rankarg/semantics.hpp"

namespace rankarg {

// Classes grouped into layers by longest strict chain from the top. A total
// preorder has one class per layer.
std::vector<std::vector<std::vector<ArgIndex>>> ranking_layers(
    const Ranking& ranking);

// `b > d > e = c > a`. Incomparable classes sharing a layer are joined by
// ` | `, and every incomparable pair follows on its own `x ? y` line.
std::string format_ranking(const Ranking& ranking);

// {semantics, config, arguments, classes, order, incomparable, ...} plus
// the semantics' own values (scores, step vectors, tuples, labels).
nlohmann::json evaluation_record(const ArgFramework& framework,
                                 const Evaluation& evaluation,
                                 const SolverConfig& cfg);

// Inverse of the ranking part of evaluation_record.
Ranking ranking_from_record(const nlohmann::json& record);

// Verdict text for the check and witness verbs.
std::string format_verdict(const PropertyVerdict& verdict);

// Witness files are APX with a `%` header naming property and semantics.
std::string witness_file(const PropertyVerdict& verdict);
struct WitnessHeader {
  std::optional<PropertyId> property;
  std::optional<SemanticsId> semantics;
};
WitnessHeader parse_witness_header(const std::string& text);

}  // namespace rankarg

#endif  // RANKARG_REPORT_HPP_
