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

#include "rankarg/report.hpp"

#include <algorithm>
#include <sstream>

#include "rankarg/error.hpp"

namespace rankarg {

std::vector<std::vector<std::vector<ArgIndex>>> ranking_layers(
    const Ranking& r) {
  const auto classes = r.classes();
  const int k = static_cast<int>(classes.size());
  // classes() is a linear extension, so every class above C comes first.
  std::vector<int> layer(k, 0);
  int depth = 0;
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < c; ++d) {
      if (r.strictly(classes[d][0], classes[c][0])) {
        layer[c] = std::max(layer[c], layer[d] + 1);
      }
    }
    depth = std::max(depth, layer[c] + 1);
  }
  std::vector<std::vector<std::vector<ArgIndex>>> out(depth);
  for (int c = 0; c < k; ++c) out[layer[c]].push_back(classes[c]);
  return out;
}

std::string format_ranking(const Ranking& r) {
  std::ostringstream out;
  bool first_layer = true;
  for (const auto& layer : ranking_layers(r)) {
    if (!first_layer) out << " > ";
    first_layer = false;
    for (std::size_t c = 0; c < layer.size(); ++c) {
      if (c) out << " | ";
      for (std::size_t i = 0; i < layer[c].size(); ++i) {
        if (i) out << " = ";
        out << r.name(layer[c][i]);
      }
    }
  }
  for (auto [x, y] : r.incomparable_pairs()) {
    out << "\n" << r.name(x) << " ? " << r.name(y);
  }
  return out.str();
}

nlohmann::json evaluation_record(const ArgFramework& f, const Evaluation& e,
                                 const SolverConfig& cfg) {
  using nlohmann::json;
  json j;
  j["semantics"] = semantics_name(e.id);
  json config = {{"epsilon", cfg.epsilon},
                 {"tol", cfg.tol},
                 {"max_iter", cfg.max_iter},
                 {"mt_cap", cfg.mt_cap}};
  config["lex_depth"] = cfg.lex_depth ? json(*cfg.lex_depth) : json(nullptr);
  j["config"] = config;
  j["arguments"] = f.names();

  const Ranking& r = e.ranking;
  const auto classes = r.classes();
  json cls = json::array();
  for (const auto& c : classes) {
    json names = json::array();
    for (ArgIndex a : c) names.push_back(r.name(a));
    cls.push_back(names);
  }
  j["classes"] = cls;
  json order = json::array();
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = 0; y < classes.size(); ++y) {
      if (r.strictly(classes[x][0], classes[y][0])) order.push_back({x, y});
    }
  }
  j["order"] = order;  // [i, j]: class i strictly above class j
  json inc = json::array();
  for (auto [x, y] : r.incomparable_pairs()) inc.push_back({r.name(x), r.name(y)});
  j["incomparable"] = inc;
  j["text"] = format_ranking(r);

  if (e.scores) {
    json s = json::object();
    for (ArgIndex a = 0; a < f.size(); ++a) s[f.name(a)] = e.scores->values[a];
    j["scores"] = s;
    if (e.id == SemanticsId::kCat || e.id == SemanticsId::kSaf) {
      j["residual"] = e.scores->residual;
      j["iterations"] = e.scores->iterations;
    }
  }
  if (e.dbs) {
    json s = json::object();
    for (ArgIndex a = 0; a < f.size(); ++a) {
      json steps = json::array();
      // Strings: the counts outgrow 64 bits on long walks.
      for (const BigInt& v : (*e.dbs)[a]) steps.push_back(v.str());
      s[f.name(a)] = steps;
    }
    j["steps"] = s;
    j["lex_depth"] = e.lex_depth;
  }
  if (e.bbs) {
    json s = json::object();
    for (ArgIndex a = 0; a < f.size(); ++a) s[f.name(a)] = (*e.bbs)[a];
    j["steps"] = s;
    j["lex_depth"] = e.lex_depth;
  }
  if (e.tuples) {
    json s = json::object();
    auto runs = [](const std::map<int, std::uint64_t>& m) {
      json out = json::array();
      for (auto [len, count] : m) out.push_back({len, count});
      return out;
    };
    for (ArgIndex a = 0; a < f.size(); ++a) {
      const TupledValue& t = (*e.tuples)[a];
      s[f.name(a)] = {{"defense", runs(t.defense)}, {"attack", runs(t.attack)}};
    }
    j["tuples"] = s;  // [length, multiplicity] runs
  }
  if (e.labels) {
    json s = json::object();
    for (ArgIndex a = 0; a < f.size(); ++a) {
      switch ((*e.labels)[a]) {
        case Label::kIn: s[f.name(a)] = "in"; break;
        case Label::kUndec: s[f.name(a)] = "undec"; break;
        case Label::kOut: s[f.name(a)] = "out"; break;
      }
    }
    j["labels"] = s;
  }
  if (e.mt) {
    j["games"] = {{"solved", e.mt->games},
                  {"lp_solves", e.mt->lp_solves},
                  {"largest", e.mt->largest_game},
                  {"max_duality_gap", e.mt->max_duality_gap}};
  }
  return j;
}

Ranking ranking_from_record(const nlohmann::json& j) {
  std::vector<std::string> names = j.at("arguments").get<std::vector<std::string>>();
  Ranking r(names);
  std::vector<std::vector<ArgIndex>> classes;
  for (const auto& c : j.at("classes")) {
    std::vector<ArgIndex> members;
    for (const auto& n : c) members.push_back(r.index_of(n.get<std::string>()));
    classes.push_back(members);
  }
  for (const auto& c : classes) {
    for (ArgIndex x : c) {
      for (ArgIndex y : c) r.set_geq(x, y);
    }
  }
  for (const auto& p : j.at("order")) {
    const auto& hi = classes.at(p.at(0).get<std::size_t>());
    const auto& lo = classes.at(p.at(1).get<std::size_t>());
    for (ArgIndex x : hi) {
      for (ArgIndex y : lo) r.set_geq(x, y);
    }
  }
  return r;
}

std::string format_verdict(const PropertyVerdict& v) {
  std::ostringstream out;
  out << property_label(v.property) << " under " << semantics_label(v.semantics)
      << ": " << status_name(v.status) << " (instances: " << v.instances
      << ")";
  if (!v.reason.empty()) out << ": " << v.reason;
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "\nfailed demand: " << w.a << " " << w.relation << " " << w.b;
    if (!w.details.empty()) out << " (" << w.details << ")";
    if (!(w.framework == w.input)) {
      out << "\nin:\n" << serialize_apx(w.framework);
    }
  }
  return out.str();
}

std::string witness_file(const PropertyVerdict& v) {
  if (!v.witness) throw Error("verdict has no witness");
  const Witness& w = *v.witness;
  std::ostringstream out;
  out << "% rankarg witness\n"
      << "% property: " << property_name(v.property) << "\n"
      << "% semantics: " << semantics_name(v.semantics) << "\n"
      << "% failed demand: " << w.a << " " << w.relation << " " << w.b << "\n";
  if (!w.details.empty()) out << "% " << w.details << "\n";
  out << serialize_apx(w.input);
  return out.str();
}

WitnessHeader parse_witness_header(const std::string& text) {
  WitnessHeader h;
  std::istringstream in(text);
  std::string line;
  auto field = [&](const std::string& key) -> std::optional<std::string> {
    const std::string prefix = "% " + key + ": ";
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    std::string v = line.substr(prefix.size());
    while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.pop_back();
    return v;
  };
  while (std::getline(in, line)) {
    if (auto v = field("property")) h.property = parse_property(*v);
    if (auto v = field("semantics")) h.semantics = parse_semantics(*v);
  }
  return h;
}

}  // namespace rankarg
