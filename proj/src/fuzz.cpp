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

#include "rankarg/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "rankarg/error.hpp"

namespace rankarg {

std::vector<std::string> generated_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "a" + std::to_string(i));
  }
  return names;
}

RandomFrameworks::RandomFrameworks(const GenSpec& spec)
    : spec_(spec), rng_(spec.seed) {
  if (spec.min_args < 0 || spec.max_args < spec.min_args) {
    throw Error("GenSpec: bad argument range");
  }
  if (!(spec.edge_density >= 0.0 && spec.edge_density <= 1.0)) {
    throw Error("GenSpec: density must lie in [0, 1]");
  }
}

double RandomFrameworks::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

ArgFramework RandomFrameworks::next() {
  const int span = spec_.max_args - spec_.min_args + 1;
  const int n = spec_.min_args + static_cast<int>(rng_() % span);
  std::vector<ArgIndex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (spec_.acyclic_only) {
    for (int i = n - 1; i > 0; --i) {
      std::swap(order[i], order[static_cast<int>(rng_() % (i + 1))]);
    }
  }
  std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (spec_.acyclic_only) {
        // Only edges that run forward in the random topological order.
        if (i >= j) continue;
      } else if (i == j && !spec_.allow_self_attacks) {
        continue;
      }
      if (uniform() < spec_.edge_density) attacks.emplace_back(order[i], order[j]);
    }
  }
  return ArgFramework::from_indices(generated_names(n), attacks);
}

std::vector<ArgFramework> gen_random(const GenSpec& spec, int count) {
  RandomFrameworks stream(spec);
  std::vector<ArgFramework> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

std::vector<ArgFramework> enumerate_all(int n, bool allow_self_attacks) {
  if (n < 0 || n > 4) throw Error("enumerate_all supports 0 <= n <= 4");
  std::vector<std::pair<ArgIndex, ArgIndex>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j || allow_self_attacks) slots.emplace_back(i, j);
    }
  }
  const auto names = generated_names(n);
  std::vector<ArgFramework> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) attacks.push_back(slots[s]);
    }
    out.push_back(ArgFramework::from_indices(names, attacks));
  }
  return out;
}

namespace {

// Layered DAGs: arguments of one layer attack arguments of the layer below
// with a per-framework density, so attack and defense branches overlap and
// multiply far more than in uniform random graphs.
ArgFramework layered(std::mt19937_64& rng, int max_args) {
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  static constexpr double kDensities[] = {0.35, 0.6, 1.0};
  const double density = kDensities[rng() % 3];
  std::vector<int> sizes;
  int total = 0;
  const int layers = 3 + static_cast<int>(rng() % 5);
  for (int l = 0; l < layers; ++l) {
    int s = 1 + static_cast<int>(rng() % 4);
    if (total + s > max_args) break;
    sizes.push_back(s);
    total += s;
  }
  std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
  int start = 0;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const int next = start + sizes[l];
    for (int x = start; x < next; ++x) {
      for (int y = next; y < next + sizes[l + 1]; ++y) {
        if (uniform() < density) attacks.emplace_back(y, x);
      }
    }
    start = next;
  }
  return ArgFramework::from_indices(generated_names(total), attacks);
}

}  // namespace

std::vector<CorpusItem> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusItem> corpus;
  for (int n = 1; n <= spec.exhaustive_max; ++n) {
    for (ArgFramework& f : enumerate_all(n, true)) {
      corpus.push_back({std::move(f), "exhaustive"});
    }
  }
  if (spec.densities.empty()) throw Error("corpus needs at least one density");
  auto streams = [&](bool acyclic, std::uint64_t salt) {
    std::vector<RandomFrameworks> out;
    for (std::size_t k = 0; k < spec.densities.size(); ++k) {
      GenSpec g;
      g.min_args = spec.min_args;
      g.max_args = spec.max_args;
      g.edge_density = spec.densities[k];
      g.allow_self_attacks = !acyclic;
      g.acyclic_only = acyclic;
      g.seed = spec.seed * 1000003ULL + salt * 101ULL + k;
      out.emplace_back(g);
    }
    return out;
  };
  auto general = streams(false, 1);
  for (int i = 0; i < spec.random_trials; ++i) {
    corpus.push_back({general[i % general.size()].next(), "random"});
  }
  auto acyclic = streams(true, 2);
  for (int i = 0; i < spec.acyclic_trials; ++i) {
    corpus.push_back({acyclic[i % acyclic.size()].next(), "acyclic"});
  }
  std::mt19937_64 rng(spec.seed * 1000003ULL + 3 * 101ULL);
  for (int i = 0; i < spec.layered_trials; ++i) {
    corpus.push_back({layered(rng, 16), "layered"});
  }
  return corpus;
}

bool cell_applies(SemanticsId sem, const ArgFramework& f) {
  if (sem == SemanticsId::kTuples) return f.is_acyclic();
  if (sem == SemanticsId::kMt) return f.size() <= kMtCorpusMaxArgs;
  return true;
}

Expectation reference_expectation(SemanticsId sem, PropertyId prop) {
  // Columns: SAF, Cat, Dbs, Bbs, Tuples*, M&T, Grounded.
  static const std::map<PropertyId, const char*> kTable = {
      {PropertyId::kAbs, "1111111"},          {PropertyId::kIn, "1111111"},
      {PropertyId::kVP, "1111110"},           {PropertyId::kDP, "1111000"},
      {PropertyId::kCT, "1111001"},           {PropertyId::kSCT, "1111000"},
      {PropertyId::kCP, "0011000"},           {PropertyId::kQP, "0000001"},
      {PropertyId::kDDP, "0001000"},          {PropertyId::kSC, "0000-10"},
      {PropertyId::kPlusDBStrict, "0000000"}, {PropertyId::kPlusDB, "0000100"},
      {PropertyId::kIncAB, "1111100"},        {PropertyId::kIncDB, "1111100"},
      {PropertyId::kPlusAB, "1111110"},       {PropertyId::kTot, "1111011"},
      {PropertyId::kNaE, "1111111"},          {PropertyId::kAvsFD, "0000111"},
  };
  int column = 0;
  switch (sem) {
    case SemanticsId::kSaf: column = 0; break;
    case SemanticsId::kCat: column = 1; break;
    case SemanticsId::kDbs: column = 2; break;
    case SemanticsId::kBbs: column = 3; break;
    case SemanticsId::kTuples: column = 4; break;
    case SemanticsId::kMt: column = 5; break;
    case SemanticsId::kGrounded: column = 6; break;
  }
  switch (kTable.at(prop)[column]) {
    case '1': return Expectation::kSatisfied;
    case '0': return Expectation::kViolated;
    default: return Expectation::kNotApplicable;
  }
}

Expectation CellReport::observed(SemanticsId sem, PropertyId prop) const {
  if (violations > 0) return Expectation::kViolated;
  if (reference_expectation(sem, prop) == Expectation::kNotApplicable &&
      holds == 0) {
    return Expectation::kNotApplicable;
  }
  return Expectation::kSatisfied;
}

PropertyVerdict shrink_witness(const ArgFramework& framework, PropertyId prop,
                               const SemanticsRef& sem,
                               const CheckOptions& opts) {
  PropertyVerdict best = check(prop, framework, sem, opts);
  if (best.status != Status::kViolated) return best;
  ArgFramework cur = framework;
  auto try_candidate = [&](const ArgFramework& g) {
    if (!cell_applies(sem.id, g) && cell_applies(sem.id, cur)) return false;
    PropertyVerdict v = check(prop, g, sem, opts);
    if (v.status != Status::kViolated) return false;
    cur = g;
    best = std::move(v);
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (ArgIndex drop = 0; drop < cur.size() && !changed; ++drop) {
      std::vector<ArgIndex> keep;
      for (ArgIndex x = 0; x < cur.size(); ++x) {
        if (x != drop) keep.push_back(x);
      }
      changed = try_candidate(induced(cur, keep));
    }
    const auto pairs = cur.attack_pairs();
    for (std::size_t k = 0; k < pairs.size() && !changed; ++k) {
      auto rest = pairs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      changed = try_candidate(ArgFramework::from_indices(cur.names(), rest));
    }
  }
  return best;
}

MatrixReport build_matrix(const std::vector<CorpusItem>& corpus,
                          const std::vector<SemanticsId>& semantics,
                          const std::vector<PropertyId>& properties,
                          const MatrixOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  reset_solver_totals();
  MatrixReport report;
  report.semantics = semantics;
  report.properties = properties;
  report.corpus_size = static_cast<int>(corpus.size());
  for (SemanticsId s : semantics) {
    for (PropertyId p : properties) report.cells[{s, p}] = {};
  }
  for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
    const ArgFramework& f = corpus[i].framework;
    CheckOptions check = opts.check;
    check.seed = opts.check.seed + static_cast<std::uint64_t>(i);
    for (SemanticsId s : semantics) {
      if (!cell_applies(s, f)) continue;
      auto verdicts = check_all(f, {s, opts.cfg}, properties, check);
      std::map<PropertyId, Status> statuses;
      for (PropertyVerdict& v : verdicts) {
        CellReport& c = report.cells[{s, v.property}];
        ++c.trials;
        statuses[v.property] = v.status;
        switch (v.status) {
          case Status::kHolds: ++c.holds; break;
          case Status::kNotApplicable: ++c.not_applicable; break;
          case Status::kInconclusive: ++c.inconclusive; break;
          case Status::kViolated:
            if (c.violations++ == 0) {
              c.first_index = i;
              c.first = std::move(v);
            }
            break;
        }
      }
      for (const std::string& rule : audit_dependencies(statuses)) {
        report.audit_failures.push_back({i, s, rule});
      }
    }
    if (opts.progress) opts.progress(i + 1, static_cast<int>(corpus.size()));
  }
  // Shrinking re-solves small frameworks only; the totals above describe the
  // corpus run.
  report.totals = solver_totals();
  for (auto& [key, c] : report.cells) {
    if (!c.first) continue;
    SemanticsRef sem{key.first, opts.cfg};
    CheckOptions check = opts.check;
    check.seed = opts.check.seed + static_cast<std::uint64_t>(c.first_index);
    c.shrunk = opts.shrink
                   ? shrink_witness(c.first->witness->input, key.second, sem,
                                    check)
                   : *c.first;
    c.replayed = replay(*c.shrunk, sem, check);
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return report;
}

namespace {

std::string symbol(Expectation e) {
  switch (e) {
    case Expectation::kSatisfied: return "✓";
    case Expectation::kViolated: return "✗";
    case Expectation::kNotApplicable: return "−";
  }
  return "?";
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::kSatisfied: return "satisfied";
    case Expectation::kViolated: return "violated";
    case Expectation::kNotApplicable: return "not_applicable";
  }
  return "?";
}

// Display width in code points; every symbol used here is single-width.
int width(const std::string& s) {
  int w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80 ? 1 : 0;
  return w;
}

std::string pad(const std::string& s, int w) {
  return s + std::string(std::max(0, w - width(s)), ' ');
}

}  // namespace

std::string render_matrix(const MatrixReport& r) {
  constexpr int kFirst = 8;
  constexpr int kCol = 15;
  std::ostringstream out;
  out << pad("", kFirst);
  for (SemanticsId s : r.semantics) out << pad(std::string(semantics_label(s)), kCol);
  out << "\n";
  int mismatches = 0;
  for (PropertyId p : r.properties) {
    out << pad(std::string(property_label(p)), kFirst);
    for (SemanticsId s : r.semantics) {
      const CellReport& c = r.cell(s, p);
      Expectation seen = c.observed(s, p);
      bool differs = seen != reference_expectation(s, p);
      mismatches += differs ? 1 : 0;
      std::string text = symbol(seen);
      if (seen != Expectation::kNotApplicable) {
        text += " " + std::to_string(c.violations) + "/" +
                std::to_string(c.trials);
      }
      if (differs) text += " !";
      out << pad(text, kCol);
    }
    out << "\n";
  }
  out << "\ncorpus: " << r.corpus_size << " frameworks, "
      << static_cast<long>(r.seconds) << " s\n";
  out << "cells differing from the reference table (!): " << mismatches << "\n";
  out << "dependency audit failures: " << r.audit_failures.size() << "\n";
  for (const AuditFailure& a : r.audit_failures) {
    out << "  item " << a.corpus_index << " " << semantics_label(a.semantics)
        << ": " << a.rule << "\n";
  }
  const SolverTotals& t = r.totals;
  out << "max residual: Cat " << t.max_cat_residual << ", SAF "
      << t.max_saf_residual << "; non-convergent solves: " << t.nonconvergent
      << "\n";
  out << "M&T games: " << t.games_solved << " solved, " << t.games_reused
      << " reused, max duality gap " << t.max_duality_gap << "\n";
  return out.str();
}

std::vector<nlohmann::json> matrix_records(const MatrixReport& r) {
  std::vector<nlohmann::json> out;
  for (SemanticsId s : r.semantics) {
    for (PropertyId p : r.properties) {
      const CellReport& c = r.cell(s, p);
      nlohmann::json j;
      j["kind"] = "cell";
      j["semantics"] = semantics_name(s);
      j["property"] = property_name(p);
      j["expected"] = expectation_name(reference_expectation(s, p));
      j["observed"] = expectation_name(c.observed(s, p));
      j["trials"] = c.trials;
      j["holds"] = c.holds;
      j["violations"] = c.violations;
      j["not_applicable"] = c.not_applicable;
      j["inconclusive"] = c.inconclusive;
      if (c.shrunk && c.shrunk->witness) {
        const Witness& w = *c.shrunk->witness;
        j["first_index"] = c.first_index;
        j["witness_apx"] = serialize_apx(w.input);
        j["witness"] = {{"a", w.a},
                        {"b", w.b},
                        {"relation", w.relation},
                        {"framework_apx", serialize_apx(w.framework)},
                        {"details", w.details}};
        j["replayed"] = c.replayed;
      } else {
        j["witness_apx"] = nullptr;
      }
      out.push_back(std::move(j));
    }
  }
  for (const AuditFailure& a : r.audit_failures) {
    out.push_back({{"kind", "audit_failure"},
                   {"corpus_index", a.corpus_index},
                   {"semantics", semantics_name(a.semantics)},
                   {"rule", a.rule}});
  }
  const SolverTotals& t = r.totals;
  out.push_back({{"kind", "summary"},
                 {"corpus_size", r.corpus_size},
                 {"seconds", r.seconds},
                 {"max_cat_residual", t.max_cat_residual},
                 {"max_saf_residual", t.max_saf_residual},
                 {"nonconvergent", t.nonconvergent},
                 {"games_solved", t.games_solved},
                 {"games_reused", t.games_reused},
                 {"max_duality_gap", t.max_duality_gap}});
  return out;
}

}  // namespace rankarg
