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

#include "rankarg/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numeric>

#include "rankarg/error.hpp"

namespace rankarg {

namespace detail {
std::mutex totals_mu;
SolverTotals totals;
}  // namespace detail

SolverTotals solver_totals() {
  std::lock_guard lock(detail::totals_mu);
  return detail::totals;
}

void reset_solver_totals() {
  std::lock_guard lock(detail::totals_mu);
  detail::totals = {};
}

namespace {

void record_fixpoint(bool cat, const ScoreTable* t) {
  std::lock_guard lock(detail::totals_mu);
  auto& s = detail::totals;
  (cat ? s.cat_solves : s.saf_solves) += 1;
  if (!t) {
    ++s.nonconvergent;
    return;
  }
  double& worst = cat ? s.max_cat_residual : s.max_saf_residual;
  worst = std::max(worst, t->residual);
}

template <class Step>
ScoreTable iterate_to_fixpoint(const ArgFramework& f, const SolverConfig& cfg,
                               double start, const std::string& what,
                               Step step) {
  if (!(cfg.tol > 0.0) || cfg.max_iter < 1) {
    throw Error("solver config needs tol > 0 and max_iter >= 1");
  }
  const int n = f.size();
  std::vector<double> cur(n, start), next(n);
  ScoreTable t;
  t.names = f.names();
  for (int it = 1;; ++it) {
    double change = 0.0;
    for (ArgIndex a = 0; a < n; ++a) {
      next[a] = step(a, cur);
      change = std::max(change, std::abs(next[a] - cur[a]));
    }
    cur.swap(next);
    if (change < cfg.tol) {
      t.iterations = it;
      break;
    }
    if (it >= cfg.max_iter) throw NonConvergence(what, it);
  }
  for (ArgIndex a = 0; a < n; ++a) {
    t.residual = std::max(t.residual, std::abs(cur[a] - step(a, cur)));
  }
  t.values = std::move(cur);
  return t;
}

}  // namespace

double ScoreTable::at(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UnknownArgument(name);
  return values[it - names.begin()];
}

ScoreTable categoriser_scores(const ArgFramework& f, const SolverConfig& cfg) {
  try {
    ScoreTable t = iterate_to_fixpoint(
        f, cfg, 1.0, "categoriser",
        [&](ArgIndex a, const std::vector<double>& x) {
          double sum = 0.0;
          for (ArgIndex b : f.attackers(a)) sum += x[b];
          return 1.0 / (1.0 + sum);
        });
    record_fixpoint(true, &t);
    return t;
  } catch (const NonConvergence&) {
    record_fixpoint(true, nullptr);
    throw;
  }
}

ScoreTable saf_scores(const ArgFramework& f, const SolverConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw Error("SAF needs epsilon > 0");
  const double tau = 1.0 / (1.0 + cfg.epsilon);
  // 1 - (x1 + x2 - x1 x2 ...) is the product of the complements.
  try {
    ScoreTable t = iterate_to_fixpoint(
        f, cfg, tau, "SAF", [&](ArgIndex a, const std::vector<double>& x) {
          double keep = 1.0;
          for (ArgIndex b : f.attackers(a)) keep *= 1.0 - x[b];
          return tau * keep;
        });
    record_fixpoint(false, &t);
    return t;
  } catch (const NonConvergence&) {
    record_fixpoint(false, nullptr);
    throw;
  }
}

Ranking fixpoint_ranking(const ScoreTable& t) {
  const int n = static_cast<int>(t.values.size());
  std::vector<ArgIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ArgIndex x, ArgIndex y) {
    return t.values[x] > t.values[y];
  });
  std::vector<int> level(n, 0);
  for (int i = 1; i < n; ++i) {
    const double hi = t.values[order[i - 1]];
    const double lo = t.values[order[i]];
    const double slack =
        std::max(kFixpointRelativeTie * hi, kFixpointResidualTie * t.residual);
    level[order[i]] = level[order[i - 1]] + (hi - lo > slack ? 1 : 0);
  }
  return ranking_from_levels(t.names, level);
}

std::vector<std::vector<BigInt>> dbs_vectors(const ArgFramework& f,
                                             const SolverConfig& cfg) {
  const int depth = cfg.depth_for(f);
  if (depth < 1) throw Error("lex_depth must be at least 1");
  WalkCountTable walks(f, depth);
  std::vector<std::vector<BigInt>> out(f.size());
  for (ArgIndex a = 0; a < f.size(); ++a) {
    out[a].reserve(depth);
    for (int i = 1; i <= depth; ++i) {
      const BigInt& c = walks.count_in(a, i);
      out[a].push_back(i % 2 == 1 ? c : BigInt(-c));
    }
  }
  return out;
}

Ranking dbs_ranking(const ArgFramework& f, const SolverConfig& cfg) {
  auto vectors = dbs_vectors(f, cfg);
  std::vector<ArgIndex> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ArgIndex x, ArgIndex y) {
    return vectors[x] < vectors[y];
  });
  std::vector<int> level(f.size(), 0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    level[order[i]] = level[order[i - 1]] +
                      (vectors[order[i]] == vectors[order[i - 1]] ? 0 : 1);
  }
  return ranking_from_levels(f.names(), level);
}

std::vector<std::vector<double>> bbs_vectors(const ArgFramework& f,
                                             const SolverConfig& cfg) {
  const int depth = cfg.depth_for(f);
  if (depth < 1) throw Error("lex_depth must be at least 1");
  const int n = f.size();
  std::vector<std::vector<double>> out(n, std::vector<double>(depth + 1, 1.0));
  for (int i = 1; i <= depth; ++i) {
    for (ArgIndex a = 0; a < n; ++a) {
      double sum = 1.0;
      for (ArgIndex b : f.attackers(a)) sum += 1.0 / out[b][i - 1];
      out[a][i] = sum;
    }
  }
  return out;
}

Ranking bbs_ranking(const ArgFramework& f, const SolverConfig& cfg) {
  return ranking_from_vectors(f.names(), bbs_vectors(f, cfg),
                              Direction::kLowerIsBetter, kScoreTieTolerance);
}

std::vector<Label> grounded_labelling(const ArgFramework& f) {
  const int n = f.size();
  std::vector<Label> label(n, Label::kUndec);
  // Unit propagation: IN once every attacker is OUT, OUT once some attacker
  // is IN. Reaches the least fixed point of the characteristic function.
  std::vector<int> pending(n);
  std::vector<ArgIndex> queue;
  for (ArgIndex a = 0; a < n; ++a) {
    pending[a] = static_cast<int>(f.attackers(a).size());
    if (pending[a] == 0) {
      label[a] = Label::kIn;
      queue.push_back(a);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ArgIndex x = queue[head];
    if (label[x] == Label::kIn) {
      for (ArgIndex t : f.targets(x)) {
        if (label[t] != Label::kUndec) continue;
        label[t] = Label::kOut;
        queue.push_back(t);
      }
    } else {
      for (ArgIndex t : f.targets(x)) {
        if (label[t] != Label::kUndec) continue;
        if (--pending[t] == 0) {
          label[t] = Label::kIn;
          queue.push_back(t);
        }
      }
    }
  }
  return label;
}

std::vector<std::string> grounded_extension(const ArgFramework& f) {
  auto label = grounded_labelling(f);
  std::vector<std::string> out;
  for (ArgIndex a = 0; a < f.size(); ++a) {
    if (label[a] == Label::kIn) out.push_back(f.name(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ranking grounded_ranking(const ArgFramework& f) {
  auto label = grounded_labelling(f);
  std::vector<int> level(f.size());
  for (ArgIndex a = 0; a < f.size(); ++a) level[a] = static_cast<int>(label[a]);
  return ranking_from_levels(f.names(), level);
}

std::string_view semantics_name(SemanticsId id) {
  switch (id) {
    case SemanticsId::kCat: return "cat";
    case SemanticsId::kSaf: return "saf";
    case SemanticsId::kDbs: return "dbs";
    case SemanticsId::kBbs: return "bbs";
    case SemanticsId::kTuples: return "tuples";
    case SemanticsId::kMt: return "mt";
    case SemanticsId::kGrounded: return "grounded";
  }
  return "?";
}

std::string_view semantics_label(SemanticsId id) {
  switch (id) {
    case SemanticsId::kCat: return "Cat";
    case SemanticsId::kSaf: return "SAF";
    case SemanticsId::kDbs: return "Dbs";
    case SemanticsId::kBbs: return "Bbs";
    case SemanticsId::kTuples: return "Tuples*";
    case SemanticsId::kMt: return "M&T";
    case SemanticsId::kGrounded: return "Grounded";
  }
  return "?";
}

std::optional<SemanticsId> parse_semantics(std::string_view text) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(c));
    return out;
  };
  const std::string t = lower(text);
  for (SemanticsId id : kAllSemantics) {
    if (t == semantics_name(id) || t == lower(semantics_label(id))) return id;
  }
  return std::nullopt;
}

Evaluation evaluate(const ArgFramework& f, SemanticsId id,
                    const SolverConfig& cfg) {
  Evaluation e;
  e.id = id;
  switch (id) {
    case SemanticsId::kCat:
      e.scores = categoriser_scores(f, cfg);
      e.ranking = fixpoint_ranking(*e.scores);
      break;
    case SemanticsId::kSaf:
      e.scores = saf_scores(f, cfg);
      e.ranking = fixpoint_ranking(*e.scores);
      break;
    case SemanticsId::kDbs:
      e.lex_depth = cfg.depth_for(f);
      e.dbs = dbs_vectors(f, cfg);
      e.ranking = dbs_ranking(f, cfg);
      break;
    case SemanticsId::kBbs:
      e.lex_depth = cfg.depth_for(f);
      e.bbs = bbs_vectors(f, cfg);
      e.ranking = ranking_from_vectors(f.names(), *e.bbs,
                                       Direction::kLowerIsBetter,
                                       kScoreTieTolerance);
      break;
    case SemanticsId::kTuples:
      e.tuples = tuples_values(f);
      e.ranking = tuples_ranking(f);
      break;
    case SemanticsId::kMt: {
      MtDiagnostics diag;
      e.scores = mt_scores(f, cfg, &diag);
      e.mt = diag;
      e.ranking = ranking_from_scores(f.names(), e.scores->values,
                                      Direction::kHigherIsBetter);
      break;
    }
    case SemanticsId::kGrounded:
      e.labels = grounded_labelling(f);
      e.ranking = grounded_ranking(f);
      break;
  }
  return e;
}

Ranking rank(const ArgFramework& f, SemanticsId id, const SolverConfig& cfg) {
  return evaluate(f, id, cfg).ranking;
}

}  // namespace rankarg
