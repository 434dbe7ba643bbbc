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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The corpus criteria (6, 7, 8, 10) share one matrix over
// the default fuzz budget.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rankarg/axioms.hpp"
#include "rankarg/fuzz.hpp"
#include "rankarg/report.hpp"
#include "rankarg/semantics.hpp"
#include "support.hpp"

using namespace rankarg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o, double secs) {
  if (!o.pass) ++failures;
  std::printf("criterion %2d %-36s %s  (%.2f s)%s%s\n", n, title.c_str(),
              o.pass ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

const std::vector<std::string> kNames = {"a", "b", "c", "d", "e"};

void check_values(Outcome& o, const ScoreTable& s,
                  const std::vector<double>& expect, double tol) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    const double got = s.at(kNames[i]);
    if (std::abs(got - expect[i]) > tol) {
      o.fail(kNames[i] + " = " + fmt(got) + ", expected " + fmt(expect[i]));
    }
  }
}

// "x > y > ..." with "=" for ties, compared against the ranking's own
// relation pair by pair.
void check_order(Outcome& o, const Ranking& r, const std::string& expect) {
  std::vector<std::vector<std::string>> levels(1);
  std::istringstream in(expect);
  for (std::string tok; in >> tok;) {
    if (tok == ">") levels.emplace_back();
    else if (tok != "=") levels.back().push_back(tok);
  }
  bool ok = true;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = 0; j < levels.size(); ++j) {
      for (const auto& x : levels[i]) {
        for (const auto& y : levels[j]) {
          if (i < j && !r.strictly(x, y)) ok = false;
          if (i == j && !r.equivalent(x, y)) ok = false;
        }
      }
    }
  }
  if (!ok) o.fail("ranking " + format_ranking(r) + ", expected " + expect);
}

Outcome criterion1(const ArgFramework& f) {
  Outcome o;
  ScoreTable s = categoriser_scores(f);
  check_values(o, s, {0.38, 1.0, 0.5, 0.65, 0.53}, 0.01);
  check_order(o, fixpoint_ranking(s), "b > d > e > c > a");
  return o;
}

Outcome criterion2(const ArgFramework& f) {
  Outcome o;
  ScoreTable s = saf_scores(f);
  check_values(o, s, {0.07, 0.91, 0.08, 0.20, 0.78}, 0.01);
  check_order(o, fixpoint_ranking(s), "b > e > d > c > a");
  return o;
}

Outcome criterion3(const ArgFramework& f) {
  Outcome o;
  const std::vector<long> dis1 = {2, 0, 1, 1, 2}, dis2 = {-1, 0, 0, -2, -3};
  const std::vector<double> bur1 = {3, 1, 2, 2, 3};
  const std::vector<double> bur2 = {2.5, 1, 2, 4.0 / 3.0, 1.83};
  auto dis = dbs_vectors(f);
  auto bur = bbs_vectors(f);
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    const ArgIndex a = f.index_of(kNames[i]);
    if (dis[a][0] != dis1[i] || dis[a][1] != dis2[i]) {
      o.fail("Dis(" + kNames[i] + ") = " + dis[a][0].str() + ", " +
             dis[a][1].str());
    }
    if (std::abs(bur[a][1] - bur1[i]) > 0.01 ||
        std::abs(bur[a][2] - bur2[i]) > 0.01) {
      o.fail("Bur(" + kNames[i] + ") = " + fmt(bur[a][1]) + ", " +
             fmt(bur[a][2]));
    }
  }
  check_order(o, dbs_ranking(f), "b > d > c > e > a");
  check_order(o, bbs_ranking(f), "b > d > c > e > a");
  return o;
}

Outcome criterion4(const ArgFramework& f) {
  Outcome o;
  ScoreTable s = mt_scores(f);
  check_values(o, s, {0.17, 1.0, 0.25, 0.25, 0.5}, 0.01);
  check_order(o, rank(f, SemanticsId::kMt), "b > e > c = d > a");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::string cmd = "'" + std::string(RANKARG_CLI) + "' survey '" +
                          test::data_path("example1.apx") + "'";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    o.fail("cannot run " + cmd);
    return o;
  }
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) {
    out.append(buf, n);
  }
  const int status = ::pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) o.fail("survey failed");

  std::map<std::string, std::string> rows;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    const auto gap = line.find("  ");
    if (gap == std::string::npos) continue;
    const auto start = line.find_first_not_of(' ', gap);
    rows[line.substr(0, gap)] = line.substr(start);
  }
  const std::pair<const char*, const char*> table[] = {
      {"Cat", "b > d > e > c > a"}, {"SAF", "b > e > d > c > a"},
      {"M&T", "b > e > c = d > a"}, {"Dbs", "b > d > c > e > a"},
      {"Bbs", "b > d > c > e > a"}};
  int matched = 0;
  for (const auto& [sem, expect] : table) {
    auto it = rows.find(sem);
    if (it == rows.end()) {
      o.fail(std::string(sem) + " row missing");
    } else if (it->second != expect) {
      o.fail(std::string(sem) + " row '" + it->second + "', expected '" +
             expect + "'");
    } else {
      ++matched;
    }
  }
  o.note(std::to_string(matched) + "/5 rows match");
  return o;
}

Ranking random_ranking(int n, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  if (rng() % 2) {
    std::vector<int> level(n);
    for (int& l : level) l = static_cast<int>(rng() % 4);
    return ranking_from_levels(names, level);
  }
  Ranking r(names);
  std::bernoulli_distribution edge(0.2);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || edge(rng)) r.set_geq(a, b);
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (r.geq(a, k) && r.geq(k, b)) r.set_geq(a, b);
      }
    }
  }
  return r;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(20150725);

  int group_mismatch = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Ranking r = random_ranking(n, rng);
    auto subset = [&] {
      std::vector<ArgIndex> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(rng() % (std::min(n, 6) + 1));
      return all;
    };
    auto s1 = subset(), s2 = subset();
    auto [weak, some_strict] = test::brute_group(s1, s2, r);
    const bool strict = weak && (s2.size() < s1.size() || some_strict);
    if (group_geq(s1, s2, r) != weak || group_gt(s1, s2, r) != strict) {
      ++group_mismatch;
    }
  }

  int game_mismatch = 0, game_cases = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    GameMatrix g(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        g(i, j) = t % 2 ? static_cast<double>(rng() % 5) / 4.0 : u(rng);
      }
    }
    auto oracle = test::support_enumeration_value(g);
    ++game_cases;
    if (!oracle || std::abs(*oracle - game_value(g).value) > 1e-6) {
      ++game_mismatch;
    }
  }

  int walk_mismatch = 0, walk_frameworks = 0;
  const double densities[] = {0.15, 0.3, 0.5};
  for (int t = 0; t < 300; ++t) {
    GenSpec spec{.min_args = 1,
                 .max_args = 6,
                 .edge_density = densities[t % 3],
                 .seed = rng()};
    ArgFramework f = RandomFrameworks(spec).next();
    ++walk_frameworks;
    WalkCountTable w = walk_counts(f, 6);
    for (int len = 1; len <= 6; ++len) {
      auto naive = test::naive_walks(f, len);
      for (ArgIndex a = 0; a < f.size(); ++a) {
        if (w.count_in(a, len) != naive[a]) ++walk_mismatch;
      }
    }
  }

  if (group_mismatch) o.fail(std::to_string(group_mismatch) + " group mismatches");
  if (game_mismatch) o.fail(std::to_string(game_mismatch) + " game mismatches");
  if (walk_mismatch) o.fail(std::to_string(walk_mismatch) + " walk mismatches");
  o.note("1000 group cases, " + std::to_string(game_cases) + " games, " +
         std::to_string(walk_frameworks) + " frameworks x 6 lengths");
  return o;
}

std::string cell_name(SemanticsId s, PropertyId p) {
  return std::string(semantics_label(s)) + "/" + std::string(property_label(p));
}

Outcome criterion6(const MatrixReport& m) {
  Outcome o;
  int cells = 0;
  for (const auto& [key, cell] : m.cells) {
    if (reference_expectation(key.first, key.second) != Expectation::kViolated) {
      continue;
    }
    ++cells;
    if (cell.violations == 0) {
      o.fail(cell_name(key.first, key.second) + " not found");
    } else if (!cell.replayed) {
      o.fail(cell_name(key.first, key.second) + " does not replay");
    }
  }
  o.note(std::to_string(cells) + " violated cells");
  return o;
}

Outcome criterion7(const MatrixReport& m) {
  Outcome o;
  int cells = 0;
  for (const auto& [key, cell] : m.cells) {
    if (reference_expectation(key.first, key.second) !=
        Expectation::kSatisfied) {
      continue;
    }
    ++cells;
    if (cell.violations > 0) {
      o.fail(cell_name(key.first, key.second) + " violated on " +
             std::to_string(cell.violations) + "/" +
             std::to_string(cell.trials));
    }
  }
  o.note(std::to_string(cells) + " satisfied cells");
  return o;
}

Outcome criterion8(const MatrixReport& m) {
  Outcome o;
  if (!m.audit_failures.empty()) {
    std::map<std::string, int> rules;
    for (const auto& f : m.audit_failures) {
      ++rules[std::string(semantics_label(f.semantics)) + " " + f.rule];
    }
    for (const auto& [rule, n] : rules) {
      o.fail(rule + " failed on " + std::to_string(n) + " instances");
    }
  }
  for (IncompatiblePair pair : kAllIncompatiblePairs) {
    IncompatibilityWitness w = incompatibility_witness(pair);
    if (!replay_incompatibility(w)) {
      o.fail(std::string(pair_name(pair)) + " witness does not replay");
    }
  }
  IncompatibilityWitness fig = incompatibility_witness(IncompatiblePair::kCpAvsFD);
  if (!(fig.base == test::figure2())) {
    o.fail("CP,AvsFD witness is not the AvsFD illustration framework");
  }
  o.note("audits over " + std::to_string(m.corpus_size) +
         " frameworks, 4 incompatibility witnesses");
  return o;
}

Outcome criterion10(const MatrixReport& m) {
  Outcome o;
  const SolverTotals& t = m.totals;
  if (t.max_cat_residual >= 1e-11) {
    o.fail("Cat residual " + sci(t.max_cat_residual));
  }
  if (t.max_saf_residual >= 1e-11) {
    o.fail("SAF residual " + sci(t.max_saf_residual));
  }
  if (t.max_duality_gap >= 1e-7) {
    o.fail("duality gap " + sci(t.max_duality_gap));
  }
  o.note("max residual Cat " + sci(t.max_cat_residual) + " over " +
         std::to_string(t.cat_solves) + " solves, SAF " +
         sci(t.max_saf_residual) + " over " + std::to_string(t.saf_solves) +
         " (" + std::to_string(t.nonconvergent) +
         " non-convergent), duality gap " + sci(t.max_duality_gap) + " over " +
         std::to_string(t.games_solved) + " games");
  return o;
}

}  // namespace

int main() {
  const ArgFramework ex = test::example1();
  struct Timed {
    int n;
    const char* title;
    double limit;  // seconds, 0 when the criterion sets none
    Outcome (*run)(const ArgFramework&);
  };
  const Timed quick[] = {
      {1, "Categoriser on the running example", 1.0, criterion1},
      {2, "SAF on the running example", 1.0, criterion2},
      {3, "Dbs and Bbs on the running example", 0.0, criterion3},
      {4, "M&T on the running example", 30.0, criterion4},
  };
  for (const Timed& c : quick) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run(ex);
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const double secs = seconds_since(t0);
    if (c.limit > 0 && secs >= c.limit) o.fail("took " + fmt(secs) + " s");
    report(c.n, c.title, o, secs);
  }
  {
    auto t0 = Clock::now();
    report(5, "survey reproduces the orders table", criterion5(),
           seconds_since(t0));
  }
  {
    auto t0 = Clock::now();
    report(9, "oracle equivalences", criterion9(), seconds_since(t0));
  }

  auto t0 = Clock::now();
  const auto corpus = build_corpus(CorpusSpec{});
  const std::vector<SemanticsId> sems(kAllSemantics.begin(),
                                      kAllSemantics.end());
  const std::vector<PropertyId> props(kAllProperties.begin(),
                                      kAllProperties.end());
  MatrixOptions opts;
  opts.check.seed = CorpusSpec{}.seed;
  opts.progress = [](int done, int total) {
    if (done % 2000 == 0 || done == total) {
      std::fprintf(stderr, "matrix: %d/%d frameworks\n", done, total);
    }
  };
  std::fprintf(stderr, "matrix: %zu frameworks, %zu semantics, %zu properties\n",
               corpus.size(), sems.size(), props.size());
  const MatrixReport matrix = build_matrix(corpus, sems, props, opts);
  const double matrix_secs = seconds_since(t0);
  std::cout << render_matrix(matrix);

  Outcome c6 = criterion6(matrix);
  if (matrix_secs >= 1800) c6.fail("matrix took " + fmt(matrix_secs) + " s");
  report(6, "violated cells have witnesses", c6, matrix_secs);
  report(7, "satisfied cells have no violations", criterion7(matrix), 0.0);
  report(8, "dependency audits and incompatibilities", criterion8(matrix),
         0.0);
  report(10, "numerical residuals", criterion10(matrix), 0.0);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
