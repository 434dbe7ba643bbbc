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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "rankarg/error.hpp"
#include "rankarg/fuzz.hpp"
#include "rankarg/semantics.hpp"
#include "support.hpp"

using namespace rankarg;
using rankarg::test::af;
using rankarg::test::example1;
using rankarg::test::figure2;

namespace {

using doctest::Approx;

bool strict_chain(const Ranking& r, std::vector<std::string> order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!r.strictly(order[i], order[i + 1])) return false;
  }
  return true;
}

std::vector<ArgFramework> random_corpus(int count, int max_args,
                                        std::uint64_t seed,
                                        bool acyclic = false) {
  std::vector<ArgFramework> out;
  std::mt19937_64 rng(seed);
  const double densities[] = {0.15, 0.3, 0.5};
  for (int i = 0; i < count; ++i) {
    GenSpec spec{.min_args = 1,
                 .max_args = max_args,
                 .edge_density = densities[i % 3],
                 .acyclic_only = acyclic,
                 .seed = rng()};
    out.push_back(RandomFrameworks(spec).next());
  }
  return out;
}

// Proponent reward straight from the definition: conflicting P gets 0, an
// unattacked P gets 1, otherwise (1 + f(|P->O|) - f(|O->P|)) / 2.
double reward(const ArgFramework& f, std::uint32_t p, std::uint32_t o) {
  auto count = [&](std::uint32_t from, std::uint32_t to) {
    int n = 0;
    for (auto [x, y] : f.attack_pairs()) {
      if ((from >> x & 1) && (to >> y & 1)) ++n;
    }
    return n;
  };
  auto g = [](int n) { return n / (n + 1.0); };
  if (count(p, p)) return 0.0;
  const int in = count(o, p);
  if (in == 0) return 1.0;
  return 0.5 * (1.0 + g(count(p, o)) - g(in));
}

// Value of a's game certified by both optimal strategies against the
// reward function above.
void check_mt_certificate(const ArgFramework& f, ArgIndex a, double value) {
  GameSolution s = game_value(mt_reward_matrix(f, a));
  std::vector<std::uint32_t> rows;
  for (std::uint32_t p = 0; p < (1u << f.size()); ++p) {
    if (p >> a & 1) rows.push_back(p);
  }
  REQUIRE(s.row_strategy.size() == rows.size());
  REQUIRE(s.column_strategy.size() == (1u << f.size()));
  double floor = 2.0, ceiling = -1.0;
  for (std::uint32_t o = 0; o < (1u << f.size()); ++o) {
    double e = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      e += s.row_strategy[i] * reward(f, rows[i], o);
    }
    floor = std::min(floor, e);
  }
  for (std::uint32_t p : rows) {
    double e = 0.0;
    for (std::uint32_t o = 0; o < (1u << f.size()); ++o) {
      e += s.column_strategy[o] * reward(f, p, o);
    }
    ceiling = std::max(ceiling, e);
  }
  CHECK(floor >= value - 1e-9);
  CHECK(ceiling <= value + 1e-9);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("categoriser") {
  ArgFramework f = example1();
  ScoreTable s = categoriser_scores(f);
  CHECK(std::abs(s.at("a") - 0.38) <= 0.01);
  CHECK(s.at("b") == 1.0);
  CHECK(std::abs(s.at("c") - 0.5) <= 0.01);
  CHECK(std::abs(s.at("d") - 0.65) <= 0.01);
  CHECK(std::abs(s.at("e") - 0.53) <= 0.01);
  CHECK(strict_chain(rank(f, SemanticsId::kCat), {"b", "d", "e", "c", "a"}));

  CHECK(categoriser_scores(af("arg(x).")).at("x") == 1.0);

  ScoreTable cyc = categoriser_scores(af("arg(a). arg(b). att(a,b). att(b,a)."));
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(std::abs(cyc.at("a") - golden) < 1e-11);
  CHECK(std::abs(cyc.at("b") - golden) < 1e-11);
}

TEST_CASE("categoriser fixed point residual") {
  SolverConfig cfg;
  for (const ArgFramework& f : random_corpus(300, 10, 41)) {
    ScoreTable s = categoriser_scores(f, cfg);
    for (ArgIndex a = 0; a < f.size(); ++a) {
      double sum = 0.0;
      for (ArgIndex b : f.attackers(a)) sum += s.values[b];
      CHECK(std::abs(s.values[a] - 1.0 / (1.0 + sum)) < 10 * cfg.tol);
      CHECK(s.values[a] > 0.0);
      CHECK(s.values[a] <= 1.0);
      if (f.unattacked(a)) CHECK(s.values[a] == 1.0);
    }
  }
}

TEST_CASE("SAF simple product") {
  ArgFramework f = example1();
  ScoreTable s = saf_scores(f);
  const double expect[] = {0.07, 0.91, 0.08, 0.20, 0.78};
  for (ArgIndex a = 0; a < 5; ++a) {
    CHECK(std::abs(s.values[a] - expect[a]) <= 0.01);
  }
  CHECK(strict_chain(rank(f, SemanticsId::kSaf), {"b", "e", "d", "c", "a"}));

  const double tau = 1.0 / 1.1;
  CHECK(saf_scores(af("arg(x).")).at("x") == Approx(tau));
  ScoreTable chain = saf_scores(af("arg(a). arg(b). att(b,a)."));
  CHECK(chain.at("b") == Approx(tau));
  CHECK(chain.at("a") == Approx(tau * (1.0 - tau)));
  CHECK(std::abs(chain.at("a") - 0.0826) < 1e-4);

  SolverConfig eps;
  eps.epsilon = 1.0;
  CHECK(saf_scores(af("arg(x)."), eps).at("x") == Approx(0.5));
}

TEST_CASE("SAF fixed point residual") {
  SolverConfig cfg;
  int converged = 0;
  for (const ArgFramework& f : random_corpus(300, 10, 42)) {
    ScoreTable s;
    try {
      s = saf_scores(f, cfg);
    } catch (const NonConvergence&) {
      continue;
    }
    ++converged;
    const double tau = 1.0 / (1.0 + cfg.epsilon);
    for (ArgIndex a = 0; a < f.size(); ++a) {
      double keep = 1.0;  // 1 - probabilistic sum = product of complements
      for (ArgIndex b : f.attackers(a)) keep *= 1.0 - s.values[b];
      CHECK(std::abs(s.values[a] - tau * keep) < 10 * cfg.tol);
      CHECK(s.values[a] >= 0.0);
      CHECK(s.values[a] <= 1.0);
    }
  }
  CHECK(converged > 150);
}

TEST_CASE("SAF Jacobi iteration can oscillate") {
  ArgFramework f = af("arg(x). arg(y). att(x,x). att(y,y). att(x,y). att(y,x).");
  CHECK_THROWS_AS(saf_scores(f), NonConvergence);
}

TEST_CASE("fixpoint ties scale with the scores") {
  ScoreTable t;
  t.names = {"p", "q", "r", "s"};
  t.values = {1e-7, 1.0001e-7, 0.5, 0.5 + 1e-14};
  Ranking r = fixpoint_ranking(t);
  CHECK(r.strictly("q", "p"));
  CHECK(r.equivalent("r", "s"));
  t.residual = 1e-8;
  CHECK(fixpoint_ranking(t).equivalent("p", "q"));
}

TEST_CASE("discussion counts") {
  ArgFramework f = example1();
  auto dis = dbs_vectors(f);
  const int step1[] = {2, 0, 1, 1, 2};
  const int step2[] = {-1, 0, 0, -2, -3};
  for (ArgIndex a = 0; a < 5; ++a) {
    CHECK(dis[a][0] == step1[a]);
    CHECK(dis[a][1] == step2[a]);
    CHECK(dis[a].size() == 12u);
  }
  CHECK(strict_chain(rank(f, SemanticsId::kDbs), {"b", "d", "c", "e", "a"}));

  ArgFramework chain = af("arg(a). arg(b). arg(c). att(c,b). att(b,a).");
  auto cv = dbs_vectors(chain);
  CHECK(cv[chain.index_of("a")][0] == 1);
  CHECK(cv[chain.index_of("a")][1] == -1);
  CHECK(cv[chain.index_of("b")][1] == 0);
  for (const BigInt& x : cv[chain.index_of("c")]) CHECK(x == 0);
  CHECK(strict_chain(rank(chain, SemanticsId::kDbs), {"c", "a", "b"}));

  Ranking flat = rank(af("arg(a). arg(b). arg(c)."), SemanticsId::kDbs);
  CHECK(flat.classes().size() == 1);

  SolverConfig cfg;
  cfg.lex_depth = 3;
  CHECK(dbs_vectors(f, cfg)[0].size() == 3u);
}

TEST_CASE("discussion counts follow the walk recurrence") {
  for (const ArgFramework& f : random_corpus(500, 8, 43)) {
    SolverConfig cfg;
    cfg.lex_depth = 10;
    auto dis = dbs_vectors(f, cfg);
    // in[a] = walks of the current length ending at a.
    std::vector<long long> in(f.size(), 1);
    for (int i = 1; i <= 10; ++i) {
      std::vector<long long> next(f.size(), 0);
      for (auto [x, y] : f.attack_pairs()) next[y] += in[x];
      in = next;
      for (ArgIndex a = 0; a < f.size(); ++a) {
        CHECK(dis[a][i - 1] == (i % 2 ? in[a] : -in[a]));
      }
    }
  }
}

TEST_CASE("burden numbers") {
  ArgFramework f = example1();
  auto bur = bbs_vectors(f);
  const double step1[] = {3, 1, 2, 2, 3};
  const double step2[] = {2.5, 1, 2, 4.0 / 3.0, 1.83};
  for (ArgIndex a = 0; a < 5; ++a) {
    CHECK(bur[a][0] == 1.0);
    CHECK(std::abs(bur[a][1] - step1[a]) <= 0.01);
    CHECK(std::abs(bur[a][2] - step2[a]) <= 0.01);
  }
  CHECK(strict_chain(rank(f, SemanticsId::kBbs), {"b", "d", "c", "e", "a"}));

  auto flat = bbs_vectors(af("arg(x). arg(y)."));
  for (double x : flat[0]) CHECK(x == 1.0);
  CHECK(rank(af("arg(x). arg(y)."), SemanticsId::kBbs).classes().size() == 1);
}

TEST_CASE("burden numbers follow their recurrence") {
  for (const ArgFramework& f : random_corpus(500, 8, 44)) {
    auto bur = bbs_vectors(f);
    const int depth = SolverConfig{}.depth_for(f);
    REQUIRE(bur.size() == static_cast<std::size_t>(f.size()));
    for (ArgIndex a = 0; a < f.size(); ++a) {
      REQUIRE(bur[a].size() == static_cast<std::size_t>(depth + 1));
      CHECK(bur[a][0] == 1.0);
      for (int i = 1; i <= depth; ++i) {
        double expect = 1.0;
        for (ArgIndex b : f.attackers(a)) expect += 1.0 / bur[b][i - 1];
        CHECK(bur[a][i] == Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("burden separates distributed defence, discussion does not") {
  // a: attackers x, y defended by u, w one to one. b: attackers p, q where p
  // carries both defenders s, t and q is unattacked.
  ArgFramework f = af(
      "arg(a). arg(x). arg(y). arg(u). arg(w). "
      "att(x,a). att(y,a). att(u,x). att(w,y). "
      "arg(b). arg(p). arg(q). arg(s). arg(t). "
      "att(p,b). att(q,b). att(s,p). att(t,p).");
  Ranking dbs = rank(f, SemanticsId::kDbs);
  Ranking bbs = rank(f, SemanticsId::kBbs);
  CHECK(dbs.equivalent("a", "b"));
  CHECK(bbs.strictly("a", "b"));
  auto bur = bbs_vectors(f);
  CHECK(bur[f.index_of("a")][2] == Approx(2.0));
  CHECK(bur[f.index_of("b")][2] == Approx(7.0 / 3.0));
}

TEST_CASE("tupled values") {
  ArgFramework f = figure2();
  auto v = tuples_values(f);
  CHECK(v[f.index_of("a")].defense_tuple() == std::vector<int>{2, 2, 2, 2});
  CHECK(v[f.index_of("a")].attack_tuple().empty());
  CHECK(v[f.index_of("b")].defense_tuple().empty());
  CHECK(v[f.index_of("b")].attack_tuple() == std::vector<int>{1});
  CHECK(v[f.index_of("a2")].defense_tuple() == std::vector<int>{0});
  CHECK(rank(f, SemanticsId::kTuples).strictly("a", "b"));

  ArgFramework chain = af("arg(a). arg(b). arg(c). att(c,b). att(b,a).");
  auto cv = tuples_values(chain);
  CHECK(cv[chain.index_of("a")].defense_tuple() == std::vector<int>{2});
  CHECK(cv[chain.index_of("a")].attack_tuple().empty());
  CHECK(cv[chain.index_of("b")].attack_tuple() == std::vector<int>{1});
  CHECK(cv[chain.index_of("c")].defense_tuple() == std::vector<int>{0});

  CHECK_THROWS_AS(tuples_values(example1()), CyclicFramework);
  CHECK_THROWS_AS(rank(example1(), SemanticsId::kTuples), CyclicFramework);
}

TEST_CASE("tuples twins and incomparable arguments") {
  ArgFramework twins = af(
      "arg(a). arg(b). arg(x). arg(y). arg(z). "
      "att(x,a). att(y,b). att(z,x). att(z,y).");
  CHECK(rank(twins, SemanticsId::kTuples).equivalent("a", "b"));

  // x: two attack and two defence branches; y: one of each.
  ArgFramework g = af(
      "arg(x). arg(u1). arg(u2). arg(w1). arg(w2). arg(z1). arg(z2). "
      "att(u1,x). att(u2,x). att(w1,x). att(w2,x). att(z1,w1). att(z2,w2). "
      "arg(y). arg(v). arg(r). arg(s). att(v,y). att(r,y). att(s,r).");
  Ranking r = rank(g, SemanticsId::kTuples);
  CHECK(r.incomparable(g.index_of("x"), g.index_of("y")));
  CHECK_FALSE(r.is_total());
}

TEST_CASE("tuple comparison matches expanded lexicographic order") {
  std::mt19937_64 rng(45);
  auto random_map = [&] {
    std::map<int, std::uint64_t> m;
    int len = static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) m[2 * static_cast<int>(rng() % 4)] += 1 + rng() % 2;
    return m;
  };
  auto expand = [](const std::map<int, std::uint64_t>& m) {
    std::vector<int> v;
    for (auto [len, c] : m) v.insert(v.end(), c, len);
    return v;
  };
  for (int t = 0; t < 3000; ++t) {
    auto v = random_map(), w = random_map();
    auto ev = expand(v), ew = expand(w);
    CHECK((compare_tuples(v, w) < 0) == (ev < ew));
    CHECK((compare_tuples(v, w) == 0) == (ev == ew));
  }
}

TEST_CASE("tuples ranking is a preorder on acyclic frameworks") {
  for (const ArgFramework& f : random_corpus(400, 10, 46, true)) {
    Ranking r = rank(f, SemanticsId::kTuples);
    CHECK(r.is_reflexive());
    CHECK(r.is_transitive());
  }
}

TEST_CASE("M&T on the running example") {
  ArgFramework f = example1();
  MtDiagnostics diag;
  ScoreTable s = mt_scores(f, {}, &diag);
  CHECK(std::abs(s.at("a") - 0.17) <= 0.01);
  CHECK(s.at("b") == 1.0);
  CHECK(std::abs(s.at("c") - 0.25) <= 0.01);
  CHECK(std::abs(s.at("e") - 0.5) <= 0.01);
  // d's game is worth 17/44: both optimal strategies certify it below.
  CHECK(s.at("d") == Approx(17.0 / 44.0).epsilon(1e-9));
  for (ArgIndex a = 0; a < 5; ++a) check_mt_certificate(f, a, s.values[a]);
  CHECK(diag.max_duality_gap < kLpTolerance);
}

TEST_CASE("M&T rewards match the definition") {
  for (const ArgFramework& f : random_corpus(60, 6, 47)) {
    for (std::uint32_t p = 0; p < (1u << f.size()); ++p) {
      for (std::uint32_t o = 0; o < (1u << f.size()); ++o) {
        CHECK(mt_reward(f, p, o) == Approx(reward(f, p, o)));
      }
    }
  }
}

TEST_CASE("M&T values") {
  CHECK(mt_scores(af("arg(x). att(x,x).")).at("x") == 0.0);
  CHECK(mt_scores(af("arg(x).")).at("x") == 1.0);
  check_mt_certificate(af("arg(x). att(x,x)."), 0, 0.0);

  for (const ArgFramework& f : random_corpus(200, 8, 48)) {
    ScoreTable s = mt_scores(f);
    for (ArgIndex a = 0; a < f.size(); ++a) {
      CHECK(s.values[a] >= -1e-12);
      CHECK(s.values[a] <= 1.0 + 1e-12);
      if (f.unattacked(a)) CHECK(s.values[a] == 1.0);
    }
  }
  for (const ArgFramework& f : random_corpus(30, 5, 49)) {
    ScoreTable s = mt_scores(f);
    for (ArgIndex a = 0; a < f.size(); ++a) {
      check_mt_certificate(f, a, s.values[a]);
    }
  }
}

TEST_CASE("M&T component reduction keeps the values") {
  SolverConfig whole;
  whole.mt_component_reduction = false;
  for (const ArgFramework& f : random_corpus(120, 8, 50)) {
    ScoreTable on = mt_scores(f);
    ScoreTable off = mt_scores(f, whole);
    for (ArgIndex a = 0; a < f.size(); ++a) {
      CHECK(std::abs(on.values[a] - off.values[a]) < 1e-9);
    }
  }
}

TEST_CASE("M&T size cap") {
  SolverConfig cfg;
  cfg.mt_cap = 4;
  ArgFramework chain = af(
      "arg(a). arg(b). arg(c). arg(d). arg(e). "
      "att(a,b). att(b,c). att(c,d). att(d,e).");
  CHECK_THROWS_AS(mt_scores(chain, cfg), SizeCapExceeded);
  // Five isolated arguments are five games of size one.
  CHECK_NOTHROW(mt_scores(af("arg(a). arg(b). arg(c). arg(d). arg(e)."), cfg));
}

TEST_CASE("grounded") {
  ArgFramework f = example1();
  CHECK(sorted(grounded_extension(f)) == std::vector<std::string>{"b", "e"});
  Ranking r = rank(f, SemanticsId::kGrounded);
  CHECK(r.equivalent("b", "e"));
  CHECK(r.strictly("e", "a"));
  CHECK(r.equivalent("a", "c"));
  CHECK(r.equivalent("c", "d"));

  ArgFramework flat = af("arg(a). arg(b). arg(c).");
  CHECK(grounded_extension(flat).size() == 3u);
  CHECK(rank(flat, SemanticsId::kGrounded).classes().size() == 1);

  ArgFramework self = af("arg(a). arg(b). att(a,a).");
  CHECK(grounded_extension(self) == std::vector<std::string>{"b"});
  CHECK(rank(self, SemanticsId::kGrounded).strictly("b", "a"));

  // Three levels: x is out, the 2-cycle is undecided.
  ArgFramework three = af(
      "arg(u). arg(x). arg(p). arg(q). att(u,x). att(p,q). att(q,p).");
  auto labels = grounded_labelling(three);
  CHECK(labels[three.index_of("u")] == Label::kIn);
  CHECK(labels[three.index_of("x")] == Label::kOut);
  CHECK(labels[three.index_of("p")] == Label::kUndec);
  Ranking g = rank(three, SemanticsId::kGrounded);
  CHECK(g.strictly("u", "p"));
  CHECK(g.strictly("p", "x"));
}

TEST_CASE("grounded extension is the least fixed point of defence") {
  for (const ArgFramework& f : random_corpus(400, 9, 51)) {
    // Iterate the characteristic function from the empty set.
    std::vector<char> in(f.size(), 0);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<char> next(f.size(), 0);
      for (ArgIndex a = 0; a < f.size(); ++a) {
        bool defended = true;
        for (ArgIndex b : f.attackers(a)) {
          bool hit = false;
          for (ArgIndex c : f.attackers(b)) hit = hit || in[c];
          defended = defended && hit;
        }
        next[a] = defended;
        grew = grew || next[a] != in[a];
      }
      in = next;
    }
    std::set<std::string> oracle;
    for (ArgIndex a = 0; a < f.size(); ++a) {
      if (in[a]) oracle.insert(f.name(a));
    }
    auto ext = grounded_extension(f);
    CHECK(std::set<std::string>(ext.begin(), ext.end()) == oracle);
    // Conflict-free.
    for (ArgIndex a = 0; a < f.size(); ++a) {
      for (ArgIndex b = 0; b < f.size(); ++b) {
        if (in[a] && in[b]) CHECK_FALSE(f.attacks(a, b));
      }
    }
  }
}

TEST_CASE("every semantics yields a preorder") {
  for (const ArgFramework& f : random_corpus(150, 8, 52)) {
    for (SemanticsId id : kAllSemantics) {
      Ranking r;
      try {
        r = rank(f, id);
      } catch (const CyclicFramework&) {
        CHECK(id == SemanticsId::kTuples);
        continue;
      } catch (const NonConvergence&) {
        CHECK(id == SemanticsId::kSaf);
        continue;
      }
      CHECK(r.is_reflexive());
      CHECK(r.is_transitive());
      if (id != SemanticsId::kTuples) CHECK(r.is_total());
    }
  }
}

TEST_CASE("semantics names") {
  for (SemanticsId id : kAllSemantics) {
    CHECK(parse_semantics(semantics_name(id)) == id);
    CHECK(parse_semantics(semantics_label(id)) == id);
  }
  CHECK_FALSE(parse_semantics("nope"));
}
