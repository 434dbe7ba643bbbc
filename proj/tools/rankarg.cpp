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

// rankarg: rank, survey, check, fuzz, witness.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rankarg/axioms.hpp"
#include "rankarg/error.hpp"
#include "rankarg/fuzz.hpp"
#include "rankarg/report.hpp"
#include "rankarg/semantics.hpp"

namespace fs = std::filesystem;
using namespace rankarg;

namespace {

constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantics = 3;

// Table 1 row order, then the two semantics it leaves out.
constexpr SemanticsId kSurveyOrder[] = {
    SemanticsId::kCat, SemanticsId::kSaf,    SemanticsId::kMt,
    SemanticsId::kDbs, SemanticsId::kBbs,    SemanticsId::kTuples,
    SemanticsId::kGrounded};

struct ConfigFlags {
  SolverConfig cfg;
  int lex_depth = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "text";

  void add_solver(CLI::App* app) {
    app->add_option("--epsilon", cfg.epsilon, "SAF epsilon")->capture_default_str();
    app->add_option("--tol", cfg.tol, "fixed-point tolerance")->capture_default_str();
    app->add_option("--max-iter", cfg.max_iter, "fixed-point iteration cap")
        ->capture_default_str();
    app->add_option("--lex-depth", lex_depth,
                    "Dbs/Bbs comparison depth (default 2|A|+2)");
    app->add_option("--mt-cap", cfg.mt_cap, "largest M&T game in arguments")
        ->capture_default_str();
  }
  void add_seed(CLI::App* app) {
    app->add_option("--seed", seed, "seed (falls back to RANKARG_SEED)");
  }
  void add_format(CLI::App* app) {
    app->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  }
  SolverConfig solver() const {
    SolverConfig c = cfg;
    if (lex_depth > 0) c.lex_depth = lex_depth;
    return c;
  }
  std::optional<std::uint64_t> resolved_seed() const {
    if (seed) return seed;
    if (const char* env = std::getenv("RANKARG_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(std::string("RANKARG_SEED is not an integer: ") + env);
      }
    }
    return std::nullopt;
  }
};

ArgFramework load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_apx(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

SemanticsId semantics_arg(const std::string& text) {
  auto id = parse_semantics(text);
  if (!id) throw CLI::ValidationError("unknown semantics: " + text);
  return *id;
}

PropertyId property_arg(const std::string& text) {
  auto id = parse_property(text);
  if (!id) throw CLI::ValidationError("unknown property: " + text);
  return *id;
}

// Why a semantics cannot run on a framework, if it cannot.
std::optional<std::string> inapplicable(SemanticsId id, const ArgFramework& f,
                                        const SolverConfig& cfg) {
  if (id == SemanticsId::kTuples && !f.is_acyclic()) return "cyclic framework";
  if (id == SemanticsId::kMt) {
    for (const ArgFramework& c : connected_components(f)) {
      if (c.size() > cfg.mt_cap) {
        return "component of " + std::to_string(c.size()) +
               " arguments exceeds the M&T cap of " +
               std::to_string(cfg.mt_cap);
      }
    }
  }
  return std::nullopt;
}

int cmd_rank(const std::string& input, const std::string& sem_text,
             const ConfigFlags& flags) {
  const SemanticsId id = semantics_arg(sem_text);
  const ArgFramework f = load(input);
  const SolverConfig cfg = flags.solver();
  try {
    Evaluation e = evaluate(f, id, cfg);
    if (flags.format == "json") {
      std::cout << evaluation_record(f, e, cfg).dump(2) << "\n";
    } else {
      std::cout << format_ranking(e.ranking) << "\n";
    }
  } catch (const CyclicFramework& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantics;
  } catch (const SemanticsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantics;
  }
  return 0;
}

int cmd_survey(const std::string& input, const ConfigFlags& flags) {
  const ArgFramework f = load(input);
  const SolverConfig cfg = flags.solver();
  nlohmann::json rows = nlohmann::json::array();
  for (SemanticsId id : kSurveyOrder) {
    std::optional<std::string> why = inapplicable(id, f, cfg);
    std::optional<Evaluation> e;
    if (!why) {
      try {
        e = evaluate(f, id, cfg);
      } catch (const SemanticsError& err) {
        why = err.what();
      } catch (const CyclicFramework& err) {
        why = err.what();
      }
    }
    if (flags.format == "json") {
      rows.push_back(e ? evaluation_record(f, *e, cfg)
                       : nlohmann::json{{"semantics", semantics_name(id)},
                                        {"not_applicable", *why}});
      continue;
    }
    std::string label(semantics_label(id));
    label.resize(10, ' ');
    if (!e) {
      std::cout << label << "n/a: " << *why << "\n";
      continue;
    }
    // Multi-line partial orders are indented under their row.
    std::string text = format_ranking(e->ranking);
    std::string indented;
    for (char c : text) {
      indented += c;
      if (c == '\n') indented += std::string(10, ' ');
    }
    std::cout << label << indented << "\n";
  }
  if (flags.format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

int verdict_exit(const PropertyVerdict& v) {
  switch (v.status) {
    case Status::kHolds:
    case Status::kNotApplicable: return 0;
    case Status::kViolated: return kExitViolated;
    case Status::kInconclusive: return kExitSemantics;
  }
  return kExitSemantics;
}

int report_verdict(const PropertyVerdict& v, const ArgFramework& f,
                   const ConfigFlags& flags) {
  if (flags.format == "json") {
    std::cout << verdict_record(v, f).dump(2) << "\n";
  } else {
    std::cout << format_verdict(v) << "\n";
  }
  return verdict_exit(v);
}

CheckOptions check_options(const ConfigFlags& flags, bool sweep) {
  CheckOptions o;
  o.seed = flags.resolved_seed().value_or(0);
  o.sweep_lengths = sweep;
  return o;
}

int cmd_check(const std::string& input, const std::string& prop_text,
              const std::string& sem_text, bool sweep,
              const ConfigFlags& flags) {
  const PropertyId prop = property_arg(prop_text);
  const SemanticsId id = semantics_arg(sem_text);
  const ArgFramework f = load(input);
  PropertyVerdict v =
      check(prop, f, {id, flags.solver()}, check_options(flags, sweep));
  return report_verdict(v, f, flags);
}

int cmd_witness(const std::string& input, const std::string& prop_text,
                const std::string& sem_text, const std::string& pair_text,
                bool sweep, const ConfigFlags& flags) {
  if (!pair_text.empty()) {
    auto pair = parse_pair(pair_text);
    if (!pair) throw CLI::ValidationError("unknown pair: " + pair_text);
    IncompatibilityWitness w = incompatibility_witness(*pair);
    const bool ok = replay_incompatibility(w);
    std::cout << "% " << pair_name(w.pair) << ": " << w.explanation << "\n"
              << serialize_apx(w.framework)
              << (ok ? "% replays\n" : "% does not replay\n");
    return ok ? 0 : kExitViolated;
  }
  if (input.empty()) throw CLI::ValidationError("witness needs a file or --pair");
  const std::string text = read_file(input);
  WitnessHeader h = parse_witness_header(text);
  if (!prop_text.empty()) h.property = property_arg(prop_text);
  if (!sem_text.empty()) h.semantics = semantics_arg(sem_text);
  if (!h.property || !h.semantics) {
    throw CLI::ValidationError(
        "witness file names no property/semantics; pass --property and "
        "--semantics");
  }
  const ArgFramework f = parse_apx(text);
  PropertyVerdict v = check(*h.property, f, {*h.semantics, flags.solver()},
                            check_options(flags, sweep));
  return report_verdict(v, f, flags);
}

struct FuzzFlags {
  std::string out = "fuzz-out";
  std::vector<std::string> semantics;
  std::vector<std::string> properties;
  std::optional<int> trials;
  std::optional<int> acyclic_trials;
  std::optional<int> layered_trials;
  CorpusSpec corpus;
  bool no_shrink = false;
  bool sweep = false;
  bool quiet = false;
};

int cmd_fuzz(const FuzzFlags& ff, const ConfigFlags& flags) {
  CorpusSpec spec = ff.corpus;
  if (ff.trials) {
    // --trials scales the whole budget unless a stream is set explicitly.
    spec.random_trials = *ff.trials;
    spec.acyclic_trials = *ff.trials / 2;
    spec.layered_trials = *ff.trials * 5 / 2;
  }
  if (ff.acyclic_trials) spec.acyclic_trials = *ff.acyclic_trials;
  if (ff.layered_trials) spec.layered_trials = *ff.layered_trials;
  if (auto seed = flags.resolved_seed()) spec.seed = *seed;

  std::vector<SemanticsId> sems;
  for (const auto& s : ff.semantics) sems.push_back(semantics_arg(s));
  if (sems.empty()) sems.assign(kAllSemantics.begin(), kAllSemantics.end());
  std::vector<PropertyId> props;
  for (const auto& p : ff.properties) props.push_back(property_arg(p));
  if (props.empty()) props.assign(kAllProperties.begin(), kAllProperties.end());

  MatrixOptions opts;
  opts.cfg = flags.solver();
  opts.check.seed = spec.seed;
  opts.check.sweep_lengths = ff.sweep;
  opts.shrink = !ff.no_shrink;
  if (!ff.quiet) {
    opts.progress = [](int done, int total) {
      if (done % 500 == 0 || done == total) {
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) std::cerr << "\n";
      }
    };
  }
  const auto corpus = build_corpus(spec);
  MatrixReport report = build_matrix(corpus, sems, props, opts);

  const fs::path out(ff.out);
  fs::create_directories(out / "witnesses");
  const std::string grid = render_matrix(report);
  write_atomically(out / "matrix.txt", grid);
  std::string lines;
  for (const auto& rec : matrix_records(report)) lines += rec.dump() + "\n";
  write_atomically(out / "records.jsonl", lines);
  for (const auto& [key, cell] : report.cells) {
    if (!cell.shrunk || !cell.shrunk->witness) continue;
    const std::string name = std::string(semantics_name(key.first)) + "_" +
                             std::string(property_name(key.second)) + ".apx";
    write_atomically(out / "witnesses" / name, witness_file(*cell.shrunk));
  }
  std::cout << grid;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranking-based semantics for abstract argumentation"};
  app.require_subcommand(1);

  ConfigFlags flags;
  std::string input, sem, prop, pair;
  bool sweep = false;

  CLI::App* rank_cmd = app.add_subcommand("rank", "rank the arguments of an .apx file");
  rank_cmd->add_option("input", input, ".apx file")->required();
  rank_cmd->add_option("semantics", sem,
                       "cat, saf, dbs, bbs, tuples, mt or grounded")->required();
  flags.add_solver(rank_cmd);
  flags.add_format(rank_cmd);

  CLI::App* survey_cmd = app.add_subcommand("survey", "rank under every semantics");
  survey_cmd->add_option("input", input, ".apx file")->required();
  flags.add_solver(survey_cmd);
  flags.add_format(survey_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "check one property on one framework");
  check_cmd->add_option("input", input, ".apx file")->required();
  check_cmd->add_option("property", prop, "property, e.g. VP, PlusDB, AvsFD")->required();
  check_cmd->add_option("semantics", sem, "semantics")->required();
  check_cmd->add_flag("--sweep-lengths", sweep, "graft every branch length up to 6");
  flags.add_solver(check_cmd);
  flags.add_seed(check_cmd);
  flags.add_format(check_cmd);

  FuzzFlags ff;
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "build the satisfaction matrix over a corpus");
  fuzz_cmd->add_option("--out", ff.out, "output directory")->capture_default_str();
  fuzz_cmd->add_option("--semantics", ff.semantics, "semantics (default: all)")->delimiter(',');
  fuzz_cmd->add_option("--properties", ff.properties, "properties (default: all)")->delimiter(',');
  fuzz_cmd->add_option("--trials", ff.trials, "random frameworks (scales the other streams)");
  fuzz_cmd->add_option("--acyclic-trials", ff.acyclic_trials, "random acyclic frameworks");
  fuzz_cmd->add_option("--layered-trials", ff.layered_trials, "layered DAGs");
  fuzz_cmd->add_option("--exhaustive", ff.corpus.exhaustive_max,
                       "all frameworks up to this size (max 4)")->capture_default_str();
  fuzz_cmd->add_option("--min-args", ff.corpus.min_args)->capture_default_str();
  fuzz_cmd->add_option("--max-args", ff.corpus.max_args)->capture_default_str();
  fuzz_cmd->add_option("--densities", ff.corpus.densities, "edge densities")->delimiter(',');
  fuzz_cmd->add_flag("--no-shrink", ff.no_shrink, "keep first witnesses as found");
  fuzz_cmd->add_flag("--sweep-lengths", ff.sweep, "graft every branch length up to 6");
  fuzz_cmd->add_flag("--quiet", ff.quiet, "no progress on stderr");
  flags.add_solver(fuzz_cmd);
  flags.add_seed(fuzz_cmd);

  CLI::App* witness_cmd = app.add_subcommand(
      "witness", "re-check a saved witness, or print an incompatibility witness");
  witness_cmd->add_option("input", input, "witness .apx file");
  witness_cmd->add_option("--property", prop, "override the file's property");
  witness_cmd->add_option("--semantics", sem, "override the file's semantics");
  witness_cmd->add_option("--pair", pair, "CP,QP | CP,AvsFD | CP,PlusDB | VP,PlusDB_strict");
  witness_cmd->add_flag("--sweep-lengths", sweep, "graft every branch length up to 6");
  flags.add_solver(witness_cmd);
  flags.add_seed(witness_cmd);
  flags.add_format(witness_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rank_cmd) return cmd_rank(input, sem, flags);
    if (*survey_cmd) return cmd_survey(input, flags);
    if (*check_cmd) return cmd_check(input, prop, sem, sweep, flags);
    if (*fuzz_cmd) return cmd_fuzz(ff, flags);
    if (*witness_cmd) return cmd_witness(input, prop, sem, pair, sweep, flags);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidFramework& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantics;
  }
  return 0;
}
