// Copyright 2026 The Authors.
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

#include "maxdiv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "maxdiv/datagen.hpp"
#include "maxdiv/dynamics.hpp"
#include "maxdiv/errors.hpp"
#include "maxdiv/format.hpp"
#include "maxdiv/harness.hpp"
#include "maxdiv/instance_io.hpp"
#include "maxdiv/solvers.hpp"

namespace maxdiv {
namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  double lambda = 0.2;
  std::string format = "table";  // table | csv | jsonl
  std::string out;               // empty = stdout
};

void write_output(const GlobalOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + opts.out + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + opts.out);
}

/// Accepts "3..7", "5:75:5" and "3,4,7" forms.
std::vector<int> parse_p_list(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    try {
      size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InvalidInput("bad p value '" + s + "' in '" + text + "'");
    }
  };
  if (const size_t dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    for (int p = lo; p <= hi; ++p) out.push_back(p);
  } else if (text.find(':') != std::string::npos) {
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 + 1);
    const int lo = to_int(text.substr(0, c1));
    const int hi = to_int(c2 == std::string::npos ? text.substr(c1 + 1)
                                                  : text.substr(c1 + 1, c2 - c1 - 1));
    const int step = c2 == std::string::npos ? 1 : to_int(text.substr(c2 + 1));
    if (step <= 0) throw InvalidInput("p range step must be positive");
    for (int p = lo; p <= hi; p += step) out.push_back(p);
  } else {
    size_t start = 0;
    while (start <= text.size()) {
      const size_t comma = text.find(',', start);
      const std::string piece =
          text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) out.push_back(to_int(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (out.empty()) throw InvalidInput("empty p list '" + text + "'");
  return out;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  const size_t c1 = text.find(':');
  if (c1 == std::string::npos) return {std::stod(text)};
  const size_t c2 = text.find(':', c1 + 1);
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(c2 == std::string::npos ? text.substr(c1 + 1)
                                                      : text.substr(c1 + 1, c2 - c1 - 1));
  const double step = c2 == std::string::npos ? 0.1 : std::stod(text.substr(c2 + 1));
  if (step <= 0.0) throw InvalidInput("lambda grid step must be positive");
  std::vector<double> grid;
  for (double v = lo; v <= hi + 1e-12; v += step) grid.push_back(v);
  return grid;
}

PerturbationEnv parse_env(const std::string& name) {
  if (name == "vertex" || name == "vperturbation") return PerturbationEnv::kVertex;
  if (name == "edge" || name == "eperturbation") return PerturbationEnv::kEdge;
  if (name == "mixed" || name == "mperturbation") return PerturbationEnv::kMixed;
  throw InvalidInput("unknown --env '" + name + "'");
}

std::string trial_table(const TrialReport& t) {
  std::string out;
  out += "algorithm:    " + t.algorithm + (t.variant.empty() ? "" : " (" + t.variant + ")") + '\n';
  out += "n, p, lambda: " + std::to_string(t.n) + ", " + std::to_string(t.p) + ", " +
         format_double(t.lambda) + '\n';
  out += "selected:     " + join_ints(t.selected) + '\n';
  out += "objective:    " + format_double(t.objective) + '\n';
  out += "f_part:       " + format_double(t.f_part) + '\n';
  out += "d_part:       " + format_double(t.d_part) + '\n';
  out += "wall_time_ms: " + format_double(t.wall_time_ms) + '\n';
  return out;
}

void emit_trial(const GlobalOpts& opts, const TrialReport& report) {
  if (opts.format == "csv") {
    write_output(opts, trials_to_csv({report}));
  } else if (opts.format == "jsonl") {
    write_output(opts, trials_to_json_lines({report}));
  } else {
    write_output(opts, trial_table(report));
  }
}

int run_gen(const GlobalOpts& opts, int n) {
  const Instance inst = gen_synthetic(n, opts.lambda, opts.seed);
  const std::string text = instance_to_string(inst);
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_instance(opts.out, inst);
  }
  return 0;
}

int run_solve(const GlobalOpts& opts, const std::string& path, const std::string& alg,
              int p, const SolverConfig& solver) {
  const InstanceFile file = read_instance(path);
  const Instance& inst = file.instance;

  const auto algorithm = algorithm_from_name(alg);
  if (!algorithm.has_value()) throw InvalidInput("unknown --alg '" + alg + "'");

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  SolveResult result;
  std::string variant;
  switch (*algorithm) {
    case Algorithm::kGreedyA:
      if (p <= 0) throw InvalidInput("solve: greedy-a needs --p");
      result = greedy_edge_modular(inst, p, solver);
      variant = solver.greedy_a_tail == SolverConfig::GreedyTail::kBestLast ? "best_last"
                                                                            : "arbitrary_last";
      break;
    case Algorithm::kGreedyB:
      if (p <= 0) throw InvalidInput("solve: greedy-b needs --p");
      if (file.matroid.has_value()) {
        result = greedy_vertex(inst, *file.matroid, solver);
      } else {
        result = greedy_vertex(inst, p, solver);
      }
      variant = solver.greedy_b_init == SolverConfig::GreedyInit::kBestPair ? "best_pair"
                                                                            : "arbitrary_first";
      break;
    case Algorithm::kLocalSearch: {
      MatroidOracle m = file.matroid.has_value() ? *file.matroid
                        : p > 0
                            ? MatroidOracle::uniform(inst.size(), p)
                            : throw InvalidInput("solve: local-search needs --p or an embedded matroid");
      result = local_search_matroid(inst, m, solver);
      variant = "eps=" + format_double(solver.ls_epsilon);
      if (!result.locally_optimal) variant += ",not_locally_optimal";
      break;
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  TrialReport report = make_trial_report(inst, alg, variant, result.solution, ms);
  report.seed = solver.seed;
  emit_trial(opts, report);
  return 0;
}

int run_brute(const GlobalOpts& opts, const std::string& path, int p, bool use_matroid,
              int threads) {
  const InstanceFile file = read_instance(path);
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  Solution opt;
  if (use_matroid || (p <= 0 && file.matroid.has_value())) {
    if (!file.matroid.has_value())
      throw InvalidInput("brute: --matroid given but the file has no matroid section");
    opt = brute_force_opt(file.instance, *file.matroid);
  } else {
    if (p <= 0) throw InvalidInput("brute: needs --p or an embedded matroid");
    opt = brute_force_opt(file.instance, p, threads);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit_trial(opts, make_trial_report(file.instance, "brute-force", "", opt, ms));
  return 0;
}

int run_compare(const GlobalOpts& opts, const ComparisonConfig& config, bool per_trial) {
  const ComparisonReport report = run_comparison(config);
  if (opts.format == "csv") {
    std::string text = comparison_rows_to_csv(report.rows, report.config);
    if (per_trial) text += "\n" + trials_to_csv(report.trials);
    write_output(opts, text);
  } else if (opts.format == "jsonl") {
    write_output(opts, trials_to_json_lines(report.trials));
  } else {
    write_output(opts, comparison_table(report));
  }
  return 0;
}

int run_dynamics(const GlobalOpts& opts, int n, int p, const std::string& env_name,
                 int steps, int repeats, const std::string& lambda_grid) {
  const PerturbationEnv env = parse_env(env_name);
  const std::vector<double> grid =
      lambda_grid.empty() ? std::vector<double>{opts.lambda} : parse_lambda_grid(lambda_grid);

  std::string csv, jsonl, table;
  for (double lambda : grid) {
    const Instance inst = gen_synthetic(n, lambda, opts.seed);
    const DynamicsReport report = simulate(inst, p, env, steps, repeats, opts.seed);
    if (opts.format == "csv") {
      const std::string full = dynamics_to_csv(report);
      csv += csv.empty() ? full : full.substr(full.find('\n') + 1);
    } else if (opts.format == "jsonl") {
      jsonl += dynamics_to_json_lines(report);
    } else {
      table += "lambda " + format_double(lambda) + " env " + to_string(env) +
               ": worst ratio " + format_double(report.worst_ratio) + " over " +
               std::to_string(repeats) + " repeats x " + std::to_string(steps) + " steps\n";
    }
  }
  if (opts.format == "csv")
    write_output(opts, csv);
  else if (opts.format == "jsonl")
    write_output(opts, jsonl);
  else
    write_output(opts, table);
  return 0;
}

int run_ingest(const GlobalOpts& opts, const std::string& path, const std::string& query,
               int top_n, const std::string& mode_name, bool normalize) {
  const std::vector<LetorQuery> queries = parse_letor(path);
  if (queries.empty()) throw InvalidInput("ingest: no documents in " + path);

  const LetorQuery* chosen = &queries.front();
  if (!query.empty()) {
    chosen = nullptr;
    for (const LetorQuery& q : queries)
      if (q.query_id == query) chosen = &q;
    if (chosen == nullptr) throw InvalidInput("ingest: qid '" + query + "' not in file");
  }

  DistanceMode mode;
  if (mode_name == "one-minus-cosine") {
    mode = DistanceMode::kOneMinusCosine;
  } else if (mode_name == "angular") {
    mode = DistanceMode::kAngular;
  } else {
    throw InvalidInput("unknown --mode '" + mode_name + "'");
  }

  const CosineInstanceResult built = build_cosine_instance(
      chosen->docs, top_n, opts.lambda, mode,
      normalize ? FeatureScaling::kMinMax : FeatureScaling::kNone);

  std::cerr << "ingest: qid " << chosen->query_id << ", " << built.instance.size()
            << " documents, distance mode " << to_string(mode) << "\n";
  if (!built.metric.is_metric()) {
    std::cerr << "ingest: warning: " << built.metric.triangle_violations.size()
              << " triangle violation(s); solvers stay well-defined but the "
                 "approximation guarantees need a metric\n";
  }

  const std::string text = instance_to_string(built.instance);
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_instance(opts.out, built.instance);
  }
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"max-sum diversification solvers and benchmark harness"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may appear after the subcommand

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "master random seed")->capture_default_str();
  app.add_option("--lambda", opts.lambda, "quality/dispersion trade-off weight")
      ->capture_default_str();
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "output file (default stdout)");

  SolverConfig solver;
  bool plain_init = false, plain_tail = false;

  // gen
  auto* gen = app.add_subcommand("gen", "write a synthetic instance");
  int gen_n = 50;
  gen->add_option("--n", gen_n, "universe size")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
  std::string solve_path, solve_alg = "greedy-b";
  int solve_p = 0;
  solve->add_option("instance", solve_path, "instance file")->required();
  solve->add_option("--alg", solve_alg, "greedy-a | greedy-b | local-search")
      ->capture_default_str();
  solve->add_option("--p", solve_p, "cardinality constraint");
  solve->add_flag("--plain-init", plain_init, "greedy-b: plain first pick instead of best pair");
  solve->add_flag("--plain-tail", plain_tail, "greedy-a: arbitrary last item when p is odd");
  solve->add_option("--ls-epsilon", solver.ls_epsilon, "relative improvement threshold");
  solve->add_option("--ls-max-iters", solver.ls_max_iters, "swap cap");

  // brute
  auto* brute = app.add_subcommand("brute", "exact optimum by enumeration");
  std::string brute_path;
  int brute_p = 0, brute_threads = 0;
  bool brute_matroid = false;
  brute->add_option("instance", brute_path, "instance file")->required();
  brute->add_option("--p", brute_p, "cardinality constraint");
  brute->add_flag("--matroid", brute_matroid, "optimize over the file's matroid bases");
  brute->add_option("--threads", brute_threads, "worker threads (0 = auto)");

  // compare
  auto* compare = app.add_subcommand("compare", "benchmark algorithms on synthetic instances");
  ComparisonConfig cmp;
  std::string cmp_p = "3..7", cmp_algs = "greedy-a,greedy-b";
  bool per_trial = false;
  compare->add_option("--n", cmp.n, "universe size")->capture_default_str();
  compare->add_option("--p", cmp_p, "p list: 3..7 or 5:75:5 or 3,5,7")->capture_default_str();
  compare->add_option("--trials", cmp.trials, "trials per p")->capture_default_str();
  compare->add_option("--algs", cmp_algs, "comma list of greedy-a,greedy-b,local-search")
      ->capture_default_str();
  compare->add_flag("--opt", cmp.compute_opt, "also compute the exact optimum");
  compare->add_flag("--per-trial", per_trial, "append per-trial rows to csv output");
  compare->add_option("--threads", cmp.opt_threads, "brute-force worker threads");
  compare->add_option("--ls-time-factor", cmp.ls_time_factor,
                      "local-search budget as a multiple of greedy-b time");
  compare->add_flag("--plain-init", plain_init, "greedy-b: plain first pick instead of best pair");
  compare->add_flag("--plain-tail", plain_tail, "greedy-a: arbitrary last item when p is odd");

  // dynamics
  auto* dynamics = app.add_subcommand("dynamics", "dynamic-update simulation");
  int dyn_n = 50, dyn_p = 5, dyn_steps = 20, dyn_repeats = 100;
  std::string dyn_env = "mixed", dyn_grid;
  dynamics->add_option("--n", dyn_n, "universe size")->capture_default_str();
  dynamics->add_option("--p", dyn_p, "cardinality constraint")->capture_default_str();
  dynamics->add_option("--env", dyn_env, "vertex | edge | mixed")->capture_default_str();
  dynamics->add_option("--steps", dyn_steps, "perturbations per repeat")->capture_default_str();
  dynamics->add_option("--repeats", dyn_repeats, "independent repeats")->capture_default_str();
  dynamics->add_option("--lambda-grid", dyn_grid, "lambda grid start:stop:step");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "build an instance from a ranked-document file");
  std::string ingest_path, ingest_query, ingest_mode = "one-minus-cosine";
  int ingest_top = 50;
  bool ingest_normalize = false;
  ingest->add_option("file", ingest_path, "ranked-document text file")->required();
  ingest->add_option("--query", ingest_query, "query id (default: first in file)");
  ingest->add_option("--top-n", ingest_top, "top documents by relevance")->capture_default_str();
  ingest->add_option("--mode", ingest_mode, "one-minus-cosine | angular")->capture_default_str();
  ingest->add_flag("--normalize", ingest_normalize, "per-feature min-max scaling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  solver.seed = opts.seed;
  if (plain_init) solver.greedy_b_init = SolverConfig::GreedyInit::kArbitraryFirst;
  if (plain_tail) solver.greedy_a_tail = SolverConfig::GreedyTail::kArbitraryLast;

  try {
    if (gen->parsed()) return run_gen(opts, gen_n);
    if (solve->parsed()) return run_solve(opts, solve_path, solve_alg, solve_p, solver);
    if (brute->parsed())
      return run_brute(opts, brute_path, brute_p, brute_matroid, brute_threads);
    if (compare->parsed()) {
      cmp.seed = opts.seed;
      cmp.lambda = opts.lambda;
      cmp.solver = solver;
      cmp.p_values = parse_p_list(cmp_p);
      cmp.algorithms.clear();
      size_t start = 0;
      while (start <= cmp_algs.size()) {
        const size_t comma = cmp_algs.find(',', start);
        const std::string name = cmp_algs.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!name.empty()) {
          const auto a = algorithm_from_name(name);
          if (!a.has_value()) throw InvalidInput("unknown algorithm '" + name + "'");
          cmp.algorithms.push_back(*a);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return run_compare(opts, cmp, per_trial);
    }
    if (dynamics->parsed())
      return run_dynamics(opts, dyn_n, dyn_p, dyn_env, dyn_steps, dyn_repeats, dyn_grid);
    if (ingest->parsed())
      return run_ingest(opts, ingest_path, ingest_query, ingest_top, ingest_mode,
                        ingest_normalize);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace maxdiv
