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

#include "maxdiv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "maxdiv/datagen.hpp"
#include "maxdiv/errors.hpp"
#include "maxdiv/format.hpp"
#include "maxdiv/rng.hpp"

namespace maxdiv {

double approximation_factor(double opt_value, double alg_value) {
  if (!(alg_value > 0.0))
    throw InvalidInput("approximation_factor: algorithm value must be positive");
  return opt_value / alg_value;
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kGreedyA:
      return "greedy-a";
    case Algorithm::kGreedyB:
      return "greedy-b";
    case Algorithm::kLocalSearch:
      return "local-search";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "greedy-a") return Algorithm::kGreedyA;
  if (name == "greedy-b") return Algorithm::kGreedyB;
  if (name == "local-search") return Algorithm::kLocalSearch;
  return std::nullopt;
}

TrialReport make_trial_report(const Instance& inst, const std::string& algorithm,
                              const std::string& variant, const Solution& sol,
                              double wall_time_ms) {
  TrialReport report;
  report.n = inst.size();
  report.p = static_cast<int>(sol.selected.size());
  report.lambda = inst.lambda();
  report.algorithm = algorithm;
  report.variant = variant;
  report.selected = sol.selected;
  report.f_part = inst.quality().value(sol.selected);
  report.d_part = set_distance(inst, sol.selected);
  report.objective = report.f_part + inst.lambda() * report.d_part;
  report.wall_time_ms = wall_time_ms;

  // Emitted objectives must re-verify against the core objective.
  const double scale = std::max({1.0, std::abs(report.objective), std::abs(sol.objective)});
  if (std::abs(report.objective - sol.objective) > 1e-9 * scale)
    throw InternalInvariantError("trial report: cached objective drifted from recomputation");
  return report;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string variant_label(Algorithm a, const SolverConfig& cfg) {
  switch (a) {
    case Algorithm::kGreedyA:
      return cfg.greedy_a_tail == SolverConfig::GreedyTail::kBestLast ? "best_last"
                                                                      : "arbitrary_last";
    case Algorithm::kGreedyB:
      return cfg.greedy_b_init == SolverConfig::GreedyInit::kBestPair ? "best_pair"
                                                                      : "arbitrary_first";
    case Algorithm::kLocalSearch:
      return "eps=" + format_double(cfg.ls_epsilon) + ";warm=greedy-b";
  }
  return {};
}

struct TrialOutcome {
  bool ok = false;
  double value = 0.0;
  double time_ms = 0.0;
};

}  // namespace

ComparisonReport run_comparison(const ComparisonConfig& config) {
  if (config.trials < 1) throw InvalidInput("run_comparison: trials must be positive");
  ComparisonReport report;
  report.config = config;

  const auto wants = [&](Algorithm a) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), a) !=
           config.algorithms.end();
  };

  for (int p : config.p_values) {
    // Per-algorithm running sums for this p.
    struct Sums {
      double value = 0.0, time = 0.0;
      int count = 0;
    };
    Sums opt_sums, a_sums, b_sums, ls_sums;

    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t inst_seed =
          Rng::mix(config.seed, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(trial));
      const Instance inst = gen_synthetic(config.n, config.lambda, inst_seed);

      auto emit_error = [&](Algorithm a, const std::string& what) {
        TrialReport row;
        row.n = config.n;
        row.p = p;
        row.lambda = config.lambda;
        row.algorithm = algorithm_name(a);
        row.variant = variant_label(a, config.solver);
        row.seed = inst_seed;
        row.trial = trial;
        row.error = what;
        report.trials.push_back(std::move(row));
      };

      std::optional<double> opt_value;
      if (config.compute_opt) {
        try {
          const auto t0 = Clock::now();
          const Solution opt = brute_force_opt(inst, p, config.opt_threads);
          const double ms = ms_since(t0);
          TrialReport row = make_trial_report(inst, "brute-force", "", opt, ms);
          row.seed = inst_seed;
          row.trial = trial;
          report.trials.push_back(row);
          opt_value = row.objective;
          opt_sums.value += row.objective;
          opt_sums.time += ms;
          ++opt_sums.count;
        } catch (const std::exception& e) {
          TrialReport row;
          row.n = config.n;
          row.p = p;
          row.lambda = config.lambda;
          row.algorithm = "brute-force";
          row.seed = inst_seed;
          row.trial = trial;
          row.error = e.what();
          report.trials.push_back(std::move(row));
        }
      }

      TrialOutcome a_out, b_out;
      Solution greedy_b_solution;

      auto run_one = [&](Algorithm a) -> TrialOutcome {
        TrialOutcome out;
        try {
          const auto t0 = Clock::now();
          SolveResult r;
          double ms = 0.0;
          switch (a) {
            case Algorithm::kGreedyA:
              r = greedy_edge_modular(inst, p, config.solver);
              ms = ms_since(t0);
              break;
            case Algorithm::kGreedyB:
              r = greedy_vertex(inst, p, config.solver);
              ms = ms_since(t0);
              break;
            case Algorithm::kLocalSearch: {
              // Warm-start from the vertex greedy; the measured wall time
              // covers only the swap phase. The 10x-greedy budget is applied
              // as the equivalent deterministic work cap (one swap scan costs
              // about p*(n-p) evaluations) so reports stay byte-reproducible;
              // a wall-clock cutoff would bind at a jitter-dependent swap.
              if (greedy_b_solution.selected.empty())
                greedy_b_solution = greedy_vertex(inst, p, config.solver).solution;
              SolverConfig ls_cfg = config.solver;
              if (config.ls_time_factor > 0.0) {
                const double n = config.n;
                const double greedy_cost =
                    n * p + (ls_cfg.greedy_b_init == SolverConfig::GreedyInit::kBestPair
                                 ? n * (n - 1) / 2
                                 : 0.0);
                const double scan_cost = std::max(1.0, static_cast<double>(p) * (n - p));
                ls_cfg.ls_max_iters = std::max(
                    1, static_cast<int>(std::ceil(config.ls_time_factor * greedy_cost /
                                                  scan_cost)));
              }
              const MatroidOracle uniform = MatroidOracle::uniform(config.n, p);
              const auto ls0 = Clock::now();
              r = local_search_matroid(inst, uniform, ls_cfg, greedy_b_solution.selected);
              ms = ms_since(ls0);
              break;
            }
          }
          TrialReport row = make_trial_report(inst, algorithm_name(a),
                                              variant_label(a, config.solver), r.solution, ms);
          row.seed = inst_seed;
          row.trial = trial;
          if (opt_value.has_value() && row.objective > 0.0)
            row.af_vs_opt = approximation_factor(*opt_value, row.objective);
          // Chain ratio against the previous algorithm in canonical order.
          if (a == Algorithm::kGreedyB && a_out.ok && a_out.value > 0.0)
            row.af_vs_other = row.objective / a_out.value;
          if (a == Algorithm::kLocalSearch && b_out.ok && b_out.value > 0.0)
            row.af_vs_other = row.objective / b_out.value;
          report.trials.push_back(row);
          out.ok = true;
          out.value = row.objective;
          out.time_ms = ms;
          if (a == Algorithm::kGreedyB) greedy_b_solution = std::move(r.solution);
        } catch (const std::exception& e) {
          emit_error(a, e.what());
        }
        return out;
      };

      if (wants(Algorithm::kGreedyA)) {
        a_out = run_one(Algorithm::kGreedyA);
        if (a_out.ok) {
          a_sums.value += a_out.value;
          a_sums.time += a_out.time_ms;
          ++a_sums.count;
        }
      }
      if (wants(Algorithm::kGreedyB)) {
        b_out = run_one(Algorithm::kGreedyB);
        if (b_out.ok) {
          b_sums.value += b_out.value;
          b_sums.time += b_out.time_ms;
          ++b_sums.count;
        }
      }
      if (wants(Algorithm::kLocalSearch)) {
        const TrialOutcome ls_out = run_one(Algorithm::kLocalSearch);
        if (ls_out.ok) {
          ls_sums.value += ls_out.value;
          ls_sums.time += ls_out.time_ms;
          ++ls_sums.count;
        }
      }
    }

    ComparisonRow row;
    row.p = p;
    row.trials = config.trials;
    auto mean = [](const Sums& s) -> std::optional<double> {
      if (s.count == 0) return std::nullopt;
      return s.value / s.count;
    };
    auto mean_time = [](const Sums& s) -> std::optional<double> {
      if (s.count == 0) return std::nullopt;
      return s.time / s.count;
    };
    row.opt_mean = mean(opt_sums);
    row.greedy_a_mean = mean(a_sums);
    row.greedy_b_mean = mean(b_sums);
    row.ls_mean = mean(ls_sums);
    row.time_a_ms = mean_time(a_sums);
    row.time_b_ms = mean_time(b_sums);
    row.time_ls_ms = mean_time(ls_sums);
    if (row.opt_mean) {
      if (row.greedy_a_mean && *row.greedy_a_mean > 0.0)
        row.af_greedy_a = approximation_factor(*row.opt_mean, *row.greedy_a_mean);
      if (row.greedy_b_mean && *row.greedy_b_mean > 0.0)
        row.af_greedy_b = approximation_factor(*row.opt_mean, *row.greedy_b_mean);
      if (row.ls_mean && *row.ls_mean > 0.0)
        row.af_ls = approximation_factor(*row.opt_mean, *row.ls_mean);
    }
    if (row.greedy_a_mean && row.greedy_b_mean && *row.greedy_a_mean > 0.0)
      row.af_b_over_a = *row.greedy_b_mean / *row.greedy_a_mean;
    if (row.greedy_b_mean && row.ls_mean && *row.greedy_b_mean > 0.0)
      row.af_ls_over_b = *row.ls_mean / *row.greedy_b_mean;
    if (row.time_a_ms && row.time_b_ms && *row.time_b_ms > 0.0)
      row.time_a_over_b = *row.time_a_ms / *row.time_b_ms;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string opt_cell(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : std::string();
}

}  // namespace

std::string trials_to_csv(const std::vector<TrialReport>& trials) {
  std::string out =
      "n,p,lambda,algorithm,variant,seed,trial,selected,objective,f_part,d_part,"
      "wall_time_ms,af_vs_opt,af_vs_other,error\n";
  for (const TrialReport& t : trials) {
    out += std::to_string(t.n) + ',' + std::to_string(t.p) + ',' + format_double(t.lambda) +
           ',' + t.algorithm + ',' + t.variant + ',' + std::to_string(t.seed) + ',' +
           std::to_string(t.trial) + ',' + join_ints(t.selected) + ',' +
           format_double(t.objective) + ',' + format_double(t.f_part) + ',' +
           format_double(t.d_part) + ',' + format_double(t.wall_time_ms) + ',' +
           (t.af_vs_opt ? format_double(*t.af_vs_opt) : "") + ',' +
           (t.af_vs_other ? format_double(*t.af_vs_other) : "") + ',' + t.error + '\n';
  }
  return out;
}

std::string trials_to_json_lines(const std::vector<TrialReport>& trials) {
  std::string out;
  for (const TrialReport& t : trials) {
    nlohmann::json j{{"n", t.n},
                     {"p", t.p},
                     {"lambda", t.lambda},
                     {"algorithm", t.algorithm},
                     {"variant", t.variant},
                     {"seed", t.seed},
                     {"trial", t.trial},
                     {"selected", t.selected},
                     {"objective", t.objective},
                     {"f_part", t.f_part},
                     {"d_part", t.d_part},
                     {"wall_time_ms", t.wall_time_ms}};
    if (t.af_vs_opt) j["af_vs_opt"] = *t.af_vs_opt;
    if (t.af_vs_other) j["af_vs_other"] = *t.af_vs_other;
    if (!t.error.empty()) j["error"] = t.error;
    out += j.dump() + '\n';
  }
  return out;
}

std::string comparison_rows_to_csv(const std::vector<ComparisonRow>& rows,
                                   const ComparisonConfig& config) {
  std::string out =
      "n,lambda,trials,p,opt_mean,greedy_a_mean,greedy_b_mean,ls_mean,af_greedy_a,"
      "af_greedy_b,af_ls,af_b_over_a,af_ls_over_b,time_a_ms,time_b_ms,time_ls_ms,"
      "time_a_over_b\n";
  for (const ComparisonRow& r : rows) {
    out += std::to_string(config.n) + ',' + format_double(config.lambda) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(r.p) + ',' + opt_cell(r.opt_mean) +
           ',' + opt_cell(r.greedy_a_mean) + ',' + opt_cell(r.greedy_b_mean) + ',' +
           opt_cell(r.ls_mean) + ',' + opt_cell(r.af_greedy_a) + ',' + opt_cell(r.af_greedy_b) +
           ',' + opt_cell(r.af_ls) + ',' + opt_cell(r.af_b_over_a) + ',' +
           opt_cell(r.af_ls_over_b) + ',' + opt_cell(r.time_a_ms) + ',' +
           opt_cell(r.time_b_ms) + ',' + opt_cell(r.time_ls_ms) + ',' +
           opt_cell(r.time_a_over_b) + '\n';
  }
  return out;
}

std::string comparison_table(const ComparisonReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  const auto& rows = report.rows;
  auto any = [&](auto member) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const ComparisonRow& r) { return (r.*member).has_value(); });
  };
  const bool has_opt = any(&ComparisonRow::opt_mean);
  const bool has_a = any(&ComparisonRow::greedy_a_mean);
  const bool has_b = any(&ComparisonRow::greedy_b_mean);
  const bool has_ls = any(&ComparisonRow::ls_mean);

  out << std::setw(4) << "p";
  if (has_opt) out << std::setw(12) << "OPT";
  if (has_a) out << std::setw(12) << "GreedyA";
  if (has_b) out << std::setw(12) << "GreedyB";
  if (has_ls) out << std::setw(12) << "LS";
  if (has_opt && has_a) out << std::setw(10) << "AF_A";
  if (has_opt && has_b) out << std::setw(10) << "AF_B";
  if (has_opt && has_ls) out << std::setw(10) << "AF_LS";
  if (has_a && has_b) out << std::setw(10) << "AF_B/A";
  if (has_b && has_ls) out << std::setw(10) << "AF_LS/B";
  if (has_a) out << std::setw(12) << "T_A(ms)";
  if (has_b) out << std::setw(12) << "T_B(ms)";
  if (has_ls) out << std::setw(12) << "T_LS(ms)";
  if (has_a && has_b) out << std::setw(10) << "T_A/B";
  out << '\n';

  auto cell = [&](const std::optional<double>& v, int width) {
    out << std::setw(width);
    if (v.has_value())
      out << *v;
    else
      out << "-";
  };
  for (const ComparisonRow& r : rows) {
    out << std::setw(4) << r.p;
    if (has_opt) cell(r.opt_mean, 12);
    if (has_a) cell(r.greedy_a_mean, 12);
    if (has_b) cell(r.greedy_b_mean, 12);
    if (has_ls) cell(r.ls_mean, 12);
    if (has_opt && has_a) cell(r.af_greedy_a, 10);
    if (has_opt && has_b) cell(r.af_greedy_b, 10);
    if (has_opt && has_ls) cell(r.af_ls, 10);
    if (has_a && has_b) cell(r.af_b_over_a, 10);
    if (has_b && has_ls) cell(r.af_ls_over_b, 10);
    if (has_a) cell(r.time_a_ms, 12);
    if (has_b) cell(r.time_b_ms, 12);
    if (has_ls) cell(r.time_ls_ms, 12);
    if (has_a && has_b) cell(r.time_a_over_b, 10);
    out << '\n';
  }
  return out.str();
}

std::string dynamics_to_csv(const DynamicsReport& report) {
  std::string out =
      "lambda,env,repeat,step,ratio,event,item,other,delta,updates_applied,"
      "update_delta,phi_before,phi_after,phi_opt\n";
  const std::string prefix = format_double(report.lambda) + ',' + to_string(report.env) + ',';
  for (int r = 0; r < static_cast<int>(report.initial_ratio.size()); ++r) {
    out += prefix + std::to_string(r) + ",0," + format_double(report.initial_ratio[r]) +
           ",,,,,,,,,\n";
  }
  for (const DynamicsStep& s : report.rows) {
    out += prefix + std::to_string(s.repeat) + ',' + std::to_string(s.step) + ',' +
           format_double(s.ratio) + ',' + to_string(s.event.kind) + ',' +
           std::to_string(s.event.item) + ',' +
           (s.event.is_weight_event() ? "" : std::to_string(s.event.other)) + ',' +
           format_double(s.event.delta) + ',' + std::to_string(s.updates_applied) + ',' +
           format_double(s.update_delta) + ',' + format_double(s.phi_before) + ',' +
           format_double(s.phi_after) + ',' + format_double(s.phi_opt) + '\n';
  }
  return out;
}

std::string dynamics_to_json_lines(const DynamicsReport& report) {
  std::string out;
  for (int r = 0; r < static_cast<int>(report.initial_ratio.size()); ++r) {
    nlohmann::json j{{"lambda", report.lambda}, {"env", to_string(report.env)},
                     {"repeat", r},             {"step", 0},
                     {"ratio", report.initial_ratio[r]}};
    out += j.dump() + '\n';
  }
  for (const DynamicsStep& s : report.rows) {
    nlohmann::json j{{"lambda", report.lambda},
                     {"env", to_string(report.env)},
                     {"repeat", s.repeat},
                     {"step", s.step},
                     {"ratio", s.ratio},
                     {"event", to_string(s.event.kind)},
                     {"item", s.event.item},
                     {"delta", s.event.delta},
                     {"updates_applied", s.updates_applied},
                     {"update_delta", s.update_delta},
                     {"phi_before", s.phi_before},
                     {"phi_after", s.phi_after},
                     {"phi_opt", s.phi_opt}};
    if (!s.event.is_weight_event()) j["other"] = s.event.other;
    out += j.dump() + '\n';
  }
  return out;
}

std::string strip_time_columns(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) return csv;

  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    return fields;
  };

  const std::vector<std::string> header = split(line);
  std::vector<bool> is_time(header.size(), false);
  for (size_t i = 0; i < header.size(); ++i)
    is_time[i] = header[i].find("time") != std::string::npos;

  std::string out = line + '\n';
  while (std::getline(in, line)) {
    std::vector<std::string> fields = split(line);
    for (size_t i = 0; i < fields.size() && i < is_time.size(); ++i)
      if (is_time[i]) fields[i].clear();
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += fields[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace maxdiv
