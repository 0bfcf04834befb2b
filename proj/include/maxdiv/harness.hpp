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

#ifndef MAXDIV_HARNESS_HPP
#define MAXDIV_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxdiv/dynamics.hpp"
#include "maxdiv/solvers.hpp"

namespace maxdiv {

/// Observed average approximation ratio, opt_value / alg_value.
/// alg_value must be positive.
double approximation_factor(double opt_value, double alg_value);

enum class Algorithm { kGreedyA, kGreedyB, kLocalSearch };

/// CLI / report names: "greedy-a", "greedy-b", "local-search".
std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

/// One solver run on one instance. objective == f_part + lambda * d_part
/// within 1e-9; af_vs_opt (optimum over algorithm value, >= 1 up to float
/// noise) is present when the optimum was computed; af_vs_other compares
/// against the previous algorithm in canonical (greedy-a, greedy-b,
/// local-search) order and may fall below 1 when that algorithm won.
struct TrialReport {
  int n = 0;
  int p = 0;
  double lambda = 0.0;
  std::string algorithm;
  std::string variant;
  std::uint64_t seed = 0;
  int trial = 0;
  std::vector<int> selected;
  double objective = 0.0;
  double f_part = 0.0;
  double d_part = 0.0;
  double wall_time_ms = 0.0;
  std::optional<double> af_vs_opt;
  std::optional<double> af_vs_other;
  std::string error;  // nonempty when the solver failed on this row
};

/// Builds the report record for a finished solve (re-deriving f/d parts from
/// the selected set via the core objective).
TrialReport make_trial_report(const Instance& inst, const std::string& algorithm,
                              const std::string& variant, const Solution& sol,
                              double wall_time_ms);

struct ComparisonConfig {
  int n = 50;
  std::vector<int> p_values = {3, 4, 5, 6, 7};
  double lambda = 0.2;
  int trials = 5;
  std::vector<Algorithm> algorithms = {Algorithm::kGreedyA, Algorithm::kGreedyB};
  bool compute_opt = false;
  std::uint64_t seed = 1;
  SolverConfig solver;
  /// Local-search budget: factor times the vertex-greedy cost on the same
  /// instance. Applied as the equivalent swap-iteration cap (a wall-clock
  /// cutoff would make reports irreproducible); the greedy warm start is not
  /// charged against it. <= 0 disables the budget.
  double ls_time_factor = 10.0;
  int opt_threads = 0;
};

/// Aggregate row in the shape of the paper-style comparison tables; fields
/// are absent when the corresponding algorithm was not requested.
struct ComparisonRow {
  int p = 0;
  int trials = 0;
  std::optional<double> opt_mean;
  std::optional<double> greedy_a_mean, greedy_b_mean, ls_mean;
  std::optional<double> af_greedy_a, af_greedy_b, af_ls;    // opt_mean / alg_mean
  std::optional<double> af_b_over_a, af_ls_over_b;          // alg ratio of means
  std::optional<double> time_a_ms, time_b_ms, time_ls_ms;   // mean wall times
  std::optional<double> time_a_over_b;
};

struct ComparisonReport {
  ComparisonConfig config;
  std::vector<TrialReport> trials;  // includes "brute-force" rows when opt is on
  std::vector<ComparisonRow> rows;
};

/// The benchmark protocol: per (p, trial) draw a fresh synthetic instance
/// from a seed derived as mix(seed, p, trial), run every requested algorithm
/// on it (and the exact optimum when compute_opt), then aggregate means and
/// the AF columns per p. Solver failures are recorded in the affected row's
/// error field; the run continues.
ComparisonReport run_comparison(const ComparisonConfig& config);

/// --- report serialization (column orders are frozen; see README) ---

std::string trials_to_csv(const std::vector<TrialReport>& trials);
std::string trials_to_json_lines(const std::vector<TrialReport>& trials);
std::string comparison_rows_to_csv(const std::vector<ComparisonRow>& rows,
                                   const ComparisonConfig& config);
std::string comparison_table(const ComparisonReport& report);

std::string dynamics_to_csv(const DynamicsReport& report);
std::string dynamics_to_json_lines(const DynamicsReport& report);

/// Blanks the wall-time column(s) of a CSV produced by the serializers
/// above; lets byte-level reproducibility checks ignore timing jitter.
std::string strip_time_columns(const std::string& csv);

}  // namespace maxdiv

#endif  // MAXDIV_HARNESS_HPP
