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

#ifndef MAXDIV_DYNAMICS_HPP
#define MAXDIV_DYNAMICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxdiv/core.hpp"

namespace maxdiv {

/// One live change to an instance: a weight increase/decrease on an item or
/// a distance increase/decrease on a pair; the four perturbation types.
struct PerturbationEvent {
  enum class Kind {
    kWeightIncrease,
    kWeightDecrease,
    kDistanceIncrease,
    kDistanceDecrease
  };

  Kind kind = Kind::kWeightIncrease;
  int item = -1;   // weight events; first endpoint for distance events
  int other = -1;  // second endpoint for distance events
  double delta = 0.0;

  static PerturbationEvent weight_increase(int item, double delta);
  static PerturbationEvent weight_decrease(int item, double delta);
  static PerturbationEvent distance_increase(int u, int v, double delta);
  static PerturbationEvent distance_decrease(int u, int v, double delta);

  bool is_weight_event() const {
    return kind == Kind::kWeightIncrease || kind == Kind::kWeightDecrease;
  }
};

std::string to_string(PerturbationEvent::Kind kind);

/// Returns the perturbed instance. Quality must be modular. Weight decreases
/// may not push a weight below zero; distance changes are re-validated
/// against the metric condition (only triangles through the changed pair can
/// break) and rejected with MetricViolation if it fails.
Instance apply_perturbation(const Instance& inst, const PerturbationEvent& ev);

struct UpdateResult {
  std::vector<int> selected;  // the (possibly) updated solution set
  double delta = 0.0;         // phi(S') - phi(S), >= 0
  bool swapped = false;
};

/// Oblivious single-swap update rule: finds the pair (u in S, v outside S)
/// maximizing phi(S - u + v) - phi(S) and applies it iff the gain is
/// strictly positive. At most one swap per call; never decreases phi.
UpdateResult oblivious_update(const Instance& inst, std::span<const int> s);

/// Number of oblivious updates sufficient to restore a 3-approximation after
/// a weight decrease of delta on a solution of value w:
/// ceil(log_{(p-2)/(p-3)} (w / (w - delta))), and 1 whenever
/// delta <= w / (p - 2) or p <= 3. Requires 0 < delta < w.
int required_updates_bound(double w, double delta, int p);

enum class PerturbationEnv { kVertex, kEdge, kMixed };

std::string to_string(PerturbationEnv env);

struct DynamicsStep {
  int repeat = 0;
  int step = 0;  // 1-based; step 0 rows are the pre-perturbation baseline
  PerturbationEvent event;
  int updates_applied = 0;
  double update_delta = 0.0;
  double phi_before = 0.0;  // phi(S) right after the event, before updates
  double phi_after = 0.0;
  double phi_opt = 0.0;
  double ratio = 1.0;  // phi_opt / phi_after
};

struct DynamicsReport {
  // Protocol echo.
  int n = 0, p = 0, steps = 0, repeats = 0;
  double lambda = 0.0;
  PerturbationEnv env = PerturbationEnv::kMixed;
  std::uint64_t seed = 0;

  std::vector<double> initial_ratio;  // per repeat, before any perturbation
  std::vector<DynamicsStep> rows;
  double worst_ratio = 0.0;  // over initial ratios and all steps
};

/// The dynamic-update protocol: per repeat, seed with the vertex-greedy
/// solution, then per step draw one random event for env (weight resets are
/// uniform on [0,1], distance resets uniform on [1,2]), apply it, run the
/// oblivious update (the bounded count for large weight decreases, otherwise
/// exactly one), and log phi(OPT)/phi(S) against a freshly recomputed
/// brute-force optimum. Fully reproducible for a fixed seed.
DynamicsReport simulate(const Instance& inst0, int p, PerturbationEnv env, int steps,
                        int repeats, std::uint64_t seed);

}  // namespace maxdiv

#endif  // MAXDIV_DYNAMICS_HPP
