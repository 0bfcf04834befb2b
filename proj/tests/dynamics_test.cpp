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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "maxdiv/datagen.hpp"
#include "maxdiv/dynamics.hpp"
#include "maxdiv/errors.hpp"
#include "maxdiv/solvers.hpp"
#include "support.hpp"

using namespace maxdiv;
using namespace maxdiv::testing;

namespace {

/// Exhaustive swap oracle: the best single-swap gain over all (out, in)
/// pairs, each evaluated by a from-scratch objective.
double best_swap_gain_reference(const Instance& inst, const std::vector<int>& s) {
  const double base = objective(inst, s);
  double best = 0.0;
  for (size_t i = 0; i < s.size(); ++i)
    for (int v = 0; v < inst.size(); ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      std::vector<int> swapped = s;
      swapped[i] = v;
      best = std::max(best, objective(inst, swapped) - base);
    }
  return best;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("zero-delta weight event leaves the instance unchanged") {
  const Instance inst = gen_synthetic(8, 0.2, 1);
  const Instance out = apply_perturbation(inst, PerturbationEvent::weight_increase(3, 0.0));
  CHECK(out.quality().weights() == inst.quality().weights());
  CHECK(out.distances() == inst.distances());
}

TEST_CASE("weight events move a single weight") {
  const Instance inst = gen_synthetic(8, 0.2, 2);
  const double w3 = inst.quality().weight(3);
  const Instance up = apply_perturbation(inst, PerturbationEvent::weight_increase(3, 0.5));
  CHECK(up.quality().weight(3) == doctest::Approx(w3 + 0.5));
  const Instance down = apply_perturbation(up, PerturbationEvent::weight_decrease(3, 0.2));
  CHECK(down.quality().weight(3) == doctest::Approx(w3 + 0.3));
  CHECK_THROWS_AS(apply_perturbation(inst, PerturbationEvent::weight_decrease(3, w3 + 1.0)),
                  InvalidInput);
}

TEST_CASE("distance resets within the generator range stay metric") {
  Rng rng(3);
  Instance inst = gen_synthetic(10, 0.2, 3);
  for (int rep = 0; rep < 100; ++rep) {
    const int u = rng.uniform_int(0, 9);
    int v = rng.uniform_int(0, 8);
    if (v >= u) ++v;
    const double target = rng.uniform(1.0, 2.0);
    const double old_d = inst.distance(u, v);
    const PerturbationEvent ev =
        target >= old_d ? PerturbationEvent::distance_increase(u, v, target - old_d)
                        : PerturbationEvent::distance_decrease(u, v, old_d - target);
    inst = apply_perturbation(inst, ev);
    CHECK(inst.distance(u, v) == doctest::Approx(target));
  }
  CHECK(validate_metric(inst.distances()).is_metric());
}

TEST_CASE("a metric-breaking distance change is rejected") {
  DistanceMatrix d(3);
  d.set_symmetric(0, 2, 2.0);
  d.set_symmetric(0, 1, 1.0);
  d.set_symmetric(1, 2, 1.0);
  const Instance inst(std::move(d), QualityFunction::modular({0, 0, 0}), 1.0);
  // Shrinking a supporting edge strands the long edge 0-2.
  CHECK_THROWS_AS(apply_perturbation(inst, PerturbationEvent::distance_decrease(0, 1, 0.5)),
                  MetricViolation);
  // Growing the long edge breaks it directly.
  CHECK_THROWS_AS(apply_perturbation(inst, PerturbationEvent::distance_increase(0, 2, 0.5)),
                  MetricViolation);
  // A negative distance is no distance.
  CHECK_THROWS_AS(apply_perturbation(inst, PerturbationEvent::distance_decrease(0, 1, 1.5)),
                  MetricViolation);
}

TEST_CASE("perturbations require a modular quality") {
  Rng rng(5);
  const Instance cov(range_metric(rng, 6, 1.0, 2.0), random_coverage(rng, 6), 0.2);
  CHECK_THROWS_AS(apply_perturbation(cov, PerturbationEvent::weight_increase(0, 0.1)),
                  UnsupportedQuality);
}

TEST_CASE("oblivious update is a no-op at the optimum") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = random_instance(rng, 9, 0.3);
    const Solution opt = brute_force_opt(inst, 4);
    const UpdateResult upd = oblivious_update(inst, opt.selected);
    CHECK_FALSE(upd.swapped);
    CHECK(upd.delta == 0.0);
    CHECK(upd.selected == opt.selected);
  }
}

TEST_CASE("oblivious update finds the best swap") {
  Rng rng(9);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = rng.uniform_int(4, 10);
    const int p = rng.uniform_int(1, n - 1);
    const Instance inst = random_instance(rng, n, 0.4);
    const std::vector<int> s = random_basis(MatroidOracle::uniform(n, p), rng);

    const double reference = best_swap_gain_reference(inst, s);
    const UpdateResult upd = oblivious_update(inst, s);
    if (reference <= 1e-12) {
      CHECK(upd.delta <= 1e-9);
    } else {
      CHECK(upd.swapped);
      CHECK(upd.delta == doctest::Approx(reference).epsilon(1e-9));
      // Reported delta matches the actual objective movement.
      CHECK(objective(inst, upd.selected) - objective(inst, s) ==
            doctest::Approx(upd.delta).epsilon(1e-9));
    }
  }
}

TEST_CASE("oblivious update never decreases the objective") {
  Rng rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = rng.uniform_int(3, 12);
    const int p = rng.uniform_int(1, n);
    const Instance inst = random_instance(rng, n, 0.2);
    const std::vector<int> s = random_basis(MatroidOracle::uniform(n, p), rng);
    const UpdateResult upd = oblivious_update(inst, s);
    CHECK(upd.delta >= 0.0);
    CHECK(objective(inst, upd.selected) >= objective(inst, s) - 1e-12);
  }
}

TEST_CASE("update bound: closed-form spot values") {
  CHECK(required_updates_bound(10.0, 2.5, 6) == 1);  // delta <= w / (p-2)
  CHECK(required_updates_bound(8.0, 6.0, 4) == 2);   // exact power of the base
  CHECK(required_updates_bound(1.0, 0.9, 5) == 6);   // ceil(ln 10 / ln 1.5)
}

TEST_CASE("update bound: small p and argument validation") {
  CHECK(required_updates_bound(5.0, 4.9, 2) == 1);
  CHECK(required_updates_bound(5.0, 1.0, 3) == 1);
  CHECK_THROWS_AS(required_updates_bound(5.0, 5.0, 6), InvalidInput);
  CHECK_THROWS_AS(required_updates_bound(5.0, 0.0, 6), InvalidInput);
  CHECK_THROWS_AS(required_updates_bound(5.0, 1.0, 0), InvalidInput);
}

TEST_CASE("single update restores a third of the optimum after one event") {
  Rng rng(13);
  int tested = 0;
  for (int rep = 0; rep < 160; ++rep) {
    const int n = rng.uniform_int(6, 12);
    const int p = rng.uniform_int(2, 6);
    Instance inst = gen_synthetic(n, rep % 2 ? 0.2 : 1.0, rng.next_u64());
    std::vector<int> s = greedy_vertex(inst, p).solution.selected;

    PerturbationEvent ev;
    switch (rep % 4) {
      case 0:
        ev = PerturbationEvent::weight_increase(rng.uniform_int(0, n - 1),
                                                rng.uniform(0.0, 2.0));
        break;
      case 1: {
        const int item = rng.uniform_int(0, n - 1);
        const double w = inst.quality().weight(item);
        ev = PerturbationEvent::weight_decrease(item, rng.uniform(0.0, w));
        break;
      }
      case 2: {
        const int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 2);
        if (v >= u) ++v;
        ev = PerturbationEvent::distance_increase(u, v,
                                                  rng.uniform(0.0, 2.0 - inst.distance(u, v)));
        break;
      }
      default: {
        const int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 2);
        if (v >= u) ++v;
        ev = PerturbationEvent::distance_decrease(u, v,
                                                  rng.uniform(0.0, inst.distance(u, v) - 1.0));
        break;
      }
    }
    const double phi_pre = objective(inst, s);
    inst = apply_perturbation(inst, ev);

    int budget = 1;
    if (ev.kind == PerturbationEvent::Kind::kWeightDecrease && p > 3 &&
        ev.delta > phi_pre / (p - 2)) {
      budget = required_updates_bound(phi_pre, ev.delta, p);
    }
    for (int i = 0; i < budget; ++i) {
      const UpdateResult upd = oblivious_update(inst, s);
      s = upd.selected;
      if (!upd.swapped) break;
    }
    const double opt = brute_force_opt(inst, p).objective;
    CHECK(objective(inst, s) >= opt / 3.0 - 1e-9 * opt);
    ++tested;
  }
  CHECK(tested == 160);
}

TEST_CASE("large weight drops recover within the bounded update count") {
  Rng rng(15);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = rng.uniform_int(8, 12);
    const int p = rng.uniform_int(4, 6);
    // One dominant item makes the decrease large relative to the solution.
    std::vector<double> w(n);
    for (double& x : w) x = rng.uniform(0.0, 0.2);
    const int heavy = rng.uniform_int(0, n - 1);
    w[heavy] = rng.uniform(30.0, 60.0);
    Instance inst(range_metric(rng, n, 1.0, 2.0), QualityFunction::modular(w), 0.01);

    std::vector<int> s = greedy_vertex(inst, p).solution.selected;
    REQUIRE(std::find(s.begin(), s.end(), heavy) != s.end());

    const double phi_pre = objective(inst, s);
    const double delta = rng.uniform(0.8, 0.99) * w[heavy];
    REQUIRE(delta > phi_pre / (p - 2));  // the single-update clause is off
    inst = apply_perturbation(inst, PerturbationEvent::weight_decrease(heavy, delta));

    const int budget = required_updates_bound(phi_pre, delta, p);
    CHECK(budget > 1);
    for (int i = 0; i < budget; ++i) {
      const UpdateResult upd = oblivious_update(inst, s);
      s = upd.selected;
      if (!upd.swapped) break;
    }
    const double opt = brute_force_opt(inst, p).objective;
    CHECK(objective(inst, s) >= opt / 3.0 - 1e-9 * opt);
  }
}

TEST_CASE("small p needs one update for any perturbation") {
  Rng rng(17);
  for (int rep = 0; rep < 80; ++rep) {
    const int n = rng.uniform_int(5, 10);
    const int p = rng.uniform_int(2, 3);
    Instance inst = gen_synthetic(n, 0.3, rng.next_u64());
    std::vector<int> s = greedy_vertex(inst, p).solution.selected;
    // Any event type, including unbounded weight drops.
    PerturbationEvent ev;
    if (rng.coin_flip()) {
      const int item = rng.uniform_int(0, n - 1);
      const double w = inst.quality().weight(item);
      ev = rng.coin_flip() ? PerturbationEvent::weight_increase(item, rng.uniform(0.0, 3.0))
                           : PerturbationEvent::weight_decrease(item, rng.uniform(0.0, w));
    } else {
      const int u = rng.uniform_int(0, n - 1);
      int v = rng.uniform_int(0, n - 2);
      if (v >= u) ++v;
      const double d = inst.distance(u, v);
      ev = rng.coin_flip()
               ? PerturbationEvent::distance_increase(u, v, rng.uniform(0.0, 2.0 - d))
               : PerturbationEvent::distance_decrease(u, v, rng.uniform(0.0, d - 1.0));
    }
    inst = apply_perturbation(inst, ev);
    s = oblivious_update(inst, s).selected;
    const double opt = brute_force_opt(inst, p).objective;
    CHECK(objective(inst, s) >= opt / 3.0 - 1e-9 * opt);
  }
}

TEST_CASE("zero-step simulation reports the greedy ratio") {
  const Instance inst = gen_synthetic(10, 0.2, 19);
  const DynamicsReport report = simulate(inst, 4, PerturbationEnv::kMixed, 0, 3, 19);
  CHECK(report.rows.empty());
  REQUIRE(report.initial_ratio.size() == 3);
  for (double r : report.initial_ratio) {
    CHECK(r >= 1.0 - 1e-9);
    CHECK(r <= 2.0 + 1e-9);
    CHECK(r == report.initial_ratio[0]);  // same instance, same greedy
  }
  CHECK(report.worst_ratio == doctest::Approx(report.initial_ratio[0]));
}

TEST_CASE("simulation rows are well-formed and ratios stay above one") {
  const Instance inst = gen_synthetic(12, 0.2, 21);
  const DynamicsReport report = simulate(inst, 4, PerturbationEnv::kMixed, 5, 4, 21);
  CHECK(report.rows.size() == 5 * 4);
  for (const DynamicsStep& row : report.rows) {
    CHECK(row.ratio >= 1.0 - 1e-9);
    CHECK(row.phi_after >= row.phi_before - 1e-12);
    CHECK(row.phi_opt >= row.phi_after - 1e-9);
    CHECK(row.updates_applied >= 1);
  }
  CHECK(report.worst_ratio >= 1.0 - 1e-9);
}

TEST_CASE("simulation is reproducible for a fixed seed") {
  const Instance inst = gen_synthetic(11, 0.5, 23);
  const DynamicsReport a = simulate(inst, 3, PerturbationEnv::kEdge, 4, 3, 99);
  const DynamicsReport b = simulate(inst, 3, PerturbationEnv::kEdge, 4, 3, 99);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].ratio == b.rows[i].ratio);
    CHECK(a.rows[i].event.kind == b.rows[i].event.kind);
    CHECK(a.rows[i].event.item == b.rows[i].event.item);
    CHECK(a.rows[i].event.delta == b.rows[i].event.delta);
  }
  CHECK(a.worst_ratio == b.worst_ratio);
}

TEST_CASE("vertex environment only touches weights") {
  const Instance inst = gen_synthetic(10, 0.2, 25);
  const DynamicsReport report = simulate(inst, 3, PerturbationEnv::kVertex, 6, 2, 25);
  for (const DynamicsStep& row : report.rows) CHECK(row.event.is_weight_event());
  const DynamicsReport edges = simulate(inst, 3, PerturbationEnv::kEdge, 6, 2, 25);
  for (const DynamicsStep& row : edges.rows) CHECK_FALSE(row.event.is_weight_event());
}

}  // TEST_SUITE
