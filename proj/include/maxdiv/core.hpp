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

#ifndef MAXDIV_CORE_HPP
#define MAXDIV_CORE_HPP

#include <span>
#include <vector>

#include "maxdiv/distance_matrix.hpp"
#include "maxdiv/quality.hpp"

namespace maxdiv {

/// Floating tolerance used for equality assertions throughout the library.
inline constexpr double kValueTolerance = 1e-9;

/// A max-sum diversification instance: universe of n items with pairwise
/// distances d(u,v), a quality function f and a trade-off weight lambda.
/// The objective maximized over feasible S is
///     phi(S) = f(S) + lambda * sum over unordered pairs {u,v} in S of d(u,v).
///
/// Immutable after construction and safe to share across concurrent solver
/// runs; perturbations produce modified copies.
class Instance {
 public:
  /// Requires dist to be symmetric with zero diagonal and non-negative
  /// entries, quality sized to dist, lambda >= 0. The triangle inequality is
  /// deliberately not enforced here: generated instances satisfy it by
  /// construction while ingested ones may not, and validate_metric() exists
  /// to report on exactly that.
  Instance(DistanceMatrix dist, QualityFunction quality, double lambda);

  int size() const { return dist_.size(); }
  double distance(int u, int v) const { return dist_(u, v); }
  const DistanceMatrix& distances() const { return dist_; }
  const QualityFunction& quality() const { return quality_; }
  double lambda() const { return lambda_; }

  /// Copies with a single modular weight / symmetric distance replaced.
  /// Used by the dynamic-update machinery; validation is the caller's job
  /// (apply_perturbation re-checks the metric after distance changes).
  Instance with_weight(int item, double weight) const;
  Instance with_distance(int u, int v, double d) const;

 private:
  DistanceMatrix dist_;
  QualityFunction quality_;
  double lambda_;
};

/// A selected item set with the caches that make incremental solvers cheap.
///
/// Invariants (checked by tests, maintained by update_gain_cache):
///   - objective equals a from-scratch recomputation within 1e-9 relative;
///   - dist_gain[u] == sum over v in selected of d(u,v), for every item u.
struct Solution {
  std::vector<int> selected;      // in insertion order
  double objective = 0.0;         // phi(selected)
  std::vector<double> dist_gain;  // dist_gain[u] = d_u(selected), all items u
};

/// Empty solution for inst with zeroed gain cache.
Solution make_solution(const Instance& inst);

/// phi(S) from scratch. Unordered pairs are counted once.
double objective(const Instance& inst, std::span<const int> s);

/// d(S): sum of distances over unordered pairs inside S.
double set_distance(const Instance& inst, std::span<const int> s);

/// d(S,T): sum over all |S|*|T| cross pairs; S and T must be disjoint.
double cross_distance(const Instance& inst, std::span<const int> s,
                      std::span<const int> t);

/// phi_u(S) = f(S+u) - f(S) + lambda * d_u(S), for u not in S.
double marginal_phi(const Instance& inst, std::span<const int> s, int u);

/// phi'_u(S) = (f(S+u) - f(S)) / 2 + lambda * d_u(S), the greedy potential.
/// Halving the quality marginal is what the vertex greedy optimizes instead
/// of the objective itself.
double marginal_phi_prime(const Instance& inst, std::span<const int> s, int u);

/// Folds the item just appended to sol.selected into the gain cache:
/// dist_gain[u] += d(u, added) for every u. O(n), which keeps the vertex
/// greedy at O(np) total.
void update_gain_cache(Solution& sol, const Instance& inst, int added);

struct TriangleViolation {
  int x = -1, y = -1, z = -1;
  double slack = 0.0;  // d(x,z) - d(x,y) - d(y,z), positive means violated
};

struct MetricReport {
  bool symmetric = true;
  bool nonneg = true;
  bool zero_diagonal = true;
  std::vector<TriangleViolation> triangle_violations;

  bool is_metric() const {
    return symmetric && nonneg && zero_diagonal && triangle_violations.empty();
  }
};

/// Exhaustive O(n^3) metric check. A triple is reported when
/// d(x,z) - d(x,y) - d(y,z) > 1e-9.
MetricReport validate_metric(const DistanceMatrix& dist);

/// Re-checks only the triangles through the changed pair (u,v); if the
/// matrix was a metric before the change, no other triple can have broken.
/// Returns violations in the same form as validate_metric.
std::vector<TriangleViolation> triangle_violations_through(const DistanceMatrix& dist,
                                                           int u, int v);

/// (|X|-1) * d(X,Y) - |Y| * d(X) for disjoint nonempty X, Y. Non-negative
/// for every metric; exposed as a test probe for that inequality.
double lemma_rrt_gap(const Instance& inst, std::span<const int> x,
                     std::span<const int> y);

}  // namespace maxdiv

#endif  // MAXDIV_CORE_HPP
