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

#include "maxdiv/core.hpp"

#include <algorithm>
#include <string>

#include "maxdiv/errors.hpp"

namespace maxdiv {
namespace {

void check_items(const Instance& inst, std::span<const int> s, const char* op) {
  std::vector<char> seen(inst.size(), 0);
  for (int u : s) {
    if (u < 0 || u >= inst.size())
      throw InvalidInput(std::string(op) + ": item id out of range");
    if (seen[u]) throw InvalidInput(std::string(op) + ": duplicate item in set");
    seen[u] = 1;
  }
}

}  // namespace

Instance::Instance(DistanceMatrix dist, QualityFunction quality, double lambda)
    : dist_(std::move(dist)), quality_(std::move(quality)), lambda_(lambda) {
  const int n = dist_.size();
  if (quality_.num_items() != n)
    throw InvalidInput("Instance: quality sized for " +
                       std::to_string(quality_.num_items()) + " items, distance matrix for " +
                       std::to_string(n));
  if (lambda < 0.0) throw InvalidInput("Instance: lambda must be non-negative");
  for (int u = 0; u < n; ++u) {
    if (dist_(u, u) != 0.0) throw InvalidInput("Instance: nonzero diagonal distance");
    for (int v = u + 1; v < n; ++v) {
      if (dist_(u, v) != dist_(v, u)) throw InvalidInput("Instance: asymmetric distances");
      if (dist_(u, v) < 0.0) throw InvalidInput("Instance: negative distance");
    }
  }
}

Instance Instance::with_weight(int item, double weight) const {
  return Instance(dist_, quality_.with_weight(item, weight), lambda_);
}

Instance Instance::with_distance(int u, int v, double d) const {
  if (u == v) throw InvalidInput("with_distance: endpoints must differ");
  DistanceMatrix dist = dist_;
  dist.set_symmetric(u, v, d);
  return Instance(std::move(dist), quality_, lambda_);
}

Solution make_solution(const Instance& inst) {
  Solution sol;
  sol.dist_gain.assign(inst.size(), 0.0);
  return sol;
}

double objective(const Instance& inst, std::span<const int> s) {
  check_items(inst, s, "objective");
  return inst.quality().value(s) + inst.lambda() * set_distance(inst, s);
}

double set_distance(const Instance& inst, std::span<const int> s) {
  check_items(inst, s, "set_distance");
  double total = 0.0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) total += inst.distance(s[i], s[j]);
  return total;
}

double cross_distance(const Instance& inst, std::span<const int> s,
                      std::span<const int> t) {
  check_items(inst, s, "cross_distance");
  check_items(inst, t, "cross_distance");
  std::vector<char> in_s(inst.size(), 0);
  for (int u : s) in_s[u] = 1;
  for (int v : t)
    if (in_s[v]) throw InvalidInput("cross_distance: sets overlap");
  double total = 0.0;
  for (int u : s)
    for (int v : t) total += inst.distance(u, v);
  return total;
}

namespace {

double quality_marginal(const Instance& inst, std::span<const int> s, int u) {
  check_items(inst, s, "marginal");
  if (u < 0 || u >= inst.size()) throw InvalidInput("marginal: item id out of range");
  for (int v : s)
    if (v == u) throw InvalidInput("marginal: item already selected");
  std::vector<int> with(s.begin(), s.end());
  with.push_back(u);
  return inst.quality().value(with) - inst.quality().value(s);
}

double distance_gain(const Instance& inst, std::span<const int> s, int u) {
  double d = 0.0;
  for (int v : s) d += inst.distance(u, v);
  return d;
}

}  // namespace

double marginal_phi(const Instance& inst, std::span<const int> s, int u) {
  return quality_marginal(inst, s, u) + inst.lambda() * distance_gain(inst, s, u);
}

double marginal_phi_prime(const Instance& inst, std::span<const int> s, int u) {
  return 0.5 * quality_marginal(inst, s, u) + inst.lambda() * distance_gain(inst, s, u);
}

void update_gain_cache(Solution& sol, const Instance& inst, int added) {
  if (added < 0 || added >= inst.size())
    throw InvalidInput("update_gain_cache: item id out of range");
  // Precondition: `added` was just appended, so it occurs exactly once.
  int occurrences = 0;
  for (int v : sol.selected) occurrences += (v == added);
  if (sol.selected.empty() || sol.selected.back() != added || occurrences != 1)
    throw InternalInvariantError("update_gain_cache: item was not just appended once");
  for (int u = 0; u < inst.size(); ++u) sol.dist_gain[u] += inst.distance(u, added);
}

MetricReport validate_metric(const DistanceMatrix& dist) {
  MetricReport report;
  const int n = dist.size();
  for (int u = 0; u < n; ++u) {
    if (dist(u, u) != 0.0) report.zero_diagonal = false;
    for (int v = 0; v < n; ++v) {
      if (dist(u, v) < 0.0) report.nonneg = false;
      if (v > u && dist(u, v) != dist(v, u)) report.symmetric = false;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int z = x + 1; z < n; ++z)
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        const double slack = dist(x, z) - dist(x, y) - dist(y, z);
        if (slack > kValueTolerance)
          report.triangle_violations.push_back({x, y, z, slack});
      }
  return report;
}

std::vector<TriangleViolation> triangle_violations_through(const DistanceMatrix& dist,
                                                           int u, int v) {
  std::vector<TriangleViolation> violations;
  const int n = dist.size();
  auto check = [&](int x, int y, int z) {
    const double slack = dist(x, z) - dist(x, y) - dist(y, z);
    if (slack > kValueTolerance) violations.push_back({x, y, z, slack});
  };
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    check(u, w, v);  // d(u,v) against the path through w
    check(u, v, w);  // d(u,w) against the path through v
    check(w, u, v);  // d(w,v) against the path through u
  }
  return violations;
}

double lemma_rrt_gap(const Instance& inst, std::span<const int> x,
                     std::span<const int> y) {
  if (x.empty() || y.empty()) throw InvalidInput("lemma_rrt_gap: sets must be nonempty");
  const double cross = cross_distance(inst, x, y);  // also rejects overlap
  const double inner = set_distance(inst, x);
  return (static_cast<double>(x.size()) - 1.0) * cross -
         static_cast<double>(y.size()) * inner;
}

}  // namespace maxdiv
