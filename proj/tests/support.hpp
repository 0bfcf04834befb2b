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

// Shared fuzz generators and brute-force oracles for the test and acceptance
// suites. Everything here is deliberately independent of the incremental
// code paths it is used to check: sums are recomputed from scratch, subsets
// are enumerated bit by bit.

#ifndef MAXDIV_TESTS_SUPPORT_HPP
#define MAXDIV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "maxdiv/core.hpp"
#include "maxdiv/matroids.hpp"
#include "maxdiv/rng.hpp"

namespace maxdiv::testing {

// ---------------------------------------------------------------------------
// Metric generators (all outputs satisfy the triangle inequality).

/// Distances uniform in [lo, hi] with hi <= 2*lo: any such range is a metric.
inline DistanceMatrix range_metric(Rng& rng, int n, double lo, double hi) {
  DistanceMatrix d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.set_symmetric(u, v, rng.uniform(lo, hi));
  return d;
}

/// Euclidean distances of random points in [0,1]^dim; includes near-zero
/// distances, unlike the range construction.
inline DistanceMatrix euclidean_metric(Rng& rng, int n, int dim) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts)
    for (double& x : p) x = rng.uniform01();
  DistanceMatrix d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double sq = 0.0;
      for (int k = 0; k < dim; ++k) sq += (pts[u][k] - pts[v][k]) * (pts[u][k] - pts[v][k]);
      d.set_symmetric(u, v, std::sqrt(sq));
    }
  return d;
}

/// {1,2}-valued distances; the classic hard-metric shape.
inline DistanceMatrix one_two_metric(Rng& rng, int n) {
  DistanceMatrix d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.set_symmetric(u, v, rng.coin_flip() ? 1.0 : 2.0);
  return d;
}

inline DistanceMatrix random_metric(Rng& rng, int n) {
  switch (rng.uniform_int(0, 2)) {
    case 0:
      return range_metric(rng, n, 1.0, 2.0);
    case 1:
      return euclidean_metric(rng, n, 1 + rng.uniform_int(1, 3));
    default:
      return one_two_metric(rng, n);
  }
}

// ---------------------------------------------------------------------------
// Quality generators.

inline QualityFunction random_modular(Rng& rng, int n, double hi = 1.0) {
  std::vector<double> w(n);
  for (double& x : w) x = rng.uniform(0.0, hi);
  return QualityFunction::modular(std::move(w));
}

inline QualityFunction random_coverage(Rng& rng, int n) {
  const int m = rng.uniform_int(3, 10);  // ground elements
  std::vector<double> ew(m);
  for (double& x : ew) x = rng.uniform(0.0, 1.0);
  std::vector<std::vector<int>> sets(n);
  for (auto& s : sets) {
    for (int e = 0; e < m; ++e)
      if (rng.uniform01() < 0.4) s.push_back(e);
  }
  return QualityFunction::coverage(std::move(ew), std::move(sets));
}

inline Instance random_instance(Rng& rng, int n, double lambda, bool coverage = false) {
  QualityFunction q = coverage ? random_coverage(rng, n) : random_modular(rng, n);
  return Instance(random_metric(rng, n), std::move(q), lambda);
}

// ---------------------------------------------------------------------------
// Subset enumeration helpers (bitmask based, independent of the solvers).

inline std::vector<int> bits_to_set(unsigned mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) fn(bits_to_set(mask, n));
}

/// Exact optimum over p-subsets by plain enumeration; the reference the
/// incremental brute force and the solvers are checked against.
inline double reference_opt(const Instance& inst, int p) {
  double best = -1.0;
  for_each_subset_of_size(inst.size(), p, [&](const std::vector<int>& s) {
    best = std::max(best, objective(inst, s));
  });
  return best;
}

/// Exact optimum over the bases of m (independent sets of size rank).
inline double reference_opt_bases(const Instance& inst, const MatroidOracle& m) {
  double best = -1.0;
  for_each_subset_of_size(inst.size(), m.rank(), [&](const std::vector<int>& s) {
    if (m.is_independent(s)) best = std::max(best, objective(inst, s));
  });
  return best;
}

// ---------------------------------------------------------------------------
// Matroid generators and axiom checks.

inline MatroidOracle random_matroid(Rng& rng, int n, MatroidOracle::Kind kind) {
  switch (kind) {
    case MatroidOracle::Kind::kUniform:
      return MatroidOracle::uniform(n, rng.uniform_int(1, n));
    case MatroidOracle::Kind::kPartition: {
      const int blocks = rng.uniform_int(1, std::max(1, n / 2));
      std::vector<int> block_of(n);
      for (int& b : block_of) b = rng.uniform_int(0, blocks - 1);
      std::vector<int> caps(blocks);
      for (int& c : caps) c = rng.uniform_int(0, 3) == 0 ? -1 : rng.uniform_int(1, 3);
      return MatroidOracle::partition(std::move(block_of), std::move(caps));
    }
    case MatroidOracle::Kind::kTransversal: {
      const int sets = rng.uniform_int(1, n);
      std::vector<std::vector<int>> collection(sets);
      for (auto& c : collection)
        for (int u = 0; u < n; ++u)
          if (rng.uniform01() < 0.45) c.push_back(u);
      return MatroidOracle::transversal(n, std::move(collection));
    }
  }
  return MatroidOracle::uniform(n, 1);
}

/// Hereditary axiom, exhaustively: removing any element from an independent
/// set keeps it independent (sufficient by induction).
inline bool check_hereditary(const MatroidOracle& m) {
  const int n = m.num_items();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const std::vector<int> s = bits_to_set(mask, n);
    if (!m.is_independent(s)) continue;
    for (size_t i = 0; i < s.size(); ++i) {
      std::vector<int> sub = s;
      sub.erase(sub.begin() + static_cast<long>(i));
      if (!m.is_independent(sub)) return false;
    }
  }
  return true;
}

/// Augmentation axiom, exhaustively over all pairs of independent sets.
inline bool check_augmentation(const MatroidOracle& m) {
  const int n = m.num_items();
  std::vector<std::vector<int>> independent;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s = bits_to_set(mask, n);
    if (m.is_independent(s)) independent.push_back(std::move(s));
  }
  for (const auto& a : independent)
    for (const auto& b : independent) {
      if (a.size() <= b.size()) continue;
      bool found = false;
      for (int e : a) {
        if (std::find(b.begin(), b.end(), e) != b.end()) continue;
        std::vector<int> grown = b;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
        if (m.is_independent(grown)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

/// Random basis: greedily extend the empty set along a random permutation.
inline std::vector<int> random_basis(const MatroidOracle& m, Rng& rng) {
  std::vector<int> perm(m.num_items());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  std::vector<int> basis;
  for (int u : perm) {
    basis.push_back(u);
    if (!m.is_independent(basis)) basis.pop_back();
  }
  return basis;
}

}  // namespace maxdiv::testing

#endif  // MAXDIV_TESTS_SUPPORT_HPP
