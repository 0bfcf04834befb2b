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

#ifndef MAXDIV_SOLVERS_HPP
#define MAXDIV_SOLVERS_HPP

#include <cstdint>
#include <utility>

#include "maxdiv/core.hpp"
#include "maxdiv/matroids.hpp"

namespace maxdiv {

struct SolverConfig {
  enum class GreedyInit { kArbitraryFirst, kBestPair };
  enum class GreedyTail { kArbitraryLast, kBestLast };

  /// Vertex-greedy start: plain potential argmax from the empty set, or the
  /// improved variant seeded with the best pair. Defaults are the improved
  /// variants; the plain ones stay available for faithfulness comparisons.
  GreedyInit greedy_b_init = GreedyInit::kBestPair;
  /// Edge-greedy odd-p tail: arbitrary (lowest id) or best final item.
  GreedyTail greedy_a_tail = GreedyTail::kBestLast;

  /// Local search accepts a swap iff phi_new > phi * (1 + ls_epsilon).
  /// 0 gives true local optima; harness runs use a tiny epsilon to avoid
  /// floating-point cycling.
  double ls_epsilon = 0.0;
  int ls_max_iters = 100000;
  /// Optional wall-clock budget for local search, <= 0 meaning none. Checked
  /// once per full swap scan.
  double ls_time_budget_ms = 0.0;

  /// Recorded in reports. The algorithms themselves are deterministic (all
  /// ties break toward lowest item id), so the seed never changes a result.
  std::uint64_t seed = 0;
};

struct SolveResult {
  Solution solution;
  /// False when local search stopped on the iteration cap or time budget
  /// while an improving swap still existed.
  bool locally_optimal = true;
  /// Greedy: items added. Local search: swaps applied.
  int iterations = 0;
};

/// Vertex greedy ("Greedy B"): repeatedly adds the item maximizing the
/// potential phi'_u(S) — not the objective itself — until |S| = p.
/// Guarantees phi(S) >= phi(OPT) / 2 for monotone submodular quality, and
/// runs in O(np) for modular quality thanks to the gain cache.
SolveResult greedy_vertex(const Instance& inst, int p, const SolverConfig& cfg = {});

/// Vertex greedy restricted to additions that keep S independent in m; runs
/// until S is a basis. No approximation guarantee exists in this setting
/// (see appendix_fixture for the witness); provided for exactly that study.
SolveResult greedy_vertex(const Instance& inst, const MatroidOracle& m,
                          const SolverConfig& cfg = {});

/// Edge greedy ("Greedy A"): reduces to max-sum dispersion on
///   d'(u,v) = lambda * d(u,v) + (w(u) + w(v)) / (p - 1),
/// chosen so that the d'-pair-sum of any p-set equals f(S) + lambda * d(S),
/// then picks the heaviest d'-edge among unselected items floor(p/2) times.
/// Modular quality only.
SolveResult greedy_edge_modular(const Instance& inst, int p,
                                const SolverConfig& cfg = {});

/// Single-swap local search under a matroid constraint, seeded with a basis
/// containing the best independent pair. At a true local optimum (epsilon 0,
/// cap not hit) the result is within a factor 2 of the best basis.
SolveResult local_search_matroid(const Instance& inst, const MatroidOracle& m,
                                 const SolverConfig& cfg = {});

/// Same search seeded from a caller-provided independent set (extended to a
/// basis if needed); the benchmark harness warm-starts from the vertex
/// greedy this way.
SolveResult local_search_matroid(const Instance& inst, const MatroidOracle& m,
                                 const SolverConfig& cfg,
                                 std::span<const int> warm_start);

/// Largest enumeration allowed before brute force refuses to run.
inline constexpr double kBruteForceGuard = 2e8;

/// Exact optimum over all p-subsets by lexicographic enumeration with an
/// incremental pair-sum accumulator. Ties resolve to the lexicographically
/// smallest subset. num_threads 0 picks a sensible default; the result is
/// independent of the thread count.
Solution brute_force_opt(const Instance& inst, int p, int num_threads = 0);

/// Exact optimum over all bases of m (DFS over independent sets).
Solution brute_force_opt(const Instance& inst, const MatroidOracle& m);

/// The partition-matroid family on which the vertex greedy loses any
/// constant factor: universe {a, b, c_1..c_r}, quality a -> ell + eps (else
/// 0), distances ell from b and eps elsewhere with eps = 1 / C(r,2),
/// lambda = 1, and blocks {a,b} (cap 1) / {c_i} (uncapped). Greedy lands on
/// {a} + C while the optimum {b} + C is about r/2 times better for large r.
std::pair<Instance, MatroidOracle> appendix_fixture(int r, double ell);

}  // namespace maxdiv

#endif  // MAXDIV_SOLVERS_HPP
