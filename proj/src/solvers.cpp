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

#include "maxdiv/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>

#include "maxdiv/errors.hpp"

namespace maxdiv {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Keeps Solution, quality tracker and pair-sum in lockstep so that adds are
/// O(n) and the running objective never needs a from-scratch pass.
class IncrementalSolution {
 public:
  explicit IncrementalSolution(const Instance& inst)
      : inst_(&inst),
        sol_(make_solution(inst)),
        tracker_(inst.quality()),
        in_set_(inst.size(), 0) {}

  int size() const { return static_cast<int>(sol_.selected.size()); }
  bool contains(int u) const { return in_set_[u] != 0; }
  double pair_sum() const { return pair_sum_; }
  double dist_gain(int u) const { return sol_.dist_gain[u]; }
  double quality_value() const { return tracker_.value(); }
  double phi() const { return tracker_.value() + inst_->lambda() * pair_sum_; }
  QualityFunction::Tracker& tracker() { return tracker_; }
  const std::vector<int>& selected() const { return sol_.selected; }

  double marginal_phi(int u) const {
    return tracker_.marginal(u) + inst_->lambda() * sol_.dist_gain[u];
  }
  double marginal_phi_prime(int u) const {
    return 0.5 * tracker_.marginal(u) + inst_->lambda() * sol_.dist_gain[u];
  }

  void add(int u) {
    pair_sum_ += sol_.dist_gain[u];
    tracker_.add(u);
    sol_.selected.push_back(u);
    update_gain_cache(sol_, *inst_, u);
    in_set_[u] = 1;
    sol_.objective = phi();
  }

  void remove(int v) {
    pair_sum_ -= sol_.dist_gain[v];
    tracker_.remove(v);
    sol_.selected.erase(std::find(sol_.selected.begin(), sol_.selected.end(), v));
    for (int u = 0; u < inst_->size(); ++u) sol_.dist_gain[u] -= inst_->distance(u, v);
    in_set_[v] = 0;
    sol_.objective = phi();
  }

  Solution take() { return std::move(sol_); }

 private:
  const Instance* inst_;
  Solution sol_;
  QualityFunction::Tracker tracker_;
  std::vector<char> in_set_;
  double pair_sum_ = 0.0;
};

double pair_score(const Instance& inst, int x, int y) {
  const int pair[2] = {x, y};
  return inst.quality().value(pair) + inst.lambda() * inst.distance(x, y);
}

/// Best pair by f({x,y}) + lambda * d(x,y); when a matroid is given only
/// independent pairs qualify. Ties break to the lexicographically smallest
/// pair. Returns {-1,-1} if no feasible pair exists.
std::pair<int, int> best_pair(const Instance& inst, const MatroidOracle* m) {
  int bx = -1, by = -1;
  double best = kNegInf;
  std::vector<int> probe(2);
  for (int x = 0; x < inst.size(); ++x)
    for (int y = x + 1; y < inst.size(); ++y) {
      if (m != nullptr) {
        probe[0] = x;
        probe[1] = y;
        if (!m->is_independent(probe)) continue;
      }
      const double score = pair_score(inst, x, y);
      if (score > best) {
        best = score;
        bx = x;
        by = y;
      }
    }
  return {bx, by};
}

void check_matroid_universe(const Instance& inst, const MatroidOracle& m, const char* op) {
  if (m.num_items() != inst.size())
    throw InvalidInput(std::string(op) + ": matroid universe size " +
                       std::to_string(m.num_items()) + " != instance size " +
                       std::to_string(inst.size()));
}

/// O(1) feasibility test for single swaps S - v + u under the maintained
/// basis S; transversal falls back to the matching oracle.
class SwapFeasibility {
 public:
  SwapFeasibility(const MatroidOracle& m, const std::vector<int>& basis) : m_(&m) {
    if (m.kind() == MatroidOracle::Kind::kPartition) {
      block_count_.assign(m.block_caps().size(), 0);
      for (int u : basis) ++block_count_[m.block_of_item()[u]];
    }
  }

  bool can_swap(const std::vector<int>& basis, int out, int in) const {
    switch (m_->kind()) {
      case MatroidOracle::Kind::kUniform:
        return true;  // same size, still within the cap
      case MatroidOracle::Kind::kPartition: {
        const int bu = m_->block_of_item()[in];
        const int bv = m_->block_of_item()[out];
        if (bu == bv) return true;
        const int cap = m_->block_caps()[bu];
        return cap < 0 || block_count_[bu] + 1 <= cap;
      }
      case MatroidOracle::Kind::kTransversal: {
        std::vector<int> probe(basis);
        for (int& x : probe)
          if (x == out) x = in;
        return m_->is_independent(probe);
      }
    }
    return false;
  }

  void apply_swap(int out, int in) {
    if (m_->kind() == MatroidOracle::Kind::kPartition) {
      --block_count_[m_->block_of_item()[out]];
      ++block_count_[m_->block_of_item()[in]];
    }
  }

 private:
  const MatroidOracle* m_;
  std::vector<int> block_count_;
};

SolveResult finish(IncrementalSolution& s, bool locally_optimal, int iterations) {
  SolveResult res;
  res.solution = s.take();
  res.locally_optimal = locally_optimal;
  res.iterations = iterations;
  return res;
}

}  // namespace

SolveResult greedy_vertex(const Instance& inst, int p, const SolverConfig& cfg) {
  if (p < 1) throw InvalidInput("greedy_vertex: p must be at least 1");
  if (p > inst.size()) throw InvalidInput("greedy_vertex: p exceeds the universe size");

  IncrementalSolution s(inst);
  if (cfg.greedy_b_init == SolverConfig::GreedyInit::kBestPair && p >= 2) {
    const auto [x, y] = best_pair(inst, nullptr);
    s.add(x);
    s.add(y);
  }
  while (s.size() < p) {
    int best = -1;
    double best_score = kNegInf;
    for (int u = 0; u < inst.size(); ++u) {
      if (s.contains(u)) continue;
      const double score = s.marginal_phi_prime(u);
      if (score > best_score) {
        best_score = score;
        best = u;
      }
    }
    s.add(best);
  }
  return finish(s, true, s.size());
}

SolveResult greedy_vertex(const Instance& inst, const MatroidOracle& m,
                          const SolverConfig& cfg) {
  check_matroid_universe(inst, m, "greedy_vertex");

  IncrementalSolution s(inst);
  if (cfg.greedy_b_init == SolverConfig::GreedyInit::kBestPair && m.rank() >= 2) {
    const auto [x, y] = best_pair(inst, &m);
    if (x >= 0) {
      s.add(x);
      s.add(y);
    }
  }
  std::vector<int> probe;
  while (s.size() < m.rank()) {
    int best = -1;
    double best_score = kNegInf;
    for (int u = 0; u < inst.size(); ++u) {
      if (s.contains(u)) continue;
      const double score = s.marginal_phi_prime(u);
      if (score <= best_score) continue;
      probe.assign(s.selected().begin(), s.selected().end());
      probe.push_back(u);
      if (!m.is_independent(probe)) continue;
      best_score = score;
      best = u;
    }
    if (best < 0) break;  // defensive: rank says this cannot happen
    s.add(best);
  }
  return finish(s, true, s.size());
}

SolveResult greedy_edge_modular(const Instance& inst, int p, const SolverConfig& cfg) {
  if (!inst.quality().is_modular())
    throw UnsupportedQuality("greedy_edge_modular: quality must be modular");
  if (p < 2) throw InvalidInput("greedy_edge_modular: p must be at least 2");
  if (p > inst.size()) throw InvalidInput("greedy_edge_modular: p exceeds the universe size");

  const std::vector<double>& w = inst.quality().weights();
  // Reduced edge weight: the unique per-edge rebalancing of the item weights
  // for which the d'-pair-sum of a p-set equals f(S) + lambda * d(S) (every
  // item of S lies in exactly p-1 of its pairs).
  const auto reduced = [&](int u, int v) {
    return inst.lambda() * inst.distance(u, v) + (w[u] + w[v]) / (p - 1.0);
  };

  IncrementalSolution s(inst);
  for (int round = 0; round < p / 2; ++round) {
    int bu = -1, bv = -1;
    double best = kNegInf;
    for (int u = 0; u < inst.size(); ++u) {
      if (s.contains(u)) continue;
      for (int v = u + 1; v < inst.size(); ++v) {
        if (s.contains(v)) continue;
        const double score = reduced(u, v);
        if (score > best) {
          best = score;
          bu = u;
          bv = v;
        }
      }
    }
    s.add(bu);
    s.add(bv);
  }
  if (p % 2 == 1) {
    int last = -1;
    if (cfg.greedy_a_tail == SolverConfig::GreedyTail::kBestLast) {
      double best = kNegInf;
      for (int u = 0; u < inst.size(); ++u) {
        if (s.contains(u)) continue;
        const double score = s.marginal_phi(u);
        if (score > best) {
          best = score;
          last = u;
        }
      }
    } else {
      for (int u = 0; u < inst.size() && last < 0; ++u)
        if (!s.contains(u)) last = u;
    }
    s.add(last);
  }
  return finish(s, true, s.size());
}

namespace {

/// Items ordered by descending potential relative to `seed`, ties by id;
/// the preference order used when extending a seed set to a basis.
std::vector<int> potential_order(const Instance& inst, std::span<const int> seed) {
  std::vector<char> in_seed(inst.size(), 0);
  for (int u : seed) in_seed[u] = 1;
  std::vector<int> order;
  order.reserve(inst.size());
  for (int u = 0; u < inst.size(); ++u)
    if (!in_seed[u]) order.push_back(u);
  std::vector<double> potential(inst.size(), 0.0);
  for (int u : order) potential[u] = marginal_phi_prime(inst, seed, u);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (potential[a] != potential[b]) return potential[a] > potential[b];
    return a < b;
  });
  return order;
}

SolveResult run_swap_search(const Instance& inst, const MatroidOracle& m,
                            const SolverConfig& cfg, const std::vector<int>& basis);

}  // namespace

SolveResult local_search_matroid(const Instance& inst, const MatroidOracle& m,
                                 const SolverConfig& cfg) {
  check_matroid_universe(inst, m, "local_search_matroid");
  if (cfg.ls_epsilon < 0.0) throw InvalidInput("local_search_matroid: ls_epsilon < 0");
  if (cfg.ls_max_iters <= 0) throw InvalidInput("local_search_matroid: ls_max_iters <= 0");

  if (m.rank() == 0) {
    IncrementalSolution s(inst);
    return finish(s, true, 0);
  }
  if (m.rank() == 1) {
    // Degenerate matroid: the problem reduces to the best independent item.
    IncrementalSolution s(inst);
    int best = -1;
    double best_score = kNegInf;
    std::vector<int> probe(1);
    for (int u = 0; u < inst.size(); ++u) {
      probe[0] = u;
      if (!m.is_independent(probe)) continue;
      const double score = inst.quality().value(probe);
      if (score > best_score) {
        best_score = score;
        best = u;
      }
    }
    if (best >= 0) s.add(best);
    return finish(s, true, 0);
  }

  const auto [x, y] = best_pair(inst, &m);
  if (x < 0) throw InternalInvariantError("local_search_matroid: rank >= 2 but no independent pair");

  // Seed basis: extend {x, y}, preferring high-potential items.
  const int seed_pair[2] = {x, y};
  const std::vector<int> basis = extend_to_basis(m, seed_pair, potential_order(inst, seed_pair));
  return run_swap_search(inst, m, cfg, basis);
}

SolveResult local_search_matroid(const Instance& inst, const MatroidOracle& m,
                                 const SolverConfig& cfg, std::span<const int> warm_start) {
  check_matroid_universe(inst, m, "local_search_matroid");
  if (cfg.ls_epsilon < 0.0) throw InvalidInput("local_search_matroid: ls_epsilon < 0");
  if (cfg.ls_max_iters <= 0) throw InvalidInput("local_search_matroid: ls_max_iters <= 0");
  if (m.rank() == 0) {
    IncrementalSolution s(inst);
    return finish(s, true, 0);
  }
  const std::vector<int> basis =
      extend_to_basis(m, warm_start, potential_order(inst, warm_start));
  return run_swap_search(inst, m, cfg, basis);
}

namespace {

SolveResult run_swap_search(const Instance& inst, const MatroidOracle& m,
                            const SolverConfig& cfg, const std::vector<int>& basis) {
  IncrementalSolution s(inst);
  for (int u : basis) s.add(u);

  SwapFeasibility feasibility(m, basis);
  const bool modular = inst.quality().is_modular();
  const std::vector<double>* weights = modular ? &inst.quality().weights() : nullptr;
  const auto started = std::chrono::steady_clock::now();
  const auto budget_exceeded = [&]() {
    if (cfg.ls_time_budget_ms <= 0.0) return false;
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    return elapsed.count() > cfg.ls_time_budget_ms;
  };

  int swaps = 0;
  bool locally_optimal = false;
  std::vector<int> members;
  while (swaps < cfg.ls_max_iters) {
    // Best-improvement scan over all feasible (out, in) pairs; ties break to
    // the lexicographically smallest (out, in).
    members.assign(s.selected().begin(), s.selected().end());
    std::sort(members.begin(), members.end());
    int best_in = -1, best_out = -1;
    double best_phi = kNegInf;
    for (int v : members) {
      double f_base = 0.0;
      // Probe on a tracker copy so the live accumulators never round-trip.
      std::optional<QualityFunction::Tracker> probe;
      if (modular) {
        f_base = s.quality_value() - (*weights)[v];
      } else {
        probe.emplace(s.tracker());
        probe->remove(v);
        f_base = probe->value();
      }
      const double d_base = s.pair_sum() - s.dist_gain(v);
      for (int u = 0; u < inst.size(); ++u) {
        if (s.contains(u)) continue;
        const double f_new = modular ? f_base + (*weights)[u] : f_base + probe->marginal(u);
        const double phi_new =
            f_new + inst.lambda() * (d_base + s.dist_gain(u) - inst.distance(u, v));
        if (phi_new > best_phi && feasibility.can_swap(members, v, u)) {
          best_phi = phi_new;
          best_in = u;
          best_out = v;
        }
      }
    }
    if (best_in < 0 || best_phi <= s.phi() * (1.0 + cfg.ls_epsilon)) {
      locally_optimal = true;
      break;
    }
    s.remove(best_out);
    s.add(best_in);
    feasibility.apply_swap(best_out, best_in);
    ++swaps;
    if (budget_exceeded()) break;
  }
  return finish(s, locally_optimal, swaps);
}

}  // namespace

namespace {

/// C(n,p) with saturation well above the brute-force guard.
double binomial_estimate(int n, int p) {
  double c = 1.0;
  for (int i = 1; i <= p; ++i) {
    c *= static_cast<double>(n - p + i) / static_cast<double>(i);
    if (c > 1e18) return c;
  }
  return c;
}

/// Lexicographic enumeration of p-subsets with incremental distance and
/// quality accumulators: O(p) per visited subset, never O(p^2).
class SubsetEnumerator {
 public:
  SubsetEnumerator(const Instance& inst, int p)
      : inst_(&inst),
        p_(p),
        n_(inst.size()),
        modular_(inst.quality().is_modular()),
        tracker_(inst.quality()) {
    cur_.reserve(p);
  }

  /// Explores every p-subset whose smallest element is `first`.
  void run_branch(int first) { descend(first); }

  double best_phi() const { return best_phi_; }
  const std::vector<int>& best_set() const { return best_set_; }

 private:
  void descend(int u) {
    double gain = 0.0;
    for (int s : cur_) gain += inst_->distance(u, s);
    d_sum_ += gain;
    double f_gain = 0.0;
    if (modular_) {
      f_gain = inst_->quality().weight(u);
      f_sum_ += f_gain;
    } else {
      tracker_.add(u);
    }
    cur_.push_back(u);

    if (static_cast<int>(cur_.size()) == p_) {
      const double f = modular_ ? f_sum_ : tracker_.value();
      const double phi = f + inst_->lambda() * d_sum_;
      // Strict improvement keeps the lexicographically first maximizer.
      if (phi > best_phi_) {
        best_phi_ = phi;
        best_set_ = cur_;
      }
    } else {
      const int remaining = p_ - static_cast<int>(cur_.size());
      for (int v = u + 1; v <= n_ - remaining; ++v) descend(v);
    }

    cur_.pop_back();
    if (modular_) {
      f_sum_ -= f_gain;
    } else {
      tracker_.remove(u);
    }
    d_sum_ -= gain;
  }

  const Instance* inst_;
  int p_;
  int n_;
  bool modular_;
  QualityFunction::Tracker tracker_;
  std::vector<int> cur_;
  double d_sum_ = 0.0;
  double f_sum_ = 0.0;
  double best_phi_ = kNegInf;
  std::vector<int> best_set_;
};

Solution solution_from_set(const Instance& inst, const std::vector<int>& set) {
  IncrementalSolution s(inst);
  for (int u : set) s.add(u);
  return s.take();
}

}  // namespace

Solution brute_force_opt(const Instance& inst, int p, int num_threads) {
  const int n = inst.size();
  if (p < 0 || p > n) throw InvalidInput("brute_force_opt: p out of range");
  if (binomial_estimate(n, p) > kBruteForceGuard)
    throw SearchSpaceTooLarge("brute_force_opt: C(n,p) exceeds the enumeration guard");
  if (p == 0) return make_solution(inst);

  const int branches = n - p + 1;
  int threads = num_threads;
  if (threads <= 0)
    threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  // A user-supplied oracle is not known to be thread-safe.
  if (inst.quality().kind() == QualityFunction::Kind::kCustom) threads = 1;
  threads = std::min(threads, branches);

  std::vector<SubsetEnumerator> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) workers.emplace_back(inst, p);

  // Round-robin over the first element; every subset is evaluated by exactly
  // one worker with the same accumulation order regardless of thread count.
  auto run_worker = [&](int t) {
    for (int first = t; first < branches; first += threads) workers[t].run_branch(first);
  };
  if (threads == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run_worker, t);
    for (std::thread& th : pool) th.join();
  }

  // Deterministic reduction: maximum value, then lexicographically smallest
  // subset among exact ties, independent of the worker partition.
  const std::vector<int>* best_set = nullptr;
  double best_phi = kNegInf;
  for (const SubsetEnumerator& w : workers) {
    if (w.best_set().empty()) continue;
    if (w.best_phi() > best_phi ||
        (w.best_phi() == best_phi && (best_set == nullptr || w.best_set() < *best_set))) {
      best_phi = w.best_phi();
      best_set = &w.best_set();
    }
  }
  if (best_set == nullptr)
    throw InternalInvariantError("brute_force_opt: enumeration produced no subset");
  return solution_from_set(inst, *best_set);
}

Solution brute_force_opt(const Instance& inst, const MatroidOracle& m) {
  check_matroid_universe(inst, m, "brute_force_opt");
  const int rank = m.rank();
  if (rank == 0) return make_solution(inst);

  const int n = inst.size();
  const bool modular = inst.quality().is_modular();
  QualityFunction::Tracker tracker(inst.quality());
  std::vector<int> cur;
  cur.reserve(rank);
  double d_sum = 0.0, f_sum = 0.0;
  double best_phi = kNegInf;
  std::vector<int> best_set;
  long long nodes = 0;

  // DFS over independent sets in ascending-id order; every independent set
  // of size rank is a basis.
  auto descend = [&](auto&& self, int next_min) -> void {
    for (int u = next_min; u < n; ++u) {
      if (static_cast<int>(cur.size()) + (n - u) < rank) break;
      cur.push_back(u);
      if (++nodes > static_cast<long long>(kBruteForceGuard)) {
        throw SearchSpaceTooLarge("brute_force_opt: basis enumeration exceeds the guard");
      }
      if (m.is_independent(cur)) {
        double gain = 0.0;
        for (size_t i = 0; i + 1 < cur.size(); ++i) gain += inst.distance(u, cur[i]);
        d_sum += gain;
        double f_gain = 0.0;
        if (modular) {
          f_gain = inst.quality().weight(u);
          f_sum += f_gain;
        } else {
          tracker.add(u);
        }
        if (static_cast<int>(cur.size()) == rank) {
          const double f = modular ? f_sum : tracker.value();
          const double phi = f + inst.lambda() * d_sum;
          if (phi > best_phi) {
            best_phi = phi;
            best_set = cur;
          }
        } else {
          self(self, u + 1);
        }
        if (modular) {
          f_sum -= f_gain;
        } else {
          tracker.remove(u);
        }
        d_sum -= gain;
      }
      cur.pop_back();
    }
  };
  descend(descend, 0);
  if (best_set.empty())
    throw InternalInvariantError("brute_force_opt: matroid has rank > 0 but no basis found");
  return solution_from_set(inst, best_set);
}

std::pair<Instance, MatroidOracle> appendix_fixture(int r, double ell) {
  if (r < 3) throw InvalidInput("appendix_fixture: r must be at least 3");
  if (ell <= 0.0) throw InvalidInput("appendix_fixture: ell must be positive");

  const int n = r + 2;  // a = 0, b = 1, c_1..c_r = 2..r+1
  const double eps = 2.0 / (static_cast<double>(r) * (r - 1));  // 1 / C(r,2)

  DistanceMatrix dist(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      dist.set_symmetric(u, v, (u == 1 || v == 1) ? ell : eps);

  std::vector<double> weights(n, 0.0);
  weights[0] = ell + eps;

  std::vector<int> block(n, 1);
  block[0] = block[1] = 0;
  MatroidOracle m = MatroidOracle::partition(std::move(block), {1, -1});
  return {Instance(std::move(dist), QualityFunction::modular(std::move(weights)), 1.0),
          std::move(m)};
}

}  // namespace maxdiv
