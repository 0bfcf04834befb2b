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

#ifndef MAXDIV_MATROIDS_HPP
#define MAXDIV_MATROIDS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxdiv {

/// Independence oracle over a ground set of num_items items.
///
/// Three kinds:
///   - uniform:     S independent iff |S| <= capacity;
///   - partition:   per-block counts bounded by per-block caps (cap < 0 means
///                  unbounded);
///   - transversal: S independent iff S can be matched into distinct sets of
///                  a collection C_1..C_m (system of distinct representatives).
///
/// Oracles are immutable and shareable across threads; matching scratch
/// buffers are allocated per call.
class MatroidOracle {
 public:
  enum class Kind { kUniform, kPartition, kTransversal };

  static MatroidOracle uniform(int num_items, int capacity);
  /// block_of_item maps every item to its block id in [0, caps.size()).
  static MatroidOracle partition(std::vector<int> block_of_item,
                                 std::vector<int> block_caps);
  static MatroidOracle transversal(int num_items,
                                   std::vector<std::vector<int>> collection);

  Kind kind() const { return kind_; }
  int num_items() const { return num_items_; }

  bool is_independent(std::span<const int> s) const;

  /// Size of every maximal independent set (basis).
  int rank() const { return rank_; }

  /// Payload accessors for serialization.
  int capacity() const { return capacity_; }
  const std::vector<int>& block_of_item() const { return block_of_item_; }
  const std::vector<int>& block_caps() const { return block_caps_; }
  const std::vector<std::vector<int>>& collection() const { return collection_; }

 private:
  MatroidOracle() = default;
  int compute_rank() const;

  Kind kind_ = Kind::kUniform;
  int num_items_ = 0;
  int rank_ = 0;
  int capacity_ = 0;                          // uniform
  std::vector<int> block_of_item_;            // partition
  std::vector<int> block_caps_;               // partition
  std::vector<std::vector<int>> collection_;  // transversal
  std::vector<std::vector<int>> sets_of_item_;  // transversal reverse index
};

/// Grows the independent set s into a basis, trying candidates in the order
/// given by preference (remaining items appended in ascending id). By the
/// augmentation axiom any maximal extension is a basis.
std::vector<int> extend_to_basis(const MatroidOracle& m, std::span<const int> s,
                                 std::span<const int> preference = {});

/// Bijection between the private halves of two bases: each (b, c) pair
/// satisfies "s - b + c is independent".
struct ExchangeMap {
  std::vector<std::pair<int, int>> pairs;
};

/// Computes the exchange bijection g: (s - o) -> (o - s) via a perfect
/// matching on the feasible-exchange bipartite graph. Such a matching always
/// exists for two bases of a matroid, so failure to find one throws
/// InternalInvariantError (it would mean the oracle is not a matroid).
ExchangeMap exchange_bijection(const MatroidOracle& m, std::span<const int> s,
                               std::span<const int> o);

std::string to_string(MatroidOracle::Kind kind);

}  // namespace maxdiv

#endif  // MAXDIV_MATROIDS_HPP
