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

#include "maxdiv/matroids.hpp"

#include <algorithm>
#include <numeric>

#include "maxdiv/errors.hpp"

namespace maxdiv {
namespace {

void check_set(const MatroidOracle& m, std::span<const int> s, const char* op) {
  std::vector<char> seen(m.num_items(), 0);
  for (int u : s) {
    if (u < 0 || u >= m.num_items())
      throw InvalidInput(std::string(op) + ": unknown item id");
    if (seen[u]) throw InvalidInput(std::string(op) + ": duplicate item in set");
    seen[u] = 1;
  }
}

/// Kuhn-style augmenting path search for matching items (left) to sets of a
/// collection (right). Simple augmenting paths are plenty at the instance
/// sizes this library targets and keep the matching auditable.
class TransversalMatcher {
 public:
  TransversalMatcher(const std::vector<std::vector<int>>& sets_of_item, int num_sets)
      : sets_of_item_(sets_of_item), set_owner_(num_sets, -1) {}

  /// Tries to match `item`, possibly rerouting earlier matches.
  bool augment(int item, std::vector<char>& visited) {
    for (int set_id : sets_of_item_[item]) {
      if (visited[set_id]) continue;
      visited[set_id] = 1;
      if (set_owner_[set_id] < 0 || augment(set_owner_[set_id], visited)) {
        set_owner_[set_id] = item;
        return true;
      }
    }
    return false;
  }

  int match_all(std::span<const int> items) {
    int matched = 0;
    std::vector<char> visited;
    for (int item : items) {
      visited.assign(set_owner_.size(), 0);
      if (augment(item, visited)) ++matched;
    }
    return matched;
  }

 private:
  const std::vector<std::vector<int>>& sets_of_item_;
  std::vector<int> set_owner_;
};

}  // namespace

MatroidOracle MatroidOracle::uniform(int num_items, int capacity) {
  if (num_items < 0) throw InvalidInput("uniform matroid: negative universe");
  if (capacity < 0) throw InvalidInput("uniform matroid: negative capacity");
  MatroidOracle m;
  m.kind_ = Kind::kUniform;
  m.num_items_ = num_items;
  m.capacity_ = capacity;
  m.rank_ = m.compute_rank();
  return m;
}

MatroidOracle MatroidOracle::partition(std::vector<int> block_of_item,
                                       std::vector<int> block_caps) {
  const int num_blocks = static_cast<int>(block_caps.size());
  for (int b : block_of_item)
    if (b < 0 || b >= num_blocks)
      throw InvalidInput("partition matroid: block id out of range");
  MatroidOracle m;
  m.kind_ = Kind::kPartition;
  m.num_items_ = static_cast<int>(block_of_item.size());
  m.block_of_item_ = std::move(block_of_item);
  m.block_caps_ = std::move(block_caps);
  m.rank_ = m.compute_rank();
  return m;
}

MatroidOracle MatroidOracle::transversal(int num_items,
                                         std::vector<std::vector<int>> collection) {
  if (num_items < 0) throw InvalidInput("transversal matroid: negative universe");
  MatroidOracle m;
  m.kind_ = Kind::kTransversal;
  m.num_items_ = num_items;
  m.sets_of_item_.assign(num_items, {});
  for (size_t set_id = 0; set_id < collection.size(); ++set_id)
    for (int u : collection[set_id]) {
      if (u < 0 || u >= num_items)
        throw InvalidInput("transversal matroid: item id out of range in collection");
      m.sets_of_item_[u].push_back(static_cast<int>(set_id));
    }
  m.collection_ = std::move(collection);
  m.rank_ = m.compute_rank();
  return m;
}

bool MatroidOracle::is_independent(std::span<const int> s) const {
  check_set(*this, s, "is_independent");
  switch (kind_) {
    case Kind::kUniform:
      return static_cast<int>(s.size()) <= capacity_;
    case Kind::kPartition: {
      std::vector<int> count(block_caps_.size(), 0);
      for (int u : s) {
        const int b = block_of_item_[u];
        if (block_caps_[b] >= 0 && ++count[b] > block_caps_[b]) return false;
      }
      return true;
    }
    case Kind::kTransversal: {
      TransversalMatcher matcher(sets_of_item_, static_cast<int>(collection_.size()));
      return matcher.match_all(s) == static_cast<int>(s.size());
    }
  }
  return false;
}

int MatroidOracle::compute_rank() const {
  switch (kind_) {
    case Kind::kUniform:
      return std::min(capacity_, num_items_);
    case Kind::kPartition: {
      std::vector<int> block_size(block_caps_.size(), 0);
      for (int b : block_of_item_) ++block_size[b];
      int rank = 0;
      for (size_t b = 0; b < block_caps_.size(); ++b)
        rank += block_caps_[b] < 0 ? block_size[b] : std::min(block_caps_[b], block_size[b]);
      return rank;
    }
    case Kind::kTransversal: {
      // Rank of a transversal matroid = maximum matching of the whole
      // item/set bipartite graph.
      std::vector<int> all(num_items_);
      std::iota(all.begin(), all.end(), 0);
      TransversalMatcher matcher(sets_of_item_, static_cast<int>(collection_.size()));
      return matcher.match_all(all);
    }
  }
  return 0;
}

std::vector<int> extend_to_basis(const MatroidOracle& m, std::span<const int> s,
                                 std::span<const int> preference) {
  check_set(m, s, "extend_to_basis");
  if (!m.is_independent(s)) throw InvalidInput("extend_to_basis: set is dependent");

  std::vector<int> basis(s.begin(), s.end());
  std::vector<char> taken(m.num_items(), 0);
  for (int u : basis) taken[u] = 1;

  auto try_add = [&](int u) {
    if (taken[u] || static_cast<int>(basis.size()) >= m.rank()) return;
    basis.push_back(u);
    if (m.is_independent(basis)) {
      taken[u] = 1;
    } else {
      basis.pop_back();
    }
  };
  for (int u : preference) {
    if (u < 0 || u >= m.num_items()) throw InvalidInput("extend_to_basis: bad preference id");
    try_add(u);
  }
  for (int u = 0; u < m.num_items(); ++u) try_add(u);
  return basis;
}

ExchangeMap exchange_bijection(const MatroidOracle& m, std::span<const int> s,
                               std::span<const int> o) {
  check_set(m, s, "exchange_bijection");
  check_set(m, o, "exchange_bijection");
  if (static_cast<int>(s.size()) != m.rank() || !m.is_independent(s))
    throw InvalidInput("exchange_bijection: first argument is not a basis");
  if (static_cast<int>(o.size()) != m.rank() || !m.is_independent(o))
    throw InvalidInput("exchange_bijection: second argument is not a basis");

  std::vector<char> in_s(m.num_items(), 0), in_o(m.num_items(), 0);
  for (int u : s) in_s[u] = 1;
  for (int u : o) in_o[u] = 1;
  std::vector<int> only_s, only_o;
  for (int u : s)
    if (!in_o[u]) only_s.push_back(u);
  for (int u : o)
    if (!in_s[u]) only_o.push_back(u);

  // Feasibility edges: b ~ c iff s - b + c stays independent.
  const int t = static_cast<int>(only_s.size());
  std::vector<std::vector<int>> feasible(t);
  std::vector<int> probe(s.begin(), s.end());
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      for (int& x : probe)
        if (x == only_s[i]) x = only_o[j];
      if (m.is_independent(probe)) feasible[i].push_back(j);
      for (int& x : probe)
        if (x == only_o[j]) x = only_s[i];
    }
  }

  // Perfect matching on the feasibility graph.
  std::vector<int> match_of_c(t, -1);
  std::vector<char> visited(t);
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : feasible[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_of_c[j] < 0 || self(self, match_of_c[j])) {
        match_of_c[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < t; ++i) {
    visited.assign(t, 0);
    if (!augment(augment, i))
      throw InternalInvariantError(
          "exchange_bijection: no perfect matching; oracle violates the basis "
          "exchange property");
  }

  ExchangeMap map;
  map.pairs.resize(t);
  for (int j = 0; j < t; ++j) map.pairs[match_of_c[j]] = {only_s[match_of_c[j]], only_o[j]};
  return map;
}

std::string to_string(MatroidOracle::Kind kind) {
  switch (kind) {
    case MatroidOracle::Kind::kUniform:
      return "uniform";
    case MatroidOracle::Kind::kPartition:
      return "partition";
    case MatroidOracle::Kind::kTransversal:
      return "transversal";
  }
  return "unknown";
}

}  // namespace maxdiv
