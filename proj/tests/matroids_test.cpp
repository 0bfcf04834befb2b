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

#include "maxdiv/errors.hpp"
#include "maxdiv/matroids.hpp"
#include "maxdiv/rng.hpp"
#include "maxdiv/solvers.hpp"
#include "support.hpp"

using namespace maxdiv;
using namespace maxdiv::testing;

namespace {

bool swap_stays_independent(const MatroidOracle& m, std::span<const int> s, int out, int in) {
  std::vector<int> probe(s.begin(), s.end());
  for (int& x : probe)
    if (x == out) x = in;
  return m.is_independent(probe);
}

}  // namespace

TEST_SUITE("matroids") {

TEST_CASE("the empty set is independent in every kind") {
  Rng rng(3);
  for (auto kind : {MatroidOracle::Kind::kUniform, MatroidOracle::Kind::kPartition,
                    MatroidOracle::Kind::kTransversal}) {
    const MatroidOracle m = random_matroid(rng, 6, kind);
    CHECK(m.is_independent(std::vector<int>{}));
  }
}

TEST_CASE("transversal independence is a distinct-representative matching") {
  // C1 = {a, b}, C2 = {b} over items a=0, b=1, x=2.
  const MatroidOracle m = MatroidOracle::transversal(3, {{0, 1}, {1}});
  CHECK(m.is_independent(std::vector<int>{0, 1}));  // a->C1, b->C2
  CHECK_FALSE(m.is_independent(std::vector<int>{0, 1, 2}));  // only two sets
  CHECK_FALSE(m.is_independent(std::vector<int>{2}));        // x is in no set
  CHECK(m.rank() == 2);
}

TEST_CASE("partition caps bound each block") {
  // Block {a, b} capped at 1, everything else unconstrained.
  const MatroidOracle m = MatroidOracle::partition({0, 0, 1, 1, 1}, {1, -1});
  CHECK_FALSE(m.is_independent(std::vector<int>{0, 1}));
  CHECK(m.is_independent(std::vector<int>{0, 2, 3, 4}));
  CHECK(m.rank() == 4);
}

TEST_CASE("rank per kind") {
  CHECK(MatroidOracle::uniform(3, 5).rank() == 3);
  CHECK(MatroidOracle::uniform(10, 4).rank() == 4);
  // Caps (1, unbounded) over blocks of sizes (2, r).
  const int r = 6;
  std::vector<int> block(2 + r, 1);
  block[0] = block[1] = 0;
  CHECK(MatroidOracle::partition(block, {1, -1}).rank() == 1 + r);
  // Two sets with the same single representative collapse to rank 1.
  CHECK(MatroidOracle::transversal(2, {{0}, {0}}).rank() == 1);
}

TEST_CASE("unknown and duplicate items are rejected") {
  const MatroidOracle m = MatroidOracle::uniform(4, 2);
  CHECK_THROWS_AS(m.is_independent(std::vector<int>{4}), InvalidInput);
  CHECK_THROWS_AS(m.is_independent(std::vector<int>{1, 1}), InvalidInput);
  CHECK_THROWS_AS(MatroidOracle::partition({0, 2}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(MatroidOracle::transversal(2, {{0, 5}}), InvalidInput);
}

TEST_CASE("extend_to_basis reaches rank and keeps the seed") {
  const MatroidOracle m = MatroidOracle::uniform(6, 3);
  const std::vector<int> basis = extend_to_basis(m, std::vector<int>{4});
  CHECK(static_cast<int>(basis.size()) == m.rank());
  CHECK(std::find(basis.begin(), basis.end(), 4) != basis.end());
  CHECK(m.is_independent(basis));

  // Already a basis: unchanged.
  const std::vector<int> done{0, 1, 2};
  CHECK(extend_to_basis(m, done) == done);

  CHECK_THROWS_AS(extend_to_basis(m, std::vector<int>{0, 1, 2, 3}), InvalidInput);
}

TEST_CASE("extend_to_basis honors the preference order") {
  const MatroidOracle m = MatroidOracle::uniform(5, 3);
  const std::vector<int> pref{3, 1, 0, 2, 4};
  CHECK(extend_to_basis(m, std::vector<int>{}, pref) == std::vector<int>{3, 1, 0});
}

TEST_CASE("extension under the capped-pair partition skips the blocked item") {
  // {a, b} capped at 1: starting from {a}, only the free block fits.
  const int r = 5;
  std::vector<int> block(2 + r, 1);
  block[0] = block[1] = 0;
  const MatroidOracle m = MatroidOracle::partition(block, {1, -1});
  const std::vector<int> basis = extend_to_basis(m, std::vector<int>{0});
  CHECK(static_cast<int>(basis.size()) == 1 + r);
  CHECK(std::find(basis.begin(), basis.end(), 1) == basis.end());
}

TEST_CASE("exchange bijection of identical bases is empty") {
  const MatroidOracle m = MatroidOracle::uniform(5, 3);
  const std::vector<int> s{0, 2, 4};
  CHECK(exchange_bijection(m, s, s).pairs.empty());
}

TEST_CASE("uniform exchange maps the private halves") {
  const MatroidOracle m = MatroidOracle::uniform(4, 2);
  const ExchangeMap map =
      exchange_bijection(m, std::vector<int>{0, 1}, std::vector<int>{2, 3});
  REQUIRE(map.pairs.size() == 2);
  for (const auto& [out, in] : map.pairs) {
    CHECK((out == 0 || out == 1));
    CHECK((in == 2 || in == 3));
  }
}

TEST_CASE("exchange bijection requires bases") {
  const MatroidOracle m = MatroidOracle::uniform(5, 3);
  CHECK_THROWS_AS(exchange_bijection(m, std::vector<int>{0, 1}, std::vector<int>{2, 3, 4}),
                  InvalidInput);
}

TEST_CASE("axioms hold exhaustively for random oracles") {
  Rng rng(7);
  for (auto kind : {MatroidOracle::Kind::kUniform, MatroidOracle::Kind::kPartition,
                    MatroidOracle::Kind::kTransversal}) {
    for (int rep = 0; rep < 5; ++rep) {
      const MatroidOracle m = random_matroid(rng, 6, kind);
      CHECK(check_hereditary(m));
      CHECK(check_augmentation(m));
    }
  }
}

TEST_CASE("exchange pairs verify on fuzzed basis pairs") {
  Rng rng(13);
  for (auto kind : {MatroidOracle::Kind::kUniform, MatroidOracle::Kind::kPartition,
                    MatroidOracle::Kind::kTransversal}) {
    for (int rep = 0; rep < 60; ++rep) {
      const MatroidOracle m = random_matroid(rng, rng.uniform_int(4, 9), kind);
      if (m.rank() == 0) continue;
      const std::vector<int> s = random_basis(m, rng);
      const std::vector<int> o = random_basis(m, rng);
      const ExchangeMap map = exchange_bijection(m, s, o);

      std::vector<int> only_s;
      for (int u : s)
        if (std::find(o.begin(), o.end(), u) == o.end()) only_s.push_back(u);
      CHECK(map.pairs.size() == only_s.size());
      std::vector<int> used;
      for (const auto& [out, in] : map.pairs) {
        CHECK(std::find(only_s.begin(), only_s.end(), out) != only_s.end());
        CHECK(std::find(o.begin(), o.end(), in) != o.end());
        CHECK(std::find(s.begin(), s.end(), in) == s.end());
        CHECK(std::find(used.begin(), used.end(), in) == used.end());  // injective
        used.push_back(in);
        CHECK(swap_stays_independent(m, s, out, in));
      }
    }
  }
}

TEST_CASE("random bases all have rank size") {
  Rng rng(19);
  for (auto kind : {MatroidOracle::Kind::kUniform, MatroidOracle::Kind::kPartition,
                    MatroidOracle::Kind::kTransversal}) {
    for (int rep = 0; rep < 20; ++rep) {
      const MatroidOracle m = random_matroid(rng, 7, kind);
      CHECK(static_cast<int>(random_basis(m, rng).size()) == m.rank());
    }
  }
}

}  // TEST_SUITE
