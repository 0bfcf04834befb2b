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

#ifndef MAXDIV_DISTANCE_MATRIX_HPP
#define MAXDIV_DISTANCE_MATRIX_HPP

#include <vector>

#include "maxdiv/errors.hpp"

namespace maxdiv {

/// Dense row-major n x n distance matrix.
///
/// Instances at the scales this library targets are complete graphs with at
/// most a few thousand points, so O(1) lookups beat any sparse layout. The
/// container itself does not force symmetry; ingestion paths may produce
/// arbitrary square matrices and validate_metric() reports what holds.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 0) throw InvalidInput("DistanceMatrix: negative size");
  }

  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    DistanceMatrix m(n);
    for (int u = 0; u < n; ++u) {
      if (static_cast<int>(rows[u].size()) != n)
        throw InvalidInput("DistanceMatrix: input is not square");
      for (int v = 0; v < n; ++v) m.cells_[static_cast<size_t>(u) * n + v] = rows[u][v];
    }
    return m;
  }

  int size() const { return n_; }

  double operator()(int u, int v) const {
    return cells_[static_cast<size_t>(u) * n_ + v];
  }

  /// Writes a single cell; use set_symmetric for distance assignments.
  void set(int u, int v, double d) { cells_[static_cast<size_t>(u) * n_ + v] = d; }

  void set_symmetric(int u, int v, double d) {
    set(u, v, d);
    set(v, u, d);
  }

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  int n_ = 0;
  std::vector<double> cells_;
};

}  // namespace maxdiv

#endif  // MAXDIV_DISTANCE_MATRIX_HPP
