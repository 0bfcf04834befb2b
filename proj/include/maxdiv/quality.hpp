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

#ifndef MAXDIV_QUALITY_HPP
#define MAXDIV_QUALITY_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace maxdiv {

/// Normalized monotone set function f measuring the quality of a subset.
///
/// Two concrete kinds are provided:
///   - modular:  f(S) = sum of per-item weights, weights >= 0;
///   - coverage: f(S) = total weight of ground elements covered by the items
///     of S, which is monotone submodular by construction.
/// A third kind wraps an arbitrary user oracle for experimentation; the
/// caller is then responsible for the oracle being normalized, monotone and
/// submodular (solver guarantees assume it).
class QualityFunction {
 public:
  enum class Kind { kModular, kCoverage, kCustom };

  /// Oracle signature: receives the item set as ascending ids.
  using Oracle = std::function<double(std::span<const int>)>;

  static QualityFunction modular(std::vector<double> weights);
  static QualityFunction coverage(std::vector<double> element_weights,
                                  std::vector<std::vector<int>> item_elements);
  static QualityFunction custom(int num_items, Oracle oracle);

  Kind kind() const { return kind_; }
  int num_items() const { return num_items_; }
  bool is_modular() const { return kind_ == Kind::kModular; }

  /// f(S). Items must be valid ids; duplicates are the caller's bug.
  double value(std::span<const int> items) const;

  /// Modular accessors.
  double weight(int item) const { return weights_[item]; }
  const std::vector<double>& weights() const { return weights_; }
  /// Returns a copy with one modular weight replaced (weight >= 0).
  QualityFunction with_weight(int item, double weight) const;

  /// Coverage accessors.
  const std::vector<double>& element_weights() const { return element_weights_; }
  const std::vector<std::vector<int>>& item_elements() const { return item_elements_; }

  /// Incremental f-evaluation state for a set built by adds and removes.
  ///
  /// marginal() is O(1) for modular and O(|elements of u|) for coverage, which
  /// is what keeps the vertex greedy at O(np) overall for modular qualities.
  class Tracker {
   public:
    explicit Tracker(const QualityFunction& f);

    double value() const { return value_; }
    /// f(S+u) - f(S); u must not be in S.
    double marginal(int u) const;
    void add(int u);
    void remove(int u);

   private:
    const QualityFunction* f_;
    double value_ = 0.0;
    std::vector<int> cover_count_;  // coverage: per-element multiplicity
    std::vector<int> members_;      // custom: current set, ascending
  };

 private:
  QualityFunction() = default;

  Kind kind_ = Kind::kModular;
  int num_items_ = 0;
  std::vector<double> weights_;                  // modular
  std::vector<double> element_weights_;          // coverage
  std::vector<std::vector<int>> item_elements_;  // coverage
  Oracle oracle_;                                // custom
};

std::string to_string(QualityFunction::Kind kind);

}  // namespace maxdiv

#endif  // MAXDIV_QUALITY_HPP
