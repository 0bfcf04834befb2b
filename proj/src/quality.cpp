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

#include "maxdiv/quality.hpp"

#include <algorithm>
#include <cassert>

#include "maxdiv/errors.hpp"

namespace maxdiv {

QualityFunction QualityFunction::modular(std::vector<double> weights) {
  for (double w : weights)
    if (w < 0.0) throw InvalidInput("modular quality: negative weight");
  QualityFunction f;
  f.kind_ = Kind::kModular;
  f.num_items_ = static_cast<int>(weights.size());
  f.weights_ = std::move(weights);
  return f;
}

QualityFunction QualityFunction::coverage(std::vector<double> element_weights,
                                          std::vector<std::vector<int>> item_elements) {
  const int m = static_cast<int>(element_weights.size());
  for (double w : element_weights)
    if (w < 0.0) throw InvalidInput("coverage quality: negative element weight");
  for (const auto& elems : item_elements)
    for (int e : elems)
      if (e < 0 || e >= m) throw InvalidInput("coverage quality: element id out of range");
  QualityFunction f;
  f.kind_ = Kind::kCoverage;
  f.num_items_ = static_cast<int>(item_elements.size());
  f.element_weights_ = std::move(element_weights);
  f.item_elements_ = std::move(item_elements);
  return f;
}

QualityFunction QualityFunction::custom(int num_items, Oracle oracle) {
  if (num_items < 0) throw InvalidInput("custom quality: negative item count");
  if (!oracle) throw InvalidInput("custom quality: empty oracle");
  QualityFunction f;
  f.kind_ = Kind::kCustom;
  f.num_items_ = num_items;
  f.oracle_ = std::move(oracle);
  return f;
}

double QualityFunction::value(std::span<const int> items) const {
  switch (kind_) {
    case Kind::kModular: {
      double total = 0.0;
      for (int u : items) total += weights_[u];
      return total;
    }
    case Kind::kCoverage: {
      // Union of covered elements; order-independent and exact.
      std::vector<char> covered(element_weights_.size(), 0);
      double total = 0.0;
      for (int u : items)
        for (int e : item_elements_[u])
          if (!covered[e]) {
            covered[e] = 1;
            total += element_weights_[e];
          }
      return total;
    }
    case Kind::kCustom: {
      std::vector<int> sorted(items.begin(), items.end());
      std::sort(sorted.begin(), sorted.end());
      return oracle_(sorted);
    }
  }
  return 0.0;
}

QualityFunction QualityFunction::with_weight(int item, double weight) const {
  if (kind_ != Kind::kModular)
    throw InvalidInput("with_weight: quality is not modular");
  if (item < 0 || item >= num_items_) throw InvalidInput("with_weight: item out of range");
  if (weight < 0.0) throw InvalidInput("with_weight: negative weight");
  QualityFunction f = *this;
  f.weights_[item] = weight;
  return f;
}

QualityFunction::Tracker::Tracker(const QualityFunction& f) : f_(&f) {
  if (f.kind_ == Kind::kCoverage) cover_count_.assign(f.element_weights_.size(), 0);
}

double QualityFunction::Tracker::marginal(int u) const {
  switch (f_->kind_) {
    case Kind::kModular:
      return f_->weights_[u];
    case Kind::kCoverage: {
      double gain = 0.0;
      for (int e : f_->item_elements_[u])
        if (cover_count_[e] == 0) gain += f_->element_weights_[e];
      return gain;
    }
    case Kind::kCustom: {
      std::vector<int> with = members_;
      with.insert(std::upper_bound(with.begin(), with.end(), u), u);
      return f_->oracle_(with) - value_;
    }
  }
  return 0.0;
}

void QualityFunction::Tracker::add(int u) {
  switch (f_->kind_) {
    case Kind::kModular:
      value_ += f_->weights_[u];
      break;
    case Kind::kCoverage:
      for (int e : f_->item_elements_[u])
        if (cover_count_[e]++ == 0) value_ += f_->element_weights_[e];
      break;
    case Kind::kCustom:
      members_.insert(std::upper_bound(members_.begin(), members_.end(), u), u);
      value_ = f_->oracle_(members_);
      break;
  }
}

void QualityFunction::Tracker::remove(int u) {
  switch (f_->kind_) {
    case Kind::kModular:
      value_ -= f_->weights_[u];
      break;
    case Kind::kCoverage:
      for (int e : f_->item_elements_[u])
        if (--cover_count_[e] == 0) value_ -= f_->element_weights_[e];
      break;
    case Kind::kCustom: {
      auto it = std::lower_bound(members_.begin(), members_.end(), u);
      assert(it != members_.end() && *it == u);
      members_.erase(it);
      value_ = f_->oracle_(members_);
      break;
    }
  }
}

std::string to_string(QualityFunction::Kind kind) {
  switch (kind) {
    case QualityFunction::Kind::kModular:
      return "modular";
    case QualityFunction::Kind::kCoverage:
      return "coverage";
    case QualityFunction::Kind::kCustom:
      return "custom";
  }
  return "unknown";
}

}  // namespace maxdiv
