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

#ifndef MAXDIV_DATAGEN_HPP
#define MAXDIV_DATAGEN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxdiv/core.hpp"

namespace maxdiv {

/// Synthetic benchmark instance: modular weights iid uniform on [0,1] and
/// distances iid uniform on [1,2] (always a metric, since 2 <= 1 + 1).
///
/// Draw order is fixed and the generator is portable (see Rng), so a seed
/// identifies the instance bytes across platforms: weights w_0..w_{n-1}
/// first, then distances d(u,v) for u < v in row-major order.
Instance gen_synthetic(int n, double lambda = 0.2, std::uint64_t seed = 0);

/// One ranked document: relevance label in [0,5], its query id and a dense
/// feature vector.
struct DocumentRecord {
  std::string query_id;
  int relevance = 0;
  std::vector<double> features;
};

struct LetorQuery {
  std::string query_id;
  std::vector<DocumentRecord> docs;  // in file order
};

/// Parses the standard ranked-document text layout, one document per line:
///
///   <relevance> qid:<id> <index>:<value> <index>:<value> ... [#comment]
///
/// Feature indices are 1-based and materialize into dense vectors (absent
/// indices are 0); vectors are zero-padded to a common length per query.
/// Queries are returned in first-appearance order. Malformed lines abort the
/// parse with a ParseError listing every offending line number.
std::vector<LetorQuery> parse_letor(const std::string& path);
std::vector<LetorQuery> parse_letor_stream(std::istream& in);

/// Serializes records back into the same text layout (used for round-trip
/// checks and fixtures).
std::string letor_to_string(const std::vector<LetorQuery>& queries);

enum class DistanceMode {
  kOneMinusCosine,  // d = 1 - cos(u, v); matches the paper's experiments but
                    // is not always a metric
  kAngular          // d = arccos(cos(u, v)) / pi; provably a metric
};

enum class FeatureScaling { kNone, kMinMax };

struct CosineInstanceResult {
  Instance instance;
  std::vector<int> doc_index;  // instance item -> index into the input docs
  MetricReport metric;         // violations are reported, never hidden
};

/// Builds an instance from the top_n documents by relevance (ties keep file
/// order): modular quality = relevance scores, distances from the cosine of
/// the feature vectors per mode. A zero-norm feature vector has no cosine
/// and raises DegenerateVector naming the document.
CosineInstanceResult build_cosine_instance(const std::vector<DocumentRecord>& docs,
                                           int top_n, double lambda,
                                           DistanceMode mode = DistanceMode::kOneMinusCosine,
                                           FeatureScaling scaling = FeatureScaling::kNone);

std::string to_string(DistanceMode mode);

}  // namespace maxdiv

#endif  // MAXDIV_DATAGEN_HPP
