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

#include "maxdiv/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string_view>

#include "maxdiv/errors.hpp"
#include "maxdiv/format.hpp"
#include "maxdiv/rng.hpp"

namespace maxdiv {

Instance gen_synthetic(int n, double lambda, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("gen_synthetic: need at least 2 items");
  Rng rng(seed);
  std::vector<double> weights(n);
  for (double& w : weights) w = rng.uniform01();
  DistanceMatrix dist(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) dist.set_symmetric(u, v, rng.uniform(1.0, 2.0));
  return Instance(std::move(dist), QualityFunction::modular(std::move(weights)), lambda);
}

namespace {

bool parse_int(std::string_view text, int& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool parse_real(std::string_view text, double& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

struct ParsedLine {
  std::string query_id;
  int relevance = 0;
  std::vector<std::pair<int, double>> features;  // 1-based sparse entries
};

// Returns an error description, or empty on success.
std::string parse_line(std::string_view line, ParsedLine& out) {
  if (const size_t hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);

  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  if (tokens.empty()) return "blank";  // caller skips blank lines silently

  if (tokens.size() < 2) return "expected '<relevance> qid:<id> ...'";
  if (!parse_int(tokens[0], out.relevance)) return "relevance label is not an integer";
  if (out.relevance < 0 || out.relevance > 5) return "relevance label outside [0,5]";
  if (!tokens[1].starts_with("qid:") || tokens[1].size() == 4)
    return "second token must be qid:<id>";
  out.query_id = std::string(tokens[1].substr(4));

  out.features.clear();
  for (size_t i = 2; i < tokens.size(); ++i) {
    const std::string_view tok = tokens[i];
    const size_t colon = tok.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 >= tok.size())
      return "feature token '" + std::string(tok) + "' is not <index>:<value>";
    int index = 0;
    double value = 0.0;
    if (!parse_int(tok.substr(0, colon), index) || index < 1)
      return "feature index in '" + std::string(tok) + "' is not a positive integer";
    if (!parse_real(tok.substr(colon + 1), value))
      return "feature value in '" + std::string(tok) + "' is not a number";
    for (const auto& [prev, _] : out.features)
      if (prev == index) return "duplicate feature index " + std::to_string(index);
    out.features.emplace_back(index, value);
  }
  return {};
}

}  // namespace

std::vector<LetorQuery> parse_letor_stream(std::istream& in) {
  std::vector<LetorQuery> queries;
  std::vector<std::pair<int, std::string>> bad_lines;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ParsedLine parsed;
    const std::string err = parse_line(line, parsed);
    if (err == "blank") continue;
    if (!err.empty()) {
      bad_lines.emplace_back(line_no, err);
      continue;
    }

    auto it = std::find_if(queries.begin(), queries.end(), [&](const LetorQuery& q) {
      return q.query_id == parsed.query_id;
    });
    if (it == queries.end()) {
      queries.push_back({parsed.query_id, {}});
      it = std::prev(queries.end());
    }
    DocumentRecord rec;
    rec.query_id = parsed.query_id;
    rec.relevance = parsed.relevance;
    int max_index = 0;
    for (const auto& [index, _] : parsed.features) max_index = std::max(max_index, index);
    rec.features.assign(max_index, 0.0);
    for (const auto& [index, value] : parsed.features) rec.features[index - 1] = value;
    it->docs.push_back(std::move(rec));
  }

  if (!bad_lines.empty()) {
    std::ostringstream msg;
    msg << "malformed input: " << bad_lines.size() << " bad line(s):";
    for (const auto& [no, why] : bad_lines) msg << "\n  line " << no << ": " << why;
    throw ParseError(msg.str());
  }

  // Sparse lines may omit trailing zero features; pad per query.
  for (LetorQuery& q : queries) {
    size_t width = 0;
    for (const DocumentRecord& d : q.docs) width = std::max(width, d.features.size());
    for (DocumentRecord& d : q.docs) d.features.resize(width, 0.0);
  }
  return queries;
}

std::vector<LetorQuery> parse_letor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("parse_letor: cannot open " + path);
  return parse_letor_stream(in);
}

std::string letor_to_string(const std::vector<LetorQuery>& queries) {
  std::string out;
  for (const LetorQuery& q : queries)
    for (const DocumentRecord& d : q.docs) {
      out += std::to_string(d.relevance);
      out += " qid:";
      out += q.query_id;
      for (size_t i = 0; i < d.features.size(); ++i) {
        out += ' ';
        out += std::to_string(i + 1);
        out += ':';
        out += format_double(d.features[i]);
      }
      out += '\n';
    }
  return out;
}

CosineInstanceResult build_cosine_instance(const std::vector<DocumentRecord>& docs,
                                           int top_n, double lambda, DistanceMode mode,
                                           FeatureScaling scaling) {
  if (docs.size() < 2) throw InvalidInput("build_cosine_instance: need at least 2 documents");
  if (top_n < 2) throw InvalidInput("build_cosine_instance: top_n must be at least 2");
  const size_t width = docs.front().features.size();
  for (const DocumentRecord& d : docs)
    if (d.features.size() != width)
      throw InvalidInput("build_cosine_instance: feature vectors differ in length");

  // Top-n by relevance, ties by file order.
  std::vector<int> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return docs[a].relevance > docs[b].relevance;
  });
  const int n = std::min<int>(top_n, static_cast<int>(docs.size()));
  std::vector<int> selected(order.begin(), order.begin() + n);

  std::vector<std::vector<double>> features;
  features.reserve(n);
  for (int idx : selected) features.push_back(docs[idx].features);

  if (scaling == FeatureScaling::kMinMax) {
    for (size_t j = 0; j < width; ++j) {
      double lo = features[0][j], hi = features[0][j];
      for (const auto& f : features) {
        lo = std::min(lo, f[j]);
        hi = std::max(hi, f[j]);
      }
      for (auto& f : features) f[j] = hi > lo ? (f[j] - lo) / (hi - lo) : 0.0;
    }
  }

  std::vector<double> norm(n);
  for (int i = 0; i < n; ++i) {
    double sq = 0.0;
    for (double x : features[i]) sq += x * x;
    norm[i] = std::sqrt(sq);
    if (norm[i] == 0.0)
      throw DegenerateVector("build_cosine_instance: document " + std::to_string(selected[i]) +
                             " (qid " + docs[selected[i]].query_id +
                             ") has a zero-norm feature vector");
  }

  DistanceMatrix dist(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dot = 0.0;
      for (size_t k = 0; k < width; ++k) dot += features[i][k] * features[j][k];
      const double cosine = std::clamp(dot / (norm[i] * norm[j]), -1.0, 1.0);
      const double d = mode == DistanceMode::kOneMinusCosine
                           ? 1.0 - cosine
                           : std::acos(cosine) / std::numbers::pi;
      dist.set_symmetric(i, j, d);
    }

  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i) weights[i] = static_cast<double>(docs[selected[i]].relevance);

  CosineInstanceResult result{
      Instance(dist, QualityFunction::modular(std::move(weights)), lambda),
      std::move(selected), validate_metric(dist)};
  return result;
}

std::string to_string(DistanceMode mode) {
  return mode == DistanceMode::kOneMinusCosine ? "one_minus_cosine" : "angular";
}

}  // namespace maxdiv
