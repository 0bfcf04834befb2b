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

#include "maxdiv/instance_io.hpp"

#include <fstream>

#include <json.hpp>

#include "maxdiv/errors.hpp"

namespace maxdiv {
namespace {

using nlohmann::json;

json quality_to_json(const QualityFunction& q) {
  switch (q.kind()) {
    case QualityFunction::Kind::kModular:
      return {{"kind", "modular"}, {"weights", q.weights()}};
    case QualityFunction::Kind::kCoverage:
      return {{"kind", "coverage"},
              {"element_weights", q.element_weights()},
              {"item_elements", q.item_elements()}};
    case QualityFunction::Kind::kCustom:
      throw InvalidInput("instance_to_string: custom quality oracles are not serializable");
  }
  return {};
}

QualityFunction quality_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "modular")
    return QualityFunction::modular(j.at("weights").get<std::vector<double>>());
  if (kind == "coverage")
    return QualityFunction::coverage(
        j.at("element_weights").get<std::vector<double>>(),
        j.at("item_elements").get<std::vector<std::vector<int>>>());
  throw ParseError("instance file: unknown quality kind '" + kind + "'");
}

json matroid_to_json(const MatroidOracle& m) {
  switch (m.kind()) {
    case MatroidOracle::Kind::kUniform:
      return {{"kind", "uniform"}, {"capacity", m.capacity()}};
    case MatroidOracle::Kind::kPartition:
      return {{"kind", "partition"},
              {"block_of_item", m.block_of_item()},
              {"block_caps", m.block_caps()}};
    case MatroidOracle::Kind::kTransversal:
      return {{"kind", "transversal"}, {"collection", m.collection()}};
  }
  return {};
}

MatroidOracle matroid_from_json(const json& j, int n) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") return MatroidOracle::uniform(n, j.at("capacity").get<int>());
  if (kind == "partition")
    return MatroidOracle::partition(j.at("block_of_item").get<std::vector<int>>(),
                                    j.at("block_caps").get<std::vector<int>>());
  if (kind == "transversal")
    return MatroidOracle::transversal(n,
                                      j.at("collection").get<std::vector<std::vector<int>>>());
  throw ParseError("instance file: unknown matroid kind '" + kind + "'");
}

}  // namespace

std::string instance_to_string(const Instance& inst,
                               const std::optional<MatroidOracle>& matroid) {
  const int n = inst.size();
  std::vector<double> lower;
  lower.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 1; u < n; ++u)
    for (int v = 0; v < u; ++v) lower.push_back(inst.distance(u, v));

  json j{{"n", n},
         {"lambda", inst.lambda()},
         {"quality", quality_to_json(inst.quality())},
         {"dist", lower}};
  if (matroid.has_value()) j["matroid"] = matroid_to_json(*matroid);
  return j.dump(2) + "\n";
}

InstanceFile instance_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance file: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("instance file: negative n");
    const auto lower = j.at("dist").get<std::vector<double>>();
    if (lower.size() != static_cast<size_t>(n) * (n - 1) / 2)
      throw ParseError("instance file: dist has " + std::to_string(lower.size()) +
                       " entries, expected n(n-1)/2");
    DistanceMatrix dist(n);
    size_t k = 0;
    for (int u = 1; u < n; ++u)
      for (int v = 0; v < u; ++v) dist.set_symmetric(u, v, lower[k++]);

    InstanceFile out{
        Instance(std::move(dist), quality_from_json(j.at("quality")),
                 j.at("lambda").get<double>()),
        std::nullopt};
    if (j.contains("matroid")) out.matroid = matroid_from_json(j.at("matroid"), n);
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance file: ") + e.what());
  }
}

void write_instance(const std::string& path, const Instance& inst,
                    const std::optional<MatroidOracle>& matroid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_instance: cannot open " + path + " for writing");
  out << instance_to_string(inst, matroid);
  if (!out) throw IoError("write_instance: failed writing " + path);
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_instance: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return instance_from_string(text);
}

}  // namespace maxdiv
