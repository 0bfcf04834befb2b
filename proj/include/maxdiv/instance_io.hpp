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

#ifndef MAXDIV_INSTANCE_IO_HPP
#define MAXDIV_INSTANCE_IO_HPP

#include <optional>
#include <string>

#include "maxdiv/core.hpp"
#include "maxdiv/matroids.hpp"

namespace maxdiv {

struct InstanceFile {
  Instance instance;
  std::optional<MatroidOracle> matroid;
};

/// Instance files are JSON documents with the schema (see README):
///   { "n": int, "lambda": real,
///     "quality": {"kind": "modular"|"coverage", ...payload},
///     "dist": [ ...lower-triangular row-major reals... ],
///     "matroid": {"kind": ..., ...payload}        // optional
///   }
/// Reals are written in shortest round-trip form, so read + write is
/// bit-stable. Custom quality oracles are not serializable.
std::string instance_to_string(const Instance& inst,
                               const std::optional<MatroidOracle>& matroid = std::nullopt);
InstanceFile instance_from_string(const std::string& text);

void write_instance(const std::string& path, const Instance& inst,
                    const std::optional<MatroidOracle>& matroid = std::nullopt);
InstanceFile read_instance(const std::string& path);

}  // namespace maxdiv

#endif  // MAXDIV_INSTANCE_IO_HPP
