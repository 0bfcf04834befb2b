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

#ifndef MAXDIV_CLI_HPP
#define MAXDIV_CLI_HPP

#include <string>
#include <vector>

namespace maxdiv {

/// Entry point behind the maxdiv binary; args excludes the program name.
/// Subcommands: gen, solve, brute, compare, dynamics, ingest.
/// Returns the process exit code (0 on success).
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace maxdiv

#endif  // MAXDIV_CLI_HPP
