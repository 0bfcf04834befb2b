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

#ifndef MAXDIV_ERRORS_HPP
#define MAXDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxdiv {

/// Caller passed an argument that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm was asked to run on a quality function kind it does not
/// support (e.g. the edge greedy requires a modular quality).
class UnsupportedQuality : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A distance change would break symmetry, non-negativity or the triangle
/// inequality of the stored matrix.
class MetricViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration was requested for a search space above the guard.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text input did not match the expected grammar; the message lists the
/// offending line numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A feature vector has zero norm, so no cosine distance is defined for it.
class DegenerateVector : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition that is guaranteed by theory (or by construction) failed;
/// signals a bug in this library, not in caller input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxdiv

#endif  // MAXDIV_ERRORS_HPP
