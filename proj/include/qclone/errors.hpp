// Copyright 2026 The qclone Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclone {

/// Tolerance for exact algebraic identities (norms, traces, Hermiticity).
inline constexpr double kExactTolerance = 1e-12;
/// Tolerance for Bloch-sphere quadrature results.
inline constexpr double kQuadratureTolerance = 1e-6;
/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 10;

/// Raised when a system of equations has no real solution.
class no_solution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a Boolean map is not a bijection over GF(2).
class not_reversible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qclone
