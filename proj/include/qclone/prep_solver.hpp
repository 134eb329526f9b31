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

// Two-qubit state preparation R_a(t3) P_ba R_b(t2) P_ab R_a(t1) |00> and the
// closed-form inversion of its amplitude equations.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclone/gates.hpp"
#include "qclone/state.hpp"

namespace qclone {

/// Real amplitudes (C1, C2, C3, C4) on |00>, |01>, |10>, |11>.
struct PrepCoefficients {
  std::array<double, 4> c{1.0, 0.0, 0.0, 0.0};

  /// Throws std::domain_error unless sum C_i^2 = 1 within the exact tolerance.
  static PrepCoefficients checked(const std::array<double, 4>& c);
  /// Rescales to unit norm; throws std::domain_error for the zero vector.
  static PrepCoefficients normalized(const std::array<double, 4>& c);

  double operator[](std::size_t i) const { return c[i]; }
  double max_abs_diff(const PrepCoefficients& other) const;
};

/// Signs of (cos t1, cos t2, cos t3, sin t1, sin t2, sin t3), each +1 or -1.
struct SignPattern {
  std::array<int, 6> s{1, 1, 1, 1, 1, 1};

  /// Parses "+-+,--+" (cos signs, then sin signs).
  static SignPattern parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

struct AngleTriple {
  std::array<Rotation<double>, 3> rotations{};

  static AngleTriple from_angles(double t1, double t2, double t3);

  std::array<double, 3> cos_squared() const;
  /// Zero components count as positive.
  SignPattern signs() const;
  /// True when every (cos, sin) pair agrees within tol.
  bool approx_equal(const AngleTriple& other, double tol) const;
};

/// Left-hand sides of the amplitude equations:
///   C1 = c1 c2 c3 + s1 s2 s3      C2 = s1 c2 c3 - c1 s2 s3
///   C3 = c1 c2 s3 - s1 s2 c3      C4 = c1 s2 c3 + s1 c2 s3
PrepCoefficients eval_prep_equations(const AngleTriple& angles);

/// max_i |eval_prep_equations(angles)_i - target_i|.
double prep_residual(const AngleTriple& angles, const PrepCoefficients& target);

/// One +/- branch of the closed-form squared cosines.
struct ClosedFormBranch {
  int branch_sign = 1;  // sign in front of the square root in cos^2 t3
  std::array<double, 3> cos_squared{};
};

/// Both branches of the closed form, '+' first. Returns nullopt when a
/// denominator is within 1e-9 of zero. Throws no_solution_error when the
/// discriminant is negative.
std::optional<std::array<ClosedFormBranch, 2>> closed_form(const PrepCoefficients& c);

/// Damped Gauss-Newton on the four equations from a fixed grid of 16 starts;
/// returns distinct solutions with residual < 1e-10.
std::vector<AngleTriple> newton_solutions(const PrepCoefficients& c);

/// Every AngleTriple reproducing c within 1e-9. Uses the closed form and
/// filters all 64 sign assignments of (cos, sin); falls back to
/// newton_solutions when the closed form is singular or yields nothing.
/// Throws no_solution_error when the result would be empty.
std::vector<AngleTriple> solve_angles(const PrepCoefficients& c);

enum class SolveMethod { kClosedForm, kNewton };

struct AngleSolutions {
  SolveMethod method = SolveMethod::kClosedForm;
  std::vector<AngleTriple> triples;
};

/// solve_angles, also reporting which route produced the triples.
AngleSolutions solve_angles_detailed(const PrepCoefficients& c);

/// Runs the preparation circuit on |00>: R(t1) on qubit 0, CNOT 0->1,
/// R(t2) on qubit 1, CNOT 1->0, R(t3) on qubit 0.
PureState<double> prepare_state(const AngleTriple& angles);

enum class Variant { kUpper, kLower };

std::string_view to_string(Variant v);
/// Accepts "upper" / "lower"; throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view text);

/// A squared cosine as printed in the circuit table: base -/+ delta, where
/// upper_sign is the sign taken by the upper variant.
struct PrintedCosSquared {
  std::string text;
  double base = 0.0;
  double delta = 0.0;
  int upper_sign = -1;

  double value(Variant v) const { return base + (v == Variant::kUpper ? upper_sign : -upper_sign) * delta; }
};

/// One row of the 12-row cloning-circuit table.
struct Table1Row {
  int number = 0;
  std::array<int, 4> numerators{};  // coefficients are numerators / sqrt(6)
  PrepCoefficients coefficients;
  std::array<std::string, 2> circuit_text;  // product notation, upper then lower
  std::array<CnotProgram, 2> circuits;      // application order
  std::array<SignPattern, 2> sign_patterns;
  std::array<PrintedCosSquared, 3> printed_cos_squared;

  const CnotProgram& circuit(Variant v) const { return circuits[v == Variant::kUpper ? 0 : 1]; }
  const SignPattern& sign_pattern(Variant v) const { return sign_patterns[v == Variant::kUpper ? 0 : 1]; }
};

std::span<const Table1Row> table1_rows();

/// Row by 1-based number; throws std::domain_error outside 1..12.
const Table1Row& table1_row(int number);

}  // namespace qclone
