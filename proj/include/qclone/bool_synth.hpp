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

// Reversible CNOT synthesis from Boolean truth tables.
//
// Variable masks: bit i of a std::uint32_t mask stands for variable / qubit i
// (x = qubit 0, y = qubit 1, ...). Truth-table rows are indexed by the
// big-endian basis index used by PureState.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclone/gates.hpp"

namespace qclone {

enum class Trit : std::uint8_t { kZero, kOne, kDontCare };

std::uint32_t index_to_vars(std::size_t index, std::size_t n);
std::size_t vars_to_index(std::uint32_t vars, std::size_t n);

/// n-in / n-out table; rows[k][j] is output j on the input with basis index k.
class TruthTable {
 public:
  TruthTable(std::size_t n, std::vector<std::vector<Trit>> rows);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Trit>& row(std::size_t index) const { return rows_.at(index); }
  Trit cell(std::size_t index, std::size_t output) const { return rows_.at(index).at(output); }
  std::vector<Trit> column(std::size_t output) const;
  std::size_t dont_care_count() const;
  bool complete() const { return dont_care_count() == 0; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<Trit>> rows_;
};

/// XOR of AND-monomials; each monomial is a variable mask, 0 is the constant 1.
struct AnfPolynomial {
  std::size_t n = 0;
  std::vector<std::uint32_t> monomials;  // sorted by (degree, mask), no duplicates

  std::size_t degree() const;
  bool evaluate(std::uint32_t vars) const;
  /// e.g. "x ^ y", "1 ^ z", "x&y"; "0" for the empty polynomial.
  std::string to_string() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;
};

std::string variable_name(std::size_t var, std::size_t n);
std::string monomial_name(std::uint32_t mask, std::size_t n);

/// Algebraic normal form of a fully specified column of 2^n values.
/// Throws std::domain_error on don't-cares or a non power-of-two length.
AnfPolynomial anf_of(std::span<const Trit> column);

/// Every monomial has degree <= 1.
bool is_affine(const AnfPolynomial& p);

/// y = M x xor b over GF(2).
struct LinearMap {
  std::size_t n = 0;
  std::vector<std::uint32_t> rows;  // rows[i] bit j: output i depends on input j
  std::uint32_t affine = 0;         // bit i: output i is inverted

  static LinearMap identity(std::size_t n);

  std::uint32_t apply_vars(std::uint32_t vars) const;
  std::size_t apply_index(std::size_t index) const;
  bool invertible() const;
  TruthTable table() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// The affine map of a complete table whose columns are all affine; nullopt
/// otherwise.
std::optional<LinearMap> map_of_table(const TruthTable& t);

struct Completion {
  TruthTable table;
  LinearMap map;
  std::vector<bool> assignment;  // starred cells in row-major order
};

/// All don't-care assignments whose outputs are affine and jointly reversible,
/// in lexicographic order of the assignment (first starred cell most
/// significant, 0 before 1). Throws std::domain_error past 24 starred cells.
std::vector<Completion> enumerate_completions(const TruthTable& t);

/// Whether some assignment of this column's own don't-cares is affine.
bool admits_affine_completion(std::span<const Trit> column);

/// CNOTs from Gaussian elimination over GF(2) (column-major forward pass,
/// lowest-index pivot, then back substitution), with inversions folded into a
/// trailing CNOT on the same target when possible, otherwise a NOT.
/// Throws not_reversible_error for singular maps.
CnotProgram synthesize(const LinearMap& map);

/// Applies the program to each basis state |k> as a state vector and checks
/// the resulting basis state against row k; don't-care cells match anything.
bool verify_program(const CnotProgram& program, const TruthTable& t,
                    BarredControl semantics = BarredControl::kFlipQubit);

/// The complete table realized by a program on n qubits.
TruthTable induced_table(const CnotProgram& program, std::size_t n,
                         BarredControl semantics = BarredControl::kFlipQubit);

/// Text format, one row per line: "<bits> -> <bits>", '*' for don't-care,
/// '#' starts a comment. Every input row must appear exactly once.
/// Throws parse_error.
TruthTable parse_truth_table(std::string_view text);
std::string format_truth_table(const TruthTable& t);

}  // namespace qclone
