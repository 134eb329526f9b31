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

// Versioned JSON documents emitted by the qclone tool. Every document carries
// "schema": 1. See docs/json-schema.md.

#include <array>
#include <cstddef>
#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "qclone/gates.hpp"

namespace qclone {

inline constexpr int kSchemaVersion = 1;

/// {"op": "cnot", control, target, invert_target, invert_control} or
/// {"op": "not", target}.
struct GateRecord {
  std::string op = "cnot";
  std::size_t control = 0;
  std::size_t target = 0;
  bool invert_target = false;
  bool invert_control = false;

  friend bool operator==(const GateRecord&, const GateRecord&) = default;
};

struct CircuitDocument {
  int schema = kSchemaVersion;
  std::size_t n_qubits = 0;
  std::string order = "application";
  std::string product;  // operator-product notation, rightmost factor first
  std::vector<GateRecord> gates;

  static CircuitDocument from_program(std::size_t n_qubits, const CnotProgram& program);
  /// Throws std::invalid_argument on an unknown op, order or schema.
  CnotProgram to_program() const;

  friend bool operator==(const CircuitDocument&, const CircuitDocument&) = default;
};

using AmplitudeRecord = std::array<double, 2>;  // [re, im]
using MatrixRecord = std::vector<std::vector<AmplitudeRecord>>;

struct SolutionRecord {
  std::array<double, 3> cos_squared{};
  std::array<double, 3> cos{};
  std::array<double, 3> sin{};
  std::string signs;
  double residual = 0.0;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

struct SolveReport {
  int schema = kSchemaVersion;
  std::string command = "solve";
  std::array<double, 4> coefficients{};
  bool normalized = false;
  std::string method;  // "closed_form" or "newton"
  std::vector<SolutionRecord> solutions;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

struct CompletionRecord {
  std::vector<int> assignment;
  std::vector<std::string> anf;
  CircuitDocument circuit;
  bool verified = false;

  friend bool operator==(const CompletionRecord&, const CompletionRecord&) = default;
};

struct SynthReport {
  int schema = kSchemaVersion;
  std::string command = "synth";
  std::size_t n = 0;
  std::size_t dont_cares = 0;
  std::size_t completion_count = 0;
  std::vector<CompletionRecord> completions;

  friend bool operator==(const SynthReport&, const SynthReport&) = default;
};

struct CloneReport {
  int schema = kSchemaVersion;
  std::string command = "clone";
  double theta = 0.0;
  double phi = 0.0;
  int row = 1;
  std::string variant = "upper";
  std::string circuit;
  std::vector<AmplitudeRecord> output;
  std::array<MatrixRecord, 3> rho;
  std::array<double, 3> fidelity{};
  std::array<double, 3> mixture_residual{};  // vs 5/6, 5/6, 2/3 mixtures
  double ancilla_conjugate_residual = 0.0;   // rho2 vs conj(2/3 rho_in + 1/3 rho_perp)
  double max_output_error = 0.0;

  friend bool operator==(const CloneReport&, const CloneReport&) = default;
};

struct VerifyCell {
  int row = 0;
  std::string variant;
  double max_error = 0.0;
  bool pass = false;

  friend bool operator==(const VerifyCell&, const VerifyCell&) = default;
};

struct VerifyReport {
  int schema = kSchemaVersion;
  std::string command = "verify-table";
  std::uint64_t seed = 0;
  int samples = 0;
  double tolerance = 0.0;
  std::vector<VerifyCell> cells;
  int passed = 0;
  int total = 0;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct FidelityReport {
  int schema = kSchemaVersion;
  std::string command = "fidelity";
  std::size_t n_theta = 0;
  std::size_t n_phi = 0;
  int row = 1;
  std::string variant = "upper";
  double copy0 = 0.0;
  double copy1 = 0.0;
  double ancilla = 0.0;

  friend bool operator==(const FidelityReport&, const FidelityReport&) = default;
};

void to_json(nlohmann::json& j, const GateRecord& g);
void from_json(const nlohmann::json& j, GateRecord& g);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CircuitDocument, schema, n_qubits, order, product, gates)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SolutionRecord, cos_squared, cos, sin, signs, residual)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SolveReport, schema, command, coefficients, normalized, method, solutions)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CompletionRecord, assignment, anf, circuit, verified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SynthReport, schema, command, n, dont_cares, completion_count, completions)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CloneReport, schema, command, theta, phi, row, variant, circuit, output, rho,
                                   fidelity, mixture_residual, ancilla_conjugate_residual, max_output_error)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyCell, row, variant, max_error, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyReport, schema, command, seed, samples, tolerance, cells, passed, total)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FidelityReport, schema, command, n_theta, n_phi, row, variant, copy0, copy1, ancilla)

}  // namespace qclone
