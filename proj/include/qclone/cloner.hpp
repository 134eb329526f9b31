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

// 1 -> 2 universal qubit cloner: input qubit 0 mixed with a prepared pair on
// qubits 1 and 2, then a CNOT circuit from the 12-row table.

#include <cmath>
#include <cstddef>
#include <optional>

#include "qclone/gates.hpp"
#include "qclone/prep_solver.hpp"
#include "qclone/state.hpp"

namespace qclone {

struct CloneResult {
  PureState<double> output;
  DensityMatrix<double> rho0;
  DensityMatrix<double> rho1;
  DensityMatrix<double> rho2;
  double f0 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
};

/// |psi>_0 (x) |prep>_12.
template <typename Scalar>
PureState<Scalar> mix_input(const PureState<Scalar>& psi, const PureState<Scalar>& prep) {
  if (psi.n_qubits() != 1 || prep.n_qubits() != 2) throw std::domain_error("mix_input: expects 1 + 2 qubits");
  return tensor(psi, prep);
}

/// sqrt(1/6) (2a|000> + b|010> + b|100> + 2b|111> + a|011> + a|101>).
template <typename Scalar>
PureState<Scalar> expected_output(const PureState<Scalar>& psi) {
  if (psi.n_qubits() != 1) throw std::domain_error("expected_output: expects one qubit");
  const auto a = psi[0];
  const auto b = psi[1];
  const Scalar s = std::sqrt(Scalar(1) / Scalar(6));
  typename PureState<Scalar>::Vector amps = PureState<Scalar>::Vector::Zero(8);
  amps(0b000) = s * Scalar(2) * a;
  amps(0b010) = s * b;
  amps(0b100) = s * b;
  amps(0b111) = s * Scalar(2) * b;
  amps(0b011) = s * a;
  amps(0b101) = s * a;
  return PureState<Scalar>::from_amplitudes(std::move(amps));
}

/// A table row's circuit bound to one preparation-angle solution.
///
/// Construction picks, among solve_angles() for the row's coefficients, the
/// first triple (the one matching the documented sign pattern is tried first)
/// whose machine reproduces the optimal output on a set of probe inputs.
class CloningMachine {
 public:
  CloningMachine(int row, Variant variant, BarredControl semantics = BarredControl::kFlipQubit);

  int row() const noexcept { return row_; }
  Variant variant() const noexcept { return variant_; }
  const AngleTriple& angles() const noexcept { return angles_; }
  const PureState<double>& prepared() const noexcept { return prepared_; }
  const CnotProgram& circuit() const noexcept { return circuit_; }

  PureState<double> output(const PureState<double>& psi) const;
  CloneResult run(const PureState<double>& psi) const;

 private:
  int row_;
  Variant variant_;
  BarredControl semantics_;
  CnotProgram circuit_;
  AngleTriple angles_;
  PureState<double> prepared_;
};

CloneResult run_machine(const PureState<double>& psi, int row, Variant variant);

/// max |rho_out - (lambda rho_in + (1 - lambda) rho_perp)| over entries.
double mixture_residual(const DensityMatrix<double>& rho_out, const DensityMatrix<double>& rho_in,
                        const DensityMatrix<double>& rho_perp, double lambda);

struct AverageFidelities {
  double copy0 = 0.0;
  double copy1 = 0.0;
  double ancilla = 0.0;
};

AverageFidelities machine_average_fidelities(int row, Variant variant, std::size_t n_theta = 64,
                                             std::size_t n_phi = 64);

}  // namespace qclone
