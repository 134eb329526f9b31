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

#include "qclone/cloner.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

std::vector<PureState<double>> probe_inputs() {
  return {PureState<double>::basis(1, 0), PureState<double>::basis(1, 1), bloch_state(BlochAngles<double>{1.0, 0.5}),
          bloch_state(BlochAngles<double>{2.2, 4.0})};
}

}  // namespace

CloningMachine::CloningMachine(int row, Variant variant, BarredControl semantics)
    : row_(row),
      variant_(variant),
      semantics_(semantics),
      circuit_(table1_row(row).circuit(variant)),
      prepared_(PureState<double>::basis(2, 0)) {
  const auto& spec = table1_row(row);
  auto candidates = solve_angles(spec.coefficients);
  std::stable_partition(candidates.begin(), candidates.end(),
                        [&](const AngleTriple& a) { return a.signs() == spec.sign_pattern(variant); });

  const auto probes = probe_inputs();
  for (const auto& candidate : candidates) {
    const auto prep = prepare_state(candidate);
    const bool ok = std::all_of(probes.begin(), probes.end(), [&](const PureState<double>& psi) {
      const auto out = apply_program(mix_input(psi, prep), circuit_, semantics_);
      return phase_aligned_max_error(out, expected_output(psi)) <= kExactTolerance;
    });
    if (ok) {
      angles_ = candidate;
      prepared_ = prep;
      return;
    }
  }
  throw no_solution_error("CloningMachine: no preparation angles make row " + std::to_string(row) + " " +
                          std::string(to_string(variant)) + " reproduce the optimal output");
}

PureState<double> CloningMachine::output(const PureState<double>& psi) const {
  return apply_program(mix_input(psi, prepared_), circuit_, semantics_);
}

CloneResult CloningMachine::run(const PureState<double>& psi) const {
  auto out = output(psi);
  const auto rho = density_of(out);
  auto rho0 = partial_trace(rho, {0});
  auto rho1 = partial_trace(rho, {1});
  auto rho2 = partial_trace(rho, {2});
  const double f0 = state_fidelity(rho0, psi);
  const double f1 = state_fidelity(rho1, psi);
  const double f2 = state_fidelity(rho2, psi);
  return CloneResult{std::move(out), std::move(rho0), std::move(rho1), std::move(rho2), f0, f1, f2};
}

CloneResult run_machine(const PureState<double>& psi, int row, Variant variant) {
  return CloningMachine(row, variant).run(psi);
}

double mixture_residual(const DensityMatrix<double>& rho_out, const DensityMatrix<double>& rho_in,
                        const DensityMatrix<double>& rho_perp, double lambda) {
  if (rho_out.dim() != rho_in.dim() || rho_out.dim() != rho_perp.dim()) {
    throw std::domain_error("mixture_residual: dimension mismatch");
  }
  const auto mixture = lambda * rho_in.matrix() + (1.0 - lambda) * rho_perp.matrix();
  return (rho_out.matrix() - mixture).cwiseAbs().maxCoeff();
}

AverageFidelities machine_average_fidelities(int row, Variant variant, std::size_t n_theta, std::size_t n_phi) {
  const CloningMachine machine(row, variant);
  auto reduced = [&machine](std::size_t qubit) {
    return [&machine, qubit](const BlochAngles<double>& angles) {
      const auto rho = density_of(machine.output(bloch_state(angles)));
      return partial_trace(rho, {qubit});
    };
  };
  return AverageFidelities{average_fidelity(reduced(0), n_theta, n_phi), average_fidelity(reduced(1), n_theta, n_phi),
                           average_fidelity(reduced(2), n_theta, n_phi)};
}

}  // namespace qclone
