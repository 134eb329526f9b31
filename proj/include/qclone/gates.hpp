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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/state.hpp"

namespace qclone {

/// The real rotation [[cos, -sin], [sin, cos]] acting on one qubit.
template <typename Scalar = double>
struct Rotation {
  Scalar cos_theta{1};
  Scalar sin_theta{0};

  static Rotation from_angle(Scalar theta) { return Rotation{std::cos(theta), std::sin(theta)}; }

  static Rotation from_pair(Scalar c, Scalar s) {
    if (std::abs(c * c + s * s - Scalar(1)) > Scalar(kExactTolerance)) {
      throw std::domain_error("Rotation: (cos, sin) not on the unit circle");
    }
    return Rotation{c, s};
  }

  Rotation inverse() const { return Rotation{cos_theta, -sin_theta}; }

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// R(pi/2) = [[0, 1], [-1, 0]], which acts as NOT up to a sign on |0>.
template <typename Scalar = double>
Rotation<Scalar> not_rotation() {
  return Rotation<Scalar>{Scalar(0), Scalar(1)};
}

/// P_ct: target <- control xor target.
///
/// invert_target bars the target (x_t <- x_c xor not x_t). invert_control bars
/// the control; how that is read is chosen by BarredControl at application.
struct CnotGate {
  std::size_t control = 0;
  std::size_t target = 1;
  bool invert_target = false;
  bool invert_control = false;

  friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

/// Classical bit flip on one qubit.
struct NotGate {
  std::size_t target = 0;

  friend bool operator==(const NotGate&, const NotGate&) = default;
};

using Gate = std::variant<CnotGate, NotGate>;

/// Two readings of a bar on the control position.
enum class BarredControl {
  // NOT is applied to the control qubit (and stays applied), then the CNOT.
  kFlipQubit,
  // The gate fires when the control bit is 0; the control is left unchanged.
  kNegatedControl,
};

/// Gates in application order: gates.front() acts first. This is the reverse
/// of the operator-product notation P_a P_b P_c, where P_c acts first.
struct CnotProgram {
  std::vector<Gate> gates;

  std::size_t size() const noexcept { return gates.size(); }
  bool empty() const noexcept { return gates.empty(); }

  friend bool operator==(const CnotProgram&, const CnotProgram&) = default;
};

/// Image of a basis index under one gate.
std::size_t apply_classical(const Gate& gate, std::size_t n_qubits, std::size_t index,
                            BarredControl semantics = BarredControl::kFlipQubit);

std::size_t apply_classical(const CnotProgram& program, std::size_t n_qubits, std::size_t index,
                            BarredControl semantics = BarredControl::kFlipQubit);

/// Throws std::domain_error unless every index is < n_qubits and control != target.
void validate(const Gate& gate, std::size_t n_qubits);

/// Operator-product notation, rightmost factor acting first, e.g.
/// "P21 P02 P10". A bar is written as '!' before the index ("P0!2", "P!20");
/// a standalone NOT on qubit k is "Xk".
std::string format_product(const CnotProgram& program);

/// Inverse of format_product. Whitespace between factors is optional; each
/// index is a single digit. Throws std::invalid_argument on malformed input.
CnotProgram parse_product(std::string_view text);

template <typename Scalar>
PureState<Scalar> apply_rotation(const PureState<Scalar>& state, std::size_t qubit, const Rotation<Scalar>& r) {
  const std::size_t n = state.n_qubits();
  if (qubit >= n) throw std::domain_error("apply_rotation: qubit index out of range");
  const std::size_t mask = std::size_t{1} << detail::bit_position(n, qubit);
  auto amps = state.amplitudes();
  for (std::size_t k = 0; k < state.dim(); ++k) {
    if (k & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(k);
    const auto i1 = static_cast<Eigen::Index>(k | mask);
    const auto a0 = amps(i0);
    const auto a1 = amps(i1);
    amps(i0) = r.cos_theta * a0 - r.sin_theta * a1;
    amps(i1) = r.sin_theta * a0 + r.cos_theta * a1;
  }
  return PureState<Scalar>::from_amplitudes(std::move(amps));
}

/// Permutes amplitudes: amplitude at |k> moves to |gate(k)>.
template <typename Scalar>
PureState<Scalar> apply_gate(const PureState<Scalar>& state, const Gate& gate,
                             BarredControl semantics = BarredControl::kFlipQubit) {
  const std::size_t n = state.n_qubits();
  validate(gate, n);
  const auto& in = state.amplitudes();
  typename PureState<Scalar>::Vector out(in.size());
  for (std::size_t k = 0; k < state.dim(); ++k) {
    out(static_cast<Eigen::Index>(apply_classical(gate, n, k, semantics))) = in(static_cast<Eigen::Index>(k));
  }
  return PureState<Scalar>::from_amplitudes(std::move(out));
}

template <typename Scalar>
PureState<Scalar> apply_cnot(const PureState<Scalar>& state, const CnotGate& gate,
                             BarredControl semantics = BarredControl::kFlipQubit) {
  return apply_gate(state, Gate{gate}, semantics);
}

template <typename Scalar>
PureState<Scalar> apply_not(const PureState<Scalar>& state, std::size_t qubit) {
  return apply_gate(state, Gate{NotGate{qubit}});
}

template <typename Scalar>
PureState<Scalar> apply_program(const PureState<Scalar>& state, const CnotProgram& program,
                                BarredControl semantics = BarredControl::kFlipQubit) {
  for (const Gate& g : program.gates) validate(g, state.n_qubits());
  PureState<Scalar> current = state;
  for (const Gate& g : program.gates) current = apply_gate(current, g, semantics);
  return current;
}

}  // namespace qclone
