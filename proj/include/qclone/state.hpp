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

// Dense pure states and density matrices over a handful of qubits.
//
// Basis convention: the ket |q0 q1 ... q(n-1)> lives at index
// sum_i q_i * 2^(n-1-i), i.e. qubit 0 is the most significant bit and is the
// leftmost symbol of a ket label.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/quadrature.hpp"

namespace qclone {

namespace detail {

inline std::size_t qubits_for_dim(std::size_t dim, const char* who) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::domain_error(std::string(who) + ": dimension must be a power of two >= 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (n > kMaxQubits) {
    throw std::domain_error(std::string(who) + ": more than " + std::to_string(kMaxQubits) + " qubits");
  }
  return n;
}

inline std::size_t bit_position(std::size_t n_qubits, std::size_t qubit) { return n_qubits - 1 - qubit; }

}  // namespace detail

template <typename Scalar = double>
class PureState {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// Computational basis state |index> on n qubits.
  static PureState basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) throw std::domain_error("basis: bad qubit count");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) throw std::domain_error("basis: index out of range");
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
    amps(static_cast<Eigen::Index>(index)) = Complex(1);
    return PureState(n_qubits, std::move(amps));
  }

  /// Wraps an already normalized amplitude vector; throws std::domain_error
  /// if the norm is off by more than the exact tolerance.
  static PureState from_amplitudes(Vector amps) {
    const std::size_t n = detail::qubits_for_dim(static_cast<std::size_t>(amps.size()), "PureState");
    if (!amps.allFinite()) throw std::domain_error("PureState: non-finite amplitude");
    const Scalar norm2 = amps.squaredNorm();
    if (std::abs(norm2 - Scalar(1)) > Scalar(kExactTolerance)) {
      throw std::domain_error("PureState: amplitudes not normalized");
    }
    return PureState(n, std::move(amps));
  }

  /// Rescales an arbitrary nonzero vector to unit norm.
  static PureState normalized(Vector amps) {
    const Scalar norm = amps.norm();
    if (!(norm > Scalar(0)) || !std::isfinite(norm)) throw std::domain_error("PureState: zero or non-finite vector");
    amps /= norm;
    return from_amplitudes(std::move(amps));
  }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t k) const { return amps_(static_cast<Eigen::Index>(k)); }

 private:
  PureState(std::size_t n, Vector amps) : n_qubits_(n), amps_(std::move(amps)) {}

  std::size_t n_qubits_;
  Vector amps_;
};

template <typename Scalar = double>
class DensityMatrix {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  /// Validates Hermiticity, unit trace and positivity (eigenvalues >= -tol).
  static DensityMatrix from_matrix(Matrix m) {
    if (m.rows() != m.cols()) throw std::domain_error("DensityMatrix: not square");
    const std::size_t n = detail::qubits_for_dim(static_cast<std::size_t>(m.rows()), "DensityMatrix");
    const Scalar tol(kExactTolerance);
    if (!m.allFinite()) throw std::domain_error("DensityMatrix: non-finite entry");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) throw std::domain_error("DensityMatrix: not Hermitian");
    if (std::abs(m.trace() - Complex(1)) > tol) throw std::domain_error("DensityMatrix: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) throw std::domain_error("DensityMatrix: not positive semidefinite");
    return DensityMatrix(n, std::move(m));
  }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  DensityMatrix(std::size_t n, Matrix m) : n_qubits_(n), m_(std::move(m)) {}

  std::size_t n_qubits_;
  Matrix m_;
};

/// Polar and azimuthal Bloch angles; theta in [0, pi], phi in [0, 2 pi).
template <typename Scalar = double>
struct BlochAngles {
  Scalar theta{};
  Scalar phi{};

  static BlochAngles checked(Scalar theta, Scalar phi) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    if (!(theta >= Scalar(0) && theta <= pi)) throw std::domain_error("BlochAngles: theta outside [0, pi]");
    if (!(phi >= Scalar(0) && phi < Scalar(2) * pi)) throw std::domain_error("BlochAngles: phi outside [0, 2pi)");
    return BlochAngles{theta, phi};
  }
};

template <typename Scalar>
std::complex<Scalar> inner(const PureState<Scalar>& bra, const PureState<Scalar>& ket) {
  if (bra.dim() != ket.dim()) throw std::domain_error("inner: dimension mismatch");
  return bra.amplitudes().dot(ket.amplitudes());
}

/// States are considered equal when |<a|b>| >= 1 - tol.
template <typename Scalar>
bool equal_up_to_phase(const PureState<Scalar>& a, const PureState<Scalar>& b, Scalar tol = Scalar(kExactTolerance)) {
  return a.dim() == b.dim() && std::abs(inner(a, b)) >= Scalar(1) - tol;
}

/// max_k |actual_k - e^{i g} expected_k| with g chosen to align the phases.
template <typename Scalar>
Scalar phase_aligned_max_error(const PureState<Scalar>& actual, const PureState<Scalar>& expected) {
  if (actual.dim() != expected.dim()) throw std::domain_error("phase_aligned_max_error: dimension mismatch");
  const std::complex<Scalar> overlap = inner(expected, actual);
  const std::complex<Scalar> phase =
      std::abs(overlap) > Scalar(0) ? overlap / std::abs(overlap) : std::complex<Scalar>(1);
  return (actual.amplitudes() - phase * expected.amplitudes()).cwiseAbs().maxCoeff();
}

/// alpha|0> + beta|1> with alpha = e^{i phi} sin(theta/2), beta = cos(theta/2).
template <typename Scalar>
PureState<Scalar> bloch_state(const BlochAngles<Scalar>& angles) {
  const auto checked = BlochAngles<Scalar>::checked(angles.theta, angles.phi);
  typename PureState<Scalar>::Vector amps(2);
  amps(0) = std::polar(std::sin(checked.theta / Scalar(2)), checked.phi);
  amps(1) = std::complex<Scalar>(std::cos(checked.theta / Scalar(2)));
  return PureState<Scalar>::normalized(std::move(amps));
}

/// alpha*|1> - beta*|0>; orthogonal to alpha|0> + beta|1> for complex alpha too.
template <typename Scalar>
PureState<Scalar> orthogonal_state(const PureState<Scalar>& psi) {
  if (psi.n_qubits() != 1) throw std::domain_error("orthogonal_state: expects one qubit");
  typename PureState<Scalar>::Vector amps(2);
  amps(0) = -std::conj(psi[1]);
  amps(1) = std::conj(psi[0]);
  return PureState<Scalar>::from_amplitudes(std::move(amps));
}

/// a (x) b, with the qubits of a placed first (most significant).
template <typename Scalar>
PureState<Scalar> tensor(const PureState<Scalar>& a, const PureState<Scalar>& b) {
  if (a.n_qubits() + b.n_qubits() > kMaxQubits) throw std::domain_error("tensor: register too large");
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  typename PureState<Scalar>::Vector amps(da * db);
  for (Eigen::Index i = 0; i < da; ++i) amps.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  return PureState<Scalar>::from_amplitudes(std::move(amps));
}

template <typename Scalar>
DensityMatrix<Scalar> density_of(const PureState<Scalar>& psi) {
  return DensityMatrix<Scalar>::from_matrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

/// Entrywise complex conjugate (equal to the transpose for a Hermitian matrix).
template <typename Scalar>
DensityMatrix<Scalar> complex_conjugate(const DensityMatrix<Scalar>& rho) {
  return DensityMatrix<Scalar>::from_matrix(rho.matrix().conjugate());
}

/// Reduced state on the qubits in `keep`; the k-th qubit of the result is
/// keep[k]. Indices must be distinct and in range.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& rho, std::span<const std::size_t> keep) {
  const std::size_t n = rho.n_qubits();
  if (keep.empty()) throw std::domain_error("partial_trace: nothing to keep");
  std::vector<bool> kept(n, false);
  for (std::size_t q : keep) {
    if (q >= n) throw std::domain_error("partial_trace: qubit index out of range");
    if (kept[q]) throw std::domain_error("partial_trace: duplicate qubit index");
    kept[q] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (!kept[q]) traced.push_back(q);
  }

  const std::size_t nk = keep.size();
  // Scatter the bits of a kept / traced sub-index into a full register index.
  auto scatter = [n](std::size_t sub, std::span<const std::size_t> qubits) {
    std::size_t full = 0;
    const std::size_t m = qubits.size();
    for (std::size_t k = 0; k < m; ++k) {
      if ((sub >> (m - 1 - k)) & 1U) full |= std::size_t{1} << detail::bit_position(n, qubits[k]);
    }
    return full;
  };

  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t dt = std::size_t{1} << traced.size();
  std::vector<std::size_t> keep_offsets(dk), trace_offsets(dt);
  for (std::size_t s = 0; s < dk; ++s) keep_offsets[s] = scatter(s, keep);
  for (std::size_t s = 0; s < dt; ++s) trace_offsets[s] = scatter(s, traced);

  using Matrix = typename DensityMatrix<Scalar>::Matrix;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const Matrix& m = rho.matrix();
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = 0; c < dk; ++c) {
      std::complex<Scalar> acc(0);
      for (std::size_t t : trace_offsets) {
        acc += m(static_cast<Eigen::Index>(keep_offsets[r] | t), static_cast<Eigen::Index>(keep_offsets[c] | t));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix<Scalar>::from_matrix(std::move(out));
}

template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// <psi|rho|psi>.
template <typename Scalar>
Scalar state_fidelity(const DensityMatrix<Scalar>& rho, const PureState<Scalar>& psi) {
  if (rho.dim() != psi.dim()) throw std::domain_error("state_fidelity: dimension mismatch");
  return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

/// Average of <psi|f(psi)|psi> over the Bloch sphere:
///   (1/4pi) int_0^{2pi} dphi int_0^pi <psi|rho(theta,phi)|psi> sin(theta) dtheta.
/// Gauss-Legendre in cos(theta) with n_theta nodes, periodic trapezoid in phi
/// with n_phi points.
template <typename ReducedStateFn>
auto average_fidelity(ReducedStateFn&& reduced_state_fn, std::size_t n_theta, std::size_t n_phi) {
  using Result = std::invoke_result_t<ReducedStateFn&, const BlochAngles<double>&>;
  using Scalar = typename std::remove_cvref_t<Result>::Complex::value_type;
  if (n_theta < 2 || n_phi < 2) throw std::domain_error("average_fidelity: grid must be at least 2x2");

  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const auto rule = gauss_legendre<Scalar>(n_theta);
  const Scalar dphi = Scalar(2) * pi / static_cast<Scalar>(n_phi);
  Scalar total(0);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const Scalar theta = std::acos(std::clamp(rule.nodes(static_cast<Eigen::Index>(i)), Scalar(-1), Scalar(1)));
    Scalar ring(0);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const BlochAngles<Scalar> angles{theta, dphi * static_cast<Scalar>(j)};
      ring += state_fidelity(reduced_state_fn(angles), bloch_state(angles));
    }
    total += rule.weights(static_cast<Eigen::Index>(i)) * ring * dphi;
  }
  return total / (Scalar(4) * pi);
}

}  // namespace qclone
