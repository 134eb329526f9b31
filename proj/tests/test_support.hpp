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

// Shared generators and independent oracles for the test suites. Nothing in
// here calls the code paths it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

#include "qclone/gates.hpp"
#include "qclone/state.hpp"

namespace qclone::testing {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline PureState<double> random_state(std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(std::int64_t{1} << n);
  for (auto& z : v) z = Complex(g(rng()), g(rng()));
  return PureState<double>::normalized(v);
}

inline BlochAngles<double> random_bloch() {
  return BlochAngles<double>{std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi)};
}

/// Kronecker product of amplitude vectors through Eigen's unsupported module.
inline CVector kron_oracle(const CVector& a, const CVector& b) {
  CVector out = Eigen::kroneckerProduct(a, b);
  return out;
}

/// Partial trace by summing over all (i, j) pairs whose traced bits agree.
inline CMatrix partial_trace_oracle(const CMatrix& rho, std::size_t n, const std::vector<std::size_t>& keep) {
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [n](std::size_t index, std::size_t q) { return (index >> (n - 1 - q)) & 1U; };
  auto sub = [&](std::size_t index) {
    std::size_t s = 0;
    for (std::size_t q : keep) s = (s << 1) | bit(index, q);
    return s;
  };
  auto traced_equal = [&](std::size_t i, std::size_t j) {
    for (std::size_t q = 0; q < n; ++q) {
      bool kept = false;
      for (std::size_t k : keep) kept = kept || k == q;
      if (!kept && bit(i, q) != bit(j, q)) return false;
    }
    return true;
  };
  const auto dk = static_cast<Eigen::Index>(std::size_t{1} << keep.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (traced_equal(i, j)) {
        out(static_cast<Eigen::Index>(sub(i)), static_cast<Eigen::Index>(sub(j))) +=
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

/// Full 2^n x 2^n matrix of a single-qubit operator via Kronecker products.
inline CMatrix embed_single(const Eigen::Matrix2cd& op, std::size_t n, std::size_t qubit) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) {
    const CMatrix factor = q == qubit ? CMatrix(op) : CMatrix(CMatrix::Identity(2, 2));
    CMatrix next = Eigen::kroneckerProduct(out, factor);
    out = next;
  }
  return out;
}

/// Full matrix of a plain CNOT: |0><0|_c (x) I + |1><1|_c (x) X_t.
inline CMatrix cnot_matrix(std::size_t n, std::size_t control, std::size_t target) {
  Eigen::Matrix2cd p0, p1, x;
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  x << 0, 1, 1, 0;
  return embed_single(p0, n, control) + embed_single(p1, n, control) * embed_single(x, n, target);
}

inline Eigen::Matrix2cd rotation_matrix(double c, double s) {
  Eigen::Matrix2cd r;
  r << c, -s, s, c;
  return r;
}

/// f is affine over GF(2) iff f(a ^ b ^ c) == f(a) ^ f(b) ^ f(c) for all a, b, c.
template <typename F>
bool affine_oracle(F&& f, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (f(a ^ b ^ c) != (f(a) ^ f(b) ^ f(c))) return false;
      }
    }
  }
  return true;
}

/// Random program over n qubits with barred gates and NOTs mixed in.
inline CnotProgram random_program(std::size_t n, std::size_t length) {
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::bernoulli_distribution coin(0.3);
  CnotProgram p;
  for (std::size_t k = 0; k < length; ++k) {
    if (coin(rng()) && coin(rng())) {
      p.gates.emplace_back(NotGate{qubit(rng())});
      continue;
    }
    CnotGate g;
    g.control = qubit(rng());
    do {
      g.target = qubit(rng());
    } while (g.target == g.control);
    g.invert_target = coin(rng());
    g.invert_control = coin(rng());
    p.gates.emplace_back(g);
  }
  return p;
}

}  // namespace qclone::testing
