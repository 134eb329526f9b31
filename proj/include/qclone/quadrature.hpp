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

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qclone {

template <typename Scalar = double>
struct QuadratureRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

// Golub-Welsch: the nodes are the eigenvalues of the Jacobi matrix of the
// Legendre recurrence, the weights are 2 * (first eigenvector component)^2.
// Nodes are returned in ascending order on [-1, 1].
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(std::size_t n) {
  if (n == 0) throw std::domain_error("gauss_legendre: need at least one node");
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto size = static_cast<Eigen::Index>(n);
  Matrix jacobi = Matrix::Zero(size, size);
  for (Eigen::Index k = 1; k < size; ++k) {
    const Scalar kk = static_cast<Scalar>(k);
    const Scalar b = kk / std::sqrt(Scalar(4) * kk * kk - Scalar(1));
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);
  QuadratureRule<Scalar> rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = Scalar(2) * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace qclone
