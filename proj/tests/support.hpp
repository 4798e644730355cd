// Copyright 2026 the corrbath authors
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

#include <random>

#include "corrbath/linalg.hpp"

namespace corrbath::test {

using linalg::Complex;
using linalg::DenseMatrix;
using linalg::DenseVector;

inline DenseMatrix pauli_x() {
  DenseMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline DenseMatrix pauli_y() {
  DenseMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline DenseMatrix pauli_z() {
  DenseMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline DenseMatrix identity2() { return DenseMatrix::Identity(2, 2); }

inline DenseVector singlet_vector() {
  DenseVector v = DenseVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

inline DenseMatrix singlet_state() {
  const DenseVector v = singlet_vector();
  return v * v.adjoint();
}

inline DenseMatrix swap_gate() {
  DenseMatrix s = DenseMatrix::Zero(4, 4);
  s(0, 0) = 1;
  s(1, 2) = 1;
  s(2, 1) = 1;
  s(3, 3) = 1;
  return s;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows,
                                 Eigen::Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

inline DenseMatrix random_density(std::mt19937_64& rng, Eigen::Index d) {
  const DenseMatrix g = random_matrix(rng, d, d);
  DenseMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

// Symmetrized under site exchange: still a valid two-qubit state.
inline DenseMatrix random_symmetric_density(std::mt19937_64& rng) {
  const DenseMatrix rho = random_density(rng, 4);
  const DenseMatrix s = swap_gate();
  return 0.5 * (rho + s * rho * s);
}

inline DenseMatrix random_unitary(std::mt19937_64& rng, Eigen::Index d) {
  const DenseMatrix g = random_matrix(rng, d, d);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ();
  // Fix the phase so the distribution is Haar-like.
  const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    q.col(k) *= r(k, k) / std::abs(r(k, k));
  }
  return q;
}

}  // namespace corrbath::test
