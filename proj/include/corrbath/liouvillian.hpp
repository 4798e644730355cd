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

#include <vector>

#include "corrbath/linalg.hpp"
#include "corrbath/model.hpp"

namespace corrbath::liouvillian {

using linalg::DenseMatrix;

// Per-site ladder and sigma_z operators embedded in the 2^n dimensional
// product space (I x ... x sigma x ... x I).
//
// Basis convention, fixed project-wide: sigma_z = diag(1, -1), |0> is the
// first basis vector, raise = |0><1|. Product basis indices follow kron
// order with site 0 most significant, so |01> for n = 2 has index 1.
struct SiteOperators {
  int n_spins = 0;
  std::vector<DenseMatrix> raise;
  std::vector<DenseMatrix> lower;
  std::vector<DenseMatrix> sz;
};

// Assembled generator of the master equation in column-stacking
// vectorization: d vec(rho)/dt = superop * vec(rho), with
// X rho Y  ->  (Y^T kron X) vec(rho).
struct LiouvillianBundle {
  model::ModelSpec spec;
  model::RateSet rates;
  DenseMatrix superop;           // 4^n x 4^n
  DenseMatrix lamb;              // 2^n x 2^n, Hermitian
  Eigen::MatrixXd a_matrix;      // alpha_ij * a0
  Eigen::MatrixXd b_matrix;      // alpha_ij * b0
  double lamb_antihermitian_residual = 0.0;

  Eigen::Index hilbert_dim() const { return lamb.rows(); }
};

// Throws CapacityError for n outside [1, 7].
SiteOperators build_site_operators(int n_spins);

// Second-order shift Hamiltonian
//   sum_ij ( J_ij raise_i lower_j - K_ij lower_i raise_j ),
// J_ij = j0 alpha_ij, K_ij = k0 alpha_ij, symmetrized to (H + H^dag)/2.
// The anti-Hermitian residual norm is returned through `residual` when
// non-null; for real j0, k0 it vanishes identically.
DenseMatrix build_lamb_shift(const SiteOperators& ops,
                             const model::RateSet& rates, double j0, double k0,
                             double* residual = nullptr);

// Vectorized dissipator
//   sum_ij  B_ij (2 raise_i rho lower_j - {lower_j raise_i, rho})
//         + A_ij (2 lower_i rho raise_j - {raise_j lower_i, rho}),
// with A_ij = alpha_ij a0 and B_ij = alpha_ij b0. The emission-dominated
// channel b0 multiplies the jumps that pump sigma_z toward +1, which is the
// unique role assignment under which the reduced Bloch system of
// corrbath::dynamics is the exact projection of this generator (see
// tests/test_dynamics.cpp for the cross-validation).
DenseMatrix build_dissipator_superop(const SiteOperators& ops,
                                     const model::RateSet& rates);

LiouvillianBundle assemble_liouvillian(const model::ModelSpec& spec);

// Commutator norms of the generator against two conjugation symmetries:
// the exchange of site labels (reversal permutation, any n) and, for
// n = 2, the generator of conjugation by exp(-i S t) with
// S = xx + yy + zz. Norms are Frobenius, reported both raw and relative
// to ||superop||.
struct SymmetryReport {
  double swap_commutator = 0.0;
  double swap_commutator_rel = 0.0;
  double s_commutator = 0.0;     // NaN when n != 2
  double s_commutator_rel = 0.0; // NaN when n != 2
  double superop_norm = 0.0;
};
SymmetryReport check_weak_symmetry(const LiouvillianBundle& bundle);

}  // namespace corrbath::liouvillian
