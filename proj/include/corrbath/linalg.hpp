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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "corrbath/errors.hpp"

namespace corrbath::linalg {

// Dense complex matrices are the sole numerical carrier of the library.
// Storage is Eigen's default column-major layout, fixed once and used
// consistently everywhere; vectorization below is column-stacking, so
// vec() of a matrix is a plain reinterpretation of its storage.
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Hard cap of the dense superoperator path: 4^7 x 4^7.
inline constexpr Eigen::Index kMaxDim = 16384;

// Largest column sum of |a_ij| (the induced 1-norm).
double one_norm(const DenseMatrix& a);

// Throws ValidationError when any entry of `a` is NaN/Inf. Used at the
// boundaries where matrices enter from user data.
void require_finite(const DenseMatrix& a, const std::string& what);

// Column-stacking vectorization and its inverse.
DenseVector vec(const DenseMatrix& a);
DenseMatrix unvec(const DenseVector& v, Eigen::Index rows, Eigen::Index cols);

// Kronecker product. out((i*rb + k), (j*cb + l)) = a(i,j) * b(k,l).
// Throws CapacityError when the product dimension exceeds kMaxDim.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

struct EigOptions {
  bool right_vectors = true;
  bool left_vectors = false;
};

struct EigenSystem {
  DenseVector values;                 // one eigenvalue per matrix row
  std::optional<DenseMatrix> right;   // columns: A v = lambda v
  std::optional<DenseMatrix> left;    // columns: u^dag A = lambda u^dag
  double tol_used = 0.0;
};

// Full eigendecomposition of a general (non-Hermitian) complex matrix.
// Contract is the residual bound ||A v - lambda v|| <= tol * ||A||, not a
// particular algorithm. Throws ShapeError for non-square input and
// NumericalQualityError on solver non-convergence.
EigenSystem eig_general(const DenseMatrix& a, const EigOptions& opts = {});

// Eigendecomposition of a Hermitian matrix; `a` is symmetrized internally.
// Eigenvalues ascending, real.
struct HermitianEigenSystem {
  Eigen::VectorXd values;
  DenseMatrix vectors;
};
HermitianEigenSystem eig_hermitian(const DenseMatrix& a);

// Matrix exponential (scaling-and-squaring with Pade approximants).
DenseMatrix expm(const DenseMatrix& a);

// Orthonormal basis of { v : ||A v|| <= tol * ||A||_1 }, possibly empty.
std::vector<DenseVector> null_space(const DenseMatrix& a, double tol = 1e-10);

// Partial trace over the factors NOT listed in `keep`. `dims` are the
// subsystem dimensions in Kronecker order (first factor most significant),
// matching kron() above. Trace is preserved.
DenseMatrix partial_trace(const DenseMatrix& rho,
                          const std::vector<int>& keep,
                          const std::vector<Eigen::Index>& dims);

}  // namespace corrbath::linalg
