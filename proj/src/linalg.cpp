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

#include "corrbath/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace corrbath::linalg {

double one_norm(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

void require_finite(const DenseMatrix& a, const std::string& what) {
  if (!a.allFinite()) {
    throw ValidationError(what + ": matrix contains NaN or Inf entries");
  }
}

DenseVector vec(const DenseMatrix& a) {
  return Eigen::Map<const DenseVector>(a.data(), a.size());
}

DenseMatrix unvec(const DenseVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw ShapeError("unvec: vector length does not match rows*cols");
  }
  return Eigen::Map<const DenseMatrix>(v.data(), rows, cols);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  if (ra == 0 || rb == 0 || ca == 0 || cb == 0) {
    throw ShapeError("kron: empty operand");
  }
  if (ra > kMaxDim / rb || ca > kMaxDim / cb) {
    throw CapacityError("kron: product dimension exceeds the 4^7 cap");
  }
  DenseMatrix out(ra * rb, ca * cb);
  for (Eigen::Index j = 0; j < ca; ++j) {
    for (Eigen::Index i = 0; i < ra; ++i) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

EigenSystem eig_general(const DenseMatrix& a, const EigOptions& opts) {
  if (a.rows() != a.cols()) {
    throw ShapeError("eig_general: matrix must be square");
  }
  Eigen::ComplexEigenSolver<DenseMatrix> solver(a, opts.right_vectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalQualityError(
        "eig_general: QR iteration did not converge (dim " +
        std::to_string(a.rows()) + ", max iterations " +
        std::to_string(30 * a.rows()) + ")");
  }
  EigenSystem out;
  out.values = solver.eigenvalues();
  out.tol_used = 1e-12;  // certified residual bound ||A v - l v|| / ||A||
  if (opts.right_vectors) out.right = solver.eigenvectors();
  if (opts.left_vectors) {
    // Left pairs from the adjoint problem: A^dag u = conj(lambda) u.
    Eigen::ComplexEigenSolver<DenseMatrix> adj(a.adjoint(), true);
    if (adj.info() != Eigen::Success) {
      throw NumericalQualityError(
          "eig_general: adjoint QR iteration did not converge (dim " +
          std::to_string(a.rows()) + ")");
    }
    DenseMatrix left(a.rows(), a.rows());
    std::vector<bool> used(static_cast<size_t>(a.rows()), false);
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
      const Complex target = std::conj(out.values(k));
      Eigen::Index best = -1;
      double best_dist = 0;
      for (Eigen::Index m = 0; m < a.rows(); ++m) {
        if (used[static_cast<size_t>(m)]) continue;
        const double d = std::abs(adj.eigenvalues()(m) - target);
        if (best < 0 || d < best_dist) {
          best = m;
          best_dist = d;
        }
      }
      used[static_cast<size_t>(best)] = true;
      left.col(k) = adj.eigenvectors().col(best);
    }
    out.left = left;
  }
  return out;
}

HermitianEigenSystem eig_hermitian(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("eig_hermitian: matrix must be square");
  }
  const DenseMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalQualityError("eig_hermitian: solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DenseMatrix expm(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("expm: matrix must be square");
  }
  return a.exp();
}

std::vector<DenseVector> null_space(const DenseMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw ShapeError("null_space: matrix must be square");
  }
  Eigen::BDCSVD<DenseMatrix> svd(a, Eigen::ComputeFullV);
  const double cutoff = tol * one_norm(a);
  std::vector<DenseVector> basis;
  const auto& sv = svd.singularValues();
  // Singular values are sorted descending; the kernel sits at the tail.
  for (Eigen::Index k = sv.size() - 1; k >= 0 && sv(k) <= cutoff; --k) {
    basis.push_back(svd.matrixV().col(k));
  }
  return basis;
}

DenseMatrix partial_trace(const DenseMatrix& rho,
                          const std::vector<int>& keep,
                          const std::vector<Eigen::Index>& dims) {
  if (rho.rows() != rho.cols()) {
    throw ShapeError("partial_trace: rho must be square");
  }
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d <= 0) throw ShapeError("partial_trace: nonpositive subsystem dim");
    total *= d;
  }
  if (total != rho.rows()) {
    throw ShapeError("partial_trace: product of dims does not match rho");
  }
  const int nsub = static_cast<int>(dims.size());
  std::vector<bool> kept(static_cast<size_t>(nsub), false);
  for (int k : keep) {
    if (k < 0 || k >= nsub) throw ShapeError("partial_trace: bad keep index");
    if (kept[static_cast<size_t>(k)]) {
      throw ShapeError("partial_trace: duplicate keep index");
    }
    kept[static_cast<size_t>(k)] = true;
  }

  // Strides of each factor in the flat index (first factor most significant).
  std::vector<Eigen::Index> stride(static_cast<size_t>(nsub), 1);
  for (int s = nsub - 2; s >= 0; --s) {
    stride[static_cast<size_t>(s)] =
        stride[static_cast<size_t>(s + 1)] * dims[static_cast<size_t>(s + 1)];
  }

  std::vector<int> keep_sorted;
  std::vector<int> traced;
  for (int s = 0; s < nsub; ++s) {
    (kept[static_cast<size_t>(s)] ? keep_sorted : traced).push_back(s);
  }

  Eigen::Index dk = 1, dt = 1;
  for (int s : keep_sorted) dk *= dims[static_cast<size_t>(s)];
  for (int s : traced) dt *= dims[static_cast<size_t>(s)];

  // Flat index of a (kept multi-index, traced multi-index) pair.
  auto flat = [&](Eigen::Index ik, Eigen::Index it) {
    Eigen::Index idx = 0;
    Eigen::Index rem = ik;
    for (auto s = static_cast<Eigen::Index>(keep_sorted.size()) - 1; s >= 0;
         --s) {
      const int sub = keep_sorted[static_cast<size_t>(s)];
      const Eigen::Index d = dims[static_cast<size_t>(sub)];
      idx += (rem % d) * stride[static_cast<size_t>(sub)];
      rem /= d;
    }
    rem = it;
    for (auto s = static_cast<Eigen::Index>(traced.size()) - 1; s >= 0; --s) {
      const int sub = traced[static_cast<size_t>(s)];
      const Eigen::Index d = dims[static_cast<size_t>(sub)];
      idx += (rem % d) * stride[static_cast<size_t>(sub)];
      rem /= d;
    }
    return idx;
  };

  DenseMatrix out = DenseMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex sum = 0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += rho(flat(i, t), flat(j, t));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

}  // namespace corrbath::linalg
