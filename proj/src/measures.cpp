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

#include "corrbath/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corrbath/errors.hpp"

namespace corrbath::measures {

namespace {

using linalg::Complex;

DenseMatrix spin_flip_yy() {
  DenseMatrix yy = DenseMatrix::Zero(4, 4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  return yy;
}

}  // namespace

double concurrence(const DenseMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw ShapeError("concurrence: expects a 4x4 two-qubit density matrix");
  }
  const DenseMatrix yy = spin_flip_yy();
  const DenseMatrix prod = rho * yy * rho.conjugate() * yy;
  auto eig = linalg::eig_general(prod, {.right_vectors = false});

  std::vector<double> roots;
  roots.reserve(4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    double v = eig.values(k).real();
    if (v < 0.0) {
      if (v < -1e-10) {
        throw NumericalQualityError(
            "concurrence: product eigenvalue " + std::to_string(v) +
            " below the -1e-10 clip window");
      }
      v = 0.0;
    }
    roots.push_back(std::sqrt(v));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

EntanglementCheck persistent_entanglement_check(
    const dynamics::BlochState& x) {
  EntanglementCheck out;
  out.lhs = 4.0 * std::abs(x.mc);
  const double s = 1.0 + 4.0 * x.mzz;
  const double radicand = s * s - 4.0 * x.mz * x.mz;
  if (radicand < 0.0) {
    out.radicand_negative = true;
    out.rhs = 0.0;
  } else {
    out.rhs = std::sqrt(radicand);
  }
  out.entangled = out.lhs > out.rhs;
  return out;
}

double von_neumann_entropy(const DenseMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw ShapeError("von_neumann_entropy: rho must be square");
  }
  auto eig = linalg::eig_hermitian(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const double p = eig.values(k);
    if (p <= 1e-12) {
      if (p < -1e-8) {
        throw NumericalQualityError(
            "von_neumann_entropy: eigenvalue " + std::to_string(p) +
            " is not a probability");
      }
      continue;
    }
    s -= p * std::log(p);
  }
  return s;
}

double purity(const DenseMatrix& rho) {
  return (rho * rho).trace().real();
}

MeasureRecord measure(const DenseMatrix& rho) {
  MeasureRecord rec;
  rec.concurrence = (rho.rows() == 4)
                        ? concurrence(rho)
                        : std::numeric_limits<double>::quiet_NaN();
  const auto x = dynamics::observables_from_density(rho);
  const auto check = persistent_entanglement_check(x);
  rec.persistent_lhs = check.lhs;
  rec.persistent_rhs = check.rhs;
  rec.entropy = von_neumann_entropy(rho);
  rec.purity = purity(rho);
  return rec;
}

}  // namespace corrbath::measures
