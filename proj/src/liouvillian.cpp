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

#include "corrbath/liouvillian.hpp"

#include <cmath>
#include <limits>

#include "corrbath/errors.hpp"

namespace corrbath::liouvillian {

namespace {

using linalg::Complex;
using linalg::kron;

DenseMatrix identity(Eigen::Index d) { return DenseMatrix::Identity(d, d); }

DenseMatrix pauli(char which) {
  DenseMatrix m(2, 2);
  m.setZero();
  switch (which) {
    case 'x': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'y': m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1); break;
    case 'z': m(0, 0) = 1; m(1, 1) = -1; break;
    case '+': m(0, 1) = 1; break;
    case '-': m(1, 0) = 1; break;
    default: throw StructuralError("unknown Pauli tag");
  }
  return m;
}

DenseMatrix embed(const DenseMatrix& op, int site, int n) {
  DenseMatrix out(1, 1);
  out(0, 0) = 1;
  for (int m = 0; m < n; ++m) {
    out = kron(out, m == site ? op : identity(2));
  }
  return out;
}

// X rho Y  ->  (Y^T kron X) vec(rho)  under column stacking.
DenseMatrix sandwich(const DenseMatrix& x, const DenseMatrix& y) {
  return kron(y.transpose(), x);
}

DenseMatrix left_mul(const DenseMatrix& x) {
  return kron(identity(x.rows()), x);
}

DenseMatrix right_mul(const DenseMatrix& y) {
  return kron(y.transpose(), identity(y.rows()));
}

}  // namespace

SiteOperators build_site_operators(int n_spins) {
  if (n_spins < 1 || n_spins > 7) {
    throw CapacityError("build_site_operators: n_spins must be in [1, 7]");
  }
  SiteOperators ops;
  ops.n_spins = n_spins;
  const DenseMatrix sp = pauli('+');
  const DenseMatrix sm = pauli('-');
  const DenseMatrix sz = pauli('z');
  for (int m = 0; m < n_spins; ++m) {
    ops.raise.push_back(embed(sp, m, n_spins));
    ops.lower.push_back(embed(sm, m, n_spins));
    ops.sz.push_back(embed(sz, m, n_spins));
  }
  return ops;
}

DenseMatrix build_lamb_shift(const SiteOperators& ops,
                             const model::RateSet& rates, double j0, double k0,
                             double* residual) {
  const Eigen::Index d = ops.raise[0].rows();
  DenseMatrix h = DenseMatrix::Zero(d, d);
  const int n = ops.n_spins;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double alpha = rates.alpha_matrix(i, j);
      if (j0 != 0.0) {
        h += (j0 * alpha) *
             (ops.raise[static_cast<size_t>(i)] *
              ops.lower[static_cast<size_t>(j)]);
      }
      if (k0 != 0.0) {
        h -= (k0 * alpha) *
             (ops.lower[static_cast<size_t>(i)] *
              ops.raise[static_cast<size_t>(j)]);
      }
    }
  }
  const DenseMatrix anti = 0.5 * (h - h.adjoint());
  if (residual) *residual = anti.norm();
  return 0.5 * (h + h.adjoint());
}

DenseMatrix build_dissipator_superop(const SiteOperators& ops,
                                     const model::RateSet& rates) {
  const int n = ops.n_spins;
  const Eigen::Index d = ops.raise[0].rows();
  DenseMatrix superop = DenseMatrix::Zero(d * d, d * d);

  // Jump channels, aggregated per left operator so the 4^n-sized Kronecker
  // accumulations number 2n instead of 2n^2.
  DenseMatrix qb = DenseMatrix::Zero(d, d);  // sum_ij B_ij lower_j raise_i
  DenseMatrix qa = DenseMatrix::Zero(d, d);  // sum_ij A_ij raise_j lower_i
  for (int i = 0; i < n; ++i) {
    DenseMatrix tb = DenseMatrix::Zero(d, d);
    DenseMatrix ta = DenseMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      const double b = rates.b0 * rates.alpha_matrix(i, j);
      const double a = rates.a0 * rates.alpha_matrix(i, j);
      tb += b * ops.lower[static_cast<size_t>(j)];
      ta += a * ops.raise[static_cast<size_t>(j)];
    }
    superop += 2.0 * sandwich(ops.raise[static_cast<size_t>(i)], tb);
    superop += 2.0 * sandwich(ops.lower[static_cast<size_t>(i)], ta);
    qb += tb * ops.raise[static_cast<size_t>(i)];
    qa += ta * ops.lower[static_cast<size_t>(i)];
  }
  superop -= left_mul(qb) + right_mul(qb);
  superop -= left_mul(qa) + right_mul(qa);
  return superop;
}

LiouvillianBundle assemble_liouvillian(const model::ModelSpec& spec) {
  auto errs = spec.validate();
  if (!errs.empty()) throw ValidationError(std::move(errs));

  LiouvillianBundle bundle;
  bundle.spec = spec;
  bundle.rates = model::rates_from_spec(spec);

  const SiteOperators ops = build_site_operators(spec.n_spins);
  bundle.lamb = build_lamb_shift(ops, bundle.rates, spec.lamb_j0, spec.lamb_k0,
                                 &bundle.lamb_antihermitian_residual);
  bundle.superop = build_dissipator_superop(ops, bundle.rates);
  if (spec.lamb_j0 != 0.0 || spec.lamb_k0 != 0.0) {
    const Complex mi(0, -1);
    bundle.superop += mi * (left_mul(bundle.lamb) - right_mul(bundle.lamb));
  }

  bundle.a_matrix = bundle.rates.a0 * bundle.rates.alpha_matrix;
  bundle.b_matrix = bundle.rates.b0 * bundle.rates.alpha_matrix;
  return bundle;
}

SymmetryReport check_weak_symmetry(const LiouvillianBundle& bundle) {
  const int n = bundle.spec.n_spins;
  const Eigen::Index d = bundle.hilbert_dim();
  SymmetryReport report;
  report.superop_norm = bundle.superop.norm();

  // Reversal permutation of the site labels; it preserves every pair
  // distance in both uniform and 1-D chain geometries.
  DenseMatrix perm = DenseMatrix::Zero(d, d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    Eigen::Index rev = 0;
    for (int s = 0; s < n; ++s) {
      const Eigen::Index bit = (idx >> (n - 1 - s)) & 1;
      rev |= bit << s;
    }
    perm(rev, idx) = 1;
  }
  const DenseMatrix w = kron(perm.transpose(), perm);
  report.swap_commutator = (bundle.superop * w - w * bundle.superop).norm();
  report.swap_commutator_rel = report.swap_commutator / report.superop_norm;

  if (n == 2) {
    DenseMatrix s = DenseMatrix::Zero(d, d);
    for (char c : {'x', 'y', 'z'}) {
      const DenseMatrix p = pauli(c);
      s += kron(p, p);
    }
    const Complex mi(0, -1);
    const DenseMatrix gen = mi * (left_mul(s) - right_mul(s));
    report.s_commutator = (bundle.superop * gen - gen * bundle.superop).norm();
    report.s_commutator_rel = report.s_commutator / report.superop_norm;
  } else {
    report.s_commutator = std::numeric_limits<double>::quiet_NaN();
    report.s_commutator_rel = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace corrbath::liouvillian
