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

#include "corrbath/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corrbath/errors.hpp"

namespace corrbath::spectra {

namespace {

using linalg::Complex;

// Frobenius projection of a Hermitian seed onto the kernel span, promoted
// to a physical state. Returns an empty matrix when the projection is
// traceless (the seed has no weight on trace-carrying kernel directions).
DenseMatrix physical_kernel_state(const std::vector<DenseVector>& kernel,
                                  const DenseMatrix& seed) {
  const Eigen::Index d = seed.rows();
  DenseVector acc = DenseVector::Zero(d * d);
  const DenseVector s = linalg::vec(seed);
  for (const auto& v : kernel) acc += v * v.dot(s);
  DenseMatrix h = linalg::unvec(acc, d, d);
  h = 0.5 * (h + h.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr) < 1e-8) return {};
  h /= tr;
  auto eig = linalg::eig_hermitian(h);
  const double min_eig = eig.values.minCoeff();
  if (min_eig < -1e-8) {
    throw NumericalQualityError(
        "steady-state extraction: kernel state has eigenvalue " +
        std::to_string(min_eig) + " below the -1e-8 clip window");
  }
  if (min_eig < 0.0) {
    Eigen::VectorXd clipped = eig.values.cwiseMax(0.0);
    clipped /= clipped.sum();
    h = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  }
  return h;
}

}  // namespace

SpectrumReport analyze(const liouvillian::LiouvillianBundle& bundle,
                       const AnalyzeOptions& opts) {
  const DenseMatrix& l = bundle.superop;
  SpectrumReport report;
  report.superop_one_norm = linalg::one_norm(l);
  report.tol_used = opts.tol_abs + opts.tol_rel * report.superop_one_norm;

  auto eig = linalg::eig_general(l, {.right_vectors = false});
  report.eigenvalues.assign(eig.values.data(),
                            eig.values.data() + eig.values.size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });

  report.abs_sorted.reserve(report.eigenvalues.size());
  for (const auto& v : report.eigenvalues) {
    report.abs_sorted.push_back(std::abs(v));
  }
  std::sort(report.abs_sorted.begin(), report.abs_sorted.end());

  report.max_real_part = -std::numeric_limits<double>::infinity();
  double adr = std::numeric_limits<double>::infinity();
  for (const auto& v : report.eigenvalues) {
    report.max_real_part = std::max(report.max_real_part, v.real());
    if (std::abs(v) <= report.tol_used) {
      ++report.zero_mode_count;
    } else {
      adr = std::min(adr, std::abs(v.real()));
    }
  }
  report.adr = std::isinf(adr) ? 0.0 : adr;
  report.gap = report.adr;

  if (report.zero_mode_count < 1) {
    throw StructuralError(
        "analyze: no zero mode at tolerance; trace preservation is broken "
        "upstream");
  }

  report.raw_kernel = linalg::null_space(l, opts.kernel_tol);
  if (report.raw_kernel.empty()) {
    throw StructuralError(
        "analyze: empty kernel at tolerance; trace preservation is broken "
        "upstream");
  }

  // A degenerate kernel basis is rotation-ambiguous and raw basis vectors
  // need not be positive. Physical representatives come from projecting
  // canonical states (maximally mixed, then the computational projectors)
  // onto the kernel span.
  const Eigen::Index d = bundle.hilbert_dim();
  std::vector<DenseMatrix> seeds;
  seeds.push_back(DenseMatrix::Identity(d, d) / static_cast<double>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    DenseMatrix p = DenseMatrix::Zero(d, d);
    p(k, k) = 1.0;
    seeds.push_back(std::move(p));
  }
  for (const auto& seed : seeds) {
    if (report.steady_states.size() >= report.raw_kernel.size()) break;
    DenseMatrix h = physical_kernel_state(report.raw_kernel, seed);
    if (h.size() == 0) continue;
    bool duplicate = false;
    for (const auto& existing : report.steady_states) {
      if ((existing - h).norm() < 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) report.steady_states.push_back(std::move(h));
  }
  return report;
}

std::vector<AdrRow> adr_vs_alpha(const model::ModelSpec& spec_template,
                                 const std::vector<double>& alphas) {
  std::vector<AdrRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    model::ModelSpec spec = spec_template;
    spec.alpha_override = alpha;
    spec.positions.clear();
    spec.uniform_separation.reset();
    const auto bundle = liouvillian::assemble_liouvillian(spec);
    auto eig = linalg::eig_general(bundle.superop, {.right_vectors = false});

    Eigen::Index trace_mode = 0;
    for (Eigen::Index k = 1; k < eig.values.size(); ++k) {
      if (std::abs(eig.values(k)) < std::abs(eig.values(trace_mode))) {
        trace_mode = k;
      }
    }
    double adr = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      if (k == trace_mode) continue;
      adr = std::min(adr, std::abs(eig.values(k).real()));
    }
    rows.push_back({alpha, adr});
  }
  return rows;
}

}  // namespace corrbath::spectra
