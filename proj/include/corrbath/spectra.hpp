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

#include "corrbath/liouvillian.hpp"
#include "corrbath/linalg.hpp"

namespace corrbath::spectra {

using linalg::DenseMatrix;
using linalg::DenseVector;

struct AnalyzeOptions {
  // Zero-cluster identification: |lambda| <= tol_abs + tol_rel * ||L||_1.
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  // Kernel extraction tolerance passed to null_space().
  double kernel_tol = 1e-10;
};

struct SpectrumReport {
  std::vector<linalg::Complex> eigenvalues;  // sorted by (Re, Im)
  std::vector<double> abs_sorted;            // |lambda| ascending, for audits
  int zero_mode_count = 0;
  double adr = 0.0;  // min |Re lambda| outside the zero cluster
  double gap = 0.0;  // synonym of adr
  double max_real_part = 0.0;
  std::vector<DenseMatrix> steady_states;  // trace-1 Hermitian, clipped
  std::vector<DenseVector> raw_kernel;     // null-space basis, unprocessed
  double tol_used = 0.0;
  double superop_one_norm = 0.0;
};

// Eigenvalue cloud, zero-mode degeneracy, asymptotic decay rate and
// physical steady states of an assembled generator. Near the critical
// point the kernel and the slowest mode blur; abs_sorted lets callers
// audit the cluster separation. Throws StructuralError when no zero mode
// exists at the tolerance (trace preservation is broken upstream).
SpectrumReport analyze(const liouvillian::LiouvillianBundle& bundle,
                       const AnalyzeOptions& opts = {});

struct AdrRow {
  double alpha = 0.0;
  double adr = 0.0;
};

// ADR across an alpha grid, tracking the kernel-adjacent mode: exactly one
// zero eigenvalue (the always-present steady state) is discarded per point,
// so on the critical branch the column itself decays to zero instead of
// jumping to the next cluster. This differs from SpectrumReport.adr, which
// excludes the whole zero cluster.
std::vector<AdrRow> adr_vs_alpha(const model::ModelSpec& spec_template,
                                 const std::vector<double>& alphas);

}  // namespace corrbath::spectra
