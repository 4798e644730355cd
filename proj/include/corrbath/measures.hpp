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

#include "corrbath/dynamics.hpp"
#include "corrbath/linalg.hpp"

namespace corrbath::measures {

using linalg::DenseMatrix;

// Wootters concurrence of a two-qubit density matrix:
// max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy). Product eigenvalues in
// [-1e-10, 0) are clipped to zero; anything lower raises
// NumericalQualityError. Throws ShapeError unless rho is 4x4.
double concurrence(const DenseMatrix& rho);

struct EntanglementCheck {
  double lhs = 0.0;  // 4 |mc|
  double rhs = 0.0;  // sqrt((1 + 4 mzz)^2 - 4 mz^2)
  bool entangled = false;
  // Set when the radicand is negative (parameters outside the symmetric
  // sector's physical region); rhs is then reported as 0, not clamped
  // silently.
  bool radicand_negative = false;
};

// Steady-state entanglement witness 4 |mc| > sqrt((1 + 4 mzz)^2 - 4 mz^2).
EntanglementCheck persistent_entanglement_check(const dynamics::BlochState& x);

// S = -Tr(rho ln rho), natural log; eigenvalues below 1e-12 count as zero.
double von_neumann_entropy(const DenseMatrix& rho);

double purity(const DenseMatrix& rho);

struct MeasureRecord {
  double concurrence = 0.0;
  double persistent_lhs = 0.0;
  double persistent_rhs = 0.0;
  double entropy = 0.0;
  double purity = 0.0;
};

// Bundle of all measures for one state (concurrence is NaN unless the
// state is two-qubit).
MeasureRecord measure(const DenseMatrix& rho);

}  // namespace corrbath::measures
