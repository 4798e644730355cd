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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace corrbath::model {

// Physical parameters of n non-interacting spins in a spatially-correlated
// bosonic bath. Units: hbar = k_B = 1; rates in units of r1 unless set
// otherwise. Zero temperature is the explicit sentinel beta = +infinity,
// so alpha = 1 and m0 = 1 hold exactly on the critical branch.
//
// Geometry mode (positions or uniform_separation, plus the bath lattice
// parameters) and direct override mode (alpha_override) are mutually
// exclusive in one run.
struct ModelSpec {
  int n_spins = 2;
  double omega0 = 1.0;       // Zeeman angular frequency
  double beta = 1.0;         // inverse temperature, may be +inf
  double bath_spacing = 1.0; // bath lattice spacing (omega)
  double bath_hopping = 1.0; // neighbor coupling of the bath chain (g_b)
  double r1 = 1.0;           // base relaxation rate, > 0
  std::vector<double> positions;            // 1-D spin coordinates
  std::optional<double> uniform_separation; // same distance for every pair
  std::optional<double> alpha_override;     // fixes alpha_ij for i != j
  double lamb_j0 = 0.0;
  double lamb_k0 = 0.0;

  // All violated constraints, empty when the spec is usable.
  std::vector<std::string> validate() const;
  bool geometry_mode() const { return !alpha_override.has_value(); }
};

// Rate constants entering the dissipator, closed with the detailed-balance
// split a0 = r1 (1 - m0)/2, b0 = r1 - a0, which is the unique split with
// a0 + b0 = r1 and m0 = (b0 - a0)/(b0 + a0).
struct RateSet {
  double a0 = 0.0;  // absorption rate A(0)
  double b0 = 0.0;  // emission rate B(0)
  double m0 = 0.0;  // equilibrium magnetization tanh(beta omega0 / 2)
  Eigen::MatrixXd alpha_matrix;  // unit diagonal, symmetric, entries in [0,1]
};

// Bath correlation length xi = 2 * bath_spacing * beta * bath_hopping;
// +inf at the T = 0 sentinel.
double correlation_length(const ModelSpec& spec);

// alpha_ij = exp(-|r_i - r_j| / xi); 1 on the diagonal; the override value
// for every off-diagonal pair when alpha_override is set.
double alpha_of(const ModelSpec& spec, int i, int j);

RateSet rates_from_spec(const ModelSpec& spec);

// diag((1+m0)/2, (1-m0)/2) per spin, tensored over n spins: the unique
// thermal fixed point of the uncorrelated dynamics.
Eigen::MatrixXcd thermal_product_state(const RateSet& rates, int n_spins);

}  // namespace corrbath::model
