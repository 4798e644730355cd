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

#include <string>
#include <vector>

#include "corrbath/liouvillian.hpp"
#include "corrbath/linalg.hpp"
#include "corrbath/model.hpp"

namespace corrbath::dynamics {

using linalg::DenseMatrix;

// The symmetric observable triple. For two spins:
//   mz  = <sz x I + I x sz> / 2
//   mzz = <sz x sz> / 4
//   mc  = <sx x sx + sy x sy> / 4
// For n > 2 the same quantities averaged over sites / pairs; zero for the
// pair entries at n = 1.
struct BlochState {
  double mz = 0.0;
  double mzz = 0.0;
  double mc = 0.0;
};

// Checks the operator-norm bounds |mz| <= 1, |mzz| <= 1/4, |mc| <= 1/2
// (small slack for roundoff); returns the violated checks.
std::vector<std::string> validate_bloch(const BlochState& x);

BlochState observables_from_density(const DenseMatrix& rho);

struct StepDiagnostics {
  double trace_defect = 0.0;
  double herm_defect = 0.0;
  double min_eig = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DenseMatrix> states;       // full path
  std::vector<BlochState> bloch_states;  // reduced path
  std::vector<StepDiagnostics> diagnostics;  // full path only
  std::string method;
};

struct EvolveOptions {
  // Internal propagator step; 0 means the default 0.01 / r1. Uniform grids
  // cost a single matrix exponential, reused across all intervals.
  double dt = 0.0;
};

// Full master-equation propagation: rho(t) = unvec(expm(L t) vec(rho0)),
// stepped across the grid with a cached fixed-step propagator.
// rho0 must be trace-one, Hermitian and positive within 1e-10, otherwise a
// ValidationError lists every violated check.
Trajectory evolve_full(const liouvillian::LiouvillianBundle& bundle,
                       const DenseMatrix& rho0,
                       const std::vector<double>& times,
                       const EvolveOptions& opts = {});

// Generator and drive of the reduced three-variable system,
//   d/dt (mz, mzz, mc) = A (mz, mzz, mc) + (2 m0 r1, 0, 0),
//   A = r1 [ -2      0      4 m0 a ]
//          [ m0     -4      2 a    ]
//          [ -m0 a   4 a   -2      ].
Eigen::Matrix3d bloch_generator(const model::RateSet& rates, double alpha);
Eigen::Vector3d bloch_drive(const model::RateSet& rates);

// Exact solution of the affine system by matrix exponential: via the fixed
// point when A is invertible, via the augmented 4x4 embedding when it is
// singular (alpha = 1, where det A = -16 r1^3 (1 - alpha^2) vanishes).
Trajectory evolve_bloch(const model::RateSet& rates, double alpha,
                        const BlochState& x0, const std::vector<double>& times);

// Long-time limit: (m0, m0^2/4, 0) for alpha < 1; on the critical branch
// alpha = 1 the initial-value-dependent point with F = mzz(0) + mc(0):
//   mz = m0 (4F + 3) / (m0^2 + 3),
//   mc = (4F - m0^2) / (2 (m0^2 + 3)),
//   mzz = F - mc.
BlochState bloch_steady_state(const model::RateSet& rates, double alpha,
                              const BlochState& x0);

enum class InitialStatePreset {
  kAllUp,
  kAllDown,
  kSingletPairs,
  kMaximallyMixed,
  kThermal,
  kProductBloch,
};

// Density matrix of a preset for n spins. kThermal needs `rates`;
// kProductBloch needs one (x, y, z) Bloch vector per spin with norm <= 1.
// kSingletPairs pairs neighbours (0,1), (2,3), ...; an unpaired last spin
// is placed in |0>.
DenseMatrix build_initial_state(
    InitialStatePreset preset, int n_spins,
    const model::RateSet* rates = nullptr,
    const std::vector<Eigen::Vector3d>* bloch_vectors = nullptr);

InitialStatePreset preset_from_name(const std::string& name);
std::string preset_name(InitialStatePreset preset);

}  // namespace corrbath::dynamics
