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

#include "corrbath/validate.hpp"

#include <cmath>
#include <random>

#include "corrbath/dynamics.hpp"
#include "corrbath/linalg.hpp"
#include "corrbath/liouvillian.hpp"
#include "corrbath/model.hpp"

namespace corrbath::validate {

namespace {

using linalg::Complex;
using linalg::DenseMatrix;

DenseMatrix random_matrix(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

DenseMatrix random_density(std::mt19937_64& rng, Eigen::Index d) {
  const DenseMatrix g = random_matrix(rng, d);
  DenseMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(20260314);
  auto add = [&](const std::string& name, double value, double threshold) {
    results.push_back({name, value, threshold, value <= threshold});
  };

  {  // column-stacking identity: vec(X rho Y) = (Y^T kron X) vec(rho)
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const DenseMatrix x = random_matrix(rng, 4);
      const DenseMatrix y = random_matrix(rng, 4);
      const DenseMatrix rho = random_matrix(rng, 4);
      const linalg::DenseVector lhs = linalg::vec(x * rho * y);
      const linalg::DenseVector rhs =
          linalg::kron(y.transpose(), x) * linalg::vec(rho);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    add("vectorization identity", worst, 1e-12);
  }

  model::ModelSpec spec;
  spec.n_spins = 2;
  spec.omega0 = 1.0;
  spec.beta = 1.1;
  spec.r1 = 1.0;
  spec.alpha_override = 0.37;
  const auto bundle = liouvillian::assemble_liouvillian(spec);

  {  // trace preservation: vec(I)^dag L = 0
    const auto id_vec = linalg::vec(DenseMatrix::Identity(4, 4));
    const double res = (id_vec.adjoint() * bundle.superop).norm();
    add("trace preservation", res / linalg::one_norm(bundle.superop), 1e-12);
  }

  {  // detailed balance b0/a0 = exp(beta omega0)
    const auto rates = model::rates_from_spec(spec);
    const double ratio = rates.b0 / rates.a0;
    const double target = std::exp(spec.beta * spec.omega0);
    add("detailed balance", std::abs(ratio - target) / target, 1e-12);
  }

  model::ModelSpec crit = spec;
  crit.alpha_override = 1.0;
  const auto crit_bundle = liouvillian::assemble_liouvillian(crit);

  {  // dark-state stationarity at alpha = 1
    const auto singlet = dynamics::build_initial_state(
        dynamics::InitialStatePreset::kSingletPairs, 2);
    const double res = (crit_bundle.superop * linalg::vec(singlet)).norm();
    add("dark-state stationarity", res / crit_bundle.superop.norm(), 1e-10);
  }

  const auto rates = model::rates_from_spec(spec);

  {  // thermal branch fixed point
    const dynamics::BlochState x0{-0.3, 0.1, -0.2};
    const auto traj = dynamics::evolve_bloch(rates, 0.5, x0, {60.0});
    const auto target = dynamics::bloch_steady_state(rates, 0.5, x0);
    const auto& xt = traj.bloch_states.back();
    const double err = std::max({std::abs(xt.mz - target.mz),
                                 std::abs(xt.mzz - target.mzz),
                                 std::abs(xt.mc - target.mc)});
    add("thermal steady state", err, 1e-8);
  }

  {  // critical branch fixed point with initial-value dependence
    const dynamics::BlochState x0{0.2, -0.1, 0.15};
    const auto traj = dynamics::evolve_bloch(rates, 1.0, x0, {80.0});
    const auto target = dynamics::bloch_steady_state(rates, 1.0, x0);
    const auto& xt = traj.bloch_states.back();
    const double err = std::max({std::abs(xt.mz - target.mz),
                                 std::abs(xt.mzz - target.mzz),
                                 std::abs(xt.mc - target.mc)});
    add("critical steady state", err, 1e-8);
  }

  {  // reduced system is the exact projection of the full generator
    model::ModelSpec s = spec;
    s.alpha_override = 0.7;
    const auto b = liouvillian::assemble_liouvillian(s);
    const auto r = model::rates_from_spec(s);
    const DenseMatrix rho0 = random_density(rng, 4);
    const auto x0 = dynamics::observables_from_density(rho0);
    std::vector<double> grid;
    for (int k = 0; k <= 20; ++k) grid.push_back(0.5 * k);
    const auto full = dynamics::evolve_full(b, rho0, grid);
    const auto red = dynamics::evolve_bloch(r, 0.7, x0, grid);
    double worst = 0.0;
    for (size_t k = 0; k < grid.size(); ++k) {
      const auto xf = dynamics::observables_from_density(full.states[k]);
      const auto& xr = red.bloch_states[k];
      worst = std::max({worst, std::abs(xf.mz - xr.mz),
                        std::abs(xf.mzz - xr.mzz), std::abs(xf.mc - xr.mc)});
    }
    add("reduced/full agreement", worst, 1e-6);
  }

  return results;
}

}  // namespace corrbath::validate
