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

#include "corrbath/scans.hpp"

#include <cmath>
#include <limits>

#include "corrbath/errors.hpp"

namespace corrbath::scans {

namespace {

using dynamics::BlochState;
using linalg::DenseMatrix;

DenseMatrix singlet_projector() {
  DenseMatrix rho = DenseMatrix::Zero(4, 4);
  rho(1, 1) = 0.5;
  rho(2, 2) = 0.5;
  rho(1, 2) = -0.5;
  rho(2, 1) = -0.5;
  return rho;
}

// Steady density matrix on the critical branch for two spins at m0 = 1:
// a singlet fraction p_s = 1/4 - F on top of |00><00|. F = mzz + mc is
// exactly 1/4 - <S|rho|S> for every two-spin state, so p_s lies in [0, 1]
// whenever x0 is physical.
DenseMatrix critical_steady_density(double f) {
  double ps = 0.25 - f;
  if (ps < -1e-9 || ps > 1.0 + 1e-9) {
    throw ValidationError("initial Bloch state has F outside [-3/4, 1/4]");
  }
  ps = std::clamp(ps, 0.0, 1.0);
  DenseMatrix rho = ps * singlet_projector();
  rho(0, 0) += 1.0 - ps;
  return rho;
}

}  // namespace

TemperatureSweepResult temperature_sweep(const model::ModelSpec& spec_template,
                                         const std::vector<double>& t_grid,
                                         const dynamics::BlochState& x0) {
  std::vector<std::string> errs;
  if (spec_template.n_spins != 2) {
    errs.push_back("temperature_sweep: template must have n_spins = 2");
  }
  if (!spec_template.geometry_mode()) {
    errs.push_back(
        "temperature_sweep: template must be in geometry mode (alpha must "
        "respond to temperature)");
  } else {
    const double sep =
        spec_template.uniform_separation
            ? *spec_template.uniform_separation
            : (spec_template.positions.size() == 2
                   ? std::abs(spec_template.positions[1] -
                              spec_template.positions[0])
                   : 0.0);
    if (!(sep > 0.0)) {
      errs.push_back("temperature_sweep: pair separation must be > 0");
    }
  }
  if (t_grid.empty()) errs.push_back("temperature_sweep: empty grid");
  for (size_t k = 0; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > 0.0)) {
      errs.push_back("temperature_sweep: grid temperatures must be > 0");
      break;
    }
    if (k > 0 && !(t_grid[k] < t_grid[k - 1])) {
      errs.push_back("temperature_sweep: grid must decrease toward zero");
      break;
    }
  }
  auto bloch_errs = dynamics::validate_bloch(x0);
  errs.insert(errs.end(), bloch_errs.begin(), bloch_errs.end());
  if (!errs.empty()) throw ValidationError(std::move(errs));

  TemperatureSweepResult result;
  result.spec_template = spec_template;
  result.x0 = x0;

  for (double t : t_grid) {
    model::ModelSpec spec = spec_template;
    spec.beta = 1.0 / t;
    const auto rates = model::rates_from_spec(spec);
    const double alpha = model::alpha_of(spec, 0, 1);
    const auto steady = dynamics::bloch_steady_state(rates, alpha, x0);
    const DenseMatrix rho = model::thermal_product_state(rates, 2);

    TemperatureRow row;
    row.temperature = t;
    row.beta = spec.beta;
    row.alpha = alpha;
    row.m0 = rates.m0;
    row.mz = steady.mz;
    row.mzz = steady.mzz;
    row.mc = steady.mc;
    row.concurrence = measures::concurrence(rho);
    row.entropy = measures::von_neumann_entropy(rho);
    result.rows.push_back(row);
  }

  // Critical branch, evaluated exactly at the beta = inf sentinel.
  {
    const double f = x0.mzz + x0.mc;
    model::ModelSpec spec = spec_template;
    spec.beta = std::numeric_limits<double>::infinity();
    const auto rates = model::rates_from_spec(spec);
    const auto steady = dynamics::bloch_steady_state(rates, 1.0, x0);
    const DenseMatrix rho = critical_steady_density(f);

    TemperatureRow row;
    row.temperature = 0.0;
    row.beta = spec.beta;
    row.alpha = 1.0;
    row.m0 = rates.m0;
    row.mz = steady.mz;
    row.mzz = steady.mzz;
    row.mc = steady.mc;
    row.concurrence = measures::concurrence(rho);
    row.entropy = measures::von_neumann_entropy(rho);
    result.rows.push_back(row);
  }

  // Central differences on the interior of the T > 0 rows only.
  const size_t n_pos = t_grid.size();
  for (size_t k = 1; k + 1 < n_pos; ++k) {
    const auto& lo = result.rows[k - 1];
    const auto& hi = result.rows[k + 1];
    const double dt = hi.temperature - lo.temperature;
    result.rows[k].dmz_dt = (hi.mz - lo.mz) / dt;
    result.rows[k].dmzz_dt = (hi.mzz - lo.mzz) / dt;
    result.rows[k].dmc_dt = (hi.mc - lo.mc) / dt;
  }
  return result;
}

EntropyScanResult entropy_vs_n(const model::ModelSpec& spec_template,
                               const std::vector<int>& n_grid,
                               const EntropyScanOptions& opts) {
  std::vector<std::string> errs;
  if (n_grid.empty()) errs.push_back("entropy_vs_n: empty n grid");
  for (int n : n_grid) {
    if (n < 1 || n > 7) {
      throw CapacityError("entropy_vs_n: n outside [1, 7]");
    }
  }
  if (!(opts.alpha_compare >= 0.0 && opts.alpha_compare < 1.0)) {
    errs.push_back("entropy_vs_n: alpha_compare must lie in [0, 1)");
  }
  if (!(opts.t_end > 0.0) || !(opts.dt > 0.0)) {
    errs.push_back("entropy_vs_n: t_end and dt must be > 0");
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  EntropyScanResult result;
  result.preset = opts.preset;
  result.alpha_compare = opts.alpha_compare;
  result.t_end = opts.t_end;
  result.dt = opts.dt;

  for (int n : n_grid) {
    model::ModelSpec spec = spec_template;
    spec.n_spins = n;
    spec.positions.clear();
    spec.uniform_separation.reset();

    // Comparison column: the stationary thermal product, no evolution.
    spec.alpha_override = opts.alpha_compare;
    const auto rates = model::rates_from_spec(spec);
    EntropyRow compare;
    compare.n_spins = n;
    compare.alpha = opts.alpha_compare;
    compare.entropy =
        measures::von_neumann_entropy(model::thermal_product_state(rates, n));
    compare.residual = 0.0;
    result.rows.push_back(compare);

    // Common-bath column: long-time limit of the full evolution.
    spec.alpha_override = 1.0;
    const auto bundle = liouvillian::assemble_liouvillian(spec);
    const DenseMatrix rho0 = dynamics::build_initial_state(
        opts.preset, n, &bundle.rates, nullptr);
    const double t_end = opts.t_end / spec.r1;
    const auto traj = dynamics::evolve_full(
        bundle, rho0, {0.0, 0.5 * t_end, t_end}, {.dt = opts.dt / spec.r1});
    const DenseMatrix& rho_final = traj.states.back();

    EntropyRow common;
    common.n_spins = n;
    common.alpha = 1.0;
    common.entropy = measures::von_neumann_entropy(rho_final);
    common.residual =
        (bundle.superop * linalg::vec(rho_final)).cwiseAbs().maxCoeff();
    for (const auto& d : traj.diagnostics) {
      common.min_eig = std::min(common.min_eig, d.min_eig);
    }
    result.rows.push_back(common);
  }
  return result;
}

std::vector<CloudRow> spectrum_cloud(const model::ModelSpec& spec_template,
                                     const std::vector<double>& alphas,
                                     const spectra::AnalyzeOptions& opts) {
  std::vector<CloudRow> rows;
  for (double alpha : alphas) {
    model::ModelSpec spec = spec_template;
    spec.alpha_override = alpha;
    spec.positions.clear();
    spec.uniform_separation.reset();
    const auto bundle = liouvillian::assemble_liouvillian(spec);
    const auto report = spectra::analyze(bundle, opts);
    for (const auto& ev : report.eigenvalues) {
      rows.push_back(
          {alpha, ev.real(), ev.imag(), std::abs(ev) <= report.tol_used});
    }
  }
  return rows;
}

}  // namespace corrbath::scans
