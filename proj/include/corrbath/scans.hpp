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
#include <vector>

#include "corrbath/dynamics.hpp"
#include "corrbath/measures.hpp"
#include "corrbath/spectra.hpp"

namespace corrbath::scans {

struct TemperatureRow {
  double temperature = 0.0;  // the critical branch sits at exactly 0
  double beta = 0.0;         // +inf on the critical row
  double alpha = 0.0;
  double m0 = 0.0;
  double mz = 0.0;
  double mzz = 0.0;
  double mc = 0.0;
  double concurrence = 0.0;
  double entropy = 0.0;
  // Central differences over the T > 0 grid; absent at endpoints and on
  // the T = 0 row (no one-sided extrapolation presented as central).
  std::optional<double> dmz_dt;
  std::optional<double> dmzz_dt;
  std::optional<double> dmc_dt;
};

struct TemperatureSweepResult {
  std::vector<TemperatureRow> rows;  // decreasing T, final row T = 0
  model::ModelSpec spec_template;
  dynamics::BlochState x0;
};

// Steady-state observables and their temperature derivatives on a
// decreasing T > 0 grid, plus the exact T = 0 branch evaluated separately
// (with F taken from x0). Requires a two-spin geometry-mode template with
// nonzero pair separation, so alpha < 1 on every finite-temperature row.
TemperatureSweepResult temperature_sweep(const model::ModelSpec& spec_template,
                                         const std::vector<double>& t_grid,
                                         const dynamics::BlochState& x0);

struct EntropyRow {
  int n_spins = 0;
  double alpha = 0.0;
  double entropy = 0.0;
  // Stationarity residual ||L vec(rho)||_inf of the evolved state; exact 0
  // for the constructed thermal column.
  double residual = 0.0;
  // Smallest state eigenvalue seen along the evolution (0 for the
  // constructed column).
  double min_eig = 0.0;
};

struct EntropyScanResult {
  std::vector<EntropyRow> rows;  // grouped per n: compare column, then alpha=1
  dynamics::InitialStatePreset preset = dynamics::InitialStatePreset::kAllUp;
  double alpha_compare = 0.5;
  double t_end = 0.0;
  double dt = 0.0;
};

struct EntropyScanOptions {
  double alpha_compare = 0.5;
  dynamics::InitialStatePreset preset = dynamics::InitialStatePreset::kAllUp;
  // Evolution horizon and internal step for the alpha = 1 column, in 1/r1.
  double t_end = 25.0;
  double dt = 0.05;
};

// Steady-state von Neumann entropy against atom number: the alpha < 1
// column from the stationary thermal product, the alpha = 1 column from
// the long-time limit of the full evolution started in `preset`.
EntropyScanResult entropy_vs_n(const model::ModelSpec& spec_template,
                               const std::vector<int>& n_grid,
                               const EntropyScanOptions& opts = {});

struct CloudRow {
  double alpha = 0.0;
  double re = 0.0;
  double im = 0.0;
  bool is_zero_mode = false;
};

// Eigenvalue scatter rows of the generator for each alpha.
std::vector<CloudRow> spectrum_cloud(const model::ModelSpec& spec_template,
                                     const std::vector<double>& alphas,
                                     const spectra::AnalyzeOptions& opts = {});

}  // namespace corrbath::scans
