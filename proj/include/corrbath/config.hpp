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

#include "corrbath/dynamics.hpp"
#include "corrbath/model.hpp"

namespace corrbath::config {

struct NumericBlock {
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  double kernel_tol = 1e-10;
  double dt = 0.0;      // internal propagator step in 1/r1; 0 = default
  double t_max = 20.0;  // trajectory horizon in 1/r1
  int time_points = 201;
};

struct InitialStateBlock {
  dynamics::InitialStatePreset preset =
      dynamics::InitialStatePreset::kMaximallyMixed;
  std::vector<Eigen::Vector3d> bloch_vectors;  // for the product preset
};

struct SweepBlock {
  double t_start = 2.0;
  double t_min = 0.01;
  int points = 13;
  std::string scale = "geometric";  // geometric | linear
  double factor = 2.0;              // geometric step ratio
};

struct EntropyScanBlock {
  int n_min = 1;
  int n_max = 6;
  double alpha_compare = 0.5;
  double t_end = 25.0;  // in 1/r1
  double dt = 0.05;     // in 1/r1
};

struct SpectrumBlock {
  std::vector<double> alphas = {0.5, 1.0};
};

struct OutputBlock {
  std::string directory;       // empty: --out flag, then $CORRBATH_OUT, then ./out
  std::string format = "csv";  // csv | json
  int precision = 12;          // significant digits in output files
};

struct RunConfig {
  std::string subcommand;  // filled from the command line
  model::ModelSpec model;
  NumericBlock numeric;
  InitialStateBlock initial_state;
  SweepBlock sweep;
  EntropyScanBlock entropy_scan;
  SpectrumBlock spectrum;
  OutputBlock output;
};

// Strict JSON config parsing: unknown keys are rejected, every violated
// constraint is collected (with its location) before the ValidationError
// is thrown. "inf" is the accepted spelling of beta = infinity; exactly
// one of beta / temperature must be present.
RunConfig parse_config(const std::string& path);

// Same, from an in-memory document; `origin` labels error messages.
RunConfig parse_config_text(const std::string& text, const std::string& origin);

// Canonical JSON echo of a parsed config. Feeding the echo back through
// parse_config_text reproduces the run; the manifest embeds it.
std::string echo_config(const RunConfig& cfg);

}  // namespace corrbath::config
