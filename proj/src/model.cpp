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

#include "corrbath/model.hpp"

#include <cmath>
#include <limits>

#include "corrbath/errors.hpp"
#include "corrbath/linalg.hpp"

namespace corrbath::model {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<std::string> ModelSpec::validate() const {
  std::vector<std::string> errs;
  if (n_spins < 1) errs.push_back("n_spins must be >= 1");
  if (!(r1 > 0.0)) errs.push_back("r1 must be > 0");
  if (std::isnan(beta) || beta < 0.0) errs.push_back("beta must be >= 0");
  if (!(omega0 > 0.0) || std::isinf(omega0)) {
    errs.push_back("omega0 must be finite and > 0");
  }
  if (alpha_override) {
    if (!(*alpha_override >= 0.0 && *alpha_override <= 1.0)) {
      errs.push_back("alpha_override must lie in [0, 1]");
    }
    if (!positions.empty() || uniform_separation) {
      errs.push_back(
          "alpha_override and geometry (positions/uniform_separation) are "
          "mutually exclusive");
    }
  } else {
    const bool has_pos = !positions.empty();
    const bool has_sep = uniform_separation.has_value();
    if (has_pos && has_sep) {
      errs.push_back("give positions or uniform_separation, not both");
    }
    if (!has_pos && !has_sep) {
      errs.push_back(
          "geometry mode needs positions or uniform_separation (or set "
          "alpha_override)");
    }
    if (has_pos && static_cast<int>(positions.size()) != n_spins) {
      errs.push_back("positions must list one coordinate per spin");
    }
    if (has_sep && !(*uniform_separation >= 0.0)) {
      errs.push_back("uniform_separation must be >= 0");
    }
    if (!(bath_spacing > 0.0)) errs.push_back("bath_spacing must be > 0");
    if (!(bath_hopping > 0.0)) errs.push_back("bath_hopping must be > 0");
  }
  if (std::isnan(lamb_j0) || std::isinf(lamb_j0)) {
    errs.push_back("lamb_j0 must be finite");
  }
  if (std::isnan(lamb_k0) || std::isinf(lamb_k0)) {
    errs.push_back("lamb_k0 must be finite");
  }
  return errs;
}

double correlation_length(const ModelSpec& spec) {
  if (std::isinf(spec.beta)) return kInf;
  return 2.0 * spec.bath_spacing * spec.beta * spec.bath_hopping;
}

double alpha_of(const ModelSpec& spec, int i, int j) {
  if (i == j) return 1.0;
  if (spec.alpha_override) return *spec.alpha_override;
  double r;
  if (spec.uniform_separation) {
    r = *spec.uniform_separation;
  } else {
    r = std::abs(spec.positions[static_cast<size_t>(i)] -
                 spec.positions[static_cast<size_t>(j)]);
  }
  if (r == 0.0) return 1.0;
  const double xi = correlation_length(spec);
  if (std::isinf(xi)) return 1.0;
  if (xi == 0.0) return 0.0;
  return std::exp(-r / xi);
}

RateSet rates_from_spec(const ModelSpec& spec) {
  auto errs = spec.validate();
  if (!errs.empty()) throw ValidationError(std::move(errs));

  RateSet out;
  out.m0 = std::isinf(spec.beta) ? 1.0 : std::tanh(spec.beta * spec.omega0 / 2.0);
  // b0 >= r1/2 because m0 >= 0, so the subtraction below is exact
  // (Sterbenz) and a0 + b0 == r1 holds bit-for-bit.
  out.b0 = spec.r1 * (1.0 + out.m0) / 2.0;
  out.a0 = spec.r1 - out.b0;
  out.alpha_matrix.resize(spec.n_spins, spec.n_spins);
  for (int i = 0; i < spec.n_spins; ++i) {
    for (int j = 0; j < spec.n_spins; ++j) {
      out.alpha_matrix(i, j) = alpha_of(spec, i, j);
    }
  }
  return out;
}

Eigen::MatrixXcd thermal_product_state(const RateSet& rates, int n_spins) {
  Eigen::MatrixXcd one(2, 2);
  one.setZero();
  one(0, 0) = (1.0 + rates.m0) / 2.0;
  one(1, 1) = (1.0 - rates.m0) / 2.0;
  Eigen::MatrixXcd out = one;
  for (int m = 1; m < n_spins; ++m) out = linalg::kron(out, one);
  return out;
}

}  // namespace corrbath::model
