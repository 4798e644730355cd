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

#include "corrbath/dynamics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "corrbath/errors.hpp"

namespace corrbath::dynamics {

namespace {

using linalg::Complex;
using linalg::DenseVector;

constexpr double kSlack = 1e-9;

int spins_of_dim(Eigen::Index d) {
  int n = 0;
  Eigen::Index p = 1;
  while (p < d) {
    p *= 2;
    ++n;
  }
  if (p != d) throw ShapeError("density matrix dimension is not a power of 2");
  return n;
}

StepDiagnostics diagnostics_of(const DenseMatrix& rho) {
  StepDiagnostics diag;
  diag.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  diag.herm_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  diag.min_eig = linalg::eig_hermitian(rho).values.minCoeff();
  return diag;
}

}  // namespace

std::vector<std::string> validate_bloch(const BlochState& x) {
  std::vector<std::string> errs;
  if (!std::isfinite(x.mz) || std::abs(x.mz) > 1.0 + kSlack) {
    errs.push_back("|mz| must be <= 1");
  }
  if (!std::isfinite(x.mzz) || std::abs(x.mzz) > 0.25 + kSlack) {
    errs.push_back("|mzz| must be <= 1/4");
  }
  if (!std::isfinite(x.mc) || std::abs(x.mc) > 0.5 + kSlack) {
    errs.push_back("|mc| must be <= 1/2");
  }
  return errs;
}

BlochState observables_from_density(const DenseMatrix& rho) {
  const int n = spins_of_dim(rho.rows());
  const auto ops = liouvillian::build_site_operators(n);

  BlochState x;
  double sz_sum = 0.0;
  for (int m = 0; m < n; ++m) {
    sz_sum += (ops.sz[static_cast<size_t>(m)] * rho).trace().real();
  }
  x.mz = sz_sum / n;

  if (n < 2) return x;
  double zz = 0.0, cross = 0.0;
  int pairs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++pairs;
      zz += (ops.sz[static_cast<size_t>(i)] * ops.sz[static_cast<size_t>(j)] *
             rho)
                .trace()
                .real();
      // sx sx + sy sy = 2 (raise lower + lower raise) across sites
      cross += 2.0 * ((ops.raise[static_cast<size_t>(i)] *
                           ops.lower[static_cast<size_t>(j)] * rho)
                          .trace()
                          .real() +
                      (ops.lower[static_cast<size_t>(i)] *
                           ops.raise[static_cast<size_t>(j)] * rho)
                          .trace()
                          .real());
    }
  }
  x.mzz = 0.25 * zz / pairs;
  x.mc = 0.25 * cross / pairs;
  return x;
}

Trajectory evolve_full(const liouvillian::LiouvillianBundle& bundle,
                       const DenseMatrix& rho0,
                       const std::vector<double>& times,
                       const EvolveOptions& opts) {
  const Eigen::Index d = bundle.hilbert_dim();
  std::vector<std::string> errs;
  if (rho0.rows() != d || rho0.cols() != d) {
    throw ShapeError("evolve_full: rho0 dimension does not match bundle");
  }
  linalg::require_finite(rho0, "evolve_full: rho0");
  if (std::abs(rho0.trace() - Complex(1.0, 0.0)) > 1e-10) {
    errs.push_back("rho0 trace must equal 1 within 1e-10");
  }
  if ((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    errs.push_back("rho0 must be Hermitian within 1e-10");
  }
  if (linalg::eig_hermitian(rho0).values.minCoeff() < -1e-10) {
    errs.push_back("rho0 must be positive within 1e-10");
  }
  if (times.empty()) errs.push_back("time grid must be non-empty");
  for (size_t k = 0; k + 1 < times.size(); ++k) {
    if (!(times[k] < times[k + 1])) {
      errs.push_back("time grid must be strictly increasing");
      break;
    }
  }
  if (!times.empty() && times.front() < 0.0) {
    errs.push_back("times must be >= 0");
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  const double dt_hint =
      opts.dt > 0.0 ? opts.dt : 0.01 / bundle.spec.r1;

  Trajectory traj;
  traj.method = "expm-step";
  traj.times = times;

  // The generator is real whenever the shift Hamiltonian is off; the
  // propagator then stays in real arithmetic, which matters at n = 6.
  const bool real_generator =
      bundle.superop.imag().cwiseAbs().maxCoeff() == 0.0;

  DenseVector v = linalg::vec(rho0);
  DenseMatrix propagator;
  Eigen::MatrixXd real_propagator;
  double cached_h = -1.0;
  double t_cur = 0.0;
  for (double t : times) {
    const double delta = t - t_cur;
    if (delta > 0.0) {
      const auto k = std::max<long long>(1, std::llround(delta / dt_hint));
      const double h = delta / static_cast<double>(k);
      if (cached_h < 0.0 || std::abs(h - cached_h) > 1e-15 * h) {
        if (real_generator) {
          real_propagator = Eigen::MatrixXd(bundle.superop.real() * h).exp();
        } else {
          propagator = linalg::expm(bundle.superop * h);
        }
        cached_h = h;
      }
      if (real_generator) {
        Eigen::VectorXd re = v.real(), im = v.imag();
        for (long long s = 0; s < k; ++s) {
          re = real_propagator * re;
          im = real_propagator * im;
        }
        v.real() = re;
        v.imag() = im;
      } else {
        for (long long s = 0; s < k; ++s) v = propagator * v;
      }
      t_cur = t;
    }
    DenseMatrix rho_t = linalg::unvec(v, d, d);
    auto diag = diagnostics_of(rho_t);
    if (diag.trace_defect > 1e-6) {
      throw NumericalQualityError(
          "evolve_full: trace defect " + std::to_string(diag.trace_defect) +
          " at t = " + std::to_string(t));
    }
    traj.diagnostics.push_back(diag);
    traj.states.push_back(std::move(rho_t));
  }
  return traj;
}

Eigen::Matrix3d bloch_generator(const model::RateSet& rates, double alpha) {
  const double r1 = rates.a0 + rates.b0;
  const double m0 = rates.m0;
  Eigen::Matrix3d a;
  a << -2.0, 0.0, 4.0 * m0 * alpha,
       m0, -4.0, 2.0 * alpha,
       -m0 * alpha, 4.0 * alpha, -2.0;
  return r1 * a;
}

Eigen::Vector3d bloch_drive(const model::RateSet& rates) {
  return {2.0 * rates.m0 * (rates.a0 + rates.b0), 0.0, 0.0};
}

Trajectory evolve_bloch(const model::RateSet& rates, double alpha,
                        const BlochState& x0,
                        const std::vector<double>& times) {
  auto errs = validate_bloch(x0);
  if (!errs.empty()) throw ValidationError(std::move(errs));

  const Eigen::Matrix3d a = bloch_generator(rates, alpha);
  const Eigen::Vector3d b = bloch_drive(rates);
  const Eigen::Vector3d x0v(x0.mz, x0.mzz, x0.mc);
  const double r1 = rates.a0 + rates.b0;

  Trajectory traj;
  traj.method = "affine-expm";
  traj.times = times;

  const double det_scale = std::max(1.0, r1 * r1 * r1);
  if (std::abs(a.determinant()) > 1e-10 * det_scale) {
    const Eigen::Vector3d xstar = a.fullPivLu().solve(-b);
    for (double t : times) {
      const Eigen::Vector3d xt =
          (a * t).exp() * (x0v - xstar) + xstar;
      traj.bloch_states.push_back({xt(0), xt(1), xt(2)});
    }
  } else {
    Eigen::Matrix4d aug = Eigen::Matrix4d::Zero();
    aug.topLeftCorner<3, 3>() = a;
    aug.topRightCorner<3, 1>() = b;
    Eigen::Vector4d y0;
    y0 << x0v, 1.0;
    for (double t : times) {
      const Eigen::Vector4d yt = (aug * t).exp() * y0;
      traj.bloch_states.push_back({yt(0), yt(1), yt(2)});
    }
  }
  return traj;
}

BlochState bloch_steady_state(const model::RateSet& rates, double alpha,
                              const BlochState& x0) {
  const double m0 = rates.m0;
  if (alpha < 1.0) {
    return {m0, m0 * m0 / 4.0, 0.0};
  }
  const double f = x0.mzz + x0.mc;
  const double denom = m0 * m0 + 3.0;
  const double mc = (4.0 * f - m0 * m0) / (2.0 * denom);
  return {m0 * (4.0 * f + 3.0) / denom, f - mc, mc};
}

DenseMatrix build_initial_state(InitialStatePreset preset, int n_spins,
                                const model::RateSet* rates,
                                const std::vector<Eigen::Vector3d>* blochs) {
  if (n_spins < 1 || n_spins > 7) {
    throw CapacityError("build_initial_state: n_spins must be in [1, 7]");
  }
  const Eigen::Index d = Eigen::Index(1) << n_spins;
  switch (preset) {
    case InitialStatePreset::kAllUp: {
      DenseMatrix rho = DenseMatrix::Zero(d, d);
      rho(0, 0) = 1.0;
      return rho;
    }
    case InitialStatePreset::kAllDown: {
      DenseMatrix rho = DenseMatrix::Zero(d, d);
      rho(d - 1, d - 1) = 1.0;
      return rho;
    }
    case InitialStatePreset::kMaximallyMixed:
      return DenseMatrix::Identity(d, d) / static_cast<double>(d);
    case InitialStatePreset::kThermal: {
      if (!rates) throw ValidationError("thermal preset needs rates");
      return model::thermal_product_state(*rates, n_spins);
    }
    case InitialStatePreset::kSingletPairs: {
      DenseMatrix singlet = DenseMatrix::Zero(4, 4);
      // (|01> - |10>) / sqrt(2)
      singlet(1, 1) = 0.5;
      singlet(2, 2) = 0.5;
      singlet(1, 2) = -0.5;
      singlet(2, 1) = -0.5;
      DenseMatrix rho(1, 1);
      rho(0, 0) = 1.0;
      int placed = 0;
      while (placed + 2 <= n_spins) {
        rho = linalg::kron(rho, singlet);
        placed += 2;
      }
      if (placed < n_spins) {
        DenseMatrix up = DenseMatrix::Zero(2, 2);
        up(0, 0) = 1.0;
        rho = linalg::kron(rho, up);
      }
      return rho;
    }
    case InitialStatePreset::kProductBloch: {
      if (!blochs || static_cast<int>(blochs->size()) != n_spins) {
        throw ValidationError(
            "product_bloch preset needs one Bloch vector per spin");
      }
      DenseMatrix rho(1, 1);
      rho(0, 0) = 1.0;
      for (const auto& v : *blochs) {
        if (v.norm() > 1.0 + kSlack) {
          throw ValidationError("Bloch vector norm must be <= 1");
        }
        DenseMatrix one(2, 2);
        one(0, 0) = 0.5 * (1.0 + v.z());
        one(1, 1) = 0.5 * (1.0 - v.z());
        one(0, 1) = 0.5 * Complex(v.x(), -v.y());
        one(1, 0) = 0.5 * Complex(v.x(), v.y());
        rho = linalg::kron(rho, one);
      }
      return rho;
    }
  }
  throw StructuralError("unknown preset");
}

InitialStatePreset preset_from_name(const std::string& name) {
  if (name == "all_up") return InitialStatePreset::kAllUp;
  if (name == "all_down") return InitialStatePreset::kAllDown;
  if (name == "singlet_pairs") return InitialStatePreset::kSingletPairs;
  if (name == "maximally_mixed") return InitialStatePreset::kMaximallyMixed;
  if (name == "thermal") return InitialStatePreset::kThermal;
  if (name == "product_bloch") return InitialStatePreset::kProductBloch;
  throw ValidationError("unknown initial state preset: " + name);
}

std::string preset_name(InitialStatePreset preset) {
  switch (preset) {
    case InitialStatePreset::kAllUp: return "all_up";
    case InitialStatePreset::kAllDown: return "all_down";
    case InitialStatePreset::kSingletPairs: return "singlet_pairs";
    case InitialStatePreset::kMaximallyMixed: return "maximally_mixed";
    case InitialStatePreset::kThermal: return "thermal";
    case InitialStatePreset::kProductBloch: return "product_bloch";
  }
  throw StructuralError("unknown preset");
}

}  // namespace corrbath::dynamics
