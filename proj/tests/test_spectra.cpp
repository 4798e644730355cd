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

#include <doctest.h>

#include <algorithm>
#include <complex>

#include "corrbath/spectra.hpp"
#include "support.hpp"

using namespace corrbath;
using namespace corrbath::test;
using linalg::Complex;
using linalg::DenseMatrix;
using linalg::DenseVector;

namespace {

model::ModelSpec override_spec(int n, double alpha, double beta = 1.0) {
  model::ModelSpec spec;
  spec.n_spins = n;
  spec.omega0 = 1.0;
  spec.beta = beta;
  spec.r1 = 1.0;
  spec.alpha_override = alpha;
  return spec;
}

// Distance of x from the span of an orthonormal kernel basis.
double span_residual(const std::vector<DenseVector>& basis,
                     const DenseVector& x) {
  DenseVector proj = DenseVector::Zero(x.size());
  for (const auto& v : basis) proj += v * v.dot(x);
  return (proj - x).norm() / x.norm();
}

}  // namespace

TEST_CASE("thermal phase: one zero mode, positive gap, Gibbs steady state") {
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(2, 0.5, 1.0));
  const auto report = spectra::analyze(bundle);
  CHECK(report.zero_mode_count == 1);
  CHECK(report.adr > 0.1);
  CHECK(report.gap == report.adr);
  CHECK(report.max_real_part <= report.tol_used);
  REQUIRE(report.steady_states.size() == 1);

  const auto gibbs = model::thermal_product_state(bundle.rates, 2);
  CHECK((report.steady_states[0] - gibbs).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("single spin: steady state is diag((1+m0)/2, (1-m0)/2)") {
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(1, 1.0, 2.0));
  const auto report = spectra::analyze(bundle);
  REQUIRE(report.steady_states.size() == 1);
  const auto& rho = report.steady_states[0];
  const double m0 = bundle.rates.m0;
  CHECK(std::abs(rho(0, 0) - (1.0 + m0) / 2.0) < 1e-10);
  CHECK(std::abs(rho(1, 1) - (1.0 - m0) / 2.0) < 1e-10);
  CHECK(std::abs(rho(0, 1)) < 1e-10);
}

TEST_CASE("critical phase: degenerate kernel spanned by physical states") {
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(2, 1.0, 1.0));
  const auto report = spectra::analyze(bundle);
  CHECK(report.zero_mode_count >= 2);
  INFO("observed zero-mode count: " << report.zero_mode_count);
  CHECK(report.raw_kernel.size() == size_t(report.zero_mode_count));

  // the kernel contains the singlet projector ...
  CHECK(span_residual(report.raw_kernel, linalg::vec(singlet_state())) < 1e-8);

  // ... and the thermal state of the symmetric triplet block, with
  // populations in the ratio q = b0/a0 per magnetization step
  const double q = bundle.rates.b0 / bundle.rates.a0;
  DenseVector t0 = DenseVector::Zero(4);
  t0(1) = 1.0 / std::sqrt(2.0);
  t0(2) = 1.0 / std::sqrt(2.0);
  DenseMatrix triplet = DenseMatrix::Zero(4, 4);
  triplet(0, 0) = q;
  triplet += t0 * t0.adjoint();
  triplet(3, 3) = 1.0 / q;
  triplet /= triplet.trace().real();
  CHECK((bundle.superop * linalg::vec(triplet)).norm() <
        1e-10 * bundle.superop.norm());
  CHECK(span_residual(report.raw_kernel, linalg::vec(triplet)) < 1e-8);

  // extracted steady states are physical and span the kernel count
  CHECK(report.steady_states.size() == report.raw_kernel.size());
  for (const auto& rho : report.steady_states) {
    CHECK(std::abs(rho.trace() - Complex(1, 0)) < 1e-10);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(linalg::eig_hermitian(rho).values.minCoeff() >= -1e-8);
  }
}

TEST_CASE("analyze flags a generator without a kernel") {
  liouvillian::LiouvillianBundle fake;
  fake.spec = override_spec(1, 1.0);
  fake.rates = model::rates_from_spec(fake.spec);
  fake.superop = -DenseMatrix::Identity(4, 4);
  fake.lamb = DenseMatrix::Zero(2, 2);
  CHECK_THROWS_AS((void)spectra::analyze(fake), StructuralError);
}

TEST_CASE("spectrum is closed under conjugation and sums to the trace") {
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(2, 0.7, 0.8));
  const auto report = spectra::analyze(bundle);

  Complex sum = 0;
  for (const auto& ev : report.eigenvalues) {
    sum += ev;
    // conjugate partner present
    double best = 1e9;
    for (const auto& other : report.eigenvalues) {
      best = std::min(best, std::abs(other - std::conj(ev)));
    }
    CHECK(best < 1e-9);
  }
  const Complex tr = bundle.superop.trace();
  CHECK(std::abs(sum - tr) <= 1e-8 * std::abs(tr));
}

TEST_CASE("kernel vectors are fixed points of the propagator") {
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(2, 1.0, 1.0));
  const auto report = spectra::analyze(bundle);
  const DenseMatrix prop = linalg::expm(DenseMatrix(10.0 * bundle.superop));
  for (const auto& v : report.raw_kernel) {
    CHECK((prop * v - v).norm() <= 1e-8);
  }
}

TEST_CASE("adr_vs_alpha returns one row per grid point") {
  const auto rows =
      spectra::adr_vs_alpha(override_spec(2, 0.0), {0.2, 0.5, 0.8});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].alpha == 0.2);
  CHECK(rows[2].alpha == 0.8);
  for (const auto& r : rows) CHECK(r.adr > 0.0);
}

TEST_CASE("uncorrelated ADR matches the Kronecker-sum oracle") {
  // independent spins: eigenvalues are sums of single-spin pairs
  const auto bundle =
      liouvillian::assemble_liouvillian(override_spec(1, 1.0, 1.0));
  auto single = linalg::eig_general(bundle.superop, {.right_vectors = false});
  double oracle = 1e9;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double re = (single.values(i) + single.values(j)).real();
      if (std::abs(re) > 1e-12) oracle = std::min(oracle, std::abs(re));
    }
  }
  const auto rows = spectra::adr_vs_alpha(override_spec(2, 0.0), {0.0});
  CHECK(rows[0].adr == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("ADR of the kernel-adjacent mode closes at the critical point") {
  const auto rows =
      spectra::adr_vs_alpha(override_spec(2, 0.0), {0.9, 0.99, 0.999, 1.0});
  for (size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].adr <= rows[k - 1].adr);
  }
  CHECK(rows.back().adr <= 1e-8);
}
