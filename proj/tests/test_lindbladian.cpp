// Copyright 2026 The gibbslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gibbslab/lindbladian.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "gibbslab/dense.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/superop.hpp"

namespace gibbslab {
namespace {

constexpr double kPi = 3.14159265358979323846;

LocalHamiltonian chain(int n, double h) {
  return chain_hamiltonian(n, "XX", ExternalField::uniform_z(n, h));
}

TEST_SUITE_BEGIN("lindbladian");

TEST_CASE("alpha: symmetry, KMS, and the field-resonant value at zero") {
  SiteKernelParams p = SiteKernelParams::field_resonant(0.7, 0.0);
  CHECK(alpha_coeff(0.3, -1.2, p) == doctest::Approx(alpha_coeff(-1.2, 0.3, p)));

  // KMS: alpha(nu1, nu2) e^{beta (nu1+nu2)/2} = alpha(-nu1, -nu2), checked in
  // the log domain so huge fields stay finite.
  SplitMix64 rng(2);
  for (int i = 0; i < 20; ++i) {
    double h = std::pow(10.0, 6.0 * rng.uniform());
    SiteKernelParams q = SiteKernelParams::field_resonant(0.05, h);
    double nu1 = (2.0 * rng.uniform() - 1.0) * h;
    double nu2 = (2.0 * rng.uniform() - 1.0) * h;
    double lhs = log_alpha_coeff(nu1, nu2, q) + 0.5 * q.beta * (nu1 + nu2);
    double rhs = log_alpha_coeff(-nu1, -nu2, q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }

  // Field-resonant with delta = 1/beta at nu = 0: exponent is exactly -1/4.
  SiteKernelParams z = SiteKernelParams::field_resonant(2.0, 0.0);
  CHECK(alpha_coeff(0.0, 0.0, z) ==
        doctest::Approx(std::exp(-0.25) / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("alpha equals the gamma-weighted window overlap") {
  // Independent oracle: alpha(nu1, nu2) = (1/2pi) int gamma(w) fhat(w-nu1) fhat(w-nu2) dw.
  SiteKernelParams p = SiteKernelParams::field_resonant(0.4, 2.0);
  for (auto [nu1, nu2] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {2.0, 2.0}, {-2.0, 1.0}, {0.5, -3.0}}) {
    double lo = -p.delta - 40.0 * (p.eta + p.sigma);
    double hi = -lo;
    const int steps = 400000;
    const double dw = (hi - lo) / steps;
    double acc = 0.0;
    for (int i = 0; i < steps; ++i) {
      double w = lo + (i + 0.5) * dw;
      acc += kernel_gamma(w, p) * kernel_f_hat(w - nu1, p) * kernel_f_hat(w - nu2, p) * dw;
    }
    acc /= 2.0 * kPi;
    CHECK(alpha_coeff(nu1, nu2, p) == doctest::Approx(acc).epsilon(1e-9));
  }
}

TEST_CASE("g_hat factorizes into b1_hat times b2_hat") {
  // Exact under the parameter constraint beta (eta^2 + sigma^2) = 2 delta.
  for (double beta : {0.05, 1.0}) {
    for (double gap : {0.0, 3.0 / beta}) {
      SiteKernelParams p = SiteKernelParams::field_resonant(beta, gap);
      SplitMix64 rng(4);
      for (int i = 0; i < 10; ++i) {
        double nu1 = (2.0 * rng.uniform() - 1.0) * 2.0 * p.delta;
        double nu2 = (2.0 * rng.uniform() - 1.0) * 2.0 * p.delta;
        cxd lhs = g_hat_coeff(nu1, nu2, p);
        cxd rhs = kernel_b1_hat(nu1 - nu2, p) * cxd(kernel_b2_hat(nu1 + nu2, p));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + 1e-30));
      }
    }
  }
}

TEST_CASE("field_resonant_params picks per-site gaps") {
  LocalHamiltonian h = chain(3, 50.0);
  FieldResonantParams fr = field_resonant_params(h, 0.1);
  REQUIRE(fr.site.size() == 3);
  CHECK(fr.site[0].delta == doctest::Approx(50.0));  // gap 50 > 1/beta = 10
  FieldResonantParams weak = field_resonant_params(chain(3, 1.0), 0.1);
  CHECK(weak.site[1].delta == doctest::Approx(10.0));
}

TEST_CASE("bohr decomposition on a two-spin field") {
  Mat h = tensor_embed(pauli('Z'), {0}, 2) + tensor_embed(pauli('Z'), {1}, 2);
  BohrData b = bohr_data(herm_eig(h));
  // Eigenvalues {-2, 0 (x2), 2} -> frequencies {0, +-2, +-4}.
  REQUIRE(b.frequencies.size() == 5);
  CHECK(b.frequencies[0] == doctest::Approx(-4.0));
  CHECK(b.frequencies[2] == doctest::Approx(0.0));
  CHECK(b.frequency(2, 0) == doctest::Approx(4.0));
  CHECK(b.frequency(0, 2) == doctest::Approx(-4.0));

  SplitMix64 rng(6);
  Mat a = random_hermitian(rng, 4);
  auto comps = bohr_components(b, a);
  Mat sum = Mat::Zero(4, 4);
  for (const auto& [nu, part] : comps) sum += part;
  CHECK(op_norm(sum - a) < 1e-9 * op_norm(a));

  // e^{iHt} A e^{-iHt} = sum_nu e^{i nu t} A_nu, sampled at a few times.
  SpectralData s = herm_eig(h);
  for (double t : {0.17, 1.3}) {
    Mat u = mat_func(s, [t](double x) { return std::exp(cxd(0.0, x * t)); });
    Mat lhs = u * a * u.adjoint();
    Mat rhs = Mat::Zero(4, 4);
    for (const auto& [nu, part] : comps) rhs += std::exp(cxd(0.0, nu * t)) * part;
    CHECK(op_norm(lhs - rhs) < 1e-8 * op_norm(a));
  }
}

TEST_CASE("detailed balance and fixed point across field strengths") {
  const double beta = 0.05;
  for (double h : {0.0, 1.0 / beta, 1e6}) {
    LocalHamiltonian ham = chain(2, h);
    LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
    CAPTURE(h);
    CHECK(lb.db_defect() <= 1e-9);
    CHECK(lb.fixed_point_defect() <= 1e-10);
    CHECK(lb.generator.trace_preserving_defect() <= 1e-10);
    CHECK(lb.generator.hermiticity_preserving_defect() <= 1e-10);
    // The Gibbs state is stationary under the semigroup, not only the generator.
    Mat evolved = evolve(lb.generator, lb.gibbs, 0.7);
    CHECK(trace_distance(evolved, lb.gibbs) <= 1e-9);
  }
}

TEST_CASE("db defect agrees with the dense similarity transform") {
  const double beta = 0.2;
  LocalHamiltonian ham = chain(2, 1.0);  // mild field keeps sigma well conditioned
  LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
  double dense = db_defect_dense(lb.generator, lb.gibbs);
  CHECK(dense <= 1e-8);
  CHECK(std::abs(dense - lb.db_defect()) <= 1e-7);
}

TEST_CASE("dissipative-only generator does not fix the Gibbs state") {
  const double beta = 0.2;
  LocalHamiltonian ham = chain(2, 1.0);
  GeneratorOptions diss_only;
  diss_only.coherent = false;
  LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta), diss_only);
  CHECK(lb.fixed_point_defect() > 1e-6);  // the coherent part is load-bearing
}

TEST_CASE("single-site restriction matches the local generator") {
  const double beta = 0.1;
  LocalHamiltonian ham = chain(2, 2.0);
  FieldResonantParams fr = field_resonant_params(ham, beta);
  GeneratorOptions only0;
  only0.sites = {0};
  LindbladianBuild full = build_lindbladian(ham, beta, fr);
  LindbladianBuild site0 = build_lindbladian(ham, beta, fr, only0);
  GeneratorOptions only1;
  only1.sites = {1};
  LindbladianBuild site1 = build_lindbladian(ham, beta, fr, only1);
  CHECK(op_norm(full.generator.m - site0.generator.m - site1.generator.m) < 1e-10);
}

TEST_CASE("jump operator: closed form, quadrature, and the commuting case") {
  const double beta = 0.25;
  LocalHamiltonian ham = chain(2, 2.0);
  SpectralData s = herm_eig(ham.dense());
  SiteKernelParams kp = SiteKernelParams::field_resonant(beta, 2.0);
  Mat p = tensor_embed(pauli('X'), {0}, 2);
  for (double omega : {0.0, 1.5, -4.0}) {
    Mat closed = jump_operator(s, p, kp, omega);
    Mat quad = jump_operator_quadrature(s, p, kp, omega);
    CHECK(op_norm(closed - quad) <= 1e-7 * (op_norm(closed) + 1e-30));
  }

  // [P, H] = 0: the jump operator is f_hat(omega)/sqrt(2pi) * P.
  Mat hz = tensor_embed(pauli('Z'), {0}, 1);
  SpectralData sz = herm_eig(hz);
  Mat z = pauli('Z');
  Mat jz = jump_operator(sz, z, kp, 0.7);
  CHECK(op_norm(jz - (kernel_f_hat(0.7, kp) / std::sqrt(2.0 * kPi)) * z) < 1e-12);
}

TEST_CASE("coherent term is Hermitian and vanishes in the commuting case") {
  const double beta = 0.25;
  LocalHamiltonian ham = chain(2, 2.0);
  SpectralData s = herm_eig(ham.dense());
  SiteKernelParams kp = SiteKernelParams::field_resonant(beta, 2.0);
  Mat c = coherent_term(s, tensor_embed(pauli('X'), {0}, 2), kp);
  CHECK(op_norm(c - c.adjoint()) < 1e-12 * (op_norm(c) + 1e-30));

  // Pure-Z commuting model: every Bohr pairing hits tanh(0) = 0.
  LocalHamiltonian zz = chain_hamiltonian(2, "ZZ", ExternalField::uniform_z(2, 3.0));
  SpectralData sc = herm_eig(zz.dense());
  Mat cz = coherent_term(sc, tensor_embed(pauli('Z'), {0}, 2), kp);
  CHECK(op_norm(cz) <= 1e-12);
}

TEST_CASE("mixing curve decays monotonically to the Gibbs state") {
  const double beta = 0.05;
  LocalHamiltonian ham = chain(2, 1.0);
  LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
  SplitMix64 rng(8);
  Vec psi = random_state(rng, 4);
  Mat rho0 = psi * psi.adjoint();
  std::vector<double> grid;
  for (int i = 0; i <= 12; ++i) grid.push_back(i * 2.0);
  auto curve = mixing_curve(lb.generator, rho0, lb.gibbs, grid);
  REQUIRE(curve.size() == grid.size());
  CHECK(curve[0].distance > 0.1);
  for (size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].distance <= curve[i - 1].distance + 1e-10);
  }
  CHECK(spectral_gap(lb.generator) > 0.0);
}

TEST_SUITE_END();

}  // namespace
}  // namespace gibbslab
