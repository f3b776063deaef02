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

#pragma once

#include <utility>
#include <vector>

#include "gibbslab/dense.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/superop.hpp"

namespace gibbslab {

struct FieldResonantParams {
  std::vector<SiteKernelParams> site;
};

// delta_j = max(1/beta, gap(V_j)), eta_j = sigma_j = sqrt(delta_j/beta).
FieldResonantParams field_resonant_params(const LocalHamiltonian& h, double beta);

// alpha(nu1, nu2) = exp(-s-^2/(8 sigma^2)) (eta/sqrt(eta^2+sigma^2))
//                   exp(-(delta + s+/2)^2 / (2(eta^2+sigma^2))),
// s+- = nu1 +- nu2.  Equal to (1/2pi) Int gamma(w) f_hat(w-nu1) f_hat(w-nu2) dw;
// the jump-operator prefactors cancel the Gaussian-product 2 pi exactly, so
// this is the dissipative coefficient with no further normalization.
double alpha_coeff(double nu1, double nu2, const SiteKernelParams& p);
double log_alpha_coeff(double nu1, double nu2, const SiteKernelParams& p);

// g_hat(nu1, nu2) = (i/2) tanh(beta (nu1-nu2)/4) alpha(nu1, nu2)
//                 = b1_hat(nu1-nu2) b2_hat(nu1+nu2) under the fixed convention.
cxd g_hat_coeff(double nu1, double nu2, const SiteKernelParams& p);

// Bohr frequency structure of a grouped spectrum.  Merging is relative to
// the spectral range of H.  The generator assembly below does NOT evaluate
// coefficients at merged representatives — it uses raw per-pair eigenvalue
// differences, for which the KMS identities hold at any arguments; the
// merged frequency list exists for component maps and Fourier cross-checks.
struct BohrData {
  SpectralData base;
  std::vector<double> frequencies;  // ascending, symmetric about 0
  Eigen::MatrixXi rep_index;        // (g1, g2) -> index of E_{g1} - E_{g2}
  double merge_tol_abs = 0.0;
  double max_group_spread = 0.0;

  double frequency(int g1, int g2) const { return frequencies[rep_index(g1, g2)]; }
};

BohrData bohr_data(const SpectralData& s, double rel_tol = 1e-8);

// Components A_nu with sum_nu A_nu = A and e^{iHt} A e^{-iHt} = sum A_nu e^{i nu t}.
std::vector<std::pair<double, Mat>> bohr_components(const BohrData& b, const Mat& a);

struct GeneratorOptions {
  bool dissipative = true;
  bool coherent = true;
  std::vector<int> sites;  // empty = all
};

struct LindbladianBuild {
  Superoperator generator;  // computational basis
  SpectralData spectral;    // of the dense Hamiltonian
  Mat gibbs;                // stationary state, computational basis
  Mat generator_eig;        // same map in the eigenbasis
  // The detailed-balance partner sigma^{-1/2} L(sigma^{1/2} (.) sigma^{1/2})
  // sigma^{-1/2} in the eigenbasis.  Assembled coefficient-wise in the log
  // domain, so it stays finite where the dense sandwich would overflow
  // (beta * spectral range in the thousands).
  Mat tilted_eig;
  double beta = 0.0;

  double db_defect() const;          // || adjoint(generator) - tilted || op norm
  double fixed_point_defect() const; // || L(gibbs) ||_1
};

LindbladianBuild build_lindbladian(const LocalHamiltonian& h, double beta,
                                   const FieldResonantParams& params,
                                   const GeneratorOptions& opts = {});

// Sandwich-route defect for moderately conditioned sigma; throws when
// cond(sigma) exceeds cond_limit.
double db_defect_dense(const Superoperator& l, const Mat& sigma, double cond_limit = 1e14);

// C^P = sum g_hat(nu1, nu2) P_{nu2}^dag P_{nu1} (computational basis).
Mat coherent_term(const SpectralData& s, const Mat& p, const SiteKernelParams& kp);

// Dissipative generator piece for one embedded operator, in the eigenbasis
// of s: sum over frequency pairs of alpha (P ... P - (1/2){P P, .}).
Mat dissipative_piece_eig(const SpectralData& s, const Mat& p, const SiteKernelParams& kp);

// A^P(w) = (1/sqrt(2pi)) sum_nu P_nu f_hat(w - nu), and the time-integral
// form (1/sqrt(2pi)) Int e^{iHt} P e^{-iHt} e^{-iwt} f(t) dt as a cross-check.
Mat jump_operator(const SpectralData& s, const Mat& p, const SiteKernelParams& kp, double omega);
Mat jump_operator_quadrature(const SpectralData& s, const Mat& p, const SiteKernelParams& kp,
                             double omega, double rel_tol = 1e-9);

// Dissipative generator from the strictly local packets only: jumps of the
// bare field Hamiltonian at one site, all three Paulis.
Superoperator local_dissipative_generator(const LocalHamiltonian& h, int site,
                                          const SiteKernelParams& kp);

Mat evolve(const Superoperator& l, const Mat& rho0, double t);

struct MixingPoint {
  double t = 0.0;
  double distance = 0.0;  // (1/2) || rho(t) - sigma ||_1
};

std::vector<MixingPoint> mixing_curve(const Superoperator& l, const Mat& rho0, const Mat& sigma,
                                      const std::vector<double>& t_grid);

}  // namespace gibbslab
