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

#include <complex>
#include <vector>

namespace gibbslab {

// Per-site bath parameters.  The constraint beta*(eta^2 + sigma^2) = 2*delta
// couples the filter width to the transition-weight center; every closed form
// below assumes it.
//
// Fourier convention (fixed globally): f_hat(w) = Int f(t) e^{-iwt} dt with
// no 1/sqrt(2pi) prefactor; the 1/sqrt(2pi) of the jump operator stays at the
// call site.
struct SiteKernelParams {
  double beta = 1.0;
  double delta = 1.0;
  double sigma = 1.0;
  double eta = 1.0;

  // Throws unless beta*(eta^2+sigma^2) = 2*delta to 1e-12 relative.
  void validate() const;

  // delta = max(1/beta, field_gap), eta = sigma = sqrt(delta/beta).
  static SiteKernelParams field_resonant(double beta, double field_gap);
  // The fixed-parameter family delta = eta = sigma = 1/beta (the choice whose
  // contraction constant degrades with the field; kept as a control).
  static SiteKernelParams canonical(double beta);
};

double kernel_f(double t, const SiteKernelParams& p);         // (2/pi)^{1/4} sqrt(sigma) e^{-sigma^2 t^2}
double kernel_f_hat(double w, const SiteKernelParams& p);     // (2pi)^{1/4} sigma^{-1/2} e^{-w^2/(4 sigma^2)}
double kernel_gamma(double w, const SiteKernelParams& p);     // e^{-(w+delta)^2/(2 eta^2)}
std::complex<double> kernel_b2(double t, const SiteKernelParams& p);  // 2 eta e^{-4 delta t^2/beta - 2i delta t}
double kernel_b2_hat(double w, const SiteKernelParams& p);    // eta sqrt(pi beta/delta) e^{-beta (w+2delta)^2/(16 delta)}
std::complex<double> kernel_b1_hat(double w, const SiteKernelParams& p);  // (i/(2 sqrt(2pi))) e^{-w^2/(8 sigma^2)} tanh(beta w / 4)

// First kernel in the time domain, from its one-sided u-integral
// representation; the u -> 0 limit of the integrand is taken analytically.
// b1 is real, odd, and <= 0 for t > 0.
double kernel_b1(double t, const SiteKernelParams& p, double rel_tol = 1e-10);

// Gaussian-tail time cutoff max(beta, 1/sigma) * sqrt(2 ln(1/tol)); extended
// by doubling inside the integrators until the integrand at the edge falls
// below the tolerance.
double kernel_time_cutoff(const SiteKernelParams& p, double tol = 1e-12);

// Int |b2(t)| |t|^r dt = 2^{-r} eta (beta/delta)^{(r+1)/2} Gamma((r+1)/2), exact.
double moment_b2_closed(const SiteKernelParams& p, int r);
double moment_b2_quadrature(const SiteKernelParams& p, int r, double rel_tol = 1e-10);

// Int |b1(t)| |t|^r dt by quadrature, and the corresponding one-sided bounds:
// r=0: (1/(sqrt(2) pi^{3/2})) (2/sqrt(pi) + log(1 + (sqrt(2)/pi) sigma beta));
// r>=1: (2^{(r+5)/2} r! / pi^{3/2}) (1/sigma + beta/pi)^r.
double moment_b1_quadrature(const SiteKernelParams& p, int r, double rel_tol = 1e-9);
double moment_b1_bound(const SiteKernelParams& p, int r);

// Int gamma = sqrt(2 pi) eta, exact; quadrature partner for the invariant.
double gamma_integral_closed(const SiteKernelParams& p);
double gamma_integral_quadrature(const SiteKernelParams& p, double rel_tol = 1e-10);

struct FourierCheck {
  double max_error_b1 = 0.0;  // |quadrature FT of b1 - closed-form b1_hat|
  double max_error_b2 = 0.0;
  bool converged = true;
};

FourierCheck fourier_consistency_check(const SiteKernelParams& p,
                                       const std::vector<double>& omegas,
                                       double rel_tol = 1e-10);

}  // namespace gibbslab
