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

#include "gibbslab/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "gibbslab/quadrature.hpp"

namespace gibbslab {

namespace {

using cxd = std::complex<double>;

double log_sinh(double x) {  // x > 0
  if (x > 20.0) return x - M_LN2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

}  // namespace

void SiteKernelParams::validate() const {
  if (!(beta > 0.0) || !(delta > 0.0) || !(sigma > 0.0) || !(eta > 0.0)) {
    throw std::invalid_argument("kernel parameters must be positive");
  }
  const double lhs = beta * (eta * eta + sigma * sigma);
  if (std::abs(lhs - 2.0 * delta) > 1e-12 * 2.0 * delta) {
    throw std::invalid_argument("kernel parameters violate beta(eta^2+sigma^2) = 2 delta");
  }
}

SiteKernelParams SiteKernelParams::field_resonant(double beta, double field_gap) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (field_gap < 0.0) throw std::invalid_argument("field gap must be >= 0");
  SiteKernelParams p;
  p.beta = beta;
  p.delta = std::max(1.0 / beta, field_gap);
  p.sigma = std::sqrt(p.delta / beta);
  p.eta = p.sigma;
  p.validate();
  return p;
}

SiteKernelParams SiteKernelParams::canonical(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  SiteKernelParams p;
  p.beta = beta;
  p.delta = 1.0 / beta;
  p.sigma = 1.0 / beta;
  p.eta = 1.0 / beta;
  p.validate();
  return p;
}

double kernel_f(double t, const SiteKernelParams& p) {
  return std::pow(2.0 / M_PI, 0.25) * std::sqrt(p.sigma) * std::exp(-p.sigma * p.sigma * t * t);
}

double kernel_f_hat(double w, const SiteKernelParams& p) {
  return std::pow(2.0 * M_PI, 0.25) / std::sqrt(p.sigma) *
         std::exp(-w * w / (4.0 * p.sigma * p.sigma));
}

double kernel_gamma(double w, const SiteKernelParams& p) {
  const double z = w + p.delta;
  return std::exp(-z * z / (2.0 * p.eta * p.eta));
}

cxd kernel_b2(double t, const SiteKernelParams& p) {
  const double envelope = 2.0 * p.eta * std::exp(-4.0 * p.delta * t * t / p.beta);
  return envelope * std::exp(cxd(0.0, -2.0 * p.delta * t));
}

double kernel_b2_hat(double w, const SiteKernelParams& p) {
  const double z = w + 2.0 * p.delta;
  return p.eta * std::sqrt(M_PI * p.beta / p.delta) *
         std::exp(-p.beta * z * z / (16.0 * p.delta));
}

cxd kernel_b1_hat(double w, const SiteKernelParams& p) {
  const double mag = std::exp(-w * w / (8.0 * p.sigma * p.sigma)) *
                     std::tanh(0.25 * p.beta * w) / (2.0 * std::sqrt(2.0 * M_PI));
  return cxd(0.0, mag);
}

double kernel_time_cutoff(const SiteKernelParams& p, double tol) {
  return std::max(p.beta, 1.0 / p.sigma) * std::sqrt(2.0 * std::log(1.0 / tol));
}

double kernel_b1(double t, const SiteKernelParams& p, double rel_tol) {
  const double tau = std::abs(t);
  if (tau == 0.0) return 0.0;
  const double s2 = p.sigma * p.sigma;
  const double c = 2.0 * M_PI / p.beta;  // sinh scale of the denominator

  // Difference of shifted Gaussians rewritten as a single-signed product:
  // e^{-2s2(t+u)^2} - e^{-2s2(t-u)^2} = -2 e^{-2s2(t^2+u^2)} sinh(4 s2 t u).
  // The envelope and the sinh growth nearly cancel around u = tau, so for
  // large exponents everything is combined in the log domain first.
  const auto integrand = [&](double u) {
    if (u == 0.0) {
      // limit of sinh(4 s2 tau u)/sinh(c u)
      return -2.0 * std::exp(-2.0 * s2 * tau * tau) * (4.0 * s2 * tau / c);
    }
    const double a = 4.0 * s2 * tau * u;
    const double cu = c * u;
    const double expo = 2.0 * s2 * (tau * tau + u * u);
    if (a < 600.0 && cu < 600.0 && expo < 650.0) {
      return -2.0 * std::exp(-expo) * std::sinh(a) / std::sinh(cu);
    }
    const double lg = M_LN2 - expo + log_sinh(a) - log_sinh(cu);
    return -std::exp(lg);
  };

  // The integrand peaks near u = tau (Gaussian recentered by the sinh
  // growth); extend the cutoff past it and double while the edge value is
  // not negligible against the peak.
  double cut = tau + kernel_time_cutoff(p, 1e-12);
  const double peak = std::abs(integrand(tau)) + std::abs(integrand(0.0));
  for (int i = 0; i < 8 && std::abs(integrand(cut)) > 1e-14 * peak; ++i) cut *= 2.0;

  const auto q = integrate(integrand, 0.0, cut, rel_tol, (1L << 17) + 1, /*abs_floor=*/0.0);
  const double val = (p.sigma / (M_PI * p.beta)) * q.value;
  return (t > 0.0) ? val : -val;
}

double moment_b2_closed(const SiteKernelParams& p, int r) {
  if (r < 0) throw std::invalid_argument("moment order must be >= 0");
  return std::pow(2.0, -r) * p.eta * std::pow(p.beta / p.delta, 0.5 * (r + 1)) *
         std::tgamma(0.5 * (r + 1));
}

namespace {

// Doubles `cut` until |edge(cut)| <= tol * scale, a few times at most.
double extend_cutoff(double cut, const std::function<double(double)>& edge, double scale,
                     double tol = 1e-14) {
  for (int i = 0; i < 8 && edge(cut) > tol * scale; ++i) cut *= 2.0;
  return cut;
}

}  // namespace

double moment_b2_quadrature(const SiteKernelParams& p, int r, double rel_tol) {
  const auto f = [&](double t) { return std::abs(kernel_b2(t, p)) * std::pow(t, r); };
  double cut = kernel_time_cutoff(p, 1e-12);
  cut = extend_cutoff(cut, [&](double t) { return f(t); }, 2.0 * p.eta);
  return 2.0 * integrate(f, 0.0, cut, rel_tol, (1L << 20) + 1, 0.0).value;
}

double moment_b1_quadrature(const SiteKernelParams& p, int r, double rel_tol) {
  // |b1| is even; the integrand has no sign changes, so pure relative
  // control is reliable at any overall scale.
  const auto f = [&](double t) { return std::abs(kernel_b1(t, p, 1e-11)) * std::pow(t, r); };
  double cut = kernel_time_cutoff(p, 1e-12);
  const double scale = std::abs(kernel_b1(0.25 / p.sigma, p)) + 1e-300;
  cut = extend_cutoff(cut, f, scale);
  return 2.0 * integrate(f, 0.0, cut, rel_tol, (1L << 14) + 1, 0.0).value;
}

double moment_b1_bound(const SiteKernelParams& p, int r) {
  if (r == 0) {
    return (2.0 / std::sqrt(M_PI) + std::log1p(M_SQRT2 / M_PI * p.sigma * p.beta)) /
           (M_SQRT2 * std::pow(M_PI, 1.5));
  }
  double fact = 1.0;
  for (int i = 2; i <= r; ++i) fact *= i;
  return std::pow(2.0, 0.5 * (r + 5)) * fact / std::pow(M_PI, 1.5) *
         std::pow(1.0 / p.sigma + p.beta / M_PI, r);
}

double gamma_integral_closed(const SiteKernelParams& p) { return std::sqrt(2.0 * M_PI) * p.eta; }

double gamma_integral_quadrature(const SiteKernelParams& p, double rel_tol) {
  double w = p.eta * std::sqrt(2.0 * std::log(1e12));
  w = extend_cutoff(w, [&](double x) { return kernel_gamma(-p.delta + x, p); }, 1.0);
  return integrate([&](double x) { return kernel_gamma(x, p); }, -p.delta - w, -p.delta + w,
                   rel_tol, (1L << 20) + 1, 0.0)
      .value;
}

FourierCheck fourier_consistency_check(const SiteKernelParams& p,
                                       const std::vector<double>& omegas, double rel_tol) {
  FourierCheck out;

  double cut2 = kernel_time_cutoff(p, 1e-12);
  cut2 = extend_cutoff(cut2, [&](double t) { return std::abs(kernel_b2(t, p)); }, 2.0 * p.eta);
  const double scale2 = moment_b2_closed(p, 0);

  double cut1 = kernel_time_cutoff(p, 1e-12);
  cut1 = extend_cutoff(cut1, [&](double t) { return std::abs(kernel_b1(t, p)); },
                       std::abs(kernel_b1(0.25 / p.sigma, p)) + 1e-300);
  const double scale1 = moment_b1_bound(p, 0);

  for (double w : omegas) {
    const auto ft2 = integrate(
        [&](double t) { return kernel_b2(t, p) * std::exp(cxd(0.0, -w * t)); }, -cut2, cut2,
        rel_tol, (1L << 20) + 1, 1e-12 * scale2);
    out.converged = out.converged && ft2.converged;
    out.max_error_b2 = std::max(out.max_error_b2, std::abs(ft2.value - kernel_b2_hat(w, p)));

    const auto ft1 = integrate(
        [&](double t) { return kernel_b1(t, p, 1e-11) * std::exp(cxd(0.0, -w * t)); }, -cut1,
        cut1, rel_tol, (1L << 14) + 1, 1e-12 * scale1);
    out.converged = out.converged && ft1.converged;
    out.max_error_b1 = std::max(out.max_error_b1, std::abs(ft1.value - kernel_b1_hat(w, p)));
  }
  return out;
}

}  // namespace gibbslab
