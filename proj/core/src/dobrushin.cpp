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

#include "gibbslab/dobrushin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gibbslab/quadrature.hpp"

namespace gibbslab {
namespace {

double overlap_closed(double nu, const SiteKernelParams& p) {
  const double s2 = p.eta * p.eta + p.sigma * p.sigma;
  const double a = p.delta + nu;
  return (p.eta / std::sqrt(s2)) * std::exp(-a * a / (2.0 * s2));
}

double overlap_quad(double nu, const SiteKernelParams& p, double rel_tol) {
  // (1/2pi) Int gamma(w) f_hat(w-nu)^2 dw; the gamma factor centers the mass
  // near -delta with width eta, the f_hat^2 factor near nu with width sigma*sqrt2.
  const double lo = std::min(-p.delta - 12.0 * p.eta, nu - 12.0 * p.sigma);
  const double hi = std::max(-p.delta + 12.0 * p.eta, nu + 12.0 * p.sigma);
  const auto q = integrate(
      [&](double w) {
        const double fh = kernel_f_hat(w - nu, p);
        return kernel_gamma(w, p) * fh * fh / (2.0 * M_PI);
      },
      lo, hi, rel_tol, (1 << 18) + 1, 0.0);
  return q.value;
}

OverlapTriple overlaps_for(const SiteKernelParams& p, double h) {
  OverlapTriple out;
  out.params = p;
  out.int_gamma_a2 = overlap_closed(h, p);
  out.int_gamma_b2 = overlap_closed(-h, p);
  out.int_gamma_c2 = overlap_closed(0.0, p);
  return out;
}

}  // namespace

OverlapTriple overlap_integrals(double h, double beta) {
  if (h < 0.0 || beta <= 0.0) throw std::invalid_argument("need h >= 0 and beta > 0");
  return overlaps_for(SiteKernelParams::field_resonant(beta, h), h);
}

OverlapTriple overlap_integrals_quadrature(double h, double beta, double rel_tol) {
  if (h < 0.0 || beta <= 0.0) throw std::invalid_argument("need h >= 0 and beta > 0");
  const SiteKernelParams p = SiteKernelParams::field_resonant(beta, h);
  OverlapTriple out;
  out.params = p;
  out.int_gamma_a2 = overlap_quad(h, p, rel_tol);
  out.int_gamma_b2 = overlap_quad(-h, p, rel_tol);
  out.int_gamma_c2 = overlap_quad(0.0, p, rel_tol);
  return out;
}

OverlapTriple overlap_integrals_canonical(double h, double beta) {
  if (h < 0.0 || beta <= 0.0) throw std::invalid_argument("need h >= 0 and beta > 0");
  return overlaps_for(SiteKernelParams::canonical(beta), h);
}

Superoperator local_dissipative_channel(double h, double beta, double delta, int m) {
  if (m < 1) throw std::invalid_argument("need at least one qubit");
  const OverlapTriple ov = overlap_integrals(h, beta);
  const Eigen::Index d = Eigen::Index{1} << m;

  Mat sp = Mat::Zero(2, 2);  // |0><1|
  sp(0, 1) = 1.0;
  Mat sm = Mat::Zero(2, 2);  // |1><0|
  sm(1, 0) = 1.0;
  const Mat sp_emb = tensor_embed(sp, {0}, m);
  const Mat sm_emb = tensor_embed(sm, {0}, m);
  const Mat z_emb = tensor_embed(pauli('Z'), {0}, m);

  Superoperator gen = Superoperator::zero(d);
  gen += 2.0 * ov.int_gamma_b2 * Superoperator::dissipator(sm_emb);
  gen += 2.0 * ov.int_gamma_a2 * Superoperator::dissipator(sp_emb);
  gen += ov.int_gamma_c2 * (Superoperator::conjugation(z_emb) - Superoperator::identity(d));
  return Superoperator::identity(d) + delta * gen;
}

ContractionResult local_dissipative_contraction(double h, double beta, double delta, const Mat& x,
                                                int m) {
  if (delta < 0.0 || delta > 1.0 / (3.0 * std::sqrt(2.0))) {
    throw std::invalid_argument("delta outside [0, 1/(3 sqrt 2)]");
  }
  const Eigen::Index d = Eigen::Index{1} << m;
  if (x.rows() != d || x.cols() != d) throw std::invalid_argument("operator size mismatch");
  if (trace_norm(partial_trace(x, {0}, m)) > 1e-10) {
    throw std::invalid_argument("input must be traceless on site 0");
  }

  const OverlapTriple ov = overlap_integrals(h, beta);
  const Superoperator s = local_dissipative_channel(h, beta, delta, m);

  ContractionResult out;
  out.input_trace_norm = trace_norm(x);
  out.out_trace_norm = trace_norm(s.apply(x));
  out.bound = (1.0 - std::exp(-0.25) / std::sqrt(2.0) * delta) * out.input_trace_norm;
  out.factor_xy = 1.0 - delta * ov.sector_xy();
  out.factor_z = 1.0 - delta * ov.sector_z();
  out.pass = out.out_trace_norm <= out.bound + 1e-12 * out.input_trace_norm;
  return out;
}

std::array<double, 4> pauli_norm_decomposition(double cx, double cy, double cz) {
  if (cx < 0.0 || cy < 0.0 || cz < 0.0) throw std::invalid_argument("coefficients must be >= 0");
  std::array<double, 3> c = {cx, cy, cz};
  std::sort(c.begin(), c.end(), std::greater<double>());
  return {0.5 * (c[0] + c[2]), 0.5 * (c[0] - c[1]), 0.0, 0.5 * (c[2] - c[1])};
}

UpdateMatrixBound update_matrix_bound(double beta, int d_deg, int locality, double delta_max,
                                      int r_max) {
  if (beta <= 0.0 || d_deg < 0 || locality < 0 || delta_max <= 0.0) {
    throw std::invalid_argument("invalid update-matrix inputs");
  }
  UpdateMatrixBound out;
  out.c_diag = std::exp(-0.25) / std::sqrt(2.0);
  const double ratio = 6.0 * beta * static_cast<double>(d_deg) * static_cast<double>(locality);
  for (int r = 1; r <= r_max; ++r) {
    out.c_r.push_back(120.0 * std::pow(ratio, r));
    out.offdiag_sum += out.c_r.back();
  }
  const double lg = std::log(2.0 * std::sqrt(delta_max * beta)) + 4.0;
  out.c_const = 144.0 + 324.0 * lg * lg;
  return out;
}

double dobrushin_column_bound(int n, double beta, int d_deg, int locality, double delta_max,
                              double delta) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (delta < 0.0 || delta > 1.0 / (6.0 * std::sqrt(2.0))) {
    throw std::invalid_argument("delta outside [0, 1/(6 sqrt 2)]");
  }
  const UpdateMatrixBound b = update_matrix_bound(beta, d_deg, locality, delta_max);
  return 1.0 - delta / (2.0 * n) + b.c_const * delta * delta;
}

bool dobrushin_regime(double beta, int d_deg, int locality) {
  const double dl = static_cast<double>(d_deg) * static_cast<double>(locality);
  return beta <= 1.0 / (28800.0 * dl * dl * dl);
}

int mixing_time_bound(int n, double eps) {
  if (n < 1 || eps <= 0.0) throw std::invalid_argument("need n >= 1 and eps > 0");
  return static_cast<int>(std::ceil(2.0 * std::log(2.0 * static_cast<double>(n) / eps)));
}

}  // namespace gibbslab
