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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gibbslab/quadrature.hpp"

namespace gibbslab {
namespace {

// log(1/(1+e^{-y})), stable for any y.
double log_sigmoid(double y) {
  if (y >= 0.0) return -std::log1p(std::exp(-y));
  return y - std::log1p(std::exp(y));
}

// Weight carried by G_L = (1/2) Q + i C per transition triple, and its
// detailed-balance tilt e^{beta s_-/2}.  The identities used:
//   (1/2)(1 - tanh(x)) e^{2x} = 1/(1+e^{-2x}),  x = beta (nu1-nu2)/4,
// so the tilted full weight is exp(log alpha + log_sigmoid(2x)) with no
// intermediate overflow for any field strength.
struct SitePauliAssembler {
  const SpectralData& s;
  const SiteKernelParams& kp;
  bool diss = true;
  bool coh = true;

  Eigen::VectorXd cv;  // per-column representative eigenvalue
  Mat pt;              // operator in the eigenbasis

  SitePauliAssembler(const SpectralData& spectral, const Mat& p_emb, const SiteKernelParams& params,
                     bool dissipative, bool coherent)
      : s(spectral), kp(params), diss(dissipative), coh(coherent) {
    cv = s.column_values();
    pt = s.basis.adjoint() * p_emb * s.basis;
  }

  double nu(Eigen::Index k, Eigen::Index m) const { return cv(k) - cv(m); }

  double weight_plain(double nu1, double nu2) const {
    double w = 0.0;
    if (diss) w += 0.5 * alpha_coeff(nu1, nu2, kp);
    if (coh) w -= 0.5 * std::tanh(kp.beta * (nu1 - nu2) / 4.0) * alpha_coeff(nu1, nu2, kp);
    return w;
  }

  double weight_tilted(double nu1, double nu2) const {
    const double la = log_alpha_coeff(nu1, nu2, kp);
    const double x2 = kp.beta * (nu1 - nu2) / 2.0;
    if (diss && coh) return std::exp(la + log_sigmoid(x2));
    if (diss) return 0.5 * std::exp(la + x2);
    return -0.5 * std::tanh(x2 / 2.0) * std::exp(la + x2);
  }

  // Adds this piece of the generator (and optionally its tilted partner),
  // both expressed in the eigenbasis, into the accumulators.
  void accumulate(Mat& gen, Mat* tilted) const {
    const Eigen::Index d = s.dim();

    if (diss) {
      for (Eigen::Index n = 0; n < d; ++n) {
        for (Eigen::Index m = 0; m < d; ++m) {
          for (Eigen::Index l = 0; l < d; ++l) {
            const cxd b = std::conj(pt(l, n));
            if (b == cxd(0.0, 0.0)) continue;
            const double nu2 = nu(l, n);
            for (Eigen::Index k = 0; k < d; ++k) {
              const cxd a = pt(k, m);
              if (a == cxd(0.0, 0.0)) continue;
              const double nu1 = nu(k, m);
              const cxd ab = a * b;
              gen(k + d * l, m + d * n) += alpha_coeff(nu1, nu2, kp) * ab;
              if (tilted != nullptr) {
                (*tilted)(k + d * l, m + d * n) +=
                    std::exp(log_alpha_coeff(nu1, nu2, kp) + kp.beta * (nu1 + nu2) / 2.0) * ab;
              }
            }
          }
        }
      }
    }

    Mat g = Mat::Zero(d, d);
    Mat gt = Mat::Zero(d, d);
    for (Eigen::Index m = 0; m < d; ++m) {
      for (Eigen::Index k = 0; k < d; ++k) {
        cxd acc(0.0, 0.0), acct(0.0, 0.0);
        for (Eigen::Index c = 0; c < d; ++c) {
          const cxd prod = std::conj(pt(c, k)) * pt(c, m);
          if (prod == cxd(0.0, 0.0)) continue;
          const double nu1 = nu(c, m);
          const double nu2 = nu(c, k);
          acc += weight_plain(nu1, nu2) * prod;
          if (tilted != nullptr) acct += weight_tilted(nu1, nu2) * prod;
        }
        g(k, m) = acc;
        gt(k, m) = acct;
      }
    }
    subtract_wings(gen, g, d);
    if (tilted != nullptr) subtract_wings(*tilted, gt, d);
  }

  // gen -= kron(I, g) + kron(conj(g), I), i.e. X -> g X + X g^dag.
  static void subtract_wings(Mat& gen, const Mat& g, Eigen::Index d) {
    for (Eigen::Index l = 0; l < d; ++l) {
      for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index k = 0; k < d; ++k) {
          gen(k + d * l, m + d * l) -= g(k, m);
        }
        const cxd cg = std::conj(g(l, m));
        for (Eigen::Index k = 0; k < d; ++k) {
          gen(k + d * l, k + d * m) -= cg;
        }
      }
    }
  }
};

std::vector<int> all_sites(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

FieldResonantParams field_resonant_params(const LocalHamiltonian& h, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  FieldResonantParams out;
  out.site.reserve(h.sites());
  for (int i = 0; i < h.sites(); ++i) {
    out.site.push_back(SiteKernelParams::field_resonant(beta, h.field().gap(i)));
  }
  return out;
}

double alpha_coeff(double nu1, double nu2, const SiteKernelParams& p) {
  return std::exp(log_alpha_coeff(nu1, nu2, p));
}

double log_alpha_coeff(double nu1, double nu2, const SiteKernelParams& p) {
  const double sm = nu1 - nu2;
  const double sp = nu1 + nu2;
  const double s2 = p.eta * p.eta + p.sigma * p.sigma;
  const double a = p.delta + 0.5 * sp;
  return -sm * sm / (8.0 * p.sigma * p.sigma) + std::log(p.eta / std::sqrt(s2)) -
         a * a / (2.0 * s2);
}

cxd g_hat_coeff(double nu1, double nu2, const SiteKernelParams& p) {
  const double t = std::tanh(p.beta * (nu1 - nu2) / 4.0);
  return cxd(0.0, 0.5 * t * alpha_coeff(nu1, nu2, p));
}

BohrData bohr_data(const SpectralData& s, double rel_tol) {
  BohrData out;
  out.base = s;
  const int g = s.group_count();
  out.merge_tol_abs = rel_tol * s.spectral_range();
  out.rep_index = Eigen::MatrixXi::Zero(g, g);

  // Positive differences, chain-merged with the absolute width above.
  struct Diff {
    double value;
    int g1, g2;
  };
  std::vector<Diff> diffs;
  diffs.reserve(static_cast<size_t>(g) * (g - 1) / 2);
  for (int g1 = 0; g1 < g; ++g1) {
    for (int g2 = 0; g2 < g1; ++g2) {
      diffs.push_back({s.eigenvalues(g1) - s.eigenvalues(g2), g1, g2});
    }
  }
  std::sort(diffs.begin(), diffs.end(), [](const Diff& a, const Diff& b) { return a.value < b.value; });

  std::vector<double> pos_reps;
  std::vector<std::vector<const Diff*>> groups;
  for (const Diff& d : diffs) {
    if (groups.empty() || d.value - groups.back().back()->value > out.merge_tol_abs) {
      groups.emplace_back();
    }
    groups.back().push_back(&d);
  }
  for (const auto& grp : groups) {
    double sum = 0.0;
    for (const Diff* d : grp) sum += d->value;
    pos_reps.push_back(sum / static_cast<double>(grp.size()));
    out.max_group_spread = std::max(out.max_group_spread, grp.back()->value - grp.front()->value);
  }

  const int m = static_cast<int>(pos_reps.size());
  out.frequencies.resize(2 * m + 1);
  for (int j = 0; j < m; ++j) {
    out.frequencies[m - 1 - j] = -pos_reps[j];
    out.frequencies[m + 1 + j] = pos_reps[j];
  }
  out.frequencies[m] = 0.0;

  for (int g1 = 0; g1 < g; ++g1) out.rep_index(g1, g1) = m;
  for (int j = 0; j < m; ++j) {
    for (const Diff* d : groups[j]) {
      out.rep_index(d->g1, d->g2) = m + 1 + j;
      out.rep_index(d->g2, d->g1) = m - 1 - j;
    }
  }
  return out;
}

std::vector<std::pair<double, Mat>> bohr_components(const BohrData& b, const Mat& a) {
  const Eigen::Index d = b.base.dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("operator dimension does not match spectral data");
  }
  const Mat at = b.base.basis.adjoint() * a * b.base.basis;
  std::vector<Mat> comps(b.frequencies.size(), Mat::Zero(d, d));
  for (Eigen::Index mcol = 0; mcol < d; ++mcol) {
    const int g2 = b.base.group_of[static_cast<size_t>(mcol)];
    for (Eigen::Index k = 0; k < d; ++k) {
      const int g1 = b.base.group_of[static_cast<size_t>(k)];
      comps[b.rep_index(g1, g2)](k, mcol) = at(k, mcol);
    }
  }
  std::vector<std::pair<double, Mat>> out;
  out.reserve(comps.size());
  for (size_t j = 0; j < comps.size(); ++j) {
    out.emplace_back(b.frequencies[j], b.base.basis * comps[j] * b.base.basis.adjoint());
  }
  return out;
}

double LindbladianBuild::db_defect() const {
  return op_norm(generator_eig.adjoint() - tilted_eig);
}

double LindbladianBuild::fixed_point_defect() const {
  return trace_norm(generator.apply(gibbs));
}

LindbladianBuild build_lindbladian(const LocalHamiltonian& h, double beta,
                                   const FieldResonantParams& params,
                                   const GeneratorOptions& opts) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (static_cast<int>(params.site.size()) != h.sites()) {
    throw std::invalid_argument("one kernel parameter set per site required");
  }
  if (!opts.dissipative && !opts.coherent) {
    throw std::invalid_argument("generator needs at least one of the two parts");
  }

  LindbladianBuild out;
  out.beta = beta;
  out.spectral = herm_eig(h.dense());
  out.gibbs = gibbs_state(out.spectral, beta);

  const Eigen::Index d = out.spectral.dim();
  out.generator_eig = Mat::Zero(d * d, d * d);
  out.tilted_eig = Mat::Zero(d * d, d * d);

  const std::vector<int> sites = opts.sites.empty() ? all_sites(h.sites()) : opts.sites;
  for (int site : sites) {
    const SiteKernelParams& kp = params.site.at(site);
    kp.validate();
    for (char label : {'X', 'Y', 'Z'}) {
      const Mat p_emb = tensor_embed(pauli(label), {site}, h.sites());
      SitePauliAssembler asmb(out.spectral, p_emb, kp, opts.dissipative, opts.coherent);
      asmb.accumulate(out.generator_eig, &out.tilted_eig);
    }
  }

  const Superoperator eig{d, out.generator_eig};
  out.generator = eig.transformed(out.spectral.basis.adjoint());
  return out;
}

double db_defect_dense(const Superoperator& l, const Mat& sigma, double cond_limit) {
  const SpectralData s = herm_eig(sigma, 0.0);
  const double lo = s.eigenvalues.minCoeff();
  const double hi = s.eigenvalues.maxCoeff();
  if (lo <= 0.0) throw std::invalid_argument("state is not positive definite");
  if (hi / lo > cond_limit) {
    throw std::invalid_argument("state too ill-conditioned for the dense sandwich route");
  }
  const Mat half = mat_func(s, [](double x) { return std::sqrt(x); });
  const Mat inv_half = mat_func(s, [](double x) { return 1.0 / std::sqrt(x); });
  const Mat tilt = Superoperator::sandwich(inv_half, inv_half).m * l.m *
                   Superoperator::sandwich(half, half).m;
  return op_norm(l.m.adjoint() - tilt);
}

Mat coherent_term(const SpectralData& s, const Mat& p, const SiteKernelParams& kp) {
  const Eigen::Index d = s.dim();
  const Mat pt = s.basis.adjoint() * p * s.basis;
  const Eigen::VectorXd cv = s.column_values();
  Mat c = Mat::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index k = 0; k < d; ++k) {
      cxd acc(0.0, 0.0);
      for (Eigen::Index a = 0; a < d; ++a) {
        const cxd prod = std::conj(pt(a, k)) * pt(a, m);
        if (prod == cxd(0.0, 0.0)) continue;
        acc += g_hat_coeff(cv(a) - cv(m), cv(a) - cv(k), kp) * prod;
      }
      c(k, m) = acc;
    }
  }
  return s.basis * c * s.basis.adjoint();
}

Mat dissipative_piece_eig(const SpectralData& s, const Mat& p, const SiteKernelParams& kp) {
  const Eigen::Index d = s.dim();
  Mat gen = Mat::Zero(d * d, d * d);
  SitePauliAssembler asmb(s, p, kp, /*dissipative=*/true, /*coherent=*/false);
  asmb.accumulate(gen, nullptr);
  return gen;
}

Mat jump_operator(const SpectralData& s, const Mat& p, const SiteKernelParams& kp, double omega) {
  const Eigen::Index d = s.dim();
  const Mat pt = s.basis.adjoint() * p * s.basis;
  const Eigen::VectorXd cv = s.column_values();
  const double pref = 1.0 / std::sqrt(2.0 * M_PI);
  Mat a = Mat::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index k = 0; k < d; ++k) {
      a(k, m) = pt(k, m) * pref * kernel_f_hat(omega - (cv(k) - cv(m)), kp);
    }
  }
  return s.basis * a * s.basis.adjoint();
}

Mat jump_operator_quadrature(const SpectralData& s, const Mat& p, const SiteKernelParams& kp,
                             double omega, double rel_tol) {
  const Eigen::Index d = s.dim();
  const Mat pt = s.basis.adjoint() * p * s.basis;
  const Eigen::VectorXd cv = s.column_values();
  // Envelope f(t) is negligible beyond sqrt(40)/sigma; frequencies present in
  // the integrand are bounded by the spectral range plus |omega|.
  const double tmax = std::sqrt(40.0) / kp.sigma;
  const double fmax = s.spectral_range() + std::abs(omega) + kp.sigma;
  const double pref = 1.0 / std::sqrt(2.0 * M_PI);

  auto value_at = [&](Eigen::Index steps) {
    Mat acc = Mat::Zero(d, d);
    const double dt = 2.0 * tmax / static_cast<double>(steps);
    for (Eigen::Index i = 0; i <= steps; ++i) {
      const double t = -tmax + dt * static_cast<double>(i);
      const double f = kernel_f(t, kp);
      const double wgt = (i == 0 || i == steps) ? 0.5 : 1.0;
      for (Eigen::Index m = 0; m < d; ++m) {
        for (Eigen::Index k = 0; k < d; ++k) {
          const double phase = ((cv(k) - cv(m)) - omega) * t;
          acc(k, m) += wgt * pt(k, m) * f * std::polar(1.0, phase);
        }
      }
    }
    return Mat(pref * dt * acc);
  };

  Eigen::Index steps = 256;
  while (static_cast<double>(steps) < 8.0 * fmax * tmax) steps *= 2;
  Mat prev = value_at(steps);
  for (int pass = 0; pass < 12; ++pass) {
    steps *= 2;
    Mat cur = value_at(steps);
    const double change = (cur - prev).norm();
    prev = cur;
    if (change <= rel_tol * prev.norm() + 1e-14) break;
  }
  return s.basis * prev * s.basis.adjoint();
}

Superoperator local_dissipative_generator(const LocalHamiltonian& h, int site,
                                          const SiteKernelParams& kp) {
  kp.validate();
  const Mat v = tensor_embed(h.field().per_site.at(site), {site}, h.sites());
  const SpectralData s = herm_eig(v);
  const Eigen::Index d = s.dim();
  Mat gen = Mat::Zero(d * d, d * d);
  for (char label : {'X', 'Y', 'Z'}) {
    const Mat p_emb = tensor_embed(pauli(label), {site}, h.sites());
    SitePauliAssembler asmb(s, p_emb, kp, /*dissipative=*/true, /*coherent=*/false);
    asmb.accumulate(gen, nullptr);
  }
  return Superoperator{d, gen}.transformed(s.basis.adjoint());
}

Mat evolve(const Superoperator& l, const Mat& rho0, double t) {
  return SemigroupSolver(l).evolve(rho0, t);
}

std::vector<MixingPoint> mixing_curve(const Superoperator& l, const Mat& rho0, const Mat& sigma,
                                      const std::vector<double>& t_grid) {
  const SemigroupSolver solver(l);
  std::vector<MixingPoint> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    out.push_back({t, trace_distance(solver.evolve(rho0, t), sigma)});
  }
  return out;
}

}  // namespace gibbslab
