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

#include "gibbslab/quasilocality.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gibbslab/rng.hpp"

namespace gibbslab {
namespace {

double factorial(int r) { return std::tgamma(static_cast<double>(r) + 1.0); }

Mat conjugate_by_evolution(const SpectralData& s, const Mat& a, double t) {
  if (t == 0.0) return a;
  const Mat u = mat_func(s, [t](double e) { return std::polar(1.0, e * t); });
  return u * a * u.adjoint();
}

// Number of interaction terms inside the ball; identical counts at r and r-1
// mean identical truncations, hence an exactly zero shell.
int terms_inside(const LocalHamiltonian& h, const std::vector<int>& ball) {
  const std::set<int> b(ball.begin(), ball.end());
  int count = 0;
  for (const LocalTerm& t : h.terms()) {
    if (std::all_of(t.support.begin(), t.support.end(), [&](int s) { return b.count(s) > 0; })) {
      ++count;
    }
  }
  return count;
}

template <typename Builder>
ShellSeries build_series(const LocalHamiltonian& h, int site, int r_max, Builder&& object_at) {
  if (site < 0 || site >= h.sites()) throw std::invalid_argument("site out of range");
  if (r_max < 0) throw std::invalid_argument("radius must be nonnegative");
  ShellSeries out;
  out.center = site;
  out.zeta = h.zeta();

  Mat prev;
  int prev_terms = -1;
  for (int r = 0; r <= r_max; ++r) {
    out.balls.push_back(h.ball({site}, r));
    const int inside = terms_inside(h, out.balls.back());
    Mat cur;
    if (inside == prev_terms) {
      cur = prev;  // same truncation, shell vanishes identically
    } else {
      cur = object_at(h.truncated(site, r));
    }
    out.shells.push_back(r == 0 ? cur : Mat(cur - prev));
    out.norms.push_back(op_norm(out.shells.back()));
    prev = cur;
    prev_terms = inside;
  }
  return out;
}

Mat random_single_site_unitary(SplitMix64& rng, int site, int n) {
  Mat g(2, 2);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) g(i, j) = cxd(rng.normal(), rng.normal());
  }
  const Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  return tensor_embed(q, {site}, n);
}

}  // namespace

Mat ShellSeries::reconstruction() const {
  Mat sum = Mat::Zero(shells.front().rows(), shells.front().cols());
  for (const Mat& s : shells) sum += s;
  return sum;
}

ShellSeries heisenberg_shells(const LocalHamiltonian& h, const Mat& a, int site, double t,
                              int r_max) {
  ShellSeries out = build_series(h, site, r_max, [&](const LocalHamiltonian& hr) {
    const Mat a_emb = tensor_embed(a, {site}, h.sites());
    return conjugate_by_evolution(herm_eig(hr.dense(), 0.0), a_emb, t);
  });
  const double na = op_norm(a);
  for (int r = 0; r < out.radius_count(); ++r) {
    out.bound_values.push_back(
        r == 0 ? na : na * std::pow(2.0 * out.zeta * std::abs(t), r) / factorial(r));
  }
  return out;
}

ShellSeries jump_shells(const LocalHamiltonian& h, const SiteKernelParams& kp, const Mat& p,
                        int site, double omega, int r_max) {
  kp.validate();
  ShellSeries out = build_series(h, site, r_max, [&](const LocalHamiltonian& hr) {
    const Mat p_emb = tensor_embed(p, {site}, h.sites());
    return jump_operator(herm_eig(hr.dense(), 0.0), p_emb, kp, omega);
  });
  const double head = std::pow(2.0 * M_PI, -0.25) / std::sqrt(kp.sigma);
  for (int r = 0; r < out.radius_count(); ++r) {
    out.bound_values.push_back(head * std::pow(2.0 * out.zeta / kp.sigma, r));
  }
  return out;
}

ShellSeries coherent_shells(const LocalHamiltonian& h, const SiteKernelParams& kp, const Mat& p,
                            int site, int r_max) {
  kp.validate();
  ShellSeries out = build_series(h, site, r_max, [&](const LocalHamiltonian& hr) {
    const Mat p_emb = tensor_embed(p, {site}, h.sites());
    const Mat c = coherent_term(herm_eig(hr.dense(), 0.0), p_emb, kp);
    return Mat(0.5 * (c + c.adjoint()));
  });
  for (int r = 0; r < out.radius_count(); ++r) {
    out.bound_values.push_back(r == 0
                                   ? 3.0 * std::log(2.0 * std::sqrt(kp.delta * kp.beta))
                                   : 6.0 * std::pow(6.0 * out.zeta * kp.beta, r));
  }
  return out;
}

Mat region_restriction(const Mat& x, const std::vector<int>& region, int n) {
  std::vector<int> outside;
  std::set<int> reg(region.begin(), region.end());
  for (int i = 0; i < n; ++i) {
    if (reg.count(i) == 0) outside.push_back(i);
  }
  if (outside.empty()) return x;
  const Mat reduced = partial_trace(x, outside, n) / std::pow(2.0, outside.size());
  std::vector<int> kept(reg.begin(), reg.end());
  return tensor_embed(reduced, kept, n);
}

double support_defect(const Mat& x, const std::vector<int>& region, int n, std::uint64_t seed) {
  std::set<int> reg(region.begin(), region.end());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    if (reg.count(i) > 0) continue;
    SplitMix64 rng = SplitMix64::derive(seed, {0x737570706f7274ULL, static_cast<uint64_t>(i)});
    const Mat u = random_single_site_unitary(rng, i, n);
    worst = std::max(worst, op_norm(u * x * u.adjoint() - x));
  }
  return worst;
}

TruncationCheck lr_truncation_check(const LocalHamiltonian& h, const Mat& o_local,
                                    const std::vector<int>& x, const std::vector<int>& omega,
                                    const std::vector<int>& lambda, double t) {
  const std::set<int> xs(x.begin(), x.end());
  const std::set<int> os(omega.begin(), omega.end());
  const std::set<int> ls(lambda.begin(), lambda.end());
  for (int s : xs) {
    if (os.count(s) == 0) throw std::invalid_argument("X must be contained in Omega");
  }
  for (int s : os) {
    if (ls.count(s) == 0) throw std::invalid_argument("Omega must be contained in Lambda");
  }

  std::vector<int> boundary;
  for (int s : ls) {
    if (os.count(s) == 0) boundary.push_back(s);
  }

  TruncationCheck out;
  if (boundary.empty()) {
    // Omega = Lambda: identical Hamiltonians, identical conjugations.
    out.lhs_norm = 0.0;
    out.bound = 0.0;
    out.ell = LocalHamiltonian::infinite_distance;
    out.pass = true;
    return out;
  }

  int ell = LocalHamiltonian::infinite_distance;
  for (int i : xs) {
    for (int j : boundary) ell = std::min(ell, h.dist(i, j));
  }
  if (ell < 2) throw std::invalid_argument("dist(X, Lambda \\ Omega) must be at least 2");
  out.ell = ell;

  const Mat o_emb = tensor_embed(o_local, x, h.sites());
  const Mat big = conjugate_by_evolution(herm_eig(h.region_dense(lambda), 0.0), o_emb, t);
  const Mat small = conjugate_by_evolution(herm_eig(h.region_dense(omega), 0.0), o_emb, t);
  out.lhs_norm = (t == 0.0) ? 0.0 : op_norm(big - small);
  out.bound = op_norm(o_local) * static_cast<double>(x.size()) *
              std::pow(2.0 * h.zeta() * std::abs(t), ell) / factorial(ell);
  out.pass = out.lhs_norm <= out.bound;
  return out;
}

Superoperator truncated_lindbladian(const LocalHamiltonian& h, double beta,
                                    const FieldResonantParams& params, int radius) {
  if (static_cast<int>(params.site.size()) != h.sites()) {
    throw std::invalid_argument("one kernel parameter set per site required");
  }
  for (const SiteKernelParams& kp : params.site) {
    if (std::abs(kp.beta - beta) > 1e-12 * beta) {
      throw std::invalid_argument("kernel parameters disagree with the requested beta");
    }
  }
  const Eigen::Index d = Eigen::Index{1} << h.sites();
  Superoperator total = Superoperator::zero(d);
  for (int j = 0; j < h.sites(); ++j) {
    const SiteKernelParams& kp = params.site[j];
    kp.validate();
    const SpectralData sp = herm_eig(h.truncated(j, radius).dense());
    Mat gen_eig = Mat::Zero(d * d, d * d);
    Mat k = Mat::Zero(d, d);
    for (char label : {'X', 'Y', 'Z'}) {
      const Mat p_emb = tensor_embed(pauli(label), {j}, h.sites());
      gen_eig += dissipative_piece_eig(sp, p_emb, kp);
      k += coherent_term(sp, p_emb, kp);
    }
    total += Superoperator{d, gen_eig}.transformed(sp.basis.adjoint());
    total += Superoperator::commutator(0.5 * (k + k.adjoint()));
  }
  return total;
}

TruncationGap truncation_gap(const Superoperator& l, const Superoperator& l_r, double t, int n,
                             int radius, std::uint64_t seed, int restarts) {
  const Superoperator diff{l.dim, SemigroupSolver(l).propagator(t).m -
                                      SemigroupSolver(l_r).propagator(t).m};
  TruncationGap out;
  out.lower_estimate = induced_1norm_lower(diff, seed, restarts);
  out.paper_bound = 60.0 * static_cast<double>(n) * t * std::pow(2.0, -radius);
  return out;
}

}  // namespace gibbslab
