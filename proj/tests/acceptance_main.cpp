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

// Acceptance gate: eleven numbered criteria, one verdict line each.  Every
// tolerance is pinned here, next to the check it gates.  Exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gibbslab/dense.hpp"
#include "gibbslab/dobrushin.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/lindbladian.hpp"
#include "gibbslab/quasilocality.hpp"
#include "gibbslab/refrigeration.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/separability.hpp"
#include "gibbslab/superop.hpp"

namespace gibbslab {
namespace {

constexpr std::uint64_t kSeed = 20260815ULL;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Tracks the worst margin of a <= comparison and fails on violation.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << "FAILED: " << what;
    }
  }
};

// Random chain instance: random Hermitian nearest-neighbour couplings of unit
// norm plus random-sign on-site z fields of magnitude h.
LocalHamiltonian random_chain(int n, double h, SplitMix64& rng) {
  std::vector<LocalTerm> terms;
  for (int i = 0; i + 1 < n; ++i) {
    Mat w = random_hermitian(rng, 4);
    w /= op_norm(w);
    terms.push_back(dense_term(w, {i, i + 1}));
  }
  ExternalField field = ExternalField::zero(n);
  for (int i = 0; i < n; ++i) {
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    field.per_site[i] = sign * (h / 2.0) * pauli('Z');
  }
  return LocalHamiltonian::build(n, std::move(terms), std::move(field));
}

LocalHamiltonian xx_chain(int n, double h) {
  return chain_hamiltonian(n, "XX", ExternalField::uniform_z(n, h));
}

// ---- 1. detailed balance ---------------------------------------------------

Verdict criterion_detailed_balance() {
  Verdict v;
  const double tol_db = 1e-7, tol_fp = 1e-8;
  const double betas[3] = {0.2, 0.05, 0.01};
  double worst_db = 0.0, worst_fp = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + (i % 3);
    const double beta = betas[(i / 3) % 3];
    const double hsel[4] = {0.0, 1.0 / beta, 100.0 / beta, 1e6};
    const double h = hsel[i % 4];
    SplitMix64 rng = SplitMix64::derive(kSeed, {1, static_cast<std::uint64_t>(i)});
    LocalHamiltonian ham = random_chain(n, h, rng);
    LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
    worst_db = std::max(worst_db, lb.db_defect());
    worst_fp = std::max(worst_fp, lb.fixed_point_defect());
    std::ostringstream what;
    what << "instance " << i << " (n=" << n << ", beta=" << beta << ", h=" << h << ")";
    v.require(lb.db_defect() <= tol_db, what.str() + " db defect");
    v.require(lb.fixed_point_defect() <= tol_fp, what.str() + " fixed point");
  }
  v.detail << "20 instances, max db defect " << worst_db << " (tol 1e-7), max ||L(sigma)||_1 "
           << worst_fp << " (tol 1e-8)";
  return v;
}

// ---- 2. field refrigeration -------------------------------------------------

LocalHamiltonian projector11_base() {
  Mat p = Mat::Zero(4, 4);
  p(3, 3) = 1.0;
  return LocalHamiltonian::build(2, {dense_term(p, {0, 1})}, ExternalField::zero(2));
}

// Two commuting diagonal projectors on three sites: |11><11| on {0,1} and
// |00><00| on {1,2}.  States |011> and |000> have energies 0 and 1.
LocalHamiltonian two_projector_base() {
  Mat p11 = Mat::Zero(4, 4);
  p11(3, 3) = 1.0;
  Mat p00 = Mat::Zero(4, 4);
  p00(0, 0) = 1.0;
  return LocalHamiltonian::build(3, {dense_term(p11, {0, 1}), dense_term(p00, {1, 2})},
                                 ExternalField::zero(3));
}

Verdict criterion_refrigeration() {
  Verdict v;
  const double tol_marginal = 1e-10, tol_closed = 1e-12;
  struct Inst {
    LocalHamiltonian base;
    double beta, h;
    int t;
    int idx_e0, idx_e1;  // basis states with base energies 0 and 1
  };
  // All instances stay at or below 7 total qubits.
  const std::vector<Inst> insts = {
      {projector11_base(), 0.5, 3.0, 2, 0, 3},  {projector11_base(), 0.3, 1.0, 3, 0, 3},
      {projector11_base(), 0.5, 50.0, 1, 0, 3}, {two_projector_base(), 0.4, 2.0, 2, 3, 0},
      {projector11_base(), 0.25, 0.5, 4, 0, 3}};
  double worst = 0.0;
  for (size_t i = 0; i < insts.size(); ++i) {
    const Inst& in = insts[i];
    Gadget g = build_gadget(in.base, in.h, in.t);
    double dist = verify_marginal(g, in.beta);
    worst = std::max(worst, dist);
    v.require(g.total.sites() <= 7, "instance size");
    v.require(dist <= tol_marginal, "marginal distance, instance " + std::to_string(i));

    // Independent recovery of beta_eff from the dense marginal populations.
    Mat rho = gibbs_state(herm_eig(g.total.dense(), 0.0), in.beta);
    Mat marg = partial_trace(rho, g.ancilla_sites(), g.total.sites());
    double recovered = std::log(marg(in.idx_e0, in.idx_e0).real() / marg(in.idx_e1, in.idx_e1).real());
    v.require(std::abs(recovered - beta_eff(in.beta, in.h, in.t)) <= tol_closed,
              "closed form vs marginal, instance " + std::to_string(i));
  }
  // h = 1/2 reproduces t*beta/2 exactly.
  const double exact = beta_eff(0.25, 0.5, 4);
  v.require(std::abs(exact - 4 * 0.25 / 2.0) <= 1e-15, "h=1/2 exact identity");
  v.detail << "5 instances <= 7 qubits, max marginal trace norm " << worst
           << " (tol 1e-10); beta_eff closed form within 1e-12";
  return v;
}

// ---- 3. hardness parameter regimes -------------------------------------------

Verdict criterion_hardness_regimes() {
  Verdict v;
  double worst = 1e300;
  for (int i = 1; i <= 19; ++i) {
    const double beta = 0.05 * i;
    for (auto regime : {RefrigerationRegime::case1, RefrigerationRegime::case2}) {
      RefrigerationParams p = choose_params(beta, regime);
      const double be = beta_eff(beta, p.h_min, p.t);
      worst = std::min(worst, be);
      v.require(be >= 1.87, "beta_eff >= 1.87 at beta=" + std::to_string(beta));
    }
  }
  v.detail << "beta in {0.05..0.95}, both regimes, min beta_eff " << worst << " >= 1.87";
  return v;
}

// ---- 4. field-independent Lieb-Robinson shells -------------------------------

Verdict criterion_lr_shells() {
  Verdict v;
  double worst_ratio = 0.0;
  std::vector<double> reference_bounds;
  for (double t : {0.05, 0.1, 0.2}) {
    reference_bounds.clear();
    for (double h : {0.0, 10.0, 1e4}) {
      LocalHamiltonian ham = xx_chain(6, h);
      v.require(std::abs(ham.zeta() - 4.0) < 1e-12, "zeta = 4");
      ShellSeries ss = heisenberg_shells(ham, pauli('X'), 2, t, 5);
      for (int r = 1; r <= 5; ++r) {
        const double bound = std::pow(2.0 * 4.0 * t, r) / std::tgamma(r + 1.0);
        v.require(std::abs(ss.bound_values[r] - bound) <= 1e-12 * bound, "bound formula");
        v.require(ss.norms[r] <= bound * (1.0 + 1e-12),
                  "||F_r|| <= (2 zeta t)^r/r! at t=" + std::to_string(t) +
                      ", h=" + std::to_string(h) + ", r=" + std::to_string(r));
        if (bound > 0.0) worst_ratio = std::max(worst_ratio, ss.norms[r] / bound);
      }
      // The bound vector is identical across h: record once, compare after.
      if (reference_bounds.empty()) {
        reference_bounds = ss.bound_values;
      } else {
        for (size_t r = 0; r < reference_bounds.size(); ++r) {
          v.require(ss.bound_values[r] == reference_bounds[r], "h-independent bound");
        }
      }
    }
  }
  v.detail << "6-qubit chain, t in {0.05,0.1,0.2}, h in {0,10,1e4}, r <= 5; "
           << "max ||F_r||/bound " << worst_ratio << "; bounds identical across h";
  return v;
}

// ---- 5. jump/coherent quasi-locality -----------------------------------------

Verdict criterion_jump_coherent() {
  Verdict v;
  const double beta = 1.0 / 48.0;  // = 1/(12 zeta) on these chains
  double worst_g = 0.0, worst_k = 0.0;
  for (double h : {0.0, 10.0, 1e4}) {
    LocalHamiltonian ham = xx_chain(4, h);
    v.require(beta <= 1.0 / (12.0 * ham.zeta()), "beta regime");
    SiteKernelParams kp = SiteKernelParams::field_resonant(beta, ham.field().gap(1));
    for (double omega : {0.0, kp.sigma}) {
      ShellSeries gs = jump_shells(ham, kp, pauli('X'), 1, omega, 3);
      for (int r = 0; r < gs.radius_count(); ++r) {
        v.require(gs.norms[r] <= gs.bound_values[r] * (1.0 + 1e-12),
                  "||G_r|| bound at h=" + std::to_string(h) + ", r=" + std::to_string(r));
        if (gs.bound_values[r] > 0.0) worst_g = std::max(worst_g, gs.norms[r] / gs.bound_values[r]);
      }
    }
    ShellSeries ks = coherent_shells(ham, kp, pauli('X'), 1, 3);
    for (int r = 0; r < ks.radius_count(); ++r) {
      v.require(ks.norms[r] <= ks.bound_values[r] * (1.0 + 1e-12),
                "||K_r|| bound at h=" + std::to_string(h) + ", r=" + std::to_string(r));
      if (ks.bound_values[r] > 0.0) worst_k = std::max(worst_k, ks.norms[r] / ks.bound_values[r]);
    }
  }
  // Pure-Z commuting case: the coherent term of sigma_Z vanishes identically.
  LocalHamiltonian zz = chain_hamiltonian(4, "ZZ", ExternalField::uniform_z(4, 5.0));
  SiteKernelParams kp = SiteKernelParams::field_resonant(beta, 5.0);
  Mat cz = coherent_term(herm_eig(zz.dense()), tensor_embed(pauli('Z'), {1}, 4), kp);
  v.require(op_norm(cz) <= 1e-12, "C^{sigma_Z} = 0 in the commuting case");
  v.detail << "4-qubit chains, beta = 1/48, h in {0,10,1e4}; max ||G_r||/bound " << worst_g
           << ", max ||K_r||/bound " << worst_k << "; ||C^Z|| = " << op_norm(cz);
  return v;
}

// ---- 6. kernel identities ----------------------------------------------------

Verdict criterion_kernels() {
  Verdict v;
  const double tol = 1e-8;
  double worst_m = 0.0, worst_f = 0.0;
  for (double beta : {0.05, 0.2, 1.0}) {
    for (double gap : {0.0, 1.0 / beta, 10.0 / beta}) {
      SiteKernelParams p = SiteKernelParams::field_resonant(beta, gap);
      for (int r = 0; r <= 4; ++r) {
        const double closed = moment_b2_closed(p, r);
        const double quad = moment_b2_quadrature(p, r, 1e-10);
        const double rel = std::abs(quad - closed) / closed;
        worst_m = std::max(worst_m, rel);
        v.require(rel <= tol, "b2 moment r=" + std::to_string(r));
      }
      FourierCheck fc = fourier_consistency_check(
          p, {0.0, 0.5 / beta, -1.0 / beta, -2.0 * p.delta}, 1e-9);
      worst_f = std::max({worst_f, fc.max_error_b1, fc.max_error_b2});
      v.require(fc.converged, "fourier quadrature convergence");
      v.require(fc.max_error_b1 <= tol, "b1_hat transform");
      v.require(fc.max_error_b2 <= tol, "b2_hat transform");
    }
    // b1 moment upper bounds on the (beta, sigma) grid.
    SiteKernelParams q = SiteKernelParams::field_resonant(beta, 0.0);
    for (int r = 0; r <= 2; ++r) {
      v.require(moment_b1_quadrature(q, r, 1e-7) <= moment_b1_bound(q, r),
                "b1 moment bound r=" + std::to_string(r));
    }
  }
  v.detail << "max relative b2-moment error " << worst_m << ", max transform error " << worst_f
           << " (tol 1e-8); b1 moment bounds hold";
  return v;
}

// ---- 7. contraction constant ---------------------------------------------------

Verdict criterion_contraction() {
  Verdict v;
  const double beta = 0.05, delta = 0.2;
  const double c_diag = std::exp(-0.25) / std::sqrt(2.0);
  std::vector<double> hs;
  for (int k = 0; k < 17; ++k) hs.push_back(std::pow(10.0, -2.0 + 0.5 * k) / beta);

  double worst_overlap = 1e300, worst_quad = 0.0;
  for (double h : hs) {
    OverlapTriple closed = overlap_integrals(h, beta);
    OverlapTriple quad = overlap_integrals_quadrature(h, beta, 1e-11);
    worst_overlap = std::min(worst_overlap, closed.int_gamma_b2);
    worst_quad = std::max({worst_quad, std::abs(closed.int_gamma_a2 - quad.int_gamma_a2),
                           std::abs(closed.int_gamma_b2 - quad.int_gamma_b2),
                           std::abs(closed.int_gamma_c2 - quad.int_gamma_c2)});
    v.require(closed.int_gamma_b2 >= c_diag - 1e-9, "b-overlap floor at h=" + std::to_string(h));
    v.require(worst_quad <= 1e-9, "overlap quadrature tolerance");
  }

  // 200 seeded random site-0-traceless inputs spread across the h grid.
  double worst_excess = -1e300;
  for (int i = 0; i < 200; ++i) {
    SplitMix64 rng = SplitMix64::derive(kSeed, {7, static_cast<std::uint64_t>(i)});
    const double h = hs[i % hs.size()];
    Mat x = random_hermitian(rng, 4);
    x -= 0.5 * kron(Mat::Identity(2, 2), partial_trace(x, {0}, 2));
    ContractionResult r = local_dissipative_contraction(h, beta, delta, x, 2);
    const double cap = (1.0 - c_diag * delta) * r.input_trace_norm;
    worst_excess = std::max(worst_excess, r.out_trace_norm - cap);
    v.require(r.out_trace_norm <= cap + 1e-10, "channel contraction, input " + std::to_string(i));
  }

  // Negative control: fixed canonical parameters lose the overlap.
  const double dead = overlap_integrals_canonical(10.0 / beta, beta).int_gamma_b2;
  v.require(dead <= 1e-8, "canonical overlap decays");
  v.detail << "min b-overlap " << worst_overlap << " >= " << c_diag
           << "; 200 inputs, max excess over (1 - c delta)||X||_1 = " << worst_excess
           << "; canonical control " << dead << " <= 1e-8";
  return v;
}

// ---- 8. combinatorial identity --------------------------------------------------

long brute_cluster_count(const LocalHamiltonian& h, int origin, int k) {
  const int m = static_cast<int>(h.terms().size());
  if (m == 0) return 0;
  std::vector<int> idx(k, 0);
  long count = 0;
  while (true) {
    std::vector<char> site_seen(h.sites(), 0);
    bool ok = false;
    for (int s : h.terms()[idx[0]].support) ok |= (s == origin);
    for (int s : h.terms()[idx[0]].support) site_seen[s] = 1;
    for (int j = 1; j < k && ok; ++j) {
      bool touches = false;
      for (int s : h.terms()[idx[j]].support) touches |= (site_seen[s] != 0);
      ok = touches;
      for (int s : h.terms()[idx[j]].support) site_seen[s] = 1;
    }
    if (ok) ++count;
    int j = k - 1;
    while (j >= 0 && ++idx[j] == m) idx[j--] = 0;
    if (j < 0) break;
  }
  return count;
}

Verdict criterion_combinatorics() {
  Verdict v;
  double worst = 0.0;
  for (double alpha : {0.05, 0.2, 0.5}) {
    for (int l : {1, 2, 3}) {
      for (int k : {1, 2, 3, 4}) {
        if (alpha * l > 1.0) continue;
        const double err = combo_identity_check(alpha, l, k, 400);
        worst = std::max(worst, err);
        v.require(err <= 1e-9, "series identity alpha=" + std::to_string(alpha));
      }
    }
  }
  // Counts: chain and triangle, brute force plus the factorial bound.
  LocalHamiltonian chain4 = xx_chain(4, 0.5);
  LocalHamiltonian tri = LocalHamiltonian::build(
      3, {pauli_term("XX", {0, 1}), pauli_term("XX", {1, 2}), pauli_term("ZZ", {0, 2})},
      ExternalField::zero(3));
  for (const auto& ham : {chain4, tri}) {
    for (int origin = 0; origin < ham.sites(); ++origin) {
      for (int k = 1; k <= 4; ++k) {
        const long got = static_cast<long>(enumerate_clusters(ham, origin, k).size());
        v.require(got == brute_cluster_count(ham, origin, k), "brute-force count");
        v.require(static_cast<double>(got) <=
                      cluster_count_bound(k, ham.max_degree(), ham.locality()),
                  "count bound");
      }
    }
  }
  v.detail << "series identity max rel err " << worst
           << " (tol 1e-9); counts match brute force for k <= 4 on chain and triangle";
  return v;
}

// ---- 9. araki expansional --------------------------------------------------------

Verdict criterion_araki() {
  Verdict v;
  int in_regime = 0;
  // Instances chosen inside the corollary regime (D = L = 2 chains).
  for (double beta : {1e-5, 1.8e-5}) {
    for (double h : {0.0, 10.0, 1000.0}) {
      for (int n : {2, 3}) {
        LocalHamiltonian ham = xx_chain(n, h);
        for (int origin = 0; origin < n; ++origin) {
          ArakiExpansional a = araki_expansional(ham, beta, origin);
          if (!a.hypotheses_ok) continue;
          ++in_regime;
          v.require(a.deviation <= a.aggregate_bound,
                    "deviation <= aggregate at beta=" + std::to_string(beta) +
                        ", h=" + std::to_string(h));
        }
      }
    }
  }
  v.require(in_regime >= 20, "enough in-regime instances");

  // W = 0: the expansional is exactly the identity.
  LocalHamiltonian free3 = LocalHamiltonian::build(3, {}, ExternalField::uniform_z(3, 50.0));
  ArakiExpansional f = araki_expansional(free3, 0.3, 1);
  v.require(f.deviation <= 1e-12, "W = 0 deviation");
  v.detail << in_regime << " in-regime instances all satisfy deviation <= bound; W=0 deviation "
           << f.deviation << " <= 1e-12";
  return v;
}

// ---- 10. mixing -------------------------------------------------------------------

Verdict criterion_mixing() {
  Verdict v;
  const double target = 1e-6, mono_slack = 1e-10;
  double worst_final = 0.0, min_gap = 1e300;
  int instances = 0;
  for (int n : {2, 3, 4}) {
    for (double beta : {0.2, 0.05}) {
      for (double hb : {0.0, 2.0}) {
        const double h = hb / beta;
        LocalHamiltonian ham = xx_chain(n, h);
        LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
        const double gap = spectral_gap(lb.generator);
        min_gap = std::min(min_gap, gap);
        v.require(gap > 0.0, "positive gap");

        SplitMix64 rng = SplitMix64::derive(kSeed, {10, static_cast<std::uint64_t>(instances)});
        Vec psi = random_state(rng, Eigen::Index{1} << n);
        Mat rho0 = psi * psi.adjoint();
        const double t_end = 25.0 / gap;
        std::vector<double> grid;
        for (int k = 0; k <= 20; ++k) grid.push_back(t_end * k / 20.0);
        auto curve = mixing_curve(lb.generator, rho0, lb.gibbs, grid);
        for (size_t k = 1; k < curve.size(); ++k) {
          v.require(curve[k].distance <= curve[k - 1].distance + mono_slack, "monotone decay");
        }
        worst_final = std::max(worst_final, curve.back().distance);
        v.require(curve.back().distance <= target, "final distance, n=" + std::to_string(n));
        ++instances;
      }
    }
  }
  // Exact bound evaluators.
  v.require(mixing_time_bound(4, 0.01) == 14, "t0 = ceil(2 log(2n/eps))");
  const double beta = 1e-6, dmax = 1e6;
  UpdateMatrixBound u = update_matrix_bound(beta, 2, 2, dmax);
  const double delta = 1.0 / (4.0 * 4.0 * u.c_const);
  const double col = dobrushin_column_bound(4, beta, 2, 2, dmax, delta);
  v.require(std::abs(col - (1.0 - delta / 8.0 + u.c_const * delta * delta)) <= 1e-15,
            "column-sum formula");
  v.require(col < 1.0, "column sum below one");
  v.detail << instances << " instances (n <= 4): min gap " << min_gap << ", max final distance "
           << worst_final << " <= 1e-6; t0(4, 0.01) = 14; column bound " << col << " < 1";
  return v;
}

// ---- 11. semigroup truncation -------------------------------------------------------

Verdict criterion_truncation() {
  Verdict v;
  const int n = 4;
  const double t = 1.0, beta = 1.0 / 48.0;
  LocalHamiltonian ham = xx_chain(n, 1.0);
  FieldResonantParams fr = field_resonant_params(ham, beta);
  LindbladianBuild full = build_lindbladian(ham, beta, fr);
  for (int radius : {4, 8, 12}) {
    Superoperator lr = truncated_lindbladian(ham, beta, fr, radius);
    TruncationGap g = truncation_gap(full.generator, lr, t, n, radius, kSeed + radius, 256);
    v.require(std::abs(g.paper_bound - 60.0 * n * t * std::pow(2.0, -radius)) <=
                  1e-12 * g.paper_bound,
              "bound formula");
    v.require(g.lower_estimate <= g.paper_bound, "estimate <= 60 n t 2^{-R}, R=" +
                                                     std::to_string(radius));
    v.detail << "R=" << radius << ": estimate " << g.lower_estimate << " <= bound "
             << g.paper_bound << "  ";
  }
  return v;
}

}  // namespace
}  // namespace gibbslab

int main() {
  using Criterion = gibbslab::Verdict (*)();
  struct Entry {
    const char* name;
    Criterion fn;
    double budget_s;
  };
  const Entry entries[] = {
      {"detailed-balance", gibbslab::criterion_detailed_balance, 120.0},
      {"field-refrigeration", gibbslab::criterion_refrigeration, 30.0},
      {"hardness-regimes", gibbslab::criterion_hardness_regimes, 1.0},
      {"lieb-robinson-shells", gibbslab::criterion_lr_shells, 60.0},
      {"jump-coherent-locality", gibbslab::criterion_jump_coherent, 120.0},
      {"kernel-identities", gibbslab::criterion_kernels, 60.0},
      {"contraction-constant", gibbslab::criterion_contraction, 60.0},
      {"combinatorial-identity", gibbslab::criterion_combinatorics, 30.0},
      {"araki-expansional", gibbslab::criterion_araki, 60.0},
      {"mixing", gibbslab::criterion_mixing, 180.0},
      {"semigroup-truncation", gibbslab::criterion_truncation, 120.0},
  };

  bool all_pass = true;
  int index = 0;
  for (const Entry& e : entries) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    gibbslab::Verdict v = e.fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= e.budget_s;
    const bool pass = v.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("criterion %2d [%s] %s (%.1f s / budget %.0f s)\n    %s%s\n", index, e.name,
                pass ? "PASS" : "FAIL", secs, e.budget_s, v.detail.str().c_str(),
                in_budget ? "" : "; FAILED: runtime budget");
  }
  std::printf("acceptance: %s\n", all_pass ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
