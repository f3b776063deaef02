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

#include <cstdint>
#include <vector>

#include "gibbslab/dense.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/lindbladian.hpp"
#include "gibbslab/superop.hpp"

namespace gibbslab {

// Radius decomposition of an operator built from interaction-truncated
// Hamiltonians: shells[r] is the radius-r increment, supported on balls[r],
// with norms[r] <= bound_values[r] the claim under test.  Shells are
// diagonalized without eigenvalue grouping: conjugations must respect ball
// support exactly, which energy rounding at large fields would destroy.
struct ShellSeries {
  int center = 0;
  double zeta = 0.0;
  std::vector<std::vector<int>> balls;
  std::vector<Mat> shells;
  std::vector<double> norms;
  std::vector<double> bound_values;

  int radius_count() const { return static_cast<int>(shells.size()); }
  Mat reconstruction() const;  // sum of all shells
};

// F_0 = e^{iVt} A e^{-iVt}, F_r = e^{iH_r t} A e^{-iH_r t} - (r-1 term);
// bounds ||A|| and ||A|| (2 zeta |t|)^r / r!.
ShellSeries heisenberg_shells(const LocalHamiltonian& h, const Mat& a, int site, double t,
                              int r_max);

// G_r = A^P_{H_r}(w) - A^P_{H_{r-1}}(w); bounds (2pi)^{-1/4} sigma^{-1/2} (2 zeta/sigma)^r.
ShellSeries jump_shells(const LocalHamiltonian& h, const SiteKernelParams& kp, const Mat& p,
                        int site, double omega, int r_max);

// K_r = Herm(C^P_{H_r} - C^P_{H_{r-1}}); bounds 3 log(2 sqrt(delta beta)) and 6 (6 zeta beta)^r.
ShellSeries coherent_shells(const LocalHamiltonian& h, const SiteKernelParams& kp, const Mat& p,
                            int site, int r_max);

// Projection onto operators acting trivially outside `region`:
// (tr_outside x)/2^{#outside} tensored with identity.  ||x - restriction|| is
// the support defect used by the shell certification.
Mat region_restriction(const Mat& x, const std::vector<int>& region, int n);

// Largest conjugation defect of x under Haar-ish random single-site unitaries
// placed on each site outside `region` in turn.
double support_defect(const Mat& x, const std::vector<int>& region, int n, std::uint64_t seed);

struct TruncationCheck {
  double lhs_norm = 0.0;
  double bound = 0.0;
  int ell = 0;
  bool pass = false;
};

// || e^{iH_Lambda T} O_X e^{-iH_Lambda T} - e^{iH_Omega T} O_X e^{-iH_Omega T} ||
// against ||O|| |X| (2 zeta T)^ell / ell!, ell = dist(X, Lambda \ Omega).
// Requires X subset Omega subset Lambda and ell >= 2.
TruncationCheck lr_truncation_check(const LocalHamiltonian& h, const Mat& o_local,
                                    const std::vector<int>& x, const std::vector<int>& omega,
                                    const std::vector<int>& lambda, double t);

// Sum over sites of radius-truncated one-site generators: dissipative part
// from the truncated spectral data, coherent part as -i[K_R, .] with K_R the
// Hermitized truncated coherent term.
Superoperator truncated_lindbladian(const LocalHamiltonian& h, double beta,
                                    const FieldResonantParams& params, int radius);

struct TruncationGap {
  double lower_estimate = 0.0;
  double paper_bound = 0.0;
};

// Sampled induced-1-norm lower estimate of ||e^{tL} - e^{tL_R}|| against
// 60 n t 2^{-R}; the estimate lower-bounds the diamond norm the claim is
// stated in, so estimate <= bound is a valid (one-sided) check.
TruncationGap truncation_gap(const Superoperator& l, const Superoperator& l_r, double t, int n,
                             int radius, std::uint64_t seed, int restarts = 256);

}  // namespace gibbslab
