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

#include <array>
#include <vector>

#include "gibbslab/dense.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/superop.hpp"

namespace gibbslab {

// The three Gaussian overlap integrals (1/2pi) Int gamma(w) f_hat(w-nu)^2 dw
// at nu = +h (a), nu = -h (b, the resonant downward direction), nu = 0 (c),
// for the field-resonant parameters at inverse temperature beta and field
// gap h.
struct OverlapTriple {
  double int_gamma_a2 = 0.0;
  double int_gamma_b2 = 0.0;
  double int_gamma_c2 = 0.0;
  SiteKernelParams params;

  // Per-Pauli-sector decay rates of the strictly local channel.
  double sector_xy() const { return int_gamma_a2 + int_gamma_b2 + 2.0 * int_gamma_c2; }
  double sector_z() const { return 2.0 * int_gamma_a2 + 2.0 * int_gamma_b2; }
};

OverlapTriple overlap_integrals(double h, double beta);
// Same integrals by quadrature, for the cross-check.
OverlapTriple overlap_integrals_quadrature(double h, double beta, double rel_tol = 1e-10);
// The control family delta = eta = sigma = 1/beta, whose b-overlap decays
// like (1/sqrt2) e^{-(1-beta h)^2/4} instead of staying bounded below.
OverlapTriple overlap_integrals_canonical(double h, double beta);

// One step of the strictly local dissipative evolution at site 0 of an
// m-qubit register, field rotated to (h/2) sigma_Z:
//   S = Id + delta (2b D[s-] + 2a D[s+] + c (sZ . sZ - Id)).
Superoperator local_dissipative_channel(double h, double beta, double delta, int m);

struct ContractionResult {
  double input_trace_norm = 0.0;
  double out_trace_norm = 0.0;
  double bound = 0.0;      // (1 - (e^{-1/4}/sqrt2) delta) ||X||_1
  double factor_xy = 0.0;  // 1 - delta (a + b + 2c)
  double factor_z = 0.0;   // 1 - delta (2a + 2b)
  bool pass = false;
};

// Applies the channel to X (which must satisfy tr_site0(X) = 0 to 1e-10)
// and checks the contraction inequality.  delta must lie in [0, 1/(3 sqrt2)].
ContractionResult local_dissipative_contraction(double h, double beta, double delta, const Mat& x,
                                                int m);

// p with p0 + p1 P(1) + p2 P(2) + p3 P(3) reproducing the sorted coefficients
// c(1) >= c(2) >= c(3) through the character equations
//   c(1) = p0+p1-p2-p3, c(2) = p0-p1+p2-p3, c(3) = p0-p1-p2+p3,
// and |p0|+|p1|+|p2|+|p3| = c(1).  Inputs must be nonnegative.
std::array<double, 4> pauli_norm_decomposition(double cx, double cy, double cz);

struct UpdateMatrixBound {
  double c_diag = 0.0;            // e^{-1/4}/sqrt2
  std::vector<double> c_r;        // 120 (6 beta D L)^r, r = 1..
  double offdiag_sum = 0.0;       // sum of c_r
  double c_const = 0.0;           // 144 + 324 (log(2 sqrt(delta_max beta)) + 4)^2
};

UpdateMatrixBound update_matrix_bound(double beta, int d_deg, int locality, double delta_max,
                                      int r_max = 32);

// 1 - delta/(2n) + c_const delta^2; delta must lie in [0, 1/(6 sqrt2)].
double dobrushin_column_bound(int n, double beta, int d_deg, int locality, double delta_max,
                              double delta);

// beta threshold under which the column bound is provably < 1 at the
// canonical step size delta = 1/(4 n c_const).
bool dobrushin_regime(double beta, int d_deg, int locality);

int mixing_time_bound(int n, double eps);  // ceil(2 log(2n/eps))

}  // namespace gibbslab
