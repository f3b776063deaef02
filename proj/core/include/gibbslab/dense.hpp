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
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace gibbslab {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Number of qubits for a dimension; throws std::invalid_argument unless dim
// is a positive power of two.
int qubit_count(Eigen::Index dim);

// Single-qubit Pauli matrix for label in {'I','X','Y','Z'}.
const Mat& pauli(char label);

Mat kron(const Mat& a, const Mat& b);
Mat comm(const Mat& a, const Mat& b);
Mat anticomm(const Mat& a, const Mat& b);

// Embeds a 2^k-dimensional operator acting on the listed sites into the
// n-qubit space.  Basis convention: site 0 is the most significant bit of
// the computational index (leftmost Kronecker factor); sites[0] is likewise
// the most significant bit of the local operator's index.  Sites must be
// distinct and in [0, n).
Mat tensor_embed(const Mat& local, const std::vector<int>& sites, int n);

// Partial trace over the listed sites; surviving sites keep their relative
// order.  Inverse check: partial_trace(tensor_embed(a, {i}, n), others, n)
// equals a when the traced factor has unit trace per site.
Mat partial_trace(const Mat& x, const std::vector<int>& traced_sites, int n);

// Grouped eigendecomposition of a Hermitian operator.  Eigenvalues closer
// than the merge width are replaced by the group mean, and every downstream
// spectral function acts on the rounded operator  sum_g eigenvalues[g] *
// projectors[g].  Using that one rounded operator consistently keeps exact
// identities (Fourier sums, Gibbs-weight ratios) exact to rounding instead
// of leaking the eigensolver's noise into them.
struct SpectralData {
  Eigen::VectorXd eigenvalues;  // group representatives, strictly ascending
  std::vector<Mat> projectors;  // orthogonal spectral projectors, one per group
  Mat basis;                    // unitary; column c spans group group_of[c]
  std::vector<int> group_of;    // column -> group index, non-decreasing
  double grouping_tol_abs = 0;  // absolute merge width that was applied

  Eigen::Index dim() const { return basis.rows(); }
  int group_count() const { return static_cast<int>(eigenvalues.size()); }
  double spectral_range() const;
  // Representative eigenvalue for each basis column (size dim()).
  Eigen::VectorXd column_values() const;
};

// grouping_tol is relative to the spectral range; consecutive eigenvalues
// with gap <= grouping_tol * range share a group.
SpectralData herm_eig(const Mat& h, double grouping_tol = 1e-9);

// f applied to the rounded operator: sum_g f(E_g) projectors[g].
Mat mat_func(const SpectralData& s, const std::function<cxd(double)>& f);

// exp(-beta H) / tr exp(-beta H), computed with weights shifted by the ground
// energy so no exponential overflows.
Mat gibbs_state(const SpectralData& s, double beta);

// All three norms are evaluated from a full singular value decomposition.
double op_norm(const Mat& x);
double trace_norm(const Mat& x);
double hs_norm(const Mat& x);
double trace_distance(const Mat& a, const Mat& b);  // (1/2)||a-b||_1

bool is_hermitian(const Mat& x, double tol = 1e-10);

}  // namespace gibbslab
