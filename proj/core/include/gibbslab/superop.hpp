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

#include "gibbslab/dense.hpp"

namespace gibbslab {

// Column-stacking vectorization: vec(X)(i + d*j) = X(i, j), so the map
// X -> A X B is represented by kron(B^T, A).
Vec vectorize(const Mat& x);
Mat devectorize(const Vec& v, Eigen::Index dim);

struct Superoperator {
  Eigen::Index dim = 0;  // Hilbert space dimension d; m is d^2 x d^2
  Mat m;

  static Superoperator zero(Eigen::Index dim);
  static Superoperator identity(Eigen::Index dim);
  static Superoperator left(const Mat& a);            // X -> A X
  static Superoperator right(const Mat& b);           // X -> X B
  static Superoperator sandwich(const Mat& a, const Mat& b);  // X -> A X B
  static Superoperator conjugation(const Mat& k);     // X -> K X K^dag
  static Superoperator commutator(const Mat& h);      // X -> -i [H, X]
  static Superoperator dissipator(const Mat& l);      // X -> L X L^dag - (1/2){L^dag L, X}

  Mat apply(const Mat& x) const;
  Mat apply_adjoint(const Mat& x) const;  // action of the Hilbert-Schmidt adjoint

  // Hilbert-Schmidt adjoint equals the conjugate transpose of m.
  Superoperator adjoint() const;

  // Same map expressed in the rotated coordinates X' = U^dag X U.
  Superoperator transformed(const Mat& u) const;

  // Structural defects, both zero (to rounding) for a Lindblad generator.
  double hermiticity_preserving_defect() const;
  double trace_preserving_defect() const;

  Superoperator& operator+=(const Superoperator& o);
  Superoperator& operator-=(const Superoperator& o);
  Superoperator& operator*=(cxd c);
  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  friend Superoperator operator*(cxd c, Superoperator a) { return a *= c; }
};

// Matrix exponential by Pade approximation with scaling and squaring.
Mat expm_dense(const Mat& a);

// Propagators e^{t gen} for many t from one cached factorization.  Uses the
// eigendecomposition when the eigenvector basis is well conditioned and
// falls back to a Schur form with a Pade exponential of the triangular
// factor otherwise, so defective or nearly defective generators stay exact.
class SemigroupSolver {
 public:
  explicit SemigroupSolver(const Superoperator& gen);

  Superoperator propagator(double t) const;
  Mat evolve(const Mat& x, double t) const;

  bool diagonalizable() const { return diagonalizable_; }
  double basis_condition() const { return cond_; }

 private:
  Eigen::Index dim_ = 0;
  bool diagonalizable_ = false;
  double cond_ = 0.0;
  Mat v_, vinv_;  // eigendecomposition route
  Vec evals_;
  Mat q_, t_;  // Schur route
};

Vec generator_eigenvalues(const Superoperator& gen);

// Distance from the imaginary axis to the non-stationary spectrum:
// -max{ Re(z) : |z| > zero_tol * max|spectrum| }.  Returns 0 when every
// eigenvalue sits in the stationary cluster.
double spectral_gap(const Superoperator& gen, double zero_tol = 1e-8);

// Lower bound on the induced trace-norm sup ||S(rho)||_1 over pure states,
// from seeded random restarts with local ascent on the sphere.  Deterministic
// for a fixed (seed, restarts, iters).
double induced_1norm_lower(const Superoperator& s, std::uint64_t seed, int restarts = 128,
                           int iters = 100);

}  // namespace gibbslab
