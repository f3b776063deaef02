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

#include "gibbslab/superop.hpp"

#include <cmath>

#include "doctest.h"
#include "gibbslab/dense.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {
namespace {

TEST_SUITE_BEGIN("superop");

TEST_CASE("vectorize roundtrip is column-stacked") {
  Mat m(2, 2);
  m << 1, 2, 3, 4;
  Vec v = vectorize(m);
  CHECK(v(0) == cxd(1));
  CHECK(v(1) == cxd(3));  // column-major: (row 1, col 0) comes second
  CHECK(op_norm(devectorize(v, 2) - m) < 1e-15);
}

TEST_CASE("elementary superoperators act as advertised") {
  SplitMix64 rng(3);
  Mat a = random_hermitian(rng, 4);
  Mat b = random_hermitian(rng, 4);
  Mat x = random_hermitian(rng, 4);
  CHECK(op_norm(Superoperator::left(a).apply(x) - a * x) < 1e-12);
  CHECK(op_norm(Superoperator::right(b).apply(x) - x * b) < 1e-12);
  CHECK(op_norm(Superoperator::sandwich(a, b).apply(x) - a * x * b) < 1e-12);
  CHECK(op_norm(Superoperator::conjugation(a).apply(x) - a * x * a.adjoint()) < 1e-12);
  CHECK(op_norm(Superoperator::commutator(a).apply(x) - cxd(0, -1) * comm(a, x)) < 1e-12);
  Mat d = a * x * a.adjoint() - 0.5 * anticomm(a.adjoint() * a, x);
  CHECK(op_norm(Superoperator::dissipator(a).apply(x) - d) < 1e-12);
}

TEST_CASE("adjoint matches the Hilbert-Schmidt pairing") {
  SplitMix64 rng(5);
  Mat l = random_hermitian(rng, 4) + cxd(0, 1) * random_hermitian(rng, 4);
  Superoperator s = Superoperator::dissipator(l);
  Mat a = random_hermitian(rng, 4);
  Mat b = random_hermitian(rng, 4);
  cxd lhs = (a.adjoint() * s.apply(b)).trace();
  cxd rhs = (s.apply_adjoint(a).adjoint() * b).trace();
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("transformed rotates the frame") {
  SplitMix64 rng(9);
  Mat h = random_hermitian(rng, 4);
  Mat u = herm_eig(h).basis;
  Superoperator s = Superoperator::dissipator(random_hermitian(rng, 4));
  Superoperator t = s.transformed(u);
  Mat x = random_hermitian(rng, 4);
  CHECK(op_norm(t.apply(x) - u.adjoint() * s.apply(u * x * u.adjoint()) * u) < 1e-10);
}

TEST_CASE("structure defects") {
  SplitMix64 rng(13);
  Mat l = random_hermitian(rng, 4) + cxd(0, 1) * random_hermitian(rng, 4);
  Superoperator gen = Superoperator::dissipator(l) + Superoperator::commutator(random_hermitian(rng, 4));
  CHECK(gen.hermiticity_preserving_defect() < 1e-12);
  CHECK(gen.trace_preserving_defect() < 1e-12);
  // A left multiplication alone preserves neither.
  CHECK(Superoperator::left(l).trace_preserving_defect() > 0.1);
}

TEST_CASE("expm_dense on closed forms") {
  Mat n(2, 2);
  n << 0, 1, 0, 0;  // nilpotent: exp(N) = I + N
  CHECK(op_norm(expm_dense(n) - (Mat::Identity(2, 2) + n)) < 1e-13);

  SplitMix64 rng(17);
  Mat h = random_hermitian(rng, 6);
  Mat viaspec = mat_func(herm_eig(h), [](double x) { return std::exp(cxd(x)); });
  CHECK(op_norm(expm_dense(h) - viaspec) < 1e-11);
  CHECK(op_norm(expm_dense(Mat::Zero(4, 4)) - Mat::Identity(4, 4)) < 1e-15);
}

TEST_CASE("semigroup solver matches expm on both code paths") {
  SplitMix64 rng(21);
  // Diagonalizable generator: a Lindblad dissipator.
  Mat l = random_hermitian(rng, 2) + cxd(0, 1) * random_hermitian(rng, 2);
  Superoperator gen = Superoperator::dissipator(l);
  SemigroupSolver solver(gen);
  for (double t : {0.0, 0.3, 2.0}) {
    CHECK(op_norm(solver.propagator(t).m - expm_dense(t * gen.m)) < 1e-9);
  }
  Mat x = random_hermitian(rng, 2);
  CHECK(op_norm(solver.evolve(x, 0.0) - x) < 1e-12);

  // Defective generator (Jordan block) must fall back to the Schur route.
  Superoperator jordan = Superoperator::zero(2);
  jordan.m.setZero();
  jordan.m(0, 1) = 1.0;
  SemigroupSolver schur(jordan);
  CHECK(op_norm(schur.propagator(1.0).m - expm_dense(jordan.m)) < 1e-10);
}

TEST_CASE("spectral gap of the amplitude damping generator is 1/2") {
  // D[sigma_-]: populations decay at rate 1, coherences at rate 1/2.
  Mat sm(2, 2);
  sm << 0, 1, 0, 0;
  CHECK(spectral_gap(Superoperator::dissipator(sm)) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("induced 1-norm lower estimate") {
  // Scaled identity: induced norm exactly 2, reached by every state.
  Superoperator two = cxd(2) * Superoperator::identity(4);
  CHECK(induced_1norm_lower(two, 42, 8, 20) == doctest::Approx(2.0).epsilon(1e-9));
  // Unitary conjugation: induced 1-norm is 1; the estimate may not exceed it.
  SplitMix64 rng(23);
  Mat u = herm_eig(random_hermitian(rng, 4)).basis;
  double est = induced_1norm_lower(Superoperator::conjugation(u), 7, 16, 40);
  CHECK(est <= 1.0 + 1e-9);
  CHECK(est > 0.9);
}

TEST_SUITE_END();

}  // namespace
}  // namespace gibbslab
