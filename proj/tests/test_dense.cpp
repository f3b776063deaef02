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

#include "gibbslab/dense.hpp"

#include <cmath>

#include "doctest.h"
#include "gibbslab/rng.hpp"

namespace gibbslab {
namespace {

TEST_SUITE_BEGIN("dense");

TEST_CASE("qubit_count accepts powers of two only") {
  CHECK(qubit_count(1) == 0);
  CHECK(qubit_count(2) == 1);
  CHECK(qubit_count(16) == 4);
  CHECK_THROWS(qubit_count(0));
  CHECK_THROWS(qubit_count(6));
}

TEST_CASE("pauli algebra") {
  const Mat& x = pauli('X');
  const Mat& y = pauli('Y');
  const Mat& z = pauli('Z');
  CHECK(op_norm(x * y - cxd(0, 1) * z) < 1e-15);
  CHECK(op_norm(anticomm(x, y)) < 1e-15);
  CHECK(op_norm(x * x - pauli('I')) < 1e-15);
  CHECK(is_hermitian(y));
  CHECK_THROWS(pauli('Q'));
}

TEST_CASE("tensor_embed places site 0 on the most significant qubit") {
  Mat z1 = tensor_embed(pauli('Z'), {0}, 2);
  Mat z2 = tensor_embed(pauli('Z'), {1}, 2);
  CHECK(op_norm(z1 - kron(pauli('Z'), pauli('I'))) < 1e-15);
  CHECK(op_norm(z2 - kron(pauli('I'), pauli('Z'))) < 1e-15);

  // Unsorted site lists permute the local factors consistently.
  Mat a = tensor_embed(kron(pauli('X'), pauli('Z')), {1, 0}, 2);
  Mat b = tensor_embed(kron(pauli('Z'), pauli('X')), {0, 1}, 2);
  CHECK(op_norm(a - b) < 1e-15);

  CHECK_THROWS(tensor_embed(pauli('Z'), {2}, 2));
  CHECK_THROWS(tensor_embed(kron(pauli('X'), pauli('X')), {0, 0}, 2));
}

TEST_CASE("partial_trace of product states factorizes") {
  SplitMix64 rng(7);
  Mat a = random_hermitian(rng, 2);
  Mat b = random_hermitian(rng, 4);
  Mat ab = kron(a, b);  // site 0 = a, sites {1,2} = b
  Mat tra = partial_trace(ab, {0}, 3);
  Mat trb = partial_trace(ab, {1, 2}, 3);
  CHECK(op_norm(tra - a.trace() * b) < 1e-12);
  CHECK(op_norm(trb - b.trace() * a) < 1e-12);
  CHECK(std::abs(partial_trace(ab, {0, 1, 2}, 3)(0, 0) - ab.trace()) < 1e-12);
}

TEST_CASE("herm_eig reconstructs and groups degeneracies") {
  SplitMix64 rng(11);
  Mat h = random_hermitian(rng, 8);
  SpectralData s = herm_eig(h);
  Mat rebuilt = Mat::Zero(8, 8);
  for (int g = 0; g < s.group_count(); ++g) rebuilt += s.eigenvalues[g] * s.projectors[g];
  CHECK(op_norm(rebuilt - h) < 1e-12);
  CHECK(op_norm(s.basis * s.basis.adjoint() - Mat::Identity(8, 8)) < 1e-12);

  // Z x I has two doubly degenerate levels.
  SpectralData d = herm_eig(tensor_embed(pauli('Z'), {0}, 2));
  CHECK(d.group_count() == 2);
  CHECK(std::abs(d.projectors[0].trace().real() - 2.0) < 1e-12);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0));

  // column_values expands representatives back to per-column energies.
  Eigen::VectorXd cv = d.column_values();
  CHECK(cv.size() == 4);
  CHECK(cv.minCoeff() == doctest::Approx(-1.0));
}

TEST_CASE("mat_func and gibbs_state") {
  Mat h = tensor_embed(pauli('Z'), {0}, 1);
  SpectralData s = herm_eig(h);
  Mat e = mat_func(s, [](double x) { return std::exp(cxd(0, x)); });
  CHECK(std::abs(e(0, 0) - std::exp(cxd(0, 1))) < 1e-14);

  const double beta = 0.7;
  Mat g = gibbs_state(s, beta);
  const double z = std::exp(-beta) + std::exp(beta);
  CHECK(std::abs(g(0, 0).real() - std::exp(-beta) / z) < 1e-14);
  CHECK(std::abs(g.trace().real() - 1.0) < 1e-14);
}

TEST_CASE("norms on known matrices") {
  Mat m(2, 2);
  m << 3, 0, 0, -4;
  CHECK(op_norm(m) == doctest::Approx(4.0));
  CHECK(trace_norm(m) == doctest::Approx(7.0));
  CHECK(hs_norm(m) == doctest::Approx(5.0));
  Mat a = Mat::Identity(2, 2), b = Mat::Zero(2, 2);
  CHECK(trace_distance(a, b) == doctest::Approx(1.0));
}

TEST_SUITE_END();

}  // namespace
}  // namespace gibbslab
