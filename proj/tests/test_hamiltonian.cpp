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

#include "gibbslab/hamiltonian.hpp"

#include <cmath>

#include "doctest.h"
#include "gibbslab/dense.hpp"

namespace gibbslab {
namespace {

LocalHamiltonian chain(int n, double h) {
  return chain_hamiltonian(n, "XX", ExternalField::uniform_z(n, h));
}

TEST_SUITE_BEGIN("hamiltonian");

TEST_CASE("pauli_term sorts support and keeps the label-site pairing") {
  LocalTerm a = pauli_term("XZ", {1, 0});
  LocalTerm b = pauli_term("ZX", {0, 1});
  CHECK(a.support == std::vector<int>{0, 1});
  CHECK(op_norm(a.matrix - b.matrix) < 1e-15);
  CHECK(op_norm(a.matrix - kron(pauli('Z'), pauli('X'))) < 1e-15);
}

TEST_CASE("build validation") {
  // Interaction terms must touch at least two sites.
  CHECK_THROWS(LocalHamiltonian::build(2, {pauli_term("X", {0})}, ExternalField::zero(2)));
  // Terms must be Hermitian and of norm at most one.
  Mat nh = Mat::Zero(4, 4);
  nh(0, 1) = 1.0;
  CHECK_THROWS(LocalHamiltonian::build(2, {dense_term(nh, {0, 1})}, ExternalField::zero(2)));
  CHECK_THROWS(LocalHamiltonian::build(
      2, {dense_term(2.0 * kron(pauli('X'), pauli('X')), {0, 1})}, ExternalField::zero(2)));
  // Support outside [0, n) is rejected.
  CHECK_THROWS(LocalHamiltonian::build(2, {pauli_term("XX", {1, 2})}, ExternalField::zero(2)));
}

TEST_CASE("dense assembly matches explicit embedding") {
  LocalHamiltonian h = chain(3, 2.0);
  Mat expect = tensor_embed(kron(pauli('X'), pauli('X')), {0, 1}, 3) +
               tensor_embed(kron(pauli('X'), pauli('X')), {1, 2}, 3);
  Mat field = Mat::Zero(8, 8);
  for (int i = 0; i < 3; ++i) field += tensor_embed(pauli('Z'), {i}, 3);
  CHECK(op_norm(h.dense() - (expect + field)) < 1e-13);
  CHECK(op_norm(h.field_dense() - field) < 1e-13);
}

TEST_CASE("external field accessors") {
  ExternalField f = ExternalField::uniform_z(3, 5.0);
  CHECK(f.strength(1) == doctest::Approx(2.5));  // ||(h/2) Z|| = h/2
  CHECK(f.gap(1) == doctest::Approx(5.0));
  CHECK(f.max_strength() == doctest::Approx(2.5));
  CHECK(ExternalField::zero(2).gap(0) == doctest::Approx(0.0));
}

TEST_CASE("interaction graph metrics on a chain") {
  LocalHamiltonian h = chain(5, 1.0);
  CHECK(h.locality() == 2);
  CHECK(h.max_degree() == 2);
  CHECK(h.zeta() == doctest::Approx(4.0));  // interior site: two terms, |supp| * 1 each
  CHECK(h.dist(0, 0) == 0);
  CHECK(h.dist(0, 1) == 1);
  CHECK(h.dist(0, 4) == 4);
  CHECK(h.diameter() == 4);
  CHECK(h.ball({2}, 1) == std::vector<int>{1, 2, 3});
  CHECK(h.ball({0}, 1) == std::vector<int>{0, 1});
  CHECK(h.ball({2}, 0) == std::vector<int>{2});
}

TEST_CASE("disconnected sites are infinitely far") {
  LocalHamiltonian h =
      LocalHamiltonian::build(3, {pauli_term("XX", {0, 1})}, ExternalField::zero(3));
  CHECK(h.dist(0, 2) == LocalHamiltonian::infinite_distance);
  CHECK(h.diameter() == 1);
}

TEST_CASE("truncation keeps every field term") {
  LocalHamiltonian h = chain(5, 3.0);
  LocalHamiltonian t0 = h.truncated(2, 0);
  CHECK(t0.terms().empty());
  CHECK(op_norm(t0.dense() - h.field_dense()) < 1e-13);
  LocalHamiltonian t1 = h.truncated(2, 1);
  CHECK(t1.terms().size() == 2);  // couplings (1,2) and (2,3)
  LocalHamiltonian tall = h.truncated(2, 4);
  CHECK(op_norm(tall.dense() - h.dense()) < 1e-13);
}

TEST_CASE("region_dense restricts terms and fields inside the region") {
  LocalHamiltonian h = chain(3, 1.0);
  // Full-space embedding: only terms and fields fully inside {0,1} survive.
  Mat r = h.region_dense({0, 1});
  Mat expect = tensor_embed(kron(pauli('X'), pauli('X')), {0, 1}, 3) +
               0.5 * tensor_embed(pauli('Z'), {0}, 3) + 0.5 * tensor_embed(pauli('Z'), {1}, 3);
  CHECK(op_norm(r - expect) < 1e-13);
}

TEST_CASE("json roundtrip") {
  const std::string text = R"({
    "n": 3,
    "terms": [
      {"support": [0, 1], "paulis": "XX", "coeff": 0.5},
      {"support": [1, 2], "matrix": [[1,0,0,0],[0,-1,0,0],[0,0,-1,0],[0,0,0,1]]}
    ],
    "field": [
      {"site": 0, "z": 2.0},
      {"site": 2, "matrix": [[0, [0,-1]], [[0,1], 0]]}
    ]
  })";
  LocalHamiltonian h = LocalHamiltonian::from_json(text);
  CHECK(h.sites() == 3);
  CHECK(h.terms().size() == 2);
  CHECK(h.field().strength(0) == doctest::Approx(1.0));
  CHECK(h.field().strength(2) == doctest::Approx(1.0));  // that matrix is Pauli Y
  LocalHamiltonian again = LocalHamiltonian::from_json(h.to_json());
  CHECK(op_norm(again.dense() - h.dense()) < 1e-13);
}

TEST_CASE("json parse errors carry diagnostics") {
  CHECK_THROWS(LocalHamiltonian::from_json(""));
  CHECK_THROWS(LocalHamiltonian::from_json("{}"));
  CHECK_THROWS(LocalHamiltonian::from_json(R"({"n": 2, "terms": [{"support": [0, 1]}]})"));
}

TEST_SUITE_END();

}  // namespace
}  // namespace gibbslab
