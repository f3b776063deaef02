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

#include <vector>

#include "gibbslab/dense.hpp"
#include "gibbslab/hamiltonian.hpp"

namespace gibbslab {

// t log((1 + e^{-beta h}) / (e^{-beta} + e^{-beta h})); strictly below
// t*beta for finite h, increasing in h, equal to t*beta/2 at h = 1/2.
double beta_eff(double beta, double h, int t);

// Ancilla-coupled replication of a commuting-projector Hamiltonian: each
// projector P_a gets t fresh ancillas, each carrying the term
// P_a tensor |0><0| plus an on-site ancilla field h |1><1|.
struct Gadget {
  LocalHamiltonian base;   // H_C, on the first `base_sites` qubits
  LocalHamiltonian total;  // on base_sites + t * term_count qubits
  int t = 0;
  double h = 0.0;

  int base_sites() const { return base.sites(); }
  int ancilla_count() const { return total.sites() - base.sites(); }
  int ancilla_site(int a, int l) const;  // ancilla (term a, copy l)
  std::vector<int> ancilla_sites() const;
};

// Validates that the base terms are pairwise-commuting projectors
// (||P^2 - P|| and pairwise commutators below 1e-10) and the base field is
// zero, then assembles the total Hamiltonian.
Gadget build_gadget(const LocalHamiltonian& h_c, double h, int t);

// || tr_ancillas(Gibbs(total, beta)) - Gibbs(base, beta_eff) ||_1.
double verify_marginal(const Gadget& g, double beta);

enum class RefrigerationRegime { case1, case2 };

struct RefrigerationParams {
  int t = 0;
  double h_min = 0.0;
};

// c = 1.87; case1: t = ceil(c/beta) + 1, h_min = log(4c/beta)/beta;
// case2: t = ceil(2c/beta), h_min = 1/2.  In either case
// beta_eff(beta, h_min, t) >= c for beta in (0, 1).
RefrigerationParams choose_params(double beta, RefrigerationRegime regime);

// P_H(x) = <x| e^{-beta H} |x> / Z over computational basis states.
std::vector<double> diagonal_distribution(const LocalHamiltonian& h, double beta);

}  // namespace gibbslab
