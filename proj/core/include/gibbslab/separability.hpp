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

// Ordered tuple (a_1..a_k) of interaction-term indices, repeats allowed,
// with a_1 touching the origin and every later term's support intersecting
// the union of the earlier supports.
struct Cluster {
  std::vector<int> term_indices;
  std::vector<int> support_union;  // sorted
  int origin = 0;
};

// Exhaustive order-sensitive enumeration.  k is capped (default 8) to guard
// the factorial blow-up.
std::vector<Cluster> enumerate_clusters(const LocalHamiltonian& h, int origin, int k,
                                        int k_cap = 8);

// D^k L^{k-1} (k-1)!, the counting cap the enumeration must respect.
double cluster_count_bound(int k, int d_deg, int locality);

// A_{k,t} = L k A_{k,t-1} + A_{k-1,t-1}, A_{0,0} = 1, A_{0,t>=1} = 0,
// A_{k>t} = 0.  Exact integer arithmetic through t = 60, floating beyond.
double akt(int k, int t, int l);

// | sum_{t=k}^{T} alpha^t/t! A_{k,t} - (1/k!)((e^{alpha L}-1)/L)^k | / target.
double combo_identity_check(double alpha, int l, int k, int t_max);

// (1/k!)((e^{4 beta h L}-1)/(h L))^k, with the h -> 0 limit (4 beta)^k / k!.
double cluster_coeff_bound(int k, double beta, double h, int locality);

// Corollary hypotheses: beta <= 1/(4 D L 56^L) and
// h <= (1/(8 beta L)) log(1/(4 D L beta)).
bool araki_regime(double beta, double h, int d_deg, int locality);
// Theorem hypotheses: beta <= 1/(8 D L 56^{2L}) with the same field bound.
bool separability_regime(double beta, double h, int d_deg, int locality);

struct ArakiExpansional {
  Mat x;                        // e^{-beta H} e^{beta (H - W^{(origin)})}
  double deviation = 0.0;       // ||X - I||
  double aggregate_bound = 0.0; // sum over cluster lengths, +inf if divergent
  bool hypotheses_ok = false;   // Corollary regime at this (beta, h, D, L)
};

// Cluster counts are enumerated exactly up to length k_enum and replaced by
// the counting cap beyond it; the series is truncated once terms fall below
// 1e-16 of the running sum.
ArakiExpansional araki_expansional(const LocalHamiltonian& h, double beta, int origin,
                                   int k_enum = 6);

}  // namespace gibbslab
