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

#include <limits>
#include <string>
#include <vector>

#include "gibbslab/dense.hpp"

namespace gibbslab {

// One interaction term W_a: Hermitian, supported on >= 2 sites, norm <= 1
// unless explicitly overridden at build time.  On-site content belongs to the
// external field, never to the interaction list.
struct LocalTerm {
  std::vector<int> support;  // sorted, distinct
  Mat matrix;                // 2^|support| x 2^|support|, Hermitian
};

// Builds a term from a Pauli label string ("XX", "XIZ", ...) acting on the
// given sites; labels[i] acts on support[i].  The stored support is sorted
// and the matrix permuted to match.
LocalTerm pauli_term(const std::string& labels, const std::vector<int>& support,
                     double coeff = 1.0);
LocalTerm dense_term(const Mat& matrix, const std::vector<int>& support, double coeff = 1.0);

// Arbitrary on-site fields V_i.  No magnitude constraint: instances with
// |V_i| ~ 1e6 are part of the intended domain.
struct ExternalField {
  std::vector<Mat> per_site;  // 2x2 Hermitian, length n

  static ExternalField zero(int n);
  // Every site gets (z/2) sigma_Z, i.e. level splitting z.
  static ExternalField uniform_z(int n, double z);

  int size() const { return static_cast<int>(per_site.size()); }
  double strength(int i) const;      // ||V_i||
  double gap(int i) const;           // lambda_max(V_i) - lambda_min(V_i)
  double max_strength() const;       // h = max_i ||V_i||
};

// H = V + W with W a bounded local interaction and V arbitrary on-site
// fields.  Immutable after build; all queries are pure.
class LocalHamiltonian {
 public:
  static constexpr int infinite_distance = std::numeric_limits<int>::max();

  LocalHamiltonian() = default;
  // Validates supports, Hermiticity, |support| >= 2, and ||W_a|| <= 1 (the
  // norm check can be overridden for deliberately out-of-model instances).
  static LocalHamiltonian build(int n, std::vector<LocalTerm> terms, ExternalField field,
                                bool allow_large_norms = false);

  static LocalHamiltonian from_json(const std::string& text);
  static LocalHamiltonian load(const std::string& path);
  std::string to_json() const;

  int sites() const { return n_; }
  const std::vector<LocalTerm>& terms() const { return terms_; }
  const ExternalField& field() const { return field_; }

  Mat dense() const;        // V + W on the full 2^n space
  Mat field_dense() const;  // V alone
  // Terms and fields fully contained in `region`, embedded in the full space.
  Mat region_dense(const std::vector<int>& region) const;

  int locality() const;    // L = max |support|, 0 with no terms
  int max_degree() const;  // D = max over sites of #terms touching it
  // zeta = max_i sum_{a: i in supp} |supp(W_a)| * ||W_a||; always <= D*L.
  double zeta() const;

  // Hypergraph path metric: number of interaction terms traversed.  Fields
  // do not contribute edges.  Disconnected pairs: infinite_distance.
  int dist(int i, int j) const;
  std::vector<int> ball(const std::vector<int>& s, int r) const;
  int diameter() const;  // max finite pairwise distance

  // Interaction-truncated Hamiltonian at `center`: all fields kept, terms
  // restricted to supp(W_a) contained in ball({center}, r).  r=0 keeps V only.
  LocalHamiltonian truncated(int center, int r) const;

 private:
  int n_ = 0;
  std::vector<LocalTerm> terms_;
  ExternalField field_;
  std::vector<std::vector<int>> terms_at_site_;  // incidence lists
};

// Nearest-neighbor chain with every coupling given as a Pauli string of
// length 2 and coefficient 1; convenience for the default suites.
LocalHamiltonian chain_hamiltonian(int n, const std::string& coupling, const ExternalField& field);

}  // namespace gibbslab
