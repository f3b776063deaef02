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

#include "gibbslab/refrigeration.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbslab {

double beta_eff(double beta, double h, int t) {
  if (beta <= 0.0 || h < 0.0 || t < 1) throw std::invalid_argument("invalid beta_eff inputs");
  return t * std::log((1.0 + std::exp(-beta * h)) / (std::exp(-beta) + std::exp(-beta * h)));
}

int Gadget::ancilla_site(int a, int l) const {
  const int m = static_cast<int>(base.terms().size());
  if (a < 0 || a >= m || l < 0 || l >= t) throw std::invalid_argument("ancilla index out of range");
  return base.sites() + a * t + l;
}

std::vector<int> Gadget::ancilla_sites() const {
  std::vector<int> out;
  for (int s = base.sites(); s < total.sites(); ++s) out.push_back(s);
  return out;
}

Gadget build_gadget(const LocalHamiltonian& h_c, double h, int t) {
  if (h < 0.0 || t < 1) throw std::invalid_argument("need h >= 0 and t >= 1");
  const int n = h_c.sites();
  for (int i = 0; i < n; ++i) {
    if (h_c.field().strength(i) > 0.0) {
      throw std::invalid_argument("base Hamiltonian must carry no external field");
    }
  }
  const auto& terms = h_c.terms();
  const int m = static_cast<int>(terms.size());
  for (int a = 0; a < m; ++a) {
    const Mat& p = terms[a].matrix;
    if (op_norm(p * p - p) > 1e-10) {
      throw std::invalid_argument("base terms must be orthogonal projectors");
    }
  }
  for (int a = 0; a < m; ++a) {
    const Mat pa = tensor_embed(terms[a].matrix, terms[a].support, n);
    for (int b = a + 1; b < m; ++b) {
      const Mat pb = tensor_embed(terms[b].matrix, terms[b].support, n);
      if (op_norm(comm(pa, pb)) > 1e-10) {
        throw std::invalid_argument("base terms must commute pairwise");
      }
    }
  }

  Gadget g;
  g.base = h_c;
  g.t = t;
  g.h = h;

  const int total_sites = n + t * m;
  Mat vac = Mat::Zero(2, 2);  // |0><0|: ancilla in the coupled branch
  vac(0, 0) = 1.0;
  Mat exc = Mat::Zero(2, 2);  // |1><1|: ancilla in the field branch
  exc(1, 1) = 1.0;

  std::vector<LocalTerm> terms_total;
  ExternalField field = ExternalField::zero(total_sites);
  for (int a = 0; a < m; ++a) {
    for (int l = 0; l < t; ++l) {
      const int anc = n + a * t + l;
      std::vector<int> supp = terms[a].support;
      supp.push_back(anc);
      // Base supports are sorted below the ancilla index, so the local
      // matrix is P_a acting on the more significant bits.
      terms_total.push_back({supp, kron(terms[a].matrix, vac)});
      field.per_site[anc] = h * exc;
    }
  }
  g.total = LocalHamiltonian::build(total_sites, terms_total, field);
  return g;
}

double verify_marginal(const Gadget& g, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (g.total.sites() > 12) throw std::invalid_argument("instance too large for dense marginals");
  const Mat rho = gibbs_state(herm_eig(g.total.dense(), 0.0), beta);
  const Mat marg = g.ancilla_count() == 0
                       ? rho
                       : partial_trace(rho, g.ancilla_sites(), g.total.sites());
  const double be = g.base.terms().empty() ? beta : beta_eff(beta, g.h, g.t);
  const Mat target = gibbs_state(herm_eig(g.base.dense(), 0.0), be);
  return trace_norm(marg - target);
}

RefrigerationParams choose_params(double beta, RefrigerationRegime regime) {
  if (beta <= 0.0 || beta >= 1.0) throw std::invalid_argument("beta must lie in (0, 1)");
  constexpr double c = 1.87;
  RefrigerationParams out;
  if (regime == RefrigerationRegime::case1) {
    out.t = static_cast<int>(std::ceil(c / beta)) + 1;
    out.h_min = std::log(4.0 * c / beta) / beta;
  } else {
    out.t = static_cast<int>(std::ceil(2.0 * c / beta));
    out.h_min = 0.5;
  }
  return out;
}

std::vector<double> diagonal_distribution(const LocalHamiltonian& h, double beta) {
  const Mat rho = gibbs_state(herm_eig(h.dense(), 0.0), beta);
  std::vector<double> out(static_cast<size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) out[static_cast<size_t>(i)] = rho(i, i).real();
  return out;
}

}  // namespace gibbslab
