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

#include "gibbslab/separability.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace gibbslab {
namespace {

using bigint = boost::multiprecision::cpp_int;

void extend_clusters(const LocalHamiltonian& h, int k, std::vector<int>& indices,
                     std::set<int>& support, std::vector<Cluster>& out, int origin) {
  if (static_cast<int>(indices.size()) == k) {
    Cluster c;
    c.term_indices = indices;
    c.support_union.assign(support.begin(), support.end());
    c.origin = origin;
    out.push_back(c);
    return;
  }
  const auto& terms = h.terms();
  for (int a = 0; a < static_cast<int>(terms.size()); ++a) {
    const auto& supp = terms[a].support;
    const bool touches =
        std::any_of(supp.begin(), supp.end(), [&](int s) { return support.count(s) > 0; });
    if (!touches) continue;
    std::vector<int> added;
    for (int s : supp) {
      if (support.insert(s).second) added.push_back(s);
    }
    indices.push_back(a);
    extend_clusters(h, k, indices, support, out, origin);
    indices.pop_back();
    for (int s : added) support.erase(s);
  }
}

}  // namespace

std::vector<Cluster> enumerate_clusters(const LocalHamiltonian& h, int origin, int k, int k_cap) {
  if (origin < 0 || origin >= h.sites()) throw std::invalid_argument("origin out of range");
  if (k < 1) throw std::invalid_argument("cluster length must be >= 1");
  if (k > k_cap) throw std::invalid_argument("cluster length exceeds the enumeration cap");

  std::vector<Cluster> out;
  const auto& terms = h.terms();
  for (int a = 0; a < static_cast<int>(terms.size()); ++a) {
    const auto& supp = terms[a].support;
    if (std::find(supp.begin(), supp.end(), origin) == supp.end()) continue;
    std::vector<int> indices = {a};
    std::set<int> support(supp.begin(), supp.end());
    extend_clusters(h, k, indices, support, out, origin);
  }
  return out;
}

double cluster_count_bound(int k, int d_deg, int locality) {
  if (k < 1) throw std::invalid_argument("cluster length must be >= 1");
  double v = std::pow(static_cast<double>(d_deg), k) *
             std::pow(static_cast<double>(locality), k - 1);
  for (int j = 2; j <= k - 1; ++j) v *= static_cast<double>(j);
  return v;
}

double akt(int k, int t, int l) {
  if (k < 0 || t < 0 || l < 1) throw std::invalid_argument("invalid A_{k,t} arguments");
  if (k > t) return 0.0;

  // Column j of the DP holds A_{j, current t}.
  const int t_exact = std::min(t, 60);
  std::vector<bigint> exact(static_cast<size_t>(k) + 1, bigint(0));
  exact[0] = 1;  // A_{0,0}
  for (int s = 1; s <= t_exact; ++s) {
    for (int j = std::min(k, s); j >= 1; --j) {
      exact[j] = bigint(l) * bigint(j) * exact[j] + exact[j - 1];
    }
    exact[0] = 0;  // A_{0,s>=1}
  }
  std::vector<double> row(exact.size());
  for (size_t j = 0; j < exact.size(); ++j) row[j] = exact[j].convert_to<double>();
  for (int s = t_exact + 1; s <= t; ++s) {
    for (int j = std::min(k, s); j >= 1; --j) {
      row[j] = static_cast<double>(l) * j * row[j] + row[j - 1];
    }
    row[0] = 0.0;
  }
  return row[static_cast<size_t>(k)];
}

double combo_identity_check(double alpha, int l, int k, int t_max) {
  if (alpha <= 0.0 || k < 0 || t_max < k) throw std::invalid_argument("invalid identity inputs");
  // Evolve the scaled row alpha^t A_{j,t} / t! instead of the raw counts: A_{k,t}
  // overflows double near t ~ 300 once l*k >= 6, while the scaled terms stay
  // bounded by the (convergent) series value.
  std::vector<double> row(static_cast<size_t>(k) + 1, 0.0);
  row[0] = 1.0;
  double series = (k == 0) ? 1.0 : 0.0;
  for (int t = 1; t <= t_max; ++t) {
    for (int j = std::min(k, t); j >= 1; --j) {
      row[j] = (alpha / t) * (static_cast<double>(l) * j * row[j] + row[j - 1]);
    }
    row[0] = 0.0;
    if (t >= k) series += row[static_cast<size_t>(k)];
  }
  double target = 1.0;
  for (int j = 2; j <= k; ++j) target /= static_cast<double>(j);
  target *= std::pow(std::expm1(alpha * l) / static_cast<double>(l), k);
  return std::abs(series - target) / target;
}

double cluster_coeff_bound(int k, double beta, double h, int locality) {
  if (k < 1 || beta <= 0.0 || h < 0.0 || locality < 1) {
    throw std::invalid_argument("invalid coefficient-bound inputs");
  }
  const double hl = h * static_cast<double>(locality);
  const double ratio = (hl == 0.0) ? 4.0 * beta : std::expm1(4.0 * beta * hl) / hl;
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v *= ratio / static_cast<double>(j);
  return v;
}

namespace {

bool field_within(double beta, double h, int d_deg, int locality) {
  const double dl = static_cast<double>(d_deg) * static_cast<double>(locality);
  const double arg = 1.0 / (4.0 * dl * beta);
  if (arg <= 1.0) return false;  // log bound nonpositive, only h = 0 could pass
  return h <= std::log(arg) / (8.0 * beta * static_cast<double>(locality));
}

}  // namespace

bool araki_regime(double beta, double h, int d_deg, int locality) {
  if (beta <= 0.0 || h < 0.0 || d_deg < 1 || locality < 1) return false;
  const double dl = static_cast<double>(d_deg) * static_cast<double>(locality);
  if (beta > 1.0 / (4.0 * dl * std::pow(56.0, locality))) return false;
  return field_within(beta, h, d_deg, locality);
}

bool separability_regime(double beta, double h, int d_deg, int locality) {
  if (beta <= 0.0 || h < 0.0 || d_deg < 1 || locality < 1) return false;
  const double dl = static_cast<double>(d_deg) * static_cast<double>(locality);
  if (beta > 1.0 / (8.0 * dl * std::pow(56.0, 2 * locality))) return false;
  return field_within(beta, h, d_deg, locality);
}

ArakiExpansional araki_expansional(const LocalHamiltonian& h, double beta, int origin,
                                   int k_enum) {
  if (origin < 0 || origin >= h.sites()) throw std::invalid_argument("origin out of range");
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");

  const Eigen::Index d = Eigen::Index{1} << h.sites();
  Mat w1 = Mat::Zero(d, d);
  for (const LocalTerm& t : h.terms()) {
    if (std::find(t.support.begin(), t.support.end(), origin) != t.support.end()) {
      w1 += tensor_embed(t.matrix, t.support, h.sites());
    }
  }

  const Mat hd = h.dense();
  const Mat left = mat_func(herm_eig(hd, 0.0), [beta](double e) { return std::exp(-beta * e); });
  const Mat right =
      mat_func(herm_eig(Mat(hd - w1), 0.0), [beta](double e) { return std::exp(beta * e); });

  ArakiExpansional out;
  out.x = left * right;
  out.deviation = op_norm(out.x - Mat::Identity(d, d));

  const int d_deg = h.max_degree();
  const int locality = h.locality();
  const double field = h.field().max_strength();
  out.hypotheses_ok = araki_regime(beta, field, d_deg, locality);

  if (h.terms().empty()) {
    out.aggregate_bound = 0.0;
    return out;
  }

  double sum = 0.0;
  for (int k = 1; k <= 400; ++k) {
    const double cap = cluster_count_bound(k, d_deg, locality);
    const double count =
        k <= k_enum
            ? std::min(static_cast<double>(enumerate_clusters(h, origin, k, k_enum).size()), cap)
            : cap;
    const double term = count * cluster_coeff_bound(k, beta, field, locality);
    sum += term;
    if (term < 1e-16 * std::max(sum, 1e-300)) break;
    if (k > 50 && term > sum) {
      sum = std::numeric_limits<double>::infinity();
      break;
    }
  }
  out.aggregate_bound = sum;
  return out;
}

}  // namespace gibbslab
