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

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gibbslab {

namespace {

using nlohmann::json;

Mat pauli_string_matrix(const std::string& labels) {
  Mat out = Mat::Identity(1, 1);
  for (char c : labels) out = kron(out, pauli(c)).eval();
  return out;
}

}  // namespace

LocalTerm pauli_term(const std::string& labels, const std::vector<int>& support, double coeff) {
  if (labels.size() != support.size()) {
    throw std::invalid_argument("pauli string length does not match support size");
  }
  return dense_term(pauli_string_matrix(labels), support, coeff);
}

LocalTerm dense_term(const Mat& matrix, const std::vector<int>& support, double coeff) {
  const int k = static_cast<int>(support.size());
  if (matrix.rows() != (Eigen::Index{1} << k) || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("term matrix dimension does not match support size");
  }
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate site in term support");
  }
  // Re-express the matrix with sites in sorted order: position of support[j]
  // within the sorted list gives its qubit slot in the canonical local space.
  std::vector<int> slots(k);
  for (int j = 0; j < k; ++j) {
    slots[j] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), support[j]) -
                                sorted.begin());
  }
  LocalTerm t;
  t.support = std::move(sorted);
  t.matrix = coeff * tensor_embed(matrix, slots, k);
  return t;
}

ExternalField ExternalField::zero(int n) {
  ExternalField f;
  f.per_site.assign(n, Mat::Zero(2, 2));
  return f;
}

ExternalField ExternalField::uniform_z(int n, double z) {
  ExternalField f;
  f.per_site.assign(n, (z / 2.0) * pauli('Z'));
  return f;
}

double ExternalField::strength(int i) const { return op_norm(per_site.at(i)); }

double ExternalField::gap(int i) const {
  Eigen::SelfAdjointEigenSolver<Mat> es(per_site.at(i));
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

double ExternalField::max_strength() const {
  double h = 0.0;
  for (int i = 0; i < size(); ++i) h = std::max(h, strength(i));
  return h;
}

LocalHamiltonian LocalHamiltonian::build(int n, std::vector<LocalTerm> terms,
                                         ExternalField field, bool allow_large_norms) {
  if (n < 1) throw std::invalid_argument("need at least one site");
  if (field.size() == 0) field = ExternalField::zero(n);
  if (field.size() != n) throw std::invalid_argument("field length does not match site count");
  for (const Mat& v : field.per_site) {
    if (v.rows() != 2 || v.cols() != 2 || !is_hermitian(v, 1e-10)) {
      throw std::invalid_argument("field entries must be 2x2 Hermitian");
    }
  }
  for (const LocalTerm& t : terms) {
    if (t.support.size() < 2) {
      throw std::invalid_argument("interaction terms must touch >= 2 sites; fold on-site "
                                  "content into the field");
    }
    if (!std::is_sorted(t.support.begin(), t.support.end()) ||
        std::adjacent_find(t.support.begin(), t.support.end()) != t.support.end()) {
      throw std::invalid_argument("term support must be sorted and distinct");
    }
    if (t.support.front() < 0 || t.support.back() >= n) {
      throw std::invalid_argument("term support out of range");
    }
    if (!is_hermitian(t.matrix, 1e-10)) throw std::invalid_argument("term matrix not Hermitian");
    if (!allow_large_norms && op_norm(t.matrix) > 1.0 + 1e-9) {
      throw std::invalid_argument("interaction term norm exceeds 1 (pass the override to allow)");
    }
  }
  LocalHamiltonian h;
  h.n_ = n;
  h.terms_ = std::move(terms);
  h.field_ = std::move(field);
  h.terms_at_site_.assign(n, {});
  for (int a = 0; a < static_cast<int>(h.terms_.size()); ++a) {
    for (int s : h.terms_[a].support) h.terms_at_site_[s].push_back(a);
  }
  return h;
}

Mat LocalHamiltonian::dense() const {
  Mat h = field_dense();
  for (const LocalTerm& t : terms_) h += tensor_embed(t.matrix, t.support, n_);
  return h;
}

Mat LocalHamiltonian::field_dense() const {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Mat h = Mat::Zero(dim, dim);
  for (int i = 0; i < n_; ++i) h += tensor_embed(field_.per_site[i], {i}, n_);
  return h;
}

Mat LocalHamiltonian::region_dense(const std::vector<int>& region) const {
  const std::set<int> reg(region.begin(), region.end());
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Mat h = Mat::Zero(dim, dim);
  for (int i : reg) h += tensor_embed(field_.per_site.at(i), {i}, n_);
  for (const LocalTerm& t : terms_) {
    const bool inside = std::all_of(t.support.begin(), t.support.end(),
                                    [&](int s) { return reg.count(s) > 0; });
    if (inside) h += tensor_embed(t.matrix, t.support, n_);
  }
  return h;
}

int LocalHamiltonian::locality() const {
  std::size_t l = 0;
  for (const LocalTerm& t : terms_) l = std::max(l, t.support.size());
  return static_cast<int>(l);
}

int LocalHamiltonian::max_degree() const {
  std::size_t d = 0;
  for (const auto& lst : terms_at_site_) d = std::max(d, lst.size());
  return static_cast<int>(d);
}

double LocalHamiltonian::zeta() const {
  double z = 0.0;
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int a : terms_at_site_[i]) {
      acc += static_cast<double>(terms_[a].support.size()) * op_norm(terms_[a].matrix);
    }
    z = std::max(z, acc);
  }
  return z;
}

int LocalHamiltonian::dist(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::invalid_argument("site out of range");
  if (i == j) return 0;
  // BFS over sites, one layer per interaction term traversed.
  std::vector<int> d(n_, infinite_distance);
  d[i] = 0;
  std::deque<int> q{i};
  while (!q.empty()) {
    const int s = q.front();
    q.pop_front();
    for (int a : terms_at_site_[s]) {
      for (int s2 : terms_[a].support) {
        if (d[s2] == infinite_distance) {
          d[s2] = d[s] + 1;
          if (s2 == j) return d[s2];
          q.push_back(s2);
        }
      }
    }
  }
  return d[j];
}

std::vector<int> LocalHamiltonian::ball(const std::vector<int>& s, int r) const {
  std::vector<int> d(n_, infinite_distance);
  std::deque<int> q;
  for (int i : s) {
    if (i < 0 || i >= n_) throw std::invalid_argument("site out of range");
    d[i] = 0;
    q.push_back(i);
  }
  while (!q.empty()) {
    const int cur = q.front();
    q.pop_front();
    if (d[cur] >= r) continue;
    for (int a : terms_at_site_[cur]) {
      for (int s2 : terms_[a].support) {
        if (d[s2] == infinite_distance) {
          d[s2] = d[cur] + 1;
          q.push_back(s2);
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (d[i] <= r) out.push_back(i);
  }
  return out;
}

int LocalHamiltonian::diameter() const {
  int best = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const int d = dist(i, j);
      if (d != infinite_distance) best = std::max(best, d);
    }
  }
  return best;
}

LocalHamiltonian LocalHamiltonian::truncated(int center, int r) const {
  if (r < 0) throw std::invalid_argument("radius must be >= 0");
  const std::vector<int> b = ball({center}, r);
  const std::set<int> inside(b.begin(), b.end());
  std::vector<LocalTerm> kept;
  for (const LocalTerm& t : terms_) {
    const bool contained = std::all_of(t.support.begin(), t.support.end(),
                                       [&](int s) { return inside.count(s) > 0; });
    if (contained) kept.push_back(t);
  }
  return build(n_, std::move(kept), field_, /*allow_large_norms=*/true);
}

namespace {

cxd parse_entry(const json& e) {
  if (e.is_number()) return cxd(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2) return cxd(e[0].get<double>(), e[1].get<double>());
  throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
}

Mat parse_matrix(const json& rows) {
  const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
  Mat m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = rows[i];
    if (static_cast<Eigen::Index>(row.size()) != d) {
      throw std::invalid_argument("matrix rows must all have the same length");
    }
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = parse_entry(row[j]);
  }
  return m;
}

json emit_matrix(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

LocalHamiltonian LocalHamiltonian::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec parse error: ") + e.what());
  }
  if (!doc.contains("n")) throw std::invalid_argument("spec missing \"n\"");
  const int n = doc["n"].get<int>();

  std::vector<LocalTerm> terms;
  for (const json& jt : doc.value("terms", json::array())) {
    if (!jt.contains("support")) throw std::invalid_argument("term missing \"support\"");
    const auto support = jt["support"].get<std::vector<int>>();
    const double coeff = jt.value("coeff", 1.0);
    if (jt.contains("paulis")) {
      terms.push_back(pauli_term(jt["paulis"].get<std::string>(), support, coeff));
    } else if (jt.contains("matrix")) {
      terms.push_back(dense_term(parse_matrix(jt["matrix"]), support, coeff));
    } else {
      throw std::invalid_argument("term needs \"paulis\" or \"matrix\"");
    }
  }

  ExternalField field = ExternalField::zero(n);
  for (const json& jf : doc.value("field", json::array())) {
    if (!jf.contains("site")) throw std::invalid_argument("field entry missing \"site\"");
    const int site = jf["site"].get<int>();
    if (site < 0 || site >= n) throw std::invalid_argument("field site out of range");
    if (jf.contains("z")) {
      field.per_site[site] = (jf["z"].get<double>() / 2.0) * pauli('Z');
    } else if (jf.contains("matrix")) {
      field.per_site[site] = parse_matrix(jf["matrix"]);
    } else {
      throw std::invalid_argument("field entry needs \"z\" or \"matrix\"");
    }
  }
  return build(n, std::move(terms), std::move(field));
}

LocalHamiltonian LocalHamiltonian::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string LocalHamiltonian::to_json() const {
  json doc;
  doc["n"] = n_;
  doc["terms"] = json::array();
  for (const LocalTerm& t : terms_) {
    doc["terms"].push_back({{"support", t.support}, {"matrix", emit_matrix(t.matrix)}});
  }
  doc["field"] = json::array();
  for (int i = 0; i < n_; ++i) {
    if (field_.per_site[i].cwiseAbs().maxCoeff() == 0.0) continue;
    doc["field"].push_back({{"site", i}, {"matrix", emit_matrix(field_.per_site[i])}});
  }
  return doc.dump(2);
}

LocalHamiltonian chain_hamiltonian(int n, const std::string& coupling,
                                   const ExternalField& field) {
  std::vector<LocalTerm> terms;
  for (int i = 0; i + 1 < n; ++i) terms.push_back(pauli_term(coupling, {i, i + 1}));
  return LocalHamiltonian::build(n, std::move(terms), field);
}

}  // namespace gibbslab
