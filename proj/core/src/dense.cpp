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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace gibbslab {

int qubit_count(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

const Mat& pauli(char label) {
  static const Mat id = [] {
    Mat m(2, 2);
    m << 1, 0, 0, 1;
    return m;
  }();
  static const Mat sx = [] {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const Mat sy = [] {
    Mat m(2, 2);
    m << 0, cxd(0, -1), cxd(0, 1), 0;
    return m;
  }();
  static const Mat sz = [] {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (label) {
    case 'I':
      return id;
    case 'X':
      return sx;
    case 'Y':
      return sy;
    case 'Z':
      return sz;
    default:
      throw std::invalid_argument("unknown Pauli label");
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat anticomm(const Mat& a, const Mat& b) { return a * b + b * a; }

namespace {

// Scatters the k index bits of `packed` (bit 0 = last site in `sites`) into
// an n-bit computational index where site s occupies bit (n-1-s).
Eigen::Index scatter_bits(Eigen::Index packed, const std::vector<int>& sites, int n) {
  Eigen::Index out = 0;
  const int k = static_cast<int>(sites.size());
  for (int j = 0; j < k; ++j) {
    const Eigen::Index bit = (packed >> (k - 1 - j)) & 1;
    out |= bit << (n - 1 - sites[j]);
  }
  return out;
}

std::vector<int> complement_sites(const std::vector<int>& sites, int n) {
  std::vector<char> used(n, 0);
  for (int s : sites) {
    if (s < 0 || s >= n) throw std::invalid_argument("site index out of range");
    if (used[s]) throw std::invalid_argument("duplicate site index");
    used[s] = 1;
  }
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (!used[s]) rest.push_back(s);
  }
  return rest;
}

}  // namespace

Mat tensor_embed(const Mat& local, const std::vector<int>& sites, int n) {
  const int k = static_cast<int>(sites.size());
  const Eigen::Index dloc = Eigen::Index{1} << k;
  if (local.rows() != dloc || local.cols() != dloc) {
    throw std::invalid_argument("local operator dimension does not match site count");
  }
  const std::vector<int> rest = complement_sites(sites, n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index drest = Eigen::Index{1} << rest.size();

  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index r = 0; r < drest; ++r) {
    const Eigen::Index base = scatter_bits(r, rest, n);
    for (Eigen::Index col = 0; col < dloc; ++col) {
      const Eigen::Index gcol = base | scatter_bits(col, sites, n);
      for (Eigen::Index row = 0; row < dloc; ++row) {
        const cxd v = local(row, col);
        if (v == cxd(0, 0)) continue;
        out(base | scatter_bits(row, sites, n), gcol) = v;
      }
    }
  }
  return out;
}

Mat partial_trace(const Mat& x, const std::vector<int>& traced_sites, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (x.rows() != dim || x.cols() != dim) {
    throw std::invalid_argument("operator dimension does not match qubit count");
  }
  const std::vector<int> kept = complement_sites(traced_sites, n);
  const Eigen::Index dkeep = Eigen::Index{1} << kept.size();
  const Eigen::Index dtr = Eigen::Index{1} << traced_sites.size();

  Mat out = Mat::Zero(dkeep, dkeep);
  for (Eigen::Index b = 0; b < dkeep; ++b) {
    const Eigen::Index gb = scatter_bits(b, kept, n);
    for (Eigen::Index a = 0; a < dkeep; ++a) {
      const Eigen::Index ga = scatter_bits(a, kept, n);
      cxd acc(0, 0);
      for (Eigen::Index r = 0; r < dtr; ++r) {
        const Eigen::Index gr = scatter_bits(r, traced_sites, n);
        acc += x(ga | gr, gb | gr);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

double SpectralData::spectral_range() const {
  if (eigenvalues.size() == 0) return 0.0;
  return eigenvalues(eigenvalues.size() - 1) - eigenvalues(0);
}

Eigen::VectorXd SpectralData::column_values() const {
  Eigen::VectorXd v(dim());
  for (Eigen::Index c = 0; c < dim(); ++c) v(c) = eigenvalues(group_of[c]);
  return v;
}

SpectralData herm_eig(const Mat& h, double grouping_tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix is not square");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd raw = es.eigenvalues();  // ascending
  const Eigen::Index d = raw.size();

  const double range = (d > 0) ? raw(d - 1) - raw(0) : 0.0;
  const double tol_abs = grouping_tol * range;

  SpectralData s;
  s.basis = es.eigenvectors();
  s.group_of.resize(d);
  s.grouping_tol_abs = tol_abs;

  std::vector<double> reps;
  Eigen::Index start = 0;
  for (Eigen::Index i = 0; i <= d; ++i) {
    const bool flush = (i == d) || (i > start && raw(i) - raw(i - 1) > tol_abs);
    if (!flush) continue;
    const Eigen::Index len = i - start;
    const double rep = raw.segment(start, len).mean();
    const int g = static_cast<int>(reps.size());
    reps.push_back(rep);
    Mat proj = Mat::Zero(d, d);
    for (Eigen::Index c = start; c < i; ++c) {
      s.group_of[c] = g;
      proj += s.basis.col(c) * s.basis.col(c).adjoint();
    }
    s.projectors.push_back(std::move(proj));
    start = i;
  }
  s.eigenvalues = Eigen::Map<Eigen::VectorXd>(reps.data(), static_cast<Eigen::Index>(reps.size()));
  return s;
}

Mat mat_func(const SpectralData& s, const std::function<cxd(double)>& f) {
  const Eigen::Index d = s.dim();
  Vec diag(d);
  for (Eigen::Index c = 0; c < d; ++c) diag(c) = f(s.eigenvalues(s.group_of[c]));
  return s.basis * diag.asDiagonal() * s.basis.adjoint();
}

Mat gibbs_state(const SpectralData& s, double beta) {
  const Eigen::Index d = s.dim();
  if (d == 0) throw std::invalid_argument("empty spectrum");
  const double emin = s.eigenvalues(0);
  Eigen::VectorXd w(d);
  for (Eigen::Index c = 0; c < d; ++c) {
    w(c) = std::exp(-beta * (s.eigenvalues(s.group_of[c]) - emin));
  }
  w /= w.sum();
  return s.basis * w.cast<cxd>().asDiagonal() * s.basis.adjoint();
}

namespace {

Eigen::VectorXd singular_values(const Mat& x) {
  // BDC is much faster on the larger superoperator-sized inputs; Jacobi is
  // kept for small blocks where it is both fast and maximally accurate.
  if (x.rows() <= 32 && x.cols() <= 32) {
    Eigen::JacobiSVD<Mat> svd(x);
    return svd.singularValues();
  }
  Eigen::BDCSVD<Mat> svd(x);
  return svd.singularValues();
}

}  // namespace

double op_norm(const Mat& x) {
  if (x.size() == 0) return 0.0;
  const Eigen::VectorXd sv = singular_values(x);
  return sv.size() > 0 ? sv(0) : 0.0;
}

double trace_norm(const Mat& x) {
  if (x.size() == 0) return 0.0;
  return singular_values(x).sum();
}

double hs_norm(const Mat& x) { return x.norm(); }

double trace_distance(const Mat& a, const Mat& b) { return 0.5 * trace_norm(a - b); }

bool is_hermitian(const Mat& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x - x.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gibbslab
