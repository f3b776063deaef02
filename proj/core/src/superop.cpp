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
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gibbslab/rng.hpp"

namespace gibbslab {

Vec vectorize(const Mat& x) {
  return Eigen::Map<const Vec>(x.data(), x.size());
}

Mat devectorize(const Vec& v, Eigen::Index dim) {
  if (v.size() != dim * dim) throw std::invalid_argument("vector length is not dim^2");
  return Eigen::Map<const Mat>(v.data(), dim, dim);
}

Superoperator Superoperator::zero(Eigen::Index dim) {
  return {dim, Mat::Zero(dim * dim, dim * dim)};
}

Superoperator Superoperator::identity(Eigen::Index dim) {
  return {dim, Mat::Identity(dim * dim, dim * dim)};
}

Superoperator Superoperator::left(const Mat& a) {
  const Eigen::Index d = a.rows();
  return {d, kron(Mat::Identity(d, d), a)};
}

Superoperator Superoperator::right(const Mat& b) {
  const Eigen::Index d = b.rows();
  return {d, kron(b.transpose(), Mat::Identity(d, d))};
}

Superoperator Superoperator::sandwich(const Mat& a, const Mat& b) {
  return {a.rows(), kron(b.transpose(), a)};
}

Superoperator Superoperator::conjugation(const Mat& k) {
  return sandwich(k, k.adjoint());
}

Superoperator Superoperator::commutator(const Mat& h) {
  const Eigen::Index d = h.rows();
  const Mat id = Mat::Identity(d, d);
  return {d, cxd(0, -1) * (kron(id, h) - kron(h.transpose(), id))};
}

Superoperator Superoperator::dissipator(const Mat& l) {
  const Mat ll = l.adjoint() * l;
  Superoperator s = conjugation(l);
  s.m -= 0.5 * (left(ll).m + right(ll).m);
  return s;
}

Mat Superoperator::apply(const Mat& x) const { return devectorize(m * vectorize(x), dim); }

Mat Superoperator::apply_adjoint(const Mat& x) const {
  return devectorize(m.adjoint() * vectorize(x), dim);
}

Superoperator Superoperator::adjoint() const { return {dim, m.adjoint()}; }

Superoperator Superoperator::transformed(const Mat& u) const {
  // vec(U^dag X U) = (U^T kron U^dag) vec(X); the basis-change matrix is unitary.
  const Mat w = kron(u.transpose(), u.adjoint());
  return {dim, w * m * w.adjoint()};
}

double Superoperator::hermiticity_preserving_defect() const {
  // S preserves Hermiticity iff m[(k,l),(m,n)] = conj(m[(l,k),(n,m)]).
  double worst = 0.0;
  for (Eigen::Index l = 0; l < dim; ++l) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      for (Eigen::Index n = 0; n < dim; ++n) {
        for (Eigen::Index mm = 0; mm < dim; ++mm) {
          const cxd a = m(k + dim * l, mm + dim * n);
          const cxd b = m(l + dim * k, n + dim * mm);
          worst = std::max(worst, std::abs(a - std::conj(b)));
        }
      }
    }
  }
  return worst;
}

double Superoperator::trace_preserving_defect() const {
  return hs_norm(apply_adjoint(Mat::Identity(dim, dim)));
}

Superoperator& Superoperator::operator+=(const Superoperator& o) {
  if (dim != o.dim) throw std::invalid_argument("dimension mismatch");
  m += o.m;
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& o) {
  if (dim != o.dim) throw std::invalid_argument("dimension mismatch");
  m -= o.m;
  return *this;
}

Superoperator& Superoperator::operator*=(cxd c) {
  m *= c;
  return *this;
}

Mat expm_dense(const Mat& a) {
  // Pade order 13 with scaling and squaring (coefficients from the standard
  // degree-13 diagonal approximant).
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;
  const Eigen::Index d = a.rows();
  const Mat id = Mat::Identity(d, d);

  const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int s = 0;
  if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  const Mat as = a / std::pow(2.0, s);

  const Mat a2 = as * as;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u =
      as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
            b[1] * id);
  const Mat v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Mat f = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < s; ++i) f = f * f;
  return f;
}

SemigroupSolver::SemigroupSolver(const Superoperator& gen) : dim_(gen.dim) {
  Eigen::ComplexEigenSolver<Mat> es(gen.m, /*computeEigenvectors=*/true);
  if (es.info() == Eigen::Success) {
    const Mat& v = es.eigenvectors();
    Eigen::BDCSVD<Mat> svd(v);
    const auto& sv = svd.singularValues();
    cond_ = (sv(sv.size() - 1) > 0.0) ? sv(0) / sv(sv.size() - 1)
                                      : std::numeric_limits<double>::infinity();
    if (std::isfinite(cond_) && cond_ < 1e10) {
      diagonalizable_ = true;
      v_ = v;
      vinv_ = v.partialPivLu().solve(Mat::Identity(v.rows(), v.cols()));
      evals_ = es.eigenvalues();
      return;
    }
  }
  // Nearly defective: keep a unitary Schur form and exponentiate the
  // triangular factor directly.
  Eigen::ComplexSchur<Mat> schur(gen.m);
  if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
  q_ = schur.matrixU();
  t_ = schur.matrixT();
}

Superoperator SemigroupSolver::propagator(double t) const {
  if (diagonalizable_) {
    Vec phases(evals_.size());
    for (Eigen::Index i = 0; i < evals_.size(); ++i) phases(i) = std::exp(t * evals_(i));
    return {dim_, v_ * phases.asDiagonal() * vinv_};
  }
  return {dim_, q_ * expm_dense(t * t_) * q_.adjoint()};
}

Mat SemigroupSolver::evolve(const Mat& x, double t) const { return propagator(t).apply(x); }

Vec generator_eigenvalues(const Superoperator& gen) {
  Eigen::ComplexEigenSolver<Mat> es(gen.m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return es.eigenvalues();
}

double spectral_gap(const Superoperator& gen, double zero_tol) {
  const Vec ev = generator_eigenvalues(gen);
  double maxabs = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) maxabs = std::max(maxabs, std::abs(ev(i)));
  if (maxabs == 0.0) return 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= zero_tol * maxabs) continue;  // stationary cluster
    worst = std::max(worst, ev(i).real());
  }
  if (!std::isfinite(worst)) return 0.0;
  return -worst;
}

double induced_1norm_lower(const Superoperator& s, std::uint64_t seed, int restarts, int iters) {
  const Eigen::Index d = s.dim;
  const auto value = [&](const Vec& psi) {
    const Mat rho = psi * psi.adjoint();
    return trace_norm(s.apply(rho));
  };
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng = SplitMix64::derive(seed, {0x31316e6f726dULL, static_cast<std::uint64_t>(r)});
    Vec psi = random_state(rng, d);
    double val = value(psi);
    double step = 0.5;
    for (int it = 0; it < iters && step > 1e-7; ++it) {
      Vec cand = psi + step * random_state(rng, d);
      cand /= cand.norm();
      const double cval = value(cand);
      if (cval > val) {
        psi = cand;
        val = cval;
        step *= 1.1;
      } else {
        step *= 0.7;
      }
    }
    best = std::max(best, val);
  }
  return best;
}

}  // namespace gibbslab
