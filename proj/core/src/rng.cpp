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

#include "gibbslab/rng.hpp"

#include <cmath>

namespace gibbslab {

double SplitMix64::normal() {
  // Box-Muller on two fresh uniforms; u1 is kept away from 0.
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

SplitMix64 SplitMix64::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
  // Feed each id through one SplitMix64 output step so distinct id tuples
  // land in well-separated regions of the counter space.
  std::uint64_t s = seed;
  for (std::uint64_t id : ids) {
    SplitMix64 h(s ^ (id + 0x9E3779B97F4A7C15ULL));
    s = h();
  }
  return SplitMix64(s);
}

Eigen::VectorXcd random_state(SplitMix64& rng, Eigen::Index dim) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = std::complex<double>(re, im);
  }
  const double nrm = v.norm();
  if (nrm > 0.0) v /= nrm;
  return v;
}

Eigen::MatrixXcd random_hermitian(SplitMix64& rng, Eigen::Index dim, double scale) {
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      a(i, j) = scale * std::complex<double>(re, im);
    }
  }
  return 0.5 * (a + a.adjoint()).eval();
}

}  // namespace gibbslab
