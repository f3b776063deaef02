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

#include <cstdint>
#include <initializer_list>

#include <Eigen/Dense>

namespace gibbslab {

// SplitMix64 stream.  Counter-based and stateless apart from the cursor, so a
// (seed, substream) pair fully determines every draw independently of call
// order across threads or platforms.  Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; one value per call, no cached spare so
  // the draw count stays deterministic.
  double normal();

  // Derives an independent substream by hashing ids into the seed.  Used to
  // give each (instance, site, restart, ...) its own reproducible stream.
  static SplitMix64 derive(std::uint64_t seed, std::initializer_list<std::uint64_t> ids);

 private:
  std::uint64_t state_;
};

// Haar-random pure state of dimension dim (normalized complex Gaussian).
Eigen::VectorXcd random_state(SplitMix64& rng, Eigen::Index dim);

// Random Hermitian matrix with iid standard-normal real/imag parts before
// symmetrization; scale fixes the entrywise standard deviation.
Eigen::MatrixXcd random_hermitian(SplitMix64& rng, Eigen::Index dim, double scale = 1.0);

}  // namespace gibbslab
