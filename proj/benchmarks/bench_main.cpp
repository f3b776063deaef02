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

#include <benchmark/benchmark.h>

#include "gibbslab/dense.hpp"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/kernels.hpp"
#include "gibbslab/lindbladian.hpp"
#include "gibbslab/quasilocality.hpp"
#include "gibbslab/rng.hpp"
#include "gibbslab/separability.hpp"
#include "gibbslab/superop.hpp"

namespace {

using namespace gibbslab;

LocalHamiltonian bench_chain(int n, double h) {
  return chain_hamiltonian(n, "XX", ExternalField::uniform_z(n, h));
}

void BM_HermEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Mat hd = bench_chain(n, 3.0).dense();
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_eig(hd));
  }
}
BENCHMARK(BM_HermEig)->Arg(3)->Arg(4)->Arg(5);

void BM_BuildLindbladian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double beta = 0.05;
  LocalHamiltonian ham = bench_chain(n, 1.0 / beta);
  FieldResonantParams params = field_resonant_params(ham, beta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_lindbladian(ham, beta, params));
  }
}
BENCHMARK(BM_BuildLindbladian)->Arg(2)->Arg(3)->Arg(4);

void BM_SemigroupPropagator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double beta = 0.1;
  LocalHamiltonian ham = bench_chain(n, 2.0);
  LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
  for (auto _ : state) {
    SemigroupSolver solver(lb.generator);
    benchmark::DoNotOptimize(solver.propagator(1.0));
  }
}
BENCHMARK(BM_SemigroupPropagator)->Arg(2)->Arg(3);

void BM_ExpmDense(benchmark::State& state) {
  const Eigen::Index d = state.range(0);
  SplitMix64 rng(42);
  Mat m = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = cxd(rng.normal(), rng.normal()) / double(d);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm_dense(m));
  }
}
BENCHMARK(BM_ExpmDense)->Arg(16)->Arg(64)->Arg(256);

void BM_KernelB1(benchmark::State& state) {
  SiteKernelParams p = SiteKernelParams::field_resonant(0.2, 5.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_b1(t, p));
    t += 1e-3;
  }
}
BENCHMARK(BM_KernelB1);

void BM_MomentB2Quadrature(benchmark::State& state) {
  SiteKernelParams p = SiteKernelParams::field_resonant(0.1, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_b2_quadrature(p, 3, 1e-10));
  }
}
BENCHMARK(BM_MomentB2Quadrature);

void BM_HeisenbergShells(benchmark::State& state) {
  LocalHamiltonian ham = bench_chain(6, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heisenberg_shells(ham, pauli('X'), 2, 0.1, 5));
  }
}
BENCHMARK(BM_HeisenbergShells);

void BM_EnumerateClusters(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  LocalHamiltonian ham = bench_chain(6, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_clusters(ham, 2, k, k));
  }
}
BENCHMARK(BM_EnumerateClusters)->Arg(2)->Arg(4)->Arg(6);

void BM_InducedNormLower(benchmark::State& state) {
  const double beta = 0.1;
  LocalHamiltonian ham = bench_chain(3, 2.0);
  LindbladianBuild lb = build_lindbladian(ham, beta, field_resonant_params(ham, beta));
  SemigroupSolver solver(lb.generator);
  Superoperator prop = solver.propagator(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(induced_1norm_lower(prop, 7, 32, 50));
  }
}
BENCHMARK(BM_InducedNormLower);

}  // namespace

BENCHMARK_MAIN();
