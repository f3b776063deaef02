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

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace gibbslab {

template <typename T>
struct Quadrature {
  T value{};
  double error_estimate = 0.0;
  long points = 0;
  bool converged = false;
};

// Composite trapezoid on [a, b] with dyadic refinement and Richardson
// extrapolation; stops when successive extrapolants differ by less than
// rel_tol relatively (with a small absolute floor for integrals near zero).
// Smooth integrands only — singular behavior must be removed by the caller.
template <typename F,
          typename T = std::invoke_result_t<F, double>>
Quadrature<T> integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                        long max_points = (1L << 20) + 1, double abs_floor = 1e-15) {
  if (!(b > a)) throw std::invalid_argument("integration interval is empty");
  long m = 128;  // initial interval count
  const double h0 = (b - a) / static_cast<double>(m);
  T sum = 0.5 * (f(a) + f(b));
  for (long i = 1; i < m; ++i) sum += f(a + h0 * static_cast<double>(i));
  T trap = sum * h0;

  Quadrature<T> out;
  T richardson_prev{};
  bool have_prev = false;
  while (true) {
    // Refine: add midpoints of the current grid.
    const double h = (b - a) / static_cast<double>(m);
    T mids = T{};
    for (long i = 0; i < m; ++i) mids += f(a + h * (static_cast<double>(i) + 0.5));
    const T trap2 = 0.5 * trap + mids * (0.5 * h);
    const T rich = (4.0 * trap2 - trap) / 3.0;
    m *= 2;
    trap = trap2;
    out.points = m + 1;
    if (have_prev) {
      const double delta = std::abs(rich - richardson_prev);
      out.value = rich;
      out.error_estimate = delta;
      if (delta <= rel_tol * std::abs(rich) + abs_floor) {
        out.converged = true;
        return out;
      }
    }
    richardson_prev = rich;
    have_prev = true;
    if (m + 1 > max_points) {
      out.value = rich;
      out.converged = false;
      return out;
    }
  }
}

}  // namespace gibbslab
