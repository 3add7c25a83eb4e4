// Copyright 2026 The ahlfors Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One-dimensional quadrature: Gauss-Chebyshev for band integrals with
// inverse square root endpoint weights, adaptive Gauss-Legendre for
// regular pieces, and polyline integrals in the upper half-plane.

#ifndef AHLFORS_QUADRATURE_HPP_
#define AHLFORS_QUADRATURE_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "ahlfors/geometry.hpp"

namespace ahlfors {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int nodes = 0;
};

// Integral of f(x) / sqrt((x - a)(b - x)) over (a, b). Node counts double
// from 16 until two levels agree to tol * scale; throws an accuracy error
// past max_nodes.
QuadResult integrate_band(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12,
                          int max_nodes = 1 << 16);

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
struct Legendre15 {
  std::array<double, 15> x;
  std::array<double, 15> w;
};
const Legendre15& legendre15();

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T, class F>
T panel(F& f, double a, double b) {
  const Legendre15& g = legendre15();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T sum{};
  for (int i = 0; i < 15; ++i) sum += g.w[i] * f(c + h * g.x[i]);
  return sum * h;
}

template <class T, class F>
T adapt(F& f, double a, double b, T whole, double tol, int depth,
        int* evals) {
  const double m = 0.5 * (a + b);
  T left = panel<T>(f, a, m);
  T right = panel<T>(f, m, b);
  *evals += 30;
  T both = left + right;
  const double diff = magnitude(both - whole);
  // Stop at the requested accuracy, at roundoff level, at depth 40 or when
  // the evaluation budget is spent.
  constexpr int kMaxEvals = 2000000;
  if (diff <= tol || diff <= 1e-15 * magnitude(both) || depth >= 40 ||
      *evals > kMaxEvals || !(diff == diff) || m <= a || m >= b) {
    return both;
  }
  return adapt<T>(f, a, m, left, 0.5 * tol, depth + 1, evals) +
         adapt<T>(f, m, b, right, 0.5 * tol, depth + 1, evals);
}

}  // namespace detail

// Adaptive Gauss-Legendre with 15-point panels. Panels are bisected while
// the refined and coarse estimates differ by more than tol (absolute,
// scaled by the magnitude of the first estimate when that exceeds one).
template <class T, class F>
T integrate_regular(F&& f, double a, double b, double tol = 1e-13) {
  if (a == b) return T{};
  int evals = 15;
  T whole = detail::panel<T>(f, a, b);
  double scale = std::max(1.0, detail::magnitude(whole));
  // Start from a few panels so that narrow features are not missed.
  constexpr int kStart = 4;
  T sum{};
  for (int i = 0; i < kStart; ++i) {
    double lo = a + (b - a) * i / kStart, hi = a + (b - a) * (i + 1) / kStart;
    T piece = detail::panel<T>(f, lo, hi);
    sum += detail::adapt<T>(f, lo, hi, piece, tol * scale / kStart, 0, &evals);
  }
  return sum;
}

// Integral over [e, x] of a function with an inverse square root
// singularity at e, via y = e + (x - e) s^2.
template <class T, class F>
T integrate_sqrt_start(F&& f, double e, double x, double tol = 1e-13) {
  const double d = x - e;
  auto g = [&](double s) -> T {
    double y = e + d * s * s;
    // Keep the evaluation off the singular endpoint when d s^2 underflows.
    if (y == e) y = std::nextafter(e, x);
    return f(y) * (2.0 * d * s);
  };
  return integrate_regular<T>(g, 0.0, 1.0, tol);
}

// Complex polyline. When singular_start is set, the first segment uses the
// substitution z = z0 + (z1 - z0) s^2 to absorb an inverse square root
// singularity at the starting point.
struct Path {
  std::vector<cplx> nodes;
  bool singular_start = false;
};

// Lift to height h, traverse, descend. h defaults to half the smallest gap.
Path lift_path(const BandSystem& e, double start, cplx z, double h = -1.0);

// Throws a geometry error if a segment meets the interior of a band.
void check_path(const BandSystem& e, const Path& path);

cplx integrate_path(const std::function<cplx(cplx)>& f, const Path& path,
                    double tol = 1e-13);

}  // namespace ahlfors

#endif  // AHLFORS_QUADRATURE_HPP_
