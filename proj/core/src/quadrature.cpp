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

#include "ahlfors/quadrature.hpp"

#include <algorithm>
#include <numbers>

#include "ahlfors/error.hpp"

namespace ahlfors {

namespace detail {

const Legendre15& legendre15() {
  static const Legendre15 rule = [] {
    Legendre15 r{};
    constexpr int n = 15;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 1.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-17) break;
      }
      r.x[i] = x;
      r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

}  // namespace detail

namespace {

double chebyshev_level(const std::function<double(double)>& f, double a,
                       double b, int n) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double x = c + h * std::cos(std::numbers::pi * (k + 0.5) / n);
    sum += f(x);
  }
  return sum * std::numbers::pi / n;
}

}  // namespace

QuadResult integrate_band(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_nodes) {
  int n = 16;
  double prev = chebyshev_level(f, a, b, n);
  while (2 * n <= max_nodes) {
    n *= 2;
    double cur = chebyshev_level(f, a, b, n);
    double err = std::abs(cur - prev);
    if (err <= tol * std::max(1.0, std::abs(cur))) return {cur, err, n};
    prev = cur;
  }
  throw Error(ErrorKind::kAccuracy,
              "band quadrature did not converge; best estimate " +
                  std::to_string(prev));
}

Path lift_path(const BandSystem& e, double start, cplx z, double h) {
  if (h <= 0.0) h = 0.5 * e.min_gap_length();
  Path p;
  p.singular_start = true;
  p.nodes.push_back(start);
  const double top = std::max(h, 0.0);
  p.nodes.push_back(cplx(start, top));
  if (z.real() != start) p.nodes.push_back(cplx(z.real(), top));
  if (z.imag() != top) p.nodes.push_back(z);
  return p;
}

void check_path(const BandSystem& e, const Path& path) {
  for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    cplx u = path.nodes[i], v = path.nodes[i + 1];
    if (u == v) throw Error(ErrorKind::kGeometry, "repeated path node");
    const bool on_axis_u = u.imag() == 0.0, on_axis_v = v.imag() == 0.0;
    if (on_axis_u && on_axis_v) {
      // A segment along the axis must stay inside one gap.
      double mid = 0.5 * (u.real() + v.real());
      if (e.gap_of(mid) < 0) {
        throw Error(ErrorKind::kGeometry, "segment runs along a band");
      }
      continue;
    }
    if ((u.imag() < 0.0 && v.imag() > 0.0) ||
        (u.imag() > 0.0 && v.imag() < 0.0)) {
      double s = u.imag() / (u.imag() - v.imag());
      double x = u.real() + s * (v.real() - u.real());
      if (e.in_set(x, 0.0)) {
        throw Error(ErrorKind::kGeometry, "segment crosses a band");
      }
    }
    // Landing on the axis at an interior band point is not allowed.
    if (i + 2 == path.nodes.size() && on_axis_v &&
        e.in_set(v.real(), -kEndpointTol)) {
      throw Error(ErrorKind::kGeometry, "path ends on a band");
    }
  }
}

cplx integrate_path(const std::function<cplx(cplx)>& f, const Path& path,
                    double tol) {
  cplx total = 0.0;
  for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    const cplx u = path.nodes[i], d = path.nodes[i + 1] - u;
    if (i == 0 && path.singular_start) {
      auto g = [&](double s) -> cplx { return f(u + d * (s * s)) * (2.0 * s) * d; };
      total += integrate_regular<cplx>(g, 0.0, 1.0, tol);
    } else {
      // Long segments far from the set are split geometrically.
      auto g = [&](double s) -> cplx { return f(u + d * s) * d; };
      const double len = std::abs(d), near = std::max(std::abs(u.imag()), 1e-3);
      if (len > 50.0 * near) {
        double lo = 0.0, hi = 20.0 * near / len;
        while (lo < 1.0) {
          hi = std::min(hi, 1.0);
          total += integrate_regular<cplx>(g, lo, hi, tol);
          lo = hi;
          hi *= 4.0;
        }
      } else {
        total += integrate_regular<cplx>(g, 0.0, 1.0, tol);
      }
    }
  }
  return total;
}

}  // namespace ahlfors
