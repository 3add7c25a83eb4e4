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

#include "ahlfors/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "ahlfors/error.hpp"

namespace ahlfors {

Poly poly_from_roots(const std::vector<double>& roots) {
  Poly p{1.0};
  for (double r : roots) p = poly_mul(p, Poly{-r, 1.0});
  return p;
}

CPoly to_complex(const Poly& p) { return CPoly(p.begin(), p.end()); }

Poly poly_compose(const Poly& p, const Poly& q) {
  if (p.empty()) return {0.0};
  Poly acc{p.back()};
  for (size_t i = p.size() - 1; i-- > 0;) {
    acc = poly_mul(acc, q);
    acc[0] += p[i];
  }
  return acc;
}

Poly chebyshev_t(int m) {
  Poly t0{1.0}, t1{0.0, 1.0};
  if (m == 0) return t0;
  for (int k = 1; k < m; ++k) {
    Poly t2 = poly_add(poly_mul(Poly{0.0, 2.0}, t1), poly_scale(t0, -1.0));
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

Poly chebyshev_u(int m) {
  Poly u0{1.0}, u1{0.0, 2.0};
  if (m == 0) return u0;
  for (int k = 1; k < m; ++k) {
    Poly u2 = poly_add(poly_mul(Poly{0.0, 2.0}, u1), poly_scale(u0, -1.0));
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

std::vector<std::complex<double>> poly_roots(const CPoly& p_in,
                                             double real_tol) {
  CPoly p = poly_trim(p_in, 0.0);
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return {};
  if (std::abs(p.back()) == 0.0) {
    throw Error(ErrorKind::kDegeneracy, "zero polynomial has no roots");
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p[i] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(),
                                        es.eigenvalues().data() + n);
  // One Newton polish step per root against the original coefficients.
  CPoly dp = poly_derivative(p);
  for (auto& z : out) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> d = poly_eval(dp, z);
      if (std::abs(d) == 0.0) break;
      std::complex<double> step = poly_eval(p, z) / d;
      if (!std::isfinite(std::abs(step))) break;
      z -= step;
    }
    if (std::abs(z.imag()) <= real_tol * (1.0 + std::abs(z))) z.imag(0.0);
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<std::complex<double>> poly_roots(const Poly& p, double real_tol) {
  return poly_roots(to_complex(p), real_tol);
}

}  // namespace ahlfors
