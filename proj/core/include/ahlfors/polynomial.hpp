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

// Dense polynomial helpers; coefficients are stored in increasing degree.

#ifndef AHLFORS_POLYNOMIAL_HPP_
#define AHLFORS_POLYNOMIAL_HPP_

#include <complex>
#include <vector>

namespace ahlfors {

using Poly = std::vector<double>;
using CPoly = std::vector<std::complex<double>>;

template <class C, class X>
auto poly_eval(const std::vector<C>& p, X x) {
  decltype(C{} * x) acc{};
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <class C>
std::vector<C> poly_derivative(const std::vector<C>& p) {
  if (p.size() <= 1) return {C{}};
  std::vector<C> d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
  return d;
}

template <class C>
std::vector<C> poly_mul(const std::vector<C>& p, const std::vector<C>& q) {
  std::vector<C> r(p.size() + q.size() - 1, C{});
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

template <class C>
std::vector<C> poly_add(const std::vector<C>& p, const std::vector<C>& q) {
  std::vector<C> r(std::max(p.size(), q.size()), C{});
  for (size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  return r;
}

template <class C>
std::vector<C> poly_scale(std::vector<C> p, C s) {
  for (C& c : p) c *= s;
  return p;
}

// Removes trailing coefficients with |c| <= tol * max|c|.
template <class C>
std::vector<C> poly_trim(std::vector<C> p, double tol = 0.0) {
  double big = 0.0;
  for (const C& c : p) big = std::max(big, std::abs(c));
  while (p.size() > 1 && std::abs(p.back()) <= tol * big) p.pop_back();
  return p;
}

Poly poly_from_roots(const std::vector<double>& roots);
CPoly to_complex(const Poly& p);
// p(q(x)).
Poly poly_compose(const Poly& p, const Poly& q);
// Chebyshev polynomials of the first and second kind.
Poly chebyshev_t(int m);
Poly chebyshev_u(int m);

// Zeros via companion-matrix eigenvalues; imaginary parts below
// real_tol * (1 + |z|) are set to zero.
std::vector<std::complex<double>> poly_roots(const CPoly& p,
                                             double real_tol = 1e-10);
std::vector<std::complex<double>> poly_roots(const Poly& p,
                                             double real_tol = 1e-10);

}  // namespace ahlfors

#endif  // AHLFORS_POLYNOMIAL_HPP_
