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


// Closed-form kernel and Ahlfors-function formulas for S-kind sets, the
// simply connected limit Upsilon and the asymptotic predictors.
//
// Omega(z) = (1/sqrt(-z)) prod_j ((z - a_j)/(z - b_j))^(1/2) with Omega > 0 on
// the negative axis. The sign vector eps selects the variant
// (1/sqrt(-z)) prod_j ((z - a_j)/(z - b_j))^(eps_j/2).

#ifndef AHLFORS_KERNELS_HPP_
#define AHLFORS_KERNELS_HPP_

#include <functional>
#include <vector>

#include "ahlfors/abelian.hpp"
#include "ahlfors/geometry.hpp"
#include "ahlfors/polynomial.hpp"

namespace ahlfors {

using SignVector = std::vector<int>;
using CMatrix = std::vector<std::vector<cplx>>;

// Omega_eps(z); an empty eps means all +1. Real z is allowed in a gap
// (limit from the upper half-plane); z on E is a domain error.
cplx omega(const BandSystem& e, cplx z, const SignVector& eps = {});
// Limit of Omega_eps from the upper half-plane at a real point of E or of a
// gap; throws at band endpoints.
cplx omega_upper(const BandSystem& e, double x, const SignVector& eps = {});
// sqrt(-T(z)) = prod_j (z - a_j) / Omega(z).
cplx sqrt_minus_t(const BandSystem& e, cplx z);

struct HalfPeriodScan {
  SignVector argmin;
  std::vector<SignVector> variants;
  std::vector<double> values;  // Im Omega_eps(z0) / |Omega_eps(z0)|
};

HalfPeriodScan half_period_scan(const BandSystem& e, cplx z0);

// w(z) = (z - z0)/(z - conj z0) (Omega(z) - Omega(conj z0))/(Omega(z) + Omega(z0)).
cplx ahlfors_function(const BandSystem& e, cplx z0, cplx z);
// |w'(z0)| = Im Omega(z0) / (2 Im z0 |Omega(z0)|).
double derivative_density(const BandSystem& e, cplx z0);

// (-1/Omega(z) + 1/Omega(conj z0)) / (2 (z - conj z0)).
cplx kernel_omega(const BandSystem& e, cplx z, cplx z0);

struct DivisorPoint {
  double x = 0.0;
  int eps = 1;
};
using Divisor = std::vector<DivisorPoint>;

class MFunctions {
 public:
  // Throws a degeneracy error for coalescing points or a point at 0.
  MFunctions(const BandSystem& e, const Divisor& d);

  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  // max_j |V(x_j) - target_j|.
  double interpolation_residual() const { return residual_; }

  // (-sqrt(-T(z)) +- V(z)) / U(z).
  cplx m_plus(cplx z) const;
  cplx m_minus(cplx z) const;
  // (m_+(z) - m_+(conj z0)) / (2 (z - conj z0)).
  cplx kernel(cplx z, cplx z0) const;
  // Limits from the upper half-plane at a point of E.
  cplx m_plus_upper(double x) const;
  cplx m_minus_upper(double x) const;

 private:
  BandSystem set_;
  Poly u_, v_;
  double residual_ = 0.0;
};

// Closed-form value 2 sqrt(l) conj(sqrt(l)) / ((l + conj l)(sqrt(l) + conj(sqrt(l)))^2).
double upsilon_g0(cplx lambda);
// k(l, l0) = (1/(l + conj l0)) 2 sqrt(l) conj(sqrt(l0)) / (sqrt(l) + conj(sqrt(l0)))^2.
cplx upsilon_kernel(cplx lambda, cplx lambda0);

// [dbar^m d^n Upsilon(lambda)]_{n,m=0..order} from tensor finite-difference
// stencils of the given half-width and step.
CMatrix hstr_matrix(const std::function<double(cplx)>& f, cplx lambda,
                    int order, double step, int half_width = 6);

CMatrix gram_matrix(const std::function<cplx(cplx, cplx)>& kernel,
                    const std::vector<cplx>& points);
double min_hermitian_eigenvalue(const CMatrix& m);

// Weights of the central finite-difference stencil on offsets -w..w for the
// derivative of the given order.
std::vector<double> fd_weights(int order, int half_width);

struct ComplexPrediction {
  double value = 0.0;
  std::vector<double> points;  // x_0..x_g of the branch used
  double rho = 0.0;
  double rho_tilde_sq = 0.0;
  bool in_region = false;
  int branches = 0;
  std::vector<double> all_values;  // one value per branch
};

// Y(z0, beta) = exp(-sum_j G(x_j, z0)) / (2 Im z0) from the inversion
// branches; reports the first in-region branch. Throws an admissibility
// error when no branch satisfies rho^2 < rho~^2.
ComplexPrediction predict_complex(const BandSystem& e, cplx z0,
                                  const CharacterVector& beta);
// Same value for explicitly given points x_0..x_g (kInf allowed for x_0).
double complex_value_at(const BandSystem& e, cplx z0,
                        const std::vector<double>& points);

struct RealGapPrediction {
  double value = 0.0;
  double robin = 0.0;
  std::vector<double> points;  // x_1..x_g
};

// (1/2) exp(-gamma(x0)) exp(-sum_{j>=1} G(x_j, x0)) where x_1..x_g solve the
// real inversion for beta minus the character of x0.
RealGapPrediction predict_real_gap(const BandSystem& e, double x0,
                                   const CharacterVector& beta);

}  // namespace ahlfors

#endif  // AHLFORS_KERNELS_HPP_
