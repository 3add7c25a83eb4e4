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


// Comb maps, Green and Martin functions, capacities and Robin constants.
//
// For a J-kind set the comb map is tau(z) = i int_{b0}^z P(s) ds / R(s) with
// P monic of degree g; Im tau is the Green function with pole at infinity,
// tau(b0) = 0 and tau(a0) = pi. For an S-kind set tau(z) = -(i/2) int_0^z
// P(s) ds / R(s), Im tau is the Martin function and tau(-x) ~ i sqrt(x).
// The zeros c_j of P are fixed by requiring zero increments over the gaps.

#ifndef AHLFORS_POTENTIAL_HPP_
#define AHLFORS_POTENTIAL_HPP_

#include <vector>

#include "ahlfors/abelian.hpp"
#include "ahlfors/geometry.hpp"
#include "ahlfors/polynomial.hpp"

namespace ahlfors {

struct CombData {
  Kind kind = Kind::J;
  std::vector<double> critical;     // c_j, j = 1..g
  std::vector<double> base_angles;  // omega_j = Re tau on gap j, j = 1..g
  std::vector<double> heights;      // h_j = Im tau(c_j)
  double width = 0.0;               // Re tau(a0) for J-kind
};

// Critical points c_j, one per inner gap; empty for g = 0.
std::vector<double> critical_points(const BandSystem& e);

class CombMap {
 public:
  explicit CombMap(const BandSystem& e);

  const BandSystem& set() const { return set_; }
  const Radical& radical() const { return radical_; }
  const CombData& data() const { return data_; }

  // Monic critical-point polynomial P(z) = prod (z - c_j).
  cplx p(cplx z) const;
  double p(double x) const;
  // Integral of P/R over inner gap j (vanishes at the solution).
  double gap_residual(int j) const;

  // tau(z) for z off E; real z is read as the limit from the upper
  // half-plane, so points of E are allowed when real.
  cplx tau(cplx z) const;
  // Same along an explicitly chosen base endpoint and lift height.
  cplx tau_via(cplx z, double base, double h) const;
  // Green function at infinity (J) or Martin function (S).
  double potential(cplx z) const;
  // Re tau at each finite endpoint, in BandSystem::endpoints() order.
  const std::vector<double>& endpoint_values() const { return endpoint_tau_; }

 private:
  cplx factor() const;
  double gap_potential(int gap, double x) const;

  BandSystem set_;
  Radical radical_;
  Poly coef_;  // P in the scaled variable u = (z - center) / scale
  double center_ = 0.0, scale_ = 1.0;
  std::vector<double> endpoint_tau_;
  CombData data_;
};

CombData comb_data(const BandSystem& e);
cplx comb_map(const BandSystem& e, cplx z);
double green_at_infinity(const BandSystem& e, cplx z);

struct Capacity {
  double cap = 0.0;
  double robin = 0.0;   // -log cap
  double spread = 0.0;  // disagreement of the extrapolation stencils
};

// Richardson extrapolation of G(iy) - log y at y = 1e3, 1e4, 1e5.
Capacity capacity_and_robin(const BandSystem& e);
Capacity capacity_and_robin(const CombMap& comb);
// -log cap from the improper integral of P/R - 1/(x - a0 + 1) over (a0, inf).
double robin_by_integral(const CombMap& comb);

// Green function with a finite real pole x0 in a gap, through the
// reduction z -> 1/(x0 - z) onto a bounded set.
class PoleGreen {
 public:
  PoleGreen(const BandSystem& e, double x0);

  double pole() const { return x0_; }
  const Reduction& reduction() const { return reduction_; }
  const CombMap& reduced() const { return comb_; }

  // G(z, x0); z = kInf is allowed for J-kind sets.
  double operator()(cplx z) const;
  // gamma(x0) in G(z, x0) = -log|z - x0| + gamma(x0) + o(1).
  double robin() const { return robin_.robin; }
  double robin_spread() const { return robin_.spread; }
  // G(x0 + i r, x0) + log r.
  double robin_sampled(double r) const;

 private:
  double x0_;
  Reduction reduction_;
  CombMap comb_;
  Capacity robin_;
};

double green_real_pole(const BandSystem& e, double x0, cplx z);
double robin_at(const BandSystem& e, double x0);

// pi * omega(infinity, E_k) for k = 1..g (J-kind).
std::vector<double> base_angles_from_measure(const DifferentialBasis& basis);

// The extension is E together with the closed intervals `added`, which lie
// in gaps of E. Returns the sup over the test points of
// |M~(z) - M(z) + (1/pi) int G(z, x) d Re tau~(x)|, where M and M~ are the
// potentials of E and of the extension and the integral runs over `added`.
double extension_identity_check(const BandSystem& e,
                                const std::vector<Interval>& added,
                                const std::vector<cplx>& points);

}  // namespace ahlfors

#endif  // AHLFORS_POTENTIAL_HPP_
