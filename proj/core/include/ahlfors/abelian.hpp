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

// Hyperelliptic radical, normalized Abelian differentials, harmonic
// measures of the partial sets E_k and character arithmetic.
//
// Harmonic measures use E_k = E n [b0, a_k] for J-kind sets and
// E_k = E \ [0, a_k] for S-kind sets.

#ifndef AHLFORS_ABELIAN_HPP_
#define AHLFORS_ABELIAN_HPP_

#include <vector>

#include "ahlfors/geometry.hpp"
#include "ahlfors/quadrature.hpp"

namespace ahlfors {

// Branch of sqrt(T) (J-kind) or sqrt(-T) (S-kind), analytic off E, real on
// every gap and positive to the right of E (J) or asymptotic to
// sqrt(-z) prod (z - e) at infinity (S). It is the product of principal
// roots sqrt(z - l) sqrt(z - r) over the finite bands [l, r], times
// sqrt(b_g - z) for S.
class Radical {
 public:
  Radical() = default;
  explicit Radical(const BandSystem& e);

  cplx operator()(cplx z) const;
  // Boundary value from the upper half-plane at a real point.
  cplx upper(double x) const;
  // upper(x) / (sqrt(x - lo) sqrt(hi - x)) for x inside finite band i.
  cplx upper_reduced(double x, int band) const;
  // Sign of the (real) radical on gap j at its interior points.
  int gap_sign(int j) const { return gap_sign_[j]; }
  // T per kind: J, prod_{j=0..g} (x - a_j)(x - b_j); S, x prod (x - a_j)(x - b_j).
  double t_poly(double x) const;
  cplx t_poly(cplx z) const;

 private:
  BandSystem set_;
  std::vector<Interval> finite_bands_;
  double tail_ = 0.0;  // b_g for S-kind
  std::vector<int> gap_sign_;
};

// Gap chart point x(t) with weight (dx/dt) / R(x), evaluated without
// cancellation near the gap endpoints.
struct ChartWeight {
  double x;
  double weight;
};
ChartWeight chart_weight(const BandSystem& e, const Radical& r, GapPoint p);

// Integral over gap j of f(x)/R(x) dx in the gap chart; f polynomial-type
// callable. The chart removes the endpoint singularities.
double gap_integral(const BandSystem& e, const Radical& r, int gap,
                    const std::function<double(double)>& f);
// Same over the partial chart [0, t].
double gap_partial_integral(const BandSystem& e, const Radical& r, GapPoint p,
                            const std::function<double(double)>& f);

// Integral over finite band i of f(x) / R(x + i0) dx.
cplx band_integral(const BandSystem& e, const Radical& r, int band,
                   const std::function<double(double)>& f, double tol = 1e-13);

using CharacterVector = std::vector<double>;

double circle_distance(double u, double v);
CharacterVector reduce_mod1(CharacterVector beta);

enum class Problem { J, T, S };

class DifferentialBasis {
 public:
  // Throws a conditioning error when the period matrix has condition
  // number above 1e12. Requires g >= 1.
  explicit DifferentialBasis(const BandSystem& e);

  const BandSystem& set() const { return set_; }
  const Radical& radical() const { return radical_; }
  int genus() const { return set_.genus(); }

  // Q_k(z) for k = 1..g; the differential is dw_k = Q_k(z) dz / (2 R(z)),
  // so that its gap integrals are (1/2) delta_{jk}.
  cplx q(int k, cplx z) const;
  double q(int k, double x) const;
  // Recomputed integral of dw_k over gap j (inner gaps j = 1..g).
  double period(int j, int k) const;
  double condition() const { return condition_; }
  // Coefficients of Q_k in the scaled variable u = (x - center)/scale.
  const std::vector<double>& coefficients(int k) const { return coef_[k - 1]; }
  double center() const { return center_; }
  double scale() const { return scale_; }

  // omega(x, E_k) at a real gap point (outer-gap infinity included).
  double measure_at(int k, GapPoint p) const;
  // omega(z, E_k) for z off E (real in a gap, or complex).
  double harmonic_measure(int k, cplx z) const;
  // Same through an explicitly chosen base endpoint and lift height.
  double harmonic_measure_via(int k, cplx z, double base, double h) const;
  // omega(z, band i), i = 0..g, from the band's own left endpoint.
  double band_measure(int band, cplx z) const;

 private:
  double base_value(int k, double endpoint) const;

  BandSystem set_;
  Radical radical_;
  double center_ = 0.0, scale_ = 1.0;
  std::vector<std::vector<double>> coef_;
  double condition_ = 1.0;
};

// harmonic_measure(E, z, k) convenience.
double harmonic_measure(const DifferentialBasis& basis, cplx z, int k);

// beta_k = n omega_k / pi (J, S) or n omega_k / (2 pi) (T), mod 1.
CharacterVector limit_character(const std::vector<double>& base_angles,
                                double n, Problem problem);

// (omega(x, E_1), ..., omega(x, E_g)) mod 1.
CharacterVector character_of_point(const DifferentialBasis& basis, GapPoint p);

// Componentwise sum of character_of_point over several gap points, mod 1.
CharacterVector character_of_points(const DifferentialBasis& basis,
                                    const std::vector<GapPoint>& points);

}  // namespace ahlfors

#endif  // AHLFORS_ABELIAN_HPP_
