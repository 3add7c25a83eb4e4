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


// Real inversion of the Abel-type map on the gap torus and the generalized
// inversion problem that couples it with a point z0 of the upper half-plane.
//
// Unknowns are gap chart coordinates t_j in [0, 1] (see GapPoint). For a
// J-kind set the outer point x_0 lives in gap 0, which runs from a0 through
// infinity to b0; there U(z) = (x_0 - z)/(x_0 - m) prod_{j>=1} (z - x_j) with
// m the hull midpoint, so that U stays finite as x_0 passes infinity. For an
// S-kind set U(z) = (x_0 - z) prod_{j>=1} (z - x_j).

#ifndef AHLFORS_INVERSION_HPP_
#define AHLFORS_INVERSION_HPP_

#include <optional>
#include <vector>

#include "ahlfors/abelian.hpp"
#include "ahlfors/geometry.hpp"

namespace ahlfors {

struct InversionSolution {
  std::vector<GapPoint> points;
  std::vector<double> x;        // real coordinates; kInf for the point at infinity
  double residual_cs1 = 0.0;    // max circle distance of the character equations
  double residual_cs2 = 0.0;    // |balance equation|
  double rho = 0.0;             // Re of i U(z0)/R(z0)
  double realness_defect = 0.0; // |Im| / |.| of the same quantity
  double rho_tilde_sq = 0.0;
  bool in_region = false;       // rho^2 < rho~^2
};

struct GajiResult {
  std::vector<InversionSolution> branches;
  bool multiple() const { return branches.size() > 1; }
};

struct JacobianCheck {
  double sigma_min = 0.0;
  cplx m_value;        // sum_j R(x_j) / (U'(x_j)(z0 - x_j))
  double determinant;  // Vandermonde times 2 Im m_value (0 if x_0 is infinite)
};

struct BifurcationRow {
  double beta = 0.0;
  int branch = 0;
  int branches = 0;
  double x0 = 0.0, x1 = 0.0;
  double rho_sq = 0.0, rho_tilde_sq = 0.0;
  bool valid = false;
  double angle_relation = 0.0;  // residual of the two-arc angle relation
};

class Inversion {
 public:
  explicit Inversion(const BandSystem& e);

  const BandSystem& set() const { return set_; }
  int genus() const { return set_.genus(); }
  const DifferentialBasis& basis() const;

  // omega(x(p), E_k).
  double measure(int k, GapPoint p) const;
  // Sum over the points of (omega(x_j, E_1), ..., omega(x_j, E_g)), unreduced.
  std::vector<double> character_sum(const std::vector<GapPoint>& points) const;

  // Points in gaps 1..g with sum omega(x_j, E_k) = beta_k mod 1.
  InversionSolution real_inversion(const CharacterVector& beta) const;

  // Points in gaps 0..g solving the character equations together with the
  // balance equation at z0. All branches found are returned.
  GajiResult gaji_solve(const CharacterVector& beta, cplx z0) const;

  // sum_j (int_{a_j}^{x_j} + int_{b_j}^{x_j}) dx / |x - z0|^2 in closed form.
  double cs2(const std::vector<GapPoint>& points, cplx z0) const;
  // Harmonic measures in C+ at z0 of the unions of [a_j, x_j] and [x_j, b_j].
  std::pair<double, double> balance(const std::vector<GapPoint>& points,
                                    cplx z0) const;
  cplx u_poly(const std::vector<GapPoint>& points, cplx z) const;
  // i U(z0) / R(z0).
  cplx rho_complex(const std::vector<GapPoint>& points, cplx z0) const;
  // inf over E of U(x)^2 / |T(x)|.
  double rho_tilde_sq(const std::vector<GapPoint>& points) const;

  JacobianCheck jacobian_check(const std::vector<GapPoint>& points,
                               cplx z0) const;

  // Elliptic (g = 1) scan over the given beta values.
  std::vector<BifurcationRow> bifurcation_scan(const std::vector<double>& betas,
                                               cplx z0, int grid = 256) const;

 private:
  struct Curve {
    std::vector<double> s, beta;
  };
  int driver_gap(cplx z0) const;
  // Points of gaps 0 and 1 on the balance curve, with chart coordinate s in
  // the driving gap.
  std::vector<GapPoint> balance_point(double s, cplx z0, bool* ok) const;
  Curve elliptic_curve(cplx z0, int grid) const;
  std::vector<std::vector<GapPoint>> elliptic_solutions(const Curve& c,
                                                        double beta,
                                                        cplx z0) const;
  InversionSolution finish(std::vector<GapPoint> points,
                           const CharacterVector& beta, cplx z0,
                           bool with_z0) const;
  std::optional<std::vector<GapPoint>> newton(std::vector<GapPoint> start,
                                              const CharacterVector& beta,
                                              cplx z0, bool with_z0) const;
  std::vector<double> residual(const std::vector<GapPoint>& points,
                               const CharacterVector& beta, cplx z0,
                               bool with_z0) const;

  BandSystem set_;
  Radical radical_;
  std::optional<DifferentialBasis> basis_;
};

InversionSolution real_inversion(const BandSystem& e, const CharacterVector& beta);
GajiResult gaji_solve(const BandSystem& e, const CharacterVector& beta, cplx z0);

}  // namespace ahlfors

#endif  // AHLFORS_INVERSION_HPP_
