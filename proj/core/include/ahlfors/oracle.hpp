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

// Ground-truth A_n(z0; E) = sup |P'(z0)| over polynomials of degree n with
// P(z0) = 0 and |P| <= 1 on E, by semi-infinite linear programming.
//
// P(z) = (z - z0) Q(z) with Q in the Lagrange basis at nodes distributed
// over E by equilibrium measure, so P(z0) = 0 holds exactly and
// P'(z0) = Q(z0). Real z0 for a J-kind set gives a real problem with rows
// -1 <= P(x) <= 1. Otherwise coefficients are complex, the objective is
// Re Q(z0) (a rotation makes it WLOG), and |P(x)| <= 1 is relaxed to
// Re(e^{-i phi} P(x)) <= 1 for K polygon phases at the starting points.
// Exchange rounds scan E, refine the local maxima of |P| and add the
// violated rows (the tangent row at the phase of P for complex problems).
// The LP optimum is an upper bound; dividing it by max_E |P| gives a
// feasible polynomial and so a lower bound.

#ifndef AHLFORS_ORACLE_HPP_
#define AHLFORS_ORACLE_HPP_

#include <vector>

#include "ahlfors/abelian.hpp"
#include "ahlfors/extremal_poly.hpp"
#include "ahlfors/geometry.hpp"

namespace ahlfors {

struct OracleOptions {
  int facets = 64;         // polygon phases K at the starting points
  int grid = 0;            // scan points per piece; 0 means 30 n
  int max_rounds = 50;
  double tol = 1e-7;       // stop when max_E |P| <= 1 + tol
  double contact_tol = 1e-7;
};

// P(z) = (z - z0) sum_k q_k l_k(z) with Lagrange polynomials l_k.
class BarycentricPoly {
 public:
  BarycentricPoly() = default;
  BarycentricPoly(std::vector<cplx> nodes, cplx z0);

  int degree() const { return static_cast<int>(nodes_.size()); }
  const std::vector<cplx>& nodes() const { return nodes_; }
  cplx z0() const { return z0_; }
  void set_values(std::vector<cplx> q) { q_ = std::move(q); }
  const std::vector<cplx>& values() const { return q_; }

  // l_k(z) for all k.
  std::vector<cplx> lagrange(cplx z) const;
  cplx q(cplx z) const;
  cplx operator()(cplx z) const { return (z - z0_) * q(z); }
  // Monomial coefficients; only sensible for small degree.
  CPoly monomial() const;

 private:
  std::vector<cplx> nodes_;
  std::vector<cplx> weights_;
  double cap_ = 1.0;
  cplx z0_;
  std::vector<cplx> q_;
};

struct ExtremalResult {
  int n = 0;
  double value = 0.0;  // LP optimum
  double lower = 0.0;
  double upper = 0.0;
  double max_modulus = 0.0;
  BarycentricPoly poly;
  std::vector<cplx> contact;  // local maxima with |P| >= 1 - contact_tol
  int iterations = 0;         // simplex pivots
  int rounds = 0;             // exchange rounds
  int rows = 0;
  bool real_problem = false;
};

// weights: equilibrium share of each piece (any positive scale).
ExtremalResult extremal_on_pieces(const std::vector<Piece>& e, const std::vector<double>& weights,
                                  int n, cplx z0, bool real_problem,
                                  const OracleOptions& opt = {});
// J-kind bands; the problem is real when z0 is real.
ExtremalResult extremal_deriv(const BandSystem& e, int n, cplx z0, const OracleOptions& opt = {});
// Arcs of the unit circle; always complex.
ExtremalResult extremal_deriv(const ArcSystem& e, int n, cplx z0, const OracleOptions& opt = {});

// Share of the equilibrium measure on each band of a J-kind set.
std::vector<double> band_equilibrium(const BandSystem& e);

enum class SweepSource { kGenus0Lambda, kComplex, kRealGap };

struct SweepSpec {
  BandSystem set;
  SweepSource source = SweepSource::kComplex;
  cplx z0;
  cplx lambda;  // kGenus0Lambda: z0 = 2(lambda^2 + 1)/(lambda^2 - 1) on [-2, 2]
  std::vector<int> n_list;
  OracleOptions oracle;
  int threads = 1;
};

struct SweepRow {
  int n = 0;
  double lower = 0.0, upper = 0.0;
  double scaled = 0.0;     // e^{-n G(z0)} A_n, times |dz/dlambda| for kGenus0Lambda
  double predicted = 0.0;  // NaN when the prediction is out of region
  double ratio = 0.0;
  CharacterVector beta;
  int contact = 0;
  int rounds = 0;
};

std::vector<SweepRow> convergence_sweep(const SweepSpec& spec);

}  // namespace ahlfors

#endif  // AHLFORS_ORACLE_HPP_
