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

// Pell pairs from polynomial preimages, candidate extremal polynomials on a
// subset of an extension, and a discretized Kolmogorov extremality test.
//
// For a polynomial U and m >= 1 the preimage U^{-1}([-1, 1]) is a finite
// union of intervals E~ and Psi = T_m(U) satisfies Psi^2 - R~^2 W^2 = 1 with
// R~^2 the monic product over the endpoints of E~. For a set E whose bands
// are bands of E~, the extension factor is X(z) = R~^2(z) / T(z)^2 with
// T(z) the monic endpoint product of E, and Phi = T W gives
// Psi^2 - X Phi^2 = 1.

#ifndef AHLFORS_EXTREMAL_POLY_HPP_
#define AHLFORS_EXTREMAL_POLY_HPP_

#include <vector>

#include "ahlfors/geometry.hpp"
#include "ahlfors/polynomial.hpp"

namespace ahlfors {

struct PellPair {
  int n = 0;                     // degree of Psi
  Poly psi;                      // T_m(U)
  Poly w;                        // Pell cofactor, degree n - (number of bands)
  Poly radicand;                 // R~^2, monic
  std::vector<double> endpoints; // endpoints of E~, increasing
  BandSystem extension;          // E~ as a J-kind set
};

// Throws a validation error when a real critical value of U lies in (-1, 1).
PellPair pell_from_preimage(const Poly& u, int m);

// max |Psi^2 - R~^2 W^2 - 1| / (1 + Psi^2) over `samples` points spread
// across the hull of E~ and a margin around it.
double pell_residual(const PellPair& pair, int samples);

// True when the sorted real zeros of a and b strictly alternate.
bool zeros_interlace(std::vector<double> a, std::vector<double> b);
std::vector<double> real_zeros(const Poly& p, double tol = 1e-9);

struct CandidatePoly {
  double rho = 0.0;
  double rho_tilde_sq = 0.0;   // -sup_E X, the admissibility bound
  Poly phi;                    // T W
  Poly psi;
  CPoly coef;                  // rho Phi + i Psi
  std::vector<cplx> zeros;     // conjugates of the zeros of coef
  std::vector<CPoly> ahlfors;  // ((z - z_j)/(z - conj z_j)) coef, per zero
  std::vector<double> derivs;  // |P_j'(z_j)| = |coef(z_j)| / (2 Im z_j)
  double sup_norm = 0.0;       // sup over E of |coef|
};

// E must be a J-kind set whose bands are bands of pair.extension.
// Throws an admissibility error when rho^2 >= rho~^2 or when rho has the
// wrong sign (some zero of rho Phi + i Psi in the upper half-plane).
CandidatePoly candidate_from_extension(const BandSystem& e, const PellPair& pair,
                                       double rho);
// rho~^2 = -sup_E R~^2 / T^2.
double rho_tilde_sq_of_extension(const BandSystem& e, const PellPair& pair);

// A compact piece of E: a real interval [lo, hi] or the arc of angles
// [lo, hi] on the unit circle.
struct Piece {
  bool arc = false;
  double lo = 0.0, hi = 0.0;
  cplx at(double s) const;  // s in [0, 1]
};

// J-kind bands (S-kind sets are unbounded and rejected).
std::vector<Piece> pieces_of(const BandSystem& e);
std::vector<Piece> pieces_of(const ArcSystem& e);

struct KolmogorovOptions {
  double contact_tol = 1e-6;  // relative to sup |P|
  double margin_tol = 1e-7;
  int grid = 4000;            // sample points over E
};

struct KolmogorovResult {
  bool passes = false;
  bool inconclusive = false;
  double margin = 0.0;        // optimal s of the feasibility program
  int contact_count = 0;
  double sup_norm = 0.0;
};

// Searches Q of degree n - 2 with Re((x - conj z0)^2 P(x) conj Q(x)) >= s on
// the contact set, coefficients boxed to [-1, 1]; passes when the best s
// stays below margin_tol. The contact set is the sampled points with
// |P| >= (1 - contact_tol) sup |P|.
KolmogorovResult kolmogorov_check(const CPoly& p, const std::vector<Piece>& e,
                                  cplx z0, const KolmogorovOptions& opt = {});

}  // namespace ahlfors

#endif  // AHLFORS_EXTREMAL_POLY_HPP_
