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

#include "ahlfors/oracle.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ahlfors/error.hpp"
#include "ahlfors/extremal_poly.hpp"
#include "ahlfors/potential.hpp"
#include "test_support.hpp"

namespace ahlfors {
namespace {

using ::ahlfors::testing::lopsided_pair;
using ::ahlfors::testing::segment;

// A_1(z0; E) = 1 / max_E |x - z0|, attained by (z - z0) / max_E |x - z0|.
double degree_one(const std::vector<Piece>& pieces, cplx z0) {
  double best = 0.0;
  for (const Piece& p : pieces) {
    for (int k = 0; k <= 20000; ++k) best = std::max(best, std::abs(p.at(k / 20000.0) - z0));
  }
  return 1.0 / best;
}

TEST(Oracle, DegreeOneClosedForm) {
  const BandSystem e = lopsided_pair();
  const ArcSystem a = validate_arcs({0.5, 1.0, 3.0, 3.4});
  for (cplx z0 : {cplx(2.0, 0.0), cplx(0.0, 0.0), cplx(0.3, 0.6), cplx(-3.0, 1.0)}) {
    const ExtremalResult r = extremal_deriv(e, 1, z0);
    EXPECT_NEAR(r.value, degree_one(pieces_of(e), z0), 1e-7) << z0;
    EXPECT_LE(r.lower, r.upper);
  }
  for (cplx z0 : {cplx(0.0, 0.0), cplx(0.2, -0.3), cplx(1.5, 0.4)}) {
    const ExtremalResult r = extremal_deriv(a, 1, z0);
    EXPECT_NEAR(r.value, degree_one(pieces_of(a), z0), 1e-6) << z0;
  }
}

TEST(Oracle, SegmentCentreMatchesBernstein) {
  // |P'(0)| <= n on [-1, 1] with equality for T_n, which vanishes at 0 for
  // odd n.
  const BandSystem e = validate_system({-1.0, 1.0}, Kind::J);
  for (int n : {3, 5, 7, 9}) {
    const ExtremalResult r = extremal_deriv(e, n, cplx(0.0, 0.0));
    EXPECT_TRUE(r.real_problem);
    EXPECT_NEAR(r.value, n, 1e-6 * n);
    EXPECT_GE(static_cast<int>(r.contact.size()), n);
  }
}

TEST(Oracle, UnitCircleObeysSchwarz) {
  // On the full circle A_n(0) = 1; removing a gap can only raise it.
  const ArcSystem a = validate_arcs({0.0, 0.05});
  double prev = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const ExtremalResult r = extremal_deriv(a, n, cplx(0.0, 0.0));
    EXPECT_GE(r.upper, 1.0 - 1e-7);
    EXPECT_LT(r.lower, 1.05);
    EXPECT_GE(r.upper, prev - 1e-7);
    prev = r.lower;
  }
}

TEST(Oracle, MonotoneInDegreeAndDomain) {
  const BandSystem small = lopsided_pair();
  const BandSystem big = segment();
  const cplx z0(0.3, 0.5);
  double prev = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const ExtremalResult s = extremal_deriv(small, n, z0);
    const ExtremalResult b = extremal_deriv(big, n, z0);
    EXPECT_GE(s.upper, prev - 1e-9) << n;
    EXPECT_GE(s.upper, b.lower - 1e-9) << n;
    prev = s.lower;
  }
}

TEST(Oracle, RealAndComplexFormulationsAgree) {
  const BandSystem e = lopsided_pair();
  const std::vector<Piece> pieces = pieces_of(e);
  const std::vector<double> w = band_equilibrium(e);
  for (double x0 : {0.0, 3.0}) {
    const ExtremalResult r = extremal_on_pieces(pieces, w, 6, cplx(x0, 0.0), true);
    const ExtremalResult c = extremal_on_pieces(pieces, w, 6, cplx(x0, 0.0), false);
    EXPECT_NEAR(r.value, c.value, 1e-6 * r.value) << x0;
  }
}

TEST(Oracle, BracketsSurviveRefinement) {
  const BandSystem e = lopsided_pair();
  const cplx z0(-0.4, 0.3);
  OracleOptions coarse;
  OracleOptions fine;
  fine.facets = 128;
  fine.grid = 600;
  const ExtremalResult a = extremal_deriv(e, 10, z0, coarse);
  const ExtremalResult b = extremal_deriv(e, 10, z0, fine);
  EXPECT_LE(a.lower, b.upper * (1 + 1e-12));
  EXPECT_LE(b.lower, a.upper * (1 + 1e-12));
  EXPECT_LE(a.upper / a.lower - 1.0, 2e-7);
}

TEST(Oracle, ExtremalPolynomialIsFeasibleAndPassesKolmogorov) {
  const BandSystem e = lopsided_pair();
  const cplx z0(0.2, 0.4);
  const ExtremalResult r = extremal_deriv(e, 5, z0);
  EXPECT_LE(r.max_modulus, 1.0 + 1e-7);
  EXPECT_NEAR(std::abs(r.poly(z0)), 0.0, 1e-12);
  KolmogorovOptions opt;
  opt.contact_tol = 1e-6;
  opt.margin_tol = 1e-3;
  EXPECT_TRUE(kolmogorov_check(r.poly.monomial(), pieces_of(e), z0, opt).passes);
}

TEST(Oracle, BandEquilibriumMatchesHarmonicMeasure) {
  const BandSystem e = lopsided_pair();
  const std::vector<double> w = band_equilibrium(e);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0] + w[1], 1.0, 1e-12);
  EXPECT_NEAR(w[0], comb_data(e).base_angles[0] / std::numbers::pi, 1e-10);
}

TEST(Oracle, BarycentricBasisInterpolates) {
  const std::vector<cplx> nodes{cplx(-1.0, 0.0), cplx(0.2, 0.0), cplx(0.9, 0.1)};
  BarycentricPoly p(nodes, cplx(0.0, 1.0));
  p.set_values({1.0, cplx(2.0, -1.0), 0.5});
  for (size_t k = 0; k < nodes.size(); ++k) EXPECT_LT(std::abs(p.q(nodes[k]) - p.values()[k]), 1e-13);
  const CPoly m = p.monomial();
  ASSERT_EQ(m.size(), 4u);
  for (cplx z : {cplx(0.3, 0.3), cplx(-2.0, 0.5)}) {
    EXPECT_LT(std::abs(poly_eval(m, z) - p(z)), 1e-12 * (1 + std::abs(p(z))));
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  SweepSpec spec;
  spec.set = segment();
  spec.source = SweepSource::kRealGap;
  spec.z0 = cplx(3.0, 0.0);
  spec.n_list = {8, 10, 12, 14};
  const std::vector<SweepRow> one = convergence_sweep(spec);
  spec.threads = 3;
  const std::vector<SweepRow> three = convergence_sweep(spec);
  ASSERT_EQ(one.size(), three.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].n, three[i].n);
    EXPECT_EQ(one[i].upper, three[i].upper);
    EXPECT_NEAR(one[i].ratio, 1.0, 1e-3);
  }
}

TEST(Oracle, RejectsBadInput) {
  EXPECT_THROW(extremal_deriv(segment(), 0, cplx(2.0, 0.0)), Error);
  EXPECT_THROW(extremal_deriv(validate_system({1.0, 2.0}, Kind::S), 3, cplx(0.0, 1.0)), Error);
}

}  // namespace
}  // namespace ahlfors
