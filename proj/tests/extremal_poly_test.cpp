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

#include "ahlfors/extremal_poly.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "ahlfors/error.hpp"
#include "ahlfors/oracle.hpp"

namespace ahlfors {
namespace {

constexpr double kPi = std::numbers::pi;

BandSystem right_band() { return validate_system({std::sqrt(2.0), 2.0}, Kind::J); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInconclusive;
}

TEST(Pell, PreimageOfQuadratic) {
  for (int m = 1; m <= 4; ++m) {
    const PellPair p = pell_from_preimage({-3.0, 0.0, 1.0}, m);
    EXPECT_EQ(p.n, 2 * m);
    ASSERT_EQ(p.endpoints.size(), 4u);
    EXPECT_NEAR(p.endpoints[0], -2.0, 1e-12);
    EXPECT_NEAR(p.endpoints[1], -std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(p.endpoints[2], std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(p.endpoints[3], 2.0, 1e-12);
    EXPECT_EQ(static_cast<int>(p.w.size()) - 1, p.n - 2);
    EXPECT_LT(pell_residual(p, 200), 1e-10) << m;
    EXPECT_GT(p.w.back(), 0.0);
  }
}

TEST(Pell, ChebyshevCaseIsTheSegment) {
  // U(x) = x/2 on [-2, 2]: Psi = T_m(x/2), W = U_{m-1}(x/2)/2 up to sign.
  const PellPair p = pell_from_preimage({0.0, 0.5}, 5);
  EXPECT_EQ(p.extension.genus(), 0);
  EXPECT_LT(pell_residual(p, 200), 1e-10);
  for (double th : {0.3, 1.1, 2.9}) {
    const double x = 2 * std::cos(th);
    EXPECT_NEAR(poly_eval(p.psi, x), std::cos(5 * th), 1e-12);
  }
}

TEST(Pell, RejectsCriticalValueInside) {
  EXPECT_EQ(kind_of([] { pell_from_preimage({0.0, 0.0, 1.0}, 2); }),
            ErrorKind::kValidation);
  EXPECT_EQ(kind_of([] { pell_from_preimage({-0.5, 0.0, 1.0}, 1); }),
            ErrorKind::kValidation);
}

TEST(Pell, ZerosInterlace) {
  const PellPair p = pell_from_preimage({-3.0, 0.0, 1.0}, 3);
  std::vector<double> zp = real_zeros(p.psi), zw = real_zeros(p.w);
  EXPECT_EQ(zp.size(), 6u);
  // Psi = T_3(U) and W share the U_2(U) structure: on each band the zeros
  // of Psi and of W alternate.
  std::vector<double> right_p, right_w;
  for (double z : zp) {
    if (z > 0) right_p.push_back(z);
  }
  for (double z : zw) {
    if (z > std::sqrt(2.0)) right_w.push_back(z);
  }
  EXPECT_TRUE(zeros_interlace(right_p, right_w));
  EXPECT_TRUE(zeros_interlace({1.0, 3.0}, {2.0}));
  EXPECT_FALSE(zeros_interlace({1.0, 2.0}, {3.0}));
}

TEST(Candidate, SingleBandIsExtremal) {
  const PellPair pair = pell_from_preimage({-3.0, 0.0, 1.0}, 1);
  const BandSystem e = right_band();
  const double rt = rho_tilde_sq_of_extension(e, pair);
  EXPECT_GT(rt, 0.0);
  const CandidatePoly c = candidate_from_extension(e, pair, 0.15);
  EXPECT_LE(c.sup_norm, 1.0 + 1e-8);
  ASSERT_EQ(c.zeros.size(), 2u);
  for (size_t j = 0; j < c.zeros.size(); ++j) {
    const cplx z = c.zeros[j];
    EXPECT_GT(z.imag(), 0.0);
    EXPECT_NEAR(c.derivs[j], std::abs(poly_eval(c.coef, z)) / (2 * z.imag()), 1e-12);
    // The Ahlfors-type polynomial vanishes at z and has the same modulus on R.
    EXPECT_NEAR(std::abs(poly_eval(c.ahlfors[j], z)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(poly_eval(c.ahlfors[j], cplx(1.7, 0.0))),
                std::abs(poly_eval(c.coef, cplx(1.7, 0.0))), 1e-12);
    const ExtremalResult o = extremal_deriv(e, 2, z);
    EXPECT_NEAR(c.derivs[j], o.value, 1e-5 * o.value);
    const KolmogorovResult k = kolmogorov_check(c.ahlfors[j], pieces_of(e), z);
    EXPECT_TRUE(k.passes) << k.margin;
  }
}

TEST(Candidate, AdmissibilityErrors) {
  const PellPair pair = pell_from_preimage({-3.0, 0.0, 1.0}, 1);
  const BandSystem e = right_band();
  const double rt = rho_tilde_sq_of_extension(e, pair);
  EXPECT_EQ(kind_of([&] { candidate_from_extension(e, pair, std::sqrt(rt) * 1.01); }),
            ErrorKind::kAdmissibility);
  EXPECT_EQ(kind_of([&] { candidate_from_extension(e, pair, -0.15); }),
            ErrorKind::kAdmissibility);
  const BandSystem off = validate_system({1.5, 2.0}, Kind::J);
  EXPECT_EQ(kind_of([&] { candidate_from_extension(off, pair, 0.1); }), ErrorKind::kGeometry);
}

TEST(Kolmogorov, RejectsNonExtremalPolynomial) {
  const BandSystem e = validate_system({-1.0, 1.0}, Kind::J);
  const cplx z0(0.2, 0.5);
  // (z - z0)(z - 0.9) is feasible after scaling but not extremal.
  CPoly p = poly_mul(CPoly{-z0, 1.0}, CPoly{-0.9, 1.0});
  double sup = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    sup = std::max(sup, std::abs(poly_eval(p, cplx(-1.0 + k / 1000.0, 0.0))));
  }
  p = poly_scale(p, cplx(1.0 / sup, 0.0));
  const KolmogorovResult k = kolmogorov_check(p, pieces_of(e), z0);
  EXPECT_FALSE(k.passes);
  EXPECT_GT(k.margin, 1e-3);
}

TEST(Kolmogorov, DegreeOneIsVacuous) {
  const BandSystem e = validate_system({-1.0, 1.0}, Kind::J);
  const cplx z0(0.0, 1.0);
  const KolmogorovResult k =
      kolmogorov_check(CPoly{-z0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, pieces_of(e), z0);
  EXPECT_TRUE(k.passes);
}

TEST(Pieces, BandsAndArcs) {
  const std::vector<Piece> b = pieces_of(validate_system({-2.0, -1.0, 0.5, 2.0}, Kind::J));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[1].at(0.0), cplx(0.5, 0.0));
  EXPECT_EQ(b[1].at(1.0), cplx(2.0, 0.0));
  const std::vector<Piece> a = pieces_of(validate_arcs({0.5, 1.0, 3.0, 3.4}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(std::abs(a[0].at(0.3)), 1.0, 1e-15);
  EXPECT_NEAR(std::arg(a[0].at(0.0)), 1.0, 1e-15);
  EXPECT_THROW(pieces_of(validate_system({1.0, 2.0}, Kind::S)), Error);
  (void)kPi;
}

}  // namespace
}  // namespace ahlfors
