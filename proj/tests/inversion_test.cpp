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

#include "ahlfors/inversion.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ahlfors/error.hpp"
#include "ahlfors/quadrature.hpp"
#include "test_support.hpp"

namespace ahlfors {
namespace {

using ::ahlfors::testing::lopsided_pair;
using ::ahlfors::testing::random_j_set;
using ::ahlfors::testing::random_s_set;
using ::ahlfors::testing::random_upper;
using ::ahlfors::testing::symmetric_pair;

constexpr double kPi = std::numbers::pi;

TEST(RealInversion, RoundTripsRandomCharacters) {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int g = 1 + trial % 3;
    const BandSystem e = trial % 2 ? random_j_set(rng, g) : random_s_set(rng, g);
    CharacterVector beta(g);
    for (double& b : beta) b = uni(rng);
    const InversionSolution s = real_inversion(e, beta);
    ASSERT_EQ(static_cast<int>(s.points.size()), g);
    DifferentialBasis basis(e);
    const CharacterVector back = character_of_points(basis, s.points);
    for (int k = 0; k < g; ++k) EXPECT_LT(circle_distance(back[k], beta[k]), 1e-9) << trial;
    for (int j = 0; j < g; ++j) EXPECT_EQ(s.points[j].gap, j + 1);
  }
}

TEST(RealInversion, SymmetricHalfCharacterSitsAtTheCentre) {
  const InversionSolution s = real_inversion(symmetric_pair(), {0.5});
  EXPECT_NEAR(s.x[0], 0.0, 1e-12);
}

TEST(Gaji, GenusZeroHalfLine) {
  const BandSystem e = validate_system({}, Kind::S);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx z0 = random_upper(rng, -5.0, 5.0, 0.1, 3.0);
    const GajiResult r = gaji_solve(e, {}, z0);
    ASSERT_EQ(r.branches.size(), 1u);
    EXPECT_NEAR(r.branches[0].x[0], -std::abs(z0), 1e-10);
  }
}

TEST(Gaji, AsymmetricGenusOneSolutions) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int solved = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const BandSystem e = random_j_set(rng, 1);
    const cplx z0 = random_upper(rng, e.left(), e.right(), 0.2, 1.5);
    const CharacterVector beta{uni(rng)};
    Inversion inv(e);
    const GajiResult r = inv.gaji_solve(beta, z0);
    for (const InversionSolution& s : r.branches) {
      ++solved;
      EXPECT_LT(s.residual_cs1, 1e-10);
      EXPECT_LT(s.residual_cs2, 1e-10);
      EXPECT_LT(s.realness_defect, 1e-8);
      EXPECT_GT(inv.jacobian_check(s.points, z0).sigma_min, 0.0);
    }
  }
  EXPECT_GE(solved, 10);
}

TEST(Gaji, BalanceMatchesArgumentFormula) {
  // Harmonic measure of [a, b] in the upper half-plane at z0 is
  // (arg(z0 - b) - arg(z0 - a)) / pi, with arg(z0 - inf) = pi and
  // arg(z0 + inf) = 0.
  const BandSystem e = lopsided_pair();
  Inversion inv(e);
  const cplx z0(0.3, 0.7);
  auto angle = [&](double x) {
    if (std::isinf(x)) return x > 0 ? kPi : 0.0;
    return std::arg(z0 - x);
  };
  auto hm = [&](double a, double b) { return (angle(b) - angle(a)) / kPi; };
  const std::vector<GapPoint> pts{{0, 0.2}, {1, 0.4}};
  const double x0 = gap_x(e, pts[0]), x1 = gap_x(e, pts[1]);
  ASSERT_GT(x0, 2.0);
  const double left = hm(2.0, x0) + hm(-1.0, x1);
  const double right = hm(x0, kInf) + hm(-kInf, -2.0) + hm(x1, 0.5);
  const auto [l, r] = inv.balance(pts, z0);
  EXPECT_NEAR(l, left, 1e-12);
  EXPECT_NEAR(r, right, 1e-12);
  EXPECT_NEAR(inv.cs2(pts, z0), (left - right) * kPi / z0.imag(), 1e-11);
}

TEST(Gaji, Cs2MatchesQuadrature) {
  const BandSystem e = lopsided_pair();
  Inversion inv(e);
  const cplx z0(-0.2, 0.5);
  const GapPoint p{1, 0.35};
  const double x = gap_x(e, p);
  auto f = [&](double t) { return 1.0 / std::norm(cplx(t, 0.0) - z0); };
  const double want =
      integrate_regular<double>(f, -1.0, x) - integrate_regular<double>(f, x, 0.5);
  EXPECT_NEAR(inv.cs2({p}, z0), want, 1e-11);
}

TEST(Bifurcation, LopsidedScanFindsTwoBranchesAndCrossing) {
  Inversion inv(lopsided_pair());
  std::vector<double> betas;
  for (int k = 0; k < 40; ++k) betas.push_back(k / 40.0);
  const cplx z0(0.1, 0.8);
  const std::vector<BifurcationRow> a = inv.bifurcation_scan(betas, z0, 128);
  const std::vector<BifurcationRow> b = inv.bifurcation_scan(betas, z0, 128);
  ASSERT_EQ(a.size(), b.size());
  bool two = false, invalid = false;
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x0, b[i].x0);
    EXPECT_EQ(a[i].x1, b[i].x1);
    two = two || a[i].branches >= 2;
    invalid = invalid || !a[i].valid;
    EXPECT_LT(a[i].angle_relation, 1e-10);
  }
  EXPECT_TRUE(two);
  EXPECT_TRUE(invalid);
}

TEST(Inversion, RejectsWrongCharacterLength) {
  EXPECT_THROW(real_inversion(lopsided_pair(), {0.1, 0.2}), Error);
}

}  // namespace
}  // namespace ahlfors
