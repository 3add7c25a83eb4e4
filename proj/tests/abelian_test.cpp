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

#include "ahlfors/abelian.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ahlfors/error.hpp"
#include "test_support.hpp"

namespace ahlfors {
namespace {

using ::ahlfors::testing::lopsided_pair;
using ::ahlfors::testing::random_j_set;
using ::ahlfors::testing::random_s_set;
using ::ahlfors::testing::symmetric_pair;

TEST(Radical, SquaresToEndpointProduct) {
  std::mt19937 rng(3);
  for (int g = 0; g <= 3; ++g) {
    const BandSystem e = random_j_set(rng, g);
    const BandSystem s = random_s_set(rng, g);
    const Radical rj(e), rs(s);
    for (cplx z : {cplx(0.3, 0.4), cplx(-5.0, 1.0), cplx(2.0, -0.7)}) {
      const cplx t = rj.t_poly(z);
      EXPECT_LT(std::abs(rj(z) * rj(z) - t), 1e-12 * std::abs(t));
      const cplx u = -rs.t_poly(z);
      EXPECT_LT(std::abs(rs(z) * rs(z) - u), 1e-12 * std::abs(u));
    }
    // Positive to the right of a J-kind set.
    EXPECT_GT(rj(cplx(10.0, 0.0)).real(), 0.0);
  }
}

TEST(Radical, RealOnGapsWithRecordedSign) {
  const BandSystem e = lopsided_pair();
  const Radical r(e);
  const cplx inner = r.upper(0.0);
  EXPECT_NEAR(inner.imag(), 0.0, 1e-14);
  EXPECT_EQ(inner.real() > 0 ? 1 : -1, r.gap_sign(1));
  EXPECT_NEAR(r.upper(-1.5).real(), 0.0, 1e-14);
}

TEST(Periods, GapIntegralsAreHalfDelta) {
  std::mt19937 rng(5);
  for (int g = 1; g <= 3; ++g) {
    for (const BandSystem& e : {random_j_set(rng, g), random_s_set(rng, g)}) {
      DifferentialBasis basis(e);
      for (int j = 1; j <= g; ++j) {
        for (int k = 1; k <= g; ++k) {
          EXPECT_NEAR(basis.period(j, k), j == k ? 0.5 : 0.0, 1e-10);
        }
      }
    }
  }
}

TEST(HarmonicMeasure, BoundaryValues) {
  const BandSystem e = lopsided_pair();
  DifferentialBasis basis(e);
  EXPECT_NEAR(basis.harmonic_measure(1, cplx(-1.5, 1e-9)), 1.0, 1e-6);
  EXPECT_NEAR(basis.harmonic_measure(1, cplx(1.2, 1e-9)), 0.0, 1e-6);
  const double mid = basis.harmonic_measure(1, cplx(0.3, 0.7));
  EXPECT_GT(mid, 0.0);
  EXPECT_LT(mid, 1.0);
}

TEST(HarmonicMeasure, IsHarmonic) {
  const BandSystem e = lopsided_pair();
  DifferentialBasis basis(e);
  const cplx z(0.2, 0.6);
  const double h = 1e-3;
  auto w = [&](cplx p) { return basis.harmonic_measure(1, p); };
  const double lap = w(z + h) + w(z - h) + w(z + cplx(0, h)) + w(z - cplx(0, h)) - 4 * w(z);
  EXPECT_NEAR(lap / (h * h), 0.0, 1e-4);
}

TEST(HarmonicMeasure, SymmetricPairSplitsEvenly) {
  DifferentialBasis basis(symmetric_pair());
  EXPECT_NEAR(basis.harmonic_measure(1, cplx(0.0, 0.9)), 0.5, 1e-12);
  EXPECT_NEAR(basis.measure_at(1, {0, 0.5}), 0.5, 1e-12);
  // Mirror symmetry: omega(z, E_1) + omega(-conj z, E_1) = 1.
  const cplx z(0.7, 0.3);
  EXPECT_NEAR(basis.harmonic_measure(1, z) + basis.harmonic_measure(1, -std::conj(z)), 1.0,
              1e-11);
}

TEST(HarmonicMeasure, BandMeasuresSumToOne) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const BandSystem e = random_j_set(rng, 1 + trial % 3);
    DifferentialBasis basis(e);
    for (cplx z : {cplx(0.1, 0.5), cplx(-2.0, 0.05), cplx(4.0, 3.0)}) {
      double sum = 0.0;
      for (int b = 0; b <= e.genus(); ++b) sum += basis.band_measure(b, z);
      EXPECT_NEAR(sum, 1.0, 1e-8);
    }
  }
}

TEST(HarmonicMeasure, MoebiusInvariant) {
  const BandSystem e = lopsided_pair();
  const Reduction r = moebius_reduce(e, 0.0);
  DifferentialBasis a(e), b(r.image);
  // E_1 = [-2, -1] maps to [1/2, 1], the right band of the image, whose
  // measure is 1 - omega(., image E_1).
  const cplx z(0.4, 0.9);
  const cplx w = r.map(z);
  const cplx wz = w.imag() > 0 ? w : std::conj(w);
  EXPECT_NEAR(a.harmonic_measure(1, z), 1.0 - b.harmonic_measure(1, wz), 1e-10);
}

TEST(Characters, ReduceAndDistance) {
  EXPECT_NEAR(circle_distance(0.99, 0.01), 0.02, 1e-15);
  EXPECT_NEAR(circle_distance(0.3, 0.3), 0.0, 0.0);
  const CharacterVector r = reduce_mod1({1.25, -0.25, 1.0 - 1e-13});
  EXPECT_NEAR(r[0], 0.25, 1e-15);
  EXPECT_NEAR(r[1], 0.75, 1e-15);
  EXPECT_EQ(r[2], 0.0);
  const CharacterVector b = limit_character({1.0}, 3.0, Problem::J);
  EXPECT_NEAR(b[0], 3.0 / std::numbers::pi - std::floor(3.0 / std::numbers::pi), 1e-15);
  const CharacterVector t = limit_character({1.0}, 3.0, Problem::T);
  EXPECT_NEAR(t[0], 1.5 / std::numbers::pi, 1e-15);
}

TEST(Characters, PointsAddUp) {
  std::mt19937 rng(9);
  const BandSystem e = random_j_set(rng, 2);
  DifferentialBasis basis(e);
  const GapPoint p{1, 0.3}, q{2, 0.6};
  const CharacterVector sum = character_of_points(basis, {p, q});
  const CharacterVector a = character_of_point(basis, p), b = character_of_point(basis, q);
  for (int k = 0; k < 2; ++k) EXPECT_NEAR(circle_distance(sum[k], a[k] + b[k]), 0.0, 1e-12);
}

TEST(DifferentialBasis, RequiresPositiveGenus) {
  EXPECT_THROW(DifferentialBasis(testing::segment()), Error);
}

}  // namespace
}  // namespace ahlfors
