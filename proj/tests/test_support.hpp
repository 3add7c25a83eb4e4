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

// Shared fixtures for the unit tests.

#ifndef AHLFORS_TESTS_TEST_SUPPORT_HPP_
#define AHLFORS_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ahlfors/geometry.hpp"

namespace ahlfors::testing {

inline BandSystem segment() { return validate_system({-2.0, 2.0}, Kind::J); }

inline BandSystem symmetric_pair() {
  const double r = std::sqrt(2.0);
  return validate_system({-2.0, -r, r, 2.0}, Kind::J);
}

inline BandSystem lopsided_pair() {
  return validate_system({-2.0, -1.0, 0.5, 2.0}, Kind::J);
}

// Random J-kind set of the given genus inside [-3, 3] with bands and gaps
// no shorter than 0.15.
inline BandSystem random_j_set(std::mt19937& rng, int genus) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int count = 2 * genus + 2;
  std::vector<double> cuts(count);
  for (;;) {
    for (double& c : cuts) c = -3.0 + 6.0 * uni(rng);
    std::sort(cuts.begin(), cuts.end());
    bool ok = true;
    for (int i = 0; i + 1 < count; ++i) ok = ok && cuts[i + 1] - cuts[i] > 0.15;
    if (ok) return validate_system(cuts, Kind::J);
  }
}

// Random S-kind set of the given genus inside (0.2, 6).
inline BandSystem random_s_set(std::mt19937& rng, int genus) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int count = 2 * genus;
  std::vector<double> cuts(count);
  for (;;) {
    for (double& c : cuts) c = 0.2 + 5.8 * uni(rng);
    std::sort(cuts.begin(), cuts.end());
    bool ok = cuts.empty() || cuts.front() > 0.3;
    for (int i = 0; i + 1 < count; ++i) ok = ok && cuts[i + 1] - cuts[i] > 0.15;
    if (ok) return validate_system(cuts, Kind::S);
  }
}

inline std::complex<double> random_upper(std::mt19937& rng, double re_lo,
                                         double re_hi, double im_lo,
                                         double im_hi) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(im_lo, im_hi);
  return {re(rng), im(rng)};
}

}  // namespace ahlfors::testing

#endif  // AHLFORS_TESTS_TEST_SUPPORT_HPP_
