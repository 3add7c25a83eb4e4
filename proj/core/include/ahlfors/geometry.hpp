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

// Interval and arc systems, Moebius maps and the g = 0 coordinate maps.
//
// Labeling. A J-kind set is E = [b0, a0] minus the open inner gaps
// (a_j, b_j), j = 1..g. Gap 0 is the outer gap; it runs from a0 through
// infinity to b0, so that T(z) = prod_{j=0..g} (z - a_j)(z - b_j) has the
// band endpoints as zeros. An S-kind set is [0, inf) minus the inner gaps;
// its gap 0 is (-inf, 0) with a_0 = -inf and b_0 = 0.

#ifndef AHLFORS_GEOMETRY_HPP_
#define AHLFORS_GEOMETRY_HPP_

#include <complex>
#include <limits>
#include <vector>

namespace ahlfors {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEndpointTol = 1e-12;

enum class Kind { J, S };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

class BandSystem {
 public:
  BandSystem() = default;
  // Unchecked constructor; use validate_system for untrusted input.
  BandSystem(Kind kind, double b0, double a0, std::vector<Interval> gaps);

  Kind kind() const { return kind_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  // Gap j in 0..g. For gap 0 the pair is (a0, b0) as described above.
  double a(int j) const;
  double b(int j) const;
  const std::vector<Interval>& inner_gaps() const { return gaps_; }
  // Bands ordered left to right; for S the last band has hi = +inf.
  std::vector<Interval> bands() const;
  // Finite band endpoints, increasing.
  std::vector<double> endpoints() const;
  // Convex hull of a J-kind set.
  double left() const { return b0_; }
  double right() const { return a0_; }

  bool in_set(double x, double tol = kEndpointTol) const;
  // Gap index containing x (open gap), or -1 if x lies on E.
  int gap_of(double x) const;
  double min_gap_length() const;
  // Shortest finite band length.
  double min_band_length() const;

 private:
  Kind kind_ = Kind::J;
  double b0_ = -1.0;
  double a0_ = 1.0;
  std::vector<Interval> gaps_;
};

// raw lists finite endpoints in increasing order: for J,
// [b0, a1, b1, ..., ag, bg, a0]; for S, [a1, b1, ..., ag, bg].
BandSystem validate_system(const std::vector<double>& raw, Kind kind);

// Arc system on the unit circle: gap arcs (a_j, b_j) in angle, E_T is the
// circle minus the open gap arcs.
class ArcSystem {
 public:
  ArcSystem() = default;
  explicit ArcSystem(std::vector<Interval> gap_angles);
  int genus() const { return static_cast<int>(gaps_.size()) - 1; }
  const std::vector<Interval>& gap_angles() const { return gaps_; }
  // Arcs of E_T as angle intervals with lo < hi (hi may exceed 2 pi).
  std::vector<Interval> arcs() const;
  bool on_set(double angle) const;

 private:
  std::vector<Interval> gaps_;
};

// raw is [a0, b0, a1, b1, ...] in increasing order inside [0, 2 pi].
ArcSystem validate_arcs(const std::vector<double>& raw);

struct MoebiusMap {
  double p = 1.0, q = 0.0, r = 0.0, s = 1.0;

  double det() const { return p * s - q * r; }
  cplx operator()(cplx z) const;
  // Real action on the extended line; returns +inf for the pole.
  double apply(double x) const;
  cplx derivative(cplx z) const;
  MoebiusMap inverse() const;
};

struct Reduction {
  BandSystem image;
  MoebiusMap map;
};

// Sends x0 (a real point off E) to infinity via z -> 1/(x0 - z).
Reduction moebius_reduce(const BandSystem& e, double x0);

// Point on a closed gap with its endpoints identified. Inner gaps use
// x = a + (b - a)(1 - cos(pi t))/2; the J outer gap uses the circle
// coordinate x = m + h / cos(pi t), m and h the hull midpoint and
// half-width, so t = 1/2 is the point at infinity; the S gap (-inf, 0)
// uses x = -s (1 + cos(pi t)) / (1 - cos(pi t)) with s = a_1 (or 1).
struct GapPoint {
  int gap = 0;
  double t = 0.0;
};

double gap_x(const BandSystem& e, GapPoint p);
// dx/dt of the chart; infinite at the point at infinity.
double gap_dx(const BandSystem& e, GapPoint p);
GapPoint to_gap_point(const BandSystem& e, int gap, double x);
// Wraps t into [0, 1).
double wrap_unit(double t);

// Coordinate maps of the simply connected case; all need Re lambda > 0.
struct CoordValue {
  cplx z;
  cplx dz;  // derivative with respect to lambda
};

enum class Coord { kS, kJ, kT };

// S: z = -lambda^2. J: z = 2(lambda^2 + 1)/(lambda^2 - 1).
// T: zeta = (z - i y0)/(z + i y0) with z the J map.
CoordValue thintro_map(Coord coord, cplx lambda, double y0 = 1.0);
// Cayley map zeta = (z - i y0)/(z + i y0) and its z-derivative.
CoordValue cayley(cplx z, double y0);

}  // namespace ahlfors

#endif  // AHLFORS_GEOMETRY_HPP_
