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

#include "ahlfors/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ahlfors/error.hpp"

namespace ahlfors {

namespace {

constexpr double kPi = std::numbers::pi;

std::string pair_text(double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x << ", " << y << ")";
  return os.str();
}

void check_increasing(const std::vector<double>& raw) {
  for (size_t i = 0; i + 1 < raw.size(); ++i) {
    if (!std::isfinite(raw[i]) || !std::isfinite(raw[i + 1])) {
      throw Error(ErrorKind::kValidation, "non-finite endpoint");
    }
    if (!(raw[i + 1] - raw[i] > kEndpointTol)) {
      throw Error(ErrorKind::kValidation,
                  "unordered or degenerate endpoints " +
                      pair_text(raw[i], raw[i + 1]));
    }
  }
}

}  // namespace

BandSystem::BandSystem(Kind kind, double b0, double a0,
                       std::vector<Interval> gaps)
    : kind_(kind), b0_(b0), a0_(a0), gaps_(std::move(gaps)) {}

double BandSystem::a(int j) const {
  if (j == 0) return kind_ == Kind::J ? a0_ : -kInf;
  return gaps_[j - 1].lo;
}

double BandSystem::b(int j) const {
  if (j == 0) return kind_ == Kind::J ? b0_ : 0.0;
  return gaps_[j - 1].hi;
}

std::vector<Interval> BandSystem::bands() const {
  std::vector<Interval> out;
  double lo = kind_ == Kind::J ? b0_ : 0.0;
  for (const Interval& gap : gaps_) {
    out.push_back({lo, gap.lo});
    lo = gap.hi;
  }
  out.push_back({lo, kind_ == Kind::J ? a0_ : kInf});
  return out;
}

std::vector<double> BandSystem::endpoints() const {
  std::vector<double> out;
  out.push_back(kind_ == Kind::J ? b0_ : 0.0);
  for (const Interval& gap : gaps_) {
    out.push_back(gap.lo);
    out.push_back(gap.hi);
  }
  if (kind_ == Kind::J) out.push_back(a0_);
  return out;
}

bool BandSystem::in_set(double x, double tol) const {
  for (const Interval& band : bands()) {
    if (x >= band.lo - tol && x <= band.hi + tol) return true;
  }
  return false;
}

int BandSystem::gap_of(double x) const {
  if (std::isinf(x)) return kind_ == Kind::J ? 0 : (x < 0 ? 0 : -1);
  if (kind_ == Kind::J) {
    if (x > a0_ || x < b0_) return 0;
  } else if (x < 0.0) {
    return 0;
  }
  for (int j = 0; j < genus(); ++j) {
    if (x > gaps_[j].lo && x < gaps_[j].hi) return j + 1;
  }
  return -1;
}

double BandSystem::min_gap_length() const {
  double out = kInf;
  for (const Interval& gap : gaps_) out = std::min(out, gap.length());
  if (kind_ == Kind::J && gaps_.empty()) out = a0_ - b0_;
  if (kind_ == Kind::S && gaps_.empty()) out = 1.0;
  return out;
}

double BandSystem::min_band_length() const {
  double out = kInf;
  for (const Interval& band : bands()) {
    if (std::isfinite(band.hi)) out = std::min(out, band.length());
  }
  return std::isfinite(out) ? out : 1.0;
}

BandSystem validate_system(const std::vector<double>& raw, Kind kind) {
  if (raw.size() % 2 != 0) {
    throw Error(ErrorKind::kValidation, "odd number of endpoints");
  }
  check_increasing(raw);
  std::vector<Interval> gaps;
  if (kind == Kind::J) {
    if (raw.size() < 2) {
      throw Error(ErrorKind::kValidation, "J-kind set needs an outer interval");
    }
    for (size_t i = 1; i + 2 < raw.size(); i += 2) {
      gaps.push_back({raw[i], raw[i + 1]});
    }
    return BandSystem(Kind::J, raw.front(), raw.back(), std::move(gaps));
  }
  if (!raw.empty() && !(raw.front() > kEndpointTol)) {
    throw Error(ErrorKind::kValidation,
                "S-kind gap must lie in (0, inf): " +
                    pair_text(raw[0], raw[1]));
  }
  for (size_t i = 0; i + 1 < raw.size(); i += 2) {
    gaps.push_back({raw[i], raw[i + 1]});
  }
  return BandSystem(Kind::S, 0.0, kInf, std::move(gaps));
}

ArcSystem::ArcSystem(std::vector<Interval> gap_angles)
    : gaps_(std::move(gap_angles)) {}

std::vector<Interval> ArcSystem::arcs() const {
  std::vector<Interval> out;
  for (size_t j = 0; j < gaps_.size(); ++j) {
    double lo = gaps_[j].hi;
    double hi = j + 1 < gaps_.size() ? gaps_[j + 1].lo
                                     : gaps_[0].lo + 2.0 * kPi;
    out.push_back({lo, hi});
  }
  return out;
}

bool ArcSystem::on_set(double angle) const {
  for (const Interval& arc : arcs()) {
    double t = angle;
    while (t < arc.lo - kEndpointTol) t += 2.0 * kPi;
    while (t > arc.lo + 2.0 * kPi) t -= 2.0 * kPi;
    if (t <= arc.hi + kEndpointTol) return true;
  }
  return false;
}

ArcSystem validate_arcs(const std::vector<double>& raw) {
  if (raw.size() < 2 || raw.size() % 2 != 0) {
    throw Error(ErrorKind::kValidation, "arc system needs gap angle pairs");
  }
  check_increasing(raw);
  if (raw.front() < 0.0 || raw.back() - raw.front() >= 2.0 * kPi) {
    throw Error(ErrorKind::kValidation, "gap angles must fit in one turn");
  }
  std::vector<Interval> gaps;
  for (size_t i = 0; i < raw.size(); i += 2) gaps.push_back({raw[i], raw[i + 1]});
  return ArcSystem(std::move(gaps));
}

cplx MoebiusMap::operator()(cplx z) const { return (p * z + q) / (r * z + s); }

double MoebiusMap::apply(double x) const {
  if (std::isinf(x)) return r == 0.0 ? kInf : p / r;
  double den = r * x + s;
  if (den == 0.0) return kInf;
  return (p * x + q) / den;
}

cplx MoebiusMap::derivative(cplx z) const {
  cplx den = r * z + s;
  return det() / (den * den);
}

MoebiusMap MoebiusMap::inverse() const { return {s, -q, -r, p}; }

Reduction moebius_reduce(const BandSystem& e, double x0) {
  if (!std::isfinite(x0)) {
    throw Error(ErrorKind::kDomain, "pole must be finite");
  }
  if (e.in_set(x0, 0.0)) {
    throw Error(ErrorKind::kDomain, "pole lies on a band");
  }
  MoebiusMap m{0.0, 1.0, -1.0, x0};
  std::vector<Interval> images;
  for (const Interval& band : e.bands()) {
    double lo = m.apply(band.lo);
    double hi = std::isinf(band.hi) ? 0.0 : m.apply(band.hi);
    images.push_back({lo, hi});
  }
  std::sort(images.begin(), images.end(),
            [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
  std::vector<double> raw;
  for (const Interval& band : images) {
    raw.push_back(band.lo);
    raw.push_back(band.hi);
  }
  return {validate_system(raw, Kind::J), m};
}

double wrap_unit(double t) { return t - std::floor(t); }

double gap_x(const BandSystem& e, GapPoint p) {
  double c = std::cos(kPi * p.t);
  if (p.gap > 0) {
    double a = e.a(p.gap), b = e.b(p.gap);
    double s2 = std::sin(0.5 * kPi * p.t), c2 = std::cos(0.5 * kPi * p.t);
    return p.t < 0.5 ? a + (b - a) * s2 * s2 : b - (b - a) * c2 * c2;
  }
  if (e.kind() == Kind::J) {
    double m = 0.5 * (e.left() + e.right());
    double h = 0.5 * (e.right() - e.left());
    if (c == 0.0) return kInf;
    return m + h / c;
  }
  double s = e.genus() > 0 ? e.a(1) : 1.0;
  double s2 = std::sin(0.5 * kPi * p.t), c2 = std::cos(0.5 * kPi * p.t);
  if (s2 == 0.0) return -kInf;
  return -s * (c2 * c2) / (s2 * s2);
}

double gap_dx(const BandSystem& e, GapPoint p) {
  double c = std::cos(kPi * p.t), sn = std::sin(kPi * p.t);
  if (p.gap > 0) return (e.b(p.gap) - e.a(p.gap)) * 0.5 * kPi * sn;
  if (e.kind() == Kind::J) {
    double h = 0.5 * (e.right() - e.left());
    if (c == 0.0) return kInf;
    return h * kPi * sn / (c * c);
  }
  double s = e.genus() > 0 ? e.a(1) : 1.0;
  return 2.0 * s * kPi * sn / ((1.0 - c) * (1.0 - c));
}

GapPoint to_gap_point(const BandSystem& e, int gap, double x) {
  if (gap > 0) {
    double a = e.a(gap), b = e.b(gap);
    double c = std::clamp(1.0 - 2.0 * (x - a) / (b - a), -1.0, 1.0);
    return {gap, std::acos(c) / kPi};
  }
  if (e.kind() == Kind::J) {
    if (std::isinf(x)) return {0, 0.5};
    double m = 0.5 * (e.left() + e.right());
    double h = 0.5 * (e.right() - e.left());
    double c = std::clamp(h / (x - m), -1.0, 1.0);
    return {0, std::acos(c) / kPi};
  }
  if (std::isinf(x)) return {0, 0.0};
  double s = e.genus() > 0 ? e.a(1) : 1.0;
  double y = -x / s;
  double c = std::clamp((y - 1.0) / (y + 1.0), -1.0, 1.0);
  return {0, std::acos(c) / kPi};
}

CoordValue cayley(cplx z, double y0) {
  if (!(y0 > 0.0)) throw Error(ErrorKind::kDomain, "y0 must be positive");
  const cplx iy(0.0, y0);
  cplx den = z + iy;
  return {(z - iy) / den, 2.0 * iy / (den * den)};
}

CoordValue thintro_map(Coord coord, cplx lambda, double y0) {
  if (!(lambda.real() > 0.0)) {
    throw Error(ErrorKind::kDomain, "coordinate maps need Re lambda > 0");
  }
  const cplx l2 = lambda * lambda;
  switch (coord) {
    case Coord::kS:
      return {-l2, -2.0 * lambda};
    case Coord::kJ: {
      cplx den = l2 - 1.0;
      return {2.0 * (l2 + 1.0) / den, -8.0 * lambda / (den * den)};
    }
    case Coord::kT: {
      CoordValue j = thintro_map(Coord::kJ, lambda);
      CoordValue c = cayley(j.z, y0);
      return {c.z, c.dz * j.dz};
    }
  }
  return {};
}

}  // namespace ahlfors
