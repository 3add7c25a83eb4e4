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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "ahlfors/error.hpp"

namespace ahlfors {

namespace {

constexpr double kPi = std::numbers::pi;

cplx upper_root(double x, double p) {
  return x >= p ? cplx(std::sqrt(x - p), 0.0) : cplx(0.0, std::sqrt(p - x));
}

}  // namespace

Radical::Radical(const BandSystem& e) : set_(e) {
  std::vector<Interval> bands = e.bands();
  if (e.kind() == Kind::J) {
    finite_bands_ = bands;
  } else {
    finite_bands_.assign(bands.begin(), bands.end() - 1);
    tail_ = e.genus() > 0 ? e.b(e.genus()) : 0.0;
  }
  const int g = e.genus();
  gap_sign_.resize(g + 1);
  for (int j = 0; j <= g; ++j) {
    double x;
    if (j > 0) {
      x = 0.5 * (e.a(j) + e.b(j));
    } else if (e.kind() == Kind::J) {
      x = e.right() + 1.0;
    } else {
      x = -1.0;
    }
    gap_sign_[j] = upper(x).real() > 0.0 ? 1 : -1;
  }
}

cplx Radical::operator()(cplx z) const {
  cplx acc = 1.0;
  for (const Interval& band : finite_bands_) {
    acc *= std::sqrt(z - band.lo) * std::sqrt(z - band.hi);
  }
  if (set_.kind() == Kind::S) acc *= std::sqrt(tail_ - z);
  return acc;
}

cplx Radical::upper(double x) const {
  cplx acc = 1.0;
  for (const Interval& band : finite_bands_) {
    acc *= upper_root(x, band.lo) * upper_root(x, band.hi);
  }
  if (set_.kind() == Kind::S) {
    acc *= x <= tail_ ? cplx(std::sqrt(tail_ - x), 0.0)
                      : cplx(0.0, -std::sqrt(x - tail_));
  }
  return acc;
}

cplx Radical::upper_reduced(double x, int band) const {
  cplx acc = 1.0;
  for (int i = 0; i < static_cast<int>(finite_bands_.size()); ++i) {
    if (i == band) continue;
    acc *= upper_root(x, finite_bands_[i].lo) * upper_root(x, finite_bands_[i].hi);
  }
  if (set_.kind() == Kind::S) acc *= cplx(std::sqrt(tail_ - x), 0.0);
  return acc * cplx(0.0, 1.0);
}

double Radical::t_poly(double x) const { return t_poly(cplx(x, 0.0)).real(); }

cplx Radical::t_poly(cplx z) const {
  cplx acc = 1.0;
  for (double e : set_.endpoints()) acc *= z - e;
  return acc;
}

ChartWeight chart_weight(const BandSystem& e, const Radical& r, GapPoint p) {
  const double s2 = std::sin(0.5 * kPi * p.t);
  const double x = gap_x(e, p);
  int sign = r.gap_sign(p.gap);
  // dx/dt divided by the two local endpoint factors of |R| in closed form.
  double local;
  std::vector<double> others = e.endpoints();
  auto drop = [&](double v) {
    auto it = std::find(others.begin(), others.end(), v);
    if (it != others.end()) others.erase(it);
  };
  if (p.gap > 0) {
    local = kPi;
    drop(e.a(p.gap));
    drop(e.b(p.gap));
  } else if (e.kind() == Kind::J) {
    local = kPi / std::abs(std::cos(kPi * p.t));
    // R behaves like x^(g+1) through infinity.
    if (p.t > 0.5 && e.genus() % 2 == 0) sign = -sign;
    drop(e.left());
    drop(e.right());
  } else {
    double s = e.genus() > 0 ? e.a(1) : 1.0;
    local = std::sqrt(s) * kPi / (s2 * s2);
    drop(0.0);
  }
  double prod = 1.0;
  for (double v : others) prod *= std::abs(x - v);
  return {x, sign * local / std::sqrt(prod)};
}

double gap_partial_integral(const BandSystem& e, const Radical& r, GapPoint p,
                            const std::function<double(double)>& f) {
  if (p.t <= 0.0) return 0.0;
  const int gap = p.gap;
  auto g = [&](double t) -> double {
    ChartWeight cw = chart_weight(e, r, {gap, t});
    return f(cw.x) * cw.weight;
  };
  return integrate_regular<double>(g, 0.0, p.t, 1e-14);
}

double gap_integral(const BandSystem& e, const Radical& r, int gap,
                    const std::function<double(double)>& f) {
  return gap_partial_integral(e, r, {gap, 1.0}, f);
}

cplx band_integral(const BandSystem& e, const Radical& r, int band,
                   const std::function<double(double)>& f, double tol) {
  const Interval iv = e.bands()[band];
  if (std::isinf(iv.hi)) throw Error(ErrorKind::kDomain, "unbounded band");
  // On the band, R = sqrt(x - lo) sqrt(hi - x) times a smooth factor.
  auto re = [&](double x) { return (f(x) / r.upper_reduced(x, band)).real(); };
  auto im = [&](double x) { return (f(x) / r.upper_reduced(x, band)).imag(); };
  return {integrate_band(re, iv.lo, iv.hi, tol).value,
          integrate_band(im, iv.lo, iv.hi, tol).value};
}

double circle_distance(double u, double v) {
  double d = wrap_unit(u - v);
  return std::min(d, 1.0 - d);
}

CharacterVector reduce_mod1(CharacterVector beta) {
  for (double& b : beta) {
    b = wrap_unit(b);
    if (b >= 1.0 - 1e-11) b = 0.0;
  }
  return beta;
}

DifferentialBasis::DifferentialBasis(const BandSystem& e)
    : set_(e), radical_(e) {
  const int g = e.genus();
  if (g < 1) throw Error(ErrorKind::kDomain, "differential basis needs g >= 1");
  if (e.kind() == Kind::J) {
    center_ = 0.5 * (e.left() + e.right());
    scale_ = 0.5 * (e.right() - e.left());
  } else {
    center_ = 0.5 * e.b(g);
    scale_ = 0.5 * e.b(g);
  }
  Eigen::MatrixXd m(g, g);
  for (int j = 1; j <= g; ++j) {
    for (int i = 0; i < g; ++i) {
      m(j - 1, i) = gap_integral(e, radical_, j, [&](double x) {
        return std::pow((x - center_) / scale_, i);
      });
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  condition_ = sv(0) / sv(g - 1);
  if (!(condition_ <= 1e12)) {
    throw Error(ErrorKind::kConditioning,
                "period matrix condition " + std::to_string(condition_));
  }
  Eigen::MatrixXd q = m.fullPivLu().solve(Eigen::MatrixXd::Identity(g, g));
  coef_.assign(g, std::vector<double>(g));
  for (int k = 0; k < g; ++k)
    for (int i = 0; i < g; ++i) coef_[k][i] = q(i, k);
}

cplx DifferentialBasis::q(int k, cplx z) const {
  const std::vector<double>& c = coef_[k - 1];
  cplx u = (z - center_) / scale_;
  cplx acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

double DifferentialBasis::q(int k, double x) const {
  return q(k, cplx(x, 0.0)).real();
}

double DifferentialBasis::period(int j, int k) const {
  return 0.5 * gap_integral(set_, radical_, j,
                            [&](double x) { return q(k, x); });
}

double DifferentialBasis::measure_at(int k, GapPoint p) const {
  double integral = gap_partial_integral(set_, radical_, p,
                                         [&](double x) { return q(k, x); });
  if (set_.kind() == Kind::J) {
    double base = (p.gap >= 1 && p.gap <= k) ? 1.0 : 0.0;
    return base - integral;
  }
  double base = p.gap == 0 ? 1.0 : (p.gap > k ? 1.0 : 0.0);
  return base + integral;
}

double DifferentialBasis::base_value(int k, double endpoint) const {
  std::vector<Interval> bands = set_.bands();
  int band = 0;
  for (int i = 0; i < static_cast<int>(bands.size()); ++i) {
    if (endpoint >= bands[i].lo - kEndpointTol &&
        endpoint <= bands[i].hi + kEndpointTol) {
      band = i;
      break;
    }
  }
  if (set_.kind() == Kind::J) return band <= k - 1 ? 1.0 : 0.0;
  return band >= k ? 1.0 : 0.0;
}

double DifferentialBasis::harmonic_measure_via(int k, cplx z, double base,
                                               double h) const {
  Path path = lift_path(set_, base, z, h);
  cplx integral = integrate_path(
      [&](cplx w) { return q(k, w) / radical_(w); }, path);
  double start = base_value(k, base);
  return set_.kind() == Kind::J ? start - integral.real()
                                : start + integral.real();
}

double DifferentialBasis::harmonic_measure(int k, cplx z) const {
  if (k < 1 || k > genus()) throw Error(ErrorKind::kDomain, "index k out of range");
  if (z.imag() == 0.0) {
    int gap = set_.gap_of(z.real());
    if (gap < 0) throw Error(ErrorKind::kDomain, "point lies on E");
    return measure_at(k, to_gap_point(set_, gap, z.real()));
  }
  if (z.imag() < 0.0) z = std::conj(z);
  std::vector<double> ends = set_.endpoints();
  double base = ends.front();
  for (double e : ends) {
    if (std::abs(e - z.real()) < std::abs(base - z.real())) base = e;
  }
  return harmonic_measure_via(k, z, base, 0.5 * set_.min_gap_length());
}

double DifferentialBasis::band_measure(int band, cplx z) const {
  const int g = genus();
  if (z.imag() < 0.0) z = std::conj(z);
  auto qk = [&](int k, cplx w) -> cplx {
    return (k < 1 || k > g) ? cplx(0.0) : q(k, w);
  };
  const double base = set_.bands()[band].lo;
  Path path = lift_path(set_, base, z, 0.5 * set_.min_gap_length());
  if (z.imag() == 0.0) path.nodes.back() = z;
  if (set_.kind() == Kind::J) {
    cplx integral = integrate_path(
        [&](cplx w) { return (qk(band + 1, w) - qk(band, w)) / radical_(w); },
        path);
    return 1.0 - integral.real();
  }
  cplx integral = integrate_path(
      [&](cplx w) { return (qk(band, w) - qk(band + 1, w)) / radical_(w); },
      path);
  return 1.0 + integral.real();
}

double harmonic_measure(const DifferentialBasis& basis, cplx z, int k) {
  return basis.harmonic_measure(k, z);
}

CharacterVector limit_character(const std::vector<double>& base_angles,
                                double n, Problem problem) {
  CharacterVector beta(base_angles.size());
  const double div = problem == Problem::T ? 2.0 * kPi : kPi;
  for (size_t k = 0; k < beta.size(); ++k) beta[k] = n * base_angles[k] / div;
  return reduce_mod1(beta);
}

CharacterVector character_of_point(const DifferentialBasis& basis,
                                   GapPoint p) {
  CharacterVector beta(basis.genus());
  for (int k = 1; k <= basis.genus(); ++k) beta[k - 1] = basis.measure_at(k, p);
  return reduce_mod1(beta);
}

CharacterVector character_of_points(const DifferentialBasis& basis,
                                    const std::vector<GapPoint>& points) {
  CharacterVector beta(basis.genus(), 0.0);
  for (const GapPoint& p : points) {
    CharacterVector c = character_of_point(basis, p);
    for (size_t k = 0; k < beta.size(); ++k) beta[k] += c[k];
  }
  return reduce_mod1(beta);
}

}  // namespace ahlfors
