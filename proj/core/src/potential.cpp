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


#include "ahlfors/potential.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "ahlfors/error.hpp"
#include "ahlfors/quadrature.hpp"

namespace ahlfors {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of f(x)/R(x) dx over the chart interval [t0, t1] of a gap.
double chart_integral(const BandSystem& e, const Radical& r, int gap, double t0,
                      double t1, const std::function<double(double)>& f) {
  if (t1 <= t0) return 0.0;
  auto g = [&](double t) -> double {
    ChartWeight cw = chart_weight(e, r, {gap, t});
    return f(cw.x) * cw.weight;
  };
  return integrate_regular<double>(g, t0, t1, 1e-14);
}

double lift_height(const BandSystem& e) {
  double h = std::min(e.min_gap_length(), e.min_band_length());
  return std::isfinite(h) && h > 0.0 ? 0.5 * h : 0.5;
}

}  // namespace

CombMap::CombMap(const BandSystem& e) : set_(e), radical_(e) {
  const int g = e.genus();
  if (e.kind() == Kind::J) {
    center_ = 0.5 * (e.left() + e.right());
    scale_ = 0.5 * (e.right() - e.left());
  } else if (g > 0) {
    center_ = 0.5 * e.b(g);
    scale_ = 0.5 * e.b(g);
  }
  coef_.assign(g + 1, 0.0);
  coef_[g] = 1.0;
  if (g > 0) {
    Eigen::MatrixXd m(g, g);
    Eigen::VectorXd rhs(g);
    for (int j = 1; j <= g; ++j) {
      for (int i = 0; i <= g; ++i) {
        double v = gap_integral(e, radical_, j, [&](double x) {
          return std::pow((x - center_) / scale_, i);
        });
        if (i < g) {
          m(j - 1, i) = v;
        } else {
          rhs(j - 1) = -v;
        }
      }
    }
    Eigen::VectorXd sol = m.fullPivLu().solve(rhs);
    for (int i = 0; i < g; ++i) coef_[i] = sol(i);
  }
  for (double& c : coef_) c *= std::pow(scale_, g);

  data_.kind = e.kind();
  if (g > 0) {
    std::vector<cplx> roots = poly_roots(coef_);
    for (int j = 1; j <= g; ++j) {
      double a = e.a(j), b = e.b(j);
      double best = kInf, pick = 0.0;
      for (const cplx& w : roots) {
        double x = center_ + scale_ * w.real();
        double d = std::abs(w.imag()) + std::max(0.0, std::max(a - x, x - b));
        if (d < best) {
          best = d;
          pick = x;
        }
      }
      if (!(best == 0.0)) {
        throw Error(ErrorKind::kSolver,
                    "critical point missing from gap " + std::to_string(j));
      }
      data_.critical.push_back(pick);
    }
    for (int j = 1; j <= g; ++j) {
      double res = std::abs(gap_residual(j));
      double ref = gap_integral(e, radical_, j,
                                [&](double x) { return std::abs(p(x)); });
      if (!(res <= 1e-11 * std::max(1.0, ref))) {
        throw Error(ErrorKind::kSolver, "gap residual " + std::to_string(res) +
                                            " in gap " + std::to_string(j));
      }
    }
  }

  // Re tau is constant on gaps and grows across each finite band.
  std::vector<Interval> bands = e.bands();
  double acc = 0.0;
  endpoint_tau_.clear();
  for (int i = 0; i < static_cast<int>(bands.size()); ++i) {
    endpoint_tau_.push_back(acc);
    if (std::isinf(bands[i].hi)) break;
    cplx inc = band_integral(e, radical_, i, [&](double x) { return p(x); });
    acc += (factor() * inc).real();
    endpoint_tau_.push_back(acc);
    if (i + 1 < static_cast<int>(bands.size())) data_.base_angles.push_back(acc);
  }
  if (e.kind() == Kind::J) data_.width = acc;
  for (int j = 1; j <= g; ++j) {
    data_.heights.push_back(gap_potential(j, data_.critical[j - 1]));
  }
}

cplx CombMap::factor() const {
  return set_.kind() == Kind::J ? cplx(0.0, 1.0) : cplx(0.0, -0.5);
}

cplx CombMap::p(cplx z) const {
  return poly_eval(coef_, (z - center_) / scale_);
}

double CombMap::p(double x) const { return p(cplx(x, 0.0)).real(); }

double CombMap::gap_residual(int j) const {
  return gap_integral(set_, radical_, j, [&](double x) { return p(x); });
}

double CombMap::gap_potential(int gap, double x) const {
  auto f = [&](double s) { return p(s); };
  const double t = to_gap_point(set_, gap, x).t;
  const double im = factor().imag();
  // Integrate from the nearer finite end of the gap.
  bool from_left;
  if (gap > 0) {
    from_left = t <= 0.5;
  } else if (set_.kind() == Kind::J) {
    from_left = t < 0.5;
  } else {
    from_left = false;
  }
  if (gap == 0 && set_.kind() == Kind::J) {
    // P/R decays like 1/x; the logarithm is split off so that the chart
    // integrand stays bounded through infinity.
    const double a0 = set_.right(), b0 = set_.left();
    auto g = [&](double s) -> double {
      GapPoint q{0, s};
      ChartWeight cw = chart_weight(set_, radical_, q);
      double tail = s < 0.5 ? 1.0 / (cw.x - a0 + 1.0) : -1.0 / (b0 - cw.x + 1.0);
      return p(cw.x) * cw.weight - gap_dx(set_, q) * tail;
    };
    if (std::isinf(x)) return kInf;
    if (from_left) {
      return integrate_regular<double>(g, 0.0, t, 1e-14) + std::log(x - a0 + 1.0);
    }
    return -integrate_regular<double>(g, t, 1.0, 1e-14) + std::log(b0 - x + 1.0);
  }
  double v = from_left ? chart_integral(set_, radical_, gap, 0.0, t, f)
                       : -chart_integral(set_, radical_, gap, t, 1.0, f);
  return im * v;
}

cplx CombMap::tau_via(cplx z, double base, double h) const {
  Path path = lift_path(set_, base, z, h);
  check_path(set_, path);
  cplx integral = integrate_path([&](cplx w) { return p(w) / radical_(w); }, path);
  std::vector<double> ends = set_.endpoints();
  auto it = std::find(ends.begin(), ends.end(), base);
  if (it == ends.end()) {
    throw Error(ErrorKind::kGeometry, "base point is not an endpoint");
  }
  return endpoint_tau_[it - ends.begin()] + factor() * integral;
}

cplx CombMap::tau(cplx z) const {
  if (z.imag() < 0.0) z = std::conj(z);
  const std::vector<double> ends = set_.endpoints();
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (!std::isfinite(x)) throw Error(ErrorKind::kDomain, "point at infinity");
    const int gap = set_.gap_of(x);
    if (gap >= 0) {
      double re;
      if (gap > 0) {
        re = data_.base_angles[gap - 1];
      } else {
        re = (set_.kind() == Kind::J && x > set_.right()) ? data_.width : 0.0;
      }
      return {re, gap_potential(gap, x)};
    }
    // On E: Re tau from the left end of the band, Im tau = 0.
    std::vector<Interval> bands = set_.bands();
    int band = 0;
    while (band + 1 < static_cast<int>(bands.size()) &&
           x > bands[band].hi)
      ++band;
    const Interval iv = bands[band];
    const double start = endpoint_tau_[2 * band];
    if (x <= iv.lo) return {start, 0.0};
    double inc;
    if (std::isinf(iv.hi)) {
      cplx v = integrate_sqrt_start<cplx>(
          [&](double s) { return p(s) / radical_.upper(s); }, iv.lo, x);
      inc = (factor() * v).real();
    } else {
      if (x >= iv.hi) return {endpoint_tau_[2 * band + 1], 0.0};
      const double th = std::acos(std::clamp(
          1.0 - 2.0 * (x - iv.lo) / (iv.hi - iv.lo), -1.0, 1.0));
      auto g = [&](double s) -> cplx {
        double y = iv.lo + 0.5 * (iv.hi - iv.lo) * (1.0 - std::cos(s));
        return p(y) / radical_.upper_reduced(y, band);
      };
      inc = (factor() * integrate_regular<cplx>(g, 0.0, th, 1e-14)).real();
    }
    return {start + inc, 0.0};
  }
  double base = ends.front();
  for (double e : ends) {
    if (std::abs(e - z.real()) < std::abs(base - z.real())) base = e;
  }
  return tau_via(z, base, lift_height(set_));
}

double CombMap::potential(cplx z) const { return tau(z).imag(); }

CombData comb_data(const BandSystem& e) { return CombMap(e).data(); }

std::vector<double> critical_points(const BandSystem& e) {
  return CombMap(e).data().critical;
}

cplx comb_map(const BandSystem& e, cplx z) { return CombMap(e).tau(z); }

double green_at_infinity(const BandSystem& e, cplx z) {
  if (e.kind() != Kind::J) {
    throw Error(ErrorKind::kDomain, "Green function at infinity needs a J-kind set");
  }
  return CombMap(e).potential(z);
}

Capacity capacity_and_robin(const CombMap& comb) {
  if (comb.set().kind() != Kind::J) {
    throw Error(ErrorKind::kDomain, "capacity needs a J-kind set");
  }
  // G(iy) - log y = -log cap + O(1/y^2) for sets symmetric under conjugation.
  const double c = 0.5 * (comb.set().left() + comb.set().right());
  double f[3];
  const double ys[3] = {1e3, 1e4, 1e5};
  for (int i = 0; i < 3; ++i) {
    f[i] = comb.potential(cplx(c, ys[i])) - std::log(ys[i]);
  }
  const double l1 = (100.0 * f[1] - f[0]) / 99.0;
  const double l2 = (100.0 * f[2] - f[1]) / 99.0;
  Capacity out;
  out.robin = l2;
  out.cap = std::exp(-l2);
  out.spread = std::abs(l2 - l1);
  if (!(out.spread <= 1e-6)) {
    throw Error(ErrorKind::kAccuracy,
                "capacity extrapolation spread " + std::to_string(out.spread));
  }
  return out;
}

Capacity capacity_and_robin(const BandSystem& e) {
  return capacity_and_robin(CombMap(e));
}

double robin_by_integral(const CombMap& comb) {
  const BandSystem& e = comb.set();
  if (e.kind() != Kind::J) throw Error(ErrorKind::kDomain, "needs a J-kind set");
  const double a0 = e.right();
  auto g = [&](double t) -> double {
    GapPoint q{0, t};
    ChartWeight cw = chart_weight(e, comb.radical(), q);
    return comb.p(cw.x) * cw.weight - gap_dx(e, q) / (cw.x - a0 + 1.0);
  };
  return integrate_regular<double>(g, 0.0, 0.5, 1e-14);
}

PoleGreen::PoleGreen(const BandSystem& e, double x0)
    : x0_(x0), reduction_(moebius_reduce(e, x0)), comb_(reduction_.image) {
  robin_ = capacity_and_robin(comb_);
}

double PoleGreen::operator()(cplx z) const {
  if (std::isinf(z.real()) || std::isinf(z.imag())) return comb_.potential(0.0);
  if (z == cplx(x0_, 0.0)) {
    throw Error(ErrorKind::kDomain, "evaluation at the pole");
  }
  return comb_.potential(reduction_.map(z));
}

double PoleGreen::robin_sampled(double r) const {
  return (*this)(cplx(x0_, r)) + std::log(r);
}

double green_real_pole(const BandSystem& e, double x0, cplx z) {
  return PoleGreen(e, x0)(z);
}

double robin_at(const BandSystem& e, double x0) {
  return PoleGreen(e, x0).robin();
}

std::vector<double> base_angles_from_measure(const DifferentialBasis& basis) {
  std::vector<double> out;
  for (int k = 1; k <= basis.genus(); ++k) {
    out.push_back(kPi * basis.measure_at(k, {0, 0.5}));
  }
  return out;
}

double extension_identity_check(const BandSystem& e,
                                const std::vector<Interval>& added,
                                const std::vector<cplx>& points) {
  if (added.empty()) return 0.0;
  std::vector<Interval> all = e.bands();
  for (const Interval& piece : added) {
    if (!(piece.lo < piece.hi)) {
      throw Error(ErrorKind::kValidation, "empty added interval");
    }
    for (double x : {piece.lo, piece.hi, 0.5 * (piece.lo + piece.hi)}) {
      if (e.in_set(x, -kEndpointTol)) {
        throw Error(ErrorKind::kValidation, "added interval overlaps E");
      }
    }
    all.push_back(piece);
  }
  std::sort(all.begin(), all.end(),
            [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
  std::vector<Interval> merged;
  for (const Interval& iv : all) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  // S-kind sets start at 0; the extension is translated and the Martin
  // function is invariant under the translation.
  const double shift = e.kind() == Kind::S ? -merged.front().lo : 0.0;
  std::vector<double> raw;
  if (e.kind() == Kind::J) {
    for (const Interval& iv : merged) {
      raw.push_back(iv.lo);
      raw.push_back(iv.hi);
    }
  } else {
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
      raw.push_back(merged[i].hi + shift);
      raw.push_back(merged[i + 1].lo + shift);
    }
  }
  BandSystem ext_set = validate_system(raw, e.kind());
  CombMap base(e), ext(ext_set);
  const Radical& rx = ext.radical();
  const cplx fx = e.kind() == Kind::J ? cplx(0.0, 1.0) : cplx(0.0, -0.5);

  double worst = 0.0;
  for (cplx z : points) {
    double total = 0.0;
    for (const Interval& piece : added) {
      auto g = [&](double th) -> double {
        const double w = 0.5 * (piece.hi - piece.lo);
        const double x = piece.lo + w * (1.0 - std::cos(th));
        const double dx = w * std::sin(th);
        if (dx == 0.0) return 0.0;
        double density =
            std::abs((fx * ext.p(x + shift) / rx.upper(x + shift)).real());
        return PoleGreen(e, x)(z) * density * dx;
      };
      total += integrate_regular<double>(g, 0.0, kPi, 1e-10);
    }
    double m_ext = ext.potential(z + shift);
    double m_base = base.potential(z);
    worst = std::max(worst, std::abs(m_ext - m_base + total / kPi));
  }
  return worst;
}

}  // namespace ahlfors
