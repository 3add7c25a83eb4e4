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

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "ahlfors/error.hpp"

namespace ahlfors {

namespace {

constexpr double kPi = std::numbers::pi;

// Signed circle residual in (-1/2, 1/2].
double circle_residual(double v) {
  double w = wrap_unit(v);
  return w > 0.5 ? w - 1.0 : w;
}

// Harmonic-measure angle of x seen from z0; +-infinity map to +-pi/2.
double theta(double x, cplx z0) {
  if (std::isinf(x)) return x > 0 ? 0.5 * kPi : -0.5 * kPi;
  return std::atan((x - z0.real()) / z0.imag());
}

// Angle swept from p to q moving right on the extended line, in [0, pi).
double arc(double p, double q, cplx z0) {
  double d = theta(q, z0) - theta(p, z0);
  if (d < 0.0) d += kPi;
  if (d >= kPi) d -= kPi;
  return d;
}

double root_in(const std::function<double(double)>& f, double lo, double hi,
               double flo, double fhi) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  boost::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

Inversion::Inversion(const BandSystem& e) : set_(e), radical_(e) {
  if (e.genus() >= 1) basis_.emplace(e);
}

const DifferentialBasis& Inversion::basis() const {
  if (!basis_) throw Error(ErrorKind::kDomain, "no differential basis for g = 0");
  return *basis_;
}

double Inversion::measure(int k, GapPoint p) const {
  return basis().measure_at(k, p);
}

std::vector<double> Inversion::character_sum(
    const std::vector<GapPoint>& points) const {
  std::vector<double> out(genus(), 0.0);
  for (const GapPoint& p : points)
    for (int k = 1; k <= genus(); ++k) out[k - 1] += measure(k, p);
  return out;
}

double Inversion::cs2(const std::vector<GapPoint>& points, cplx z0) const {
  auto [left, right] = balance(points, z0);
  return (left - right) * kPi / z0.imag();
}

std::pair<double, double> Inversion::balance(const std::vector<GapPoint>& points,
                                             cplx z0) const {
  double left = 0.0, right = 0.0;
  for (const GapPoint& p : points) {
    const double x = gap_x(set_, p);
    left += arc(set_.a(p.gap), x, z0);
    right += arc(x, set_.b(p.gap), z0);
  }
  return {left / kPi, right / kPi};
}

cplx Inversion::u_poly(const std::vector<GapPoint>& points, cplx z) const {
  cplx acc = 1.0;
  for (const GapPoint& p : points) {
    const double x = gap_x(set_, p);
    if (p.gap == 0) {
      if (set_.kind() == Kind::J) {
        if (std::isinf(x)) continue;
        const double m = 0.5 * (set_.left() + set_.right());
        acc *= (x - z) / (x - m);
      } else {
        if (std::isinf(x)) throw Error(ErrorKind::kDomain, "x0 at -infinity");
        acc *= x - z;
      }
    } else {
      acc *= z - x;
    }
  }
  return acc;
}

cplx Inversion::rho_complex(const std::vector<GapPoint>& points, cplx z0) const {
  return cplx(0.0, 1.0) * u_poly(points, z0) / radical_(z0);
}

double Inversion::rho_tilde_sq(const std::vector<GapPoint>& points) const {
  auto ratio = [&](double x) {
    double u = u_poly(points, x).real();
    return u * u / std::norm(radical_.upper(x));
  };
  double best = kInf;
  for (const Interval& band : set_.bands()) {
    // Chart that pushes the endpoint singularities of 1/|T| to the ends.
    std::function<double(double)> xs;
    if (std::isinf(band.hi)) {
      const double l = band.lo, s = std::max(1.0, std::abs(band.lo));
      xs = [l, s](double v) { return l + s * v / (1.0 - v); };
    } else {
      const double l = band.lo, w = band.hi - band.lo;
      xs = [l, w](double v) { return l + w * 0.5 * (1.0 - std::cos(kPi * v)); };
    }
    constexpr int kSamples = 96;
    int arg = 1;
    double low = kInf;
    for (int i = 1; i < kSamples; ++i) {
      double v = ratio(xs(static_cast<double>(i) / kSamples));
      if (v < low) {
        low = v;
        arg = i;
      }
    }
    auto r = boost::math::tools::brent_find_minima(
        [&](double v) { return ratio(xs(v)); },
        static_cast<double>(arg - 1) / kSamples,
        static_cast<double>(arg + 1) / kSamples, 50);
    best = std::min({best, low, r.second});
  }
  return best;
}

std::vector<double> Inversion::residual(const std::vector<GapPoint>& points,
                                        const CharacterVector& beta, cplx z0,
                                        bool with_z0) const {
  std::vector<double> sum = character_sum(points);
  std::vector<double> out;
  for (int k = 0; k < genus(); ++k) out.push_back(circle_residual(sum[k] - beta[k]));
  if (with_z0) out.push_back(cs2(points, z0) * z0.imag() / kPi);
  return out;
}

std::optional<std::vector<GapPoint>> Inversion::newton(
    std::vector<GapPoint> pts, const CharacterVector& beta, cplx z0,
    bool with_z0) const {
  const int n = static_cast<int>(pts.size());
  auto norm = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };
  // Inner gaps are circles for the real inversion; otherwise charts are clamped.
  auto move = [&](const std::vector<GapPoint>& p, const Eigen::VectorXd& d) {
    std::vector<GapPoint> q = p;
    for (int i = 0; i < n; ++i) {
      double t = q[i].t + d(i);
      q[i].t = with_z0 ? std::clamp(t, 0.0, 1.0) : wrap_unit(t);
    }
    return q;
  };
  std::vector<double> f = residual(pts, beta, z0, with_z0);
  const int m = static_cast<int>(f.size());
  for (int iter = 0; iter < 60 && norm(f) > 1e-13; ++iter) {
    Eigen::MatrixXd jac(m, n);
    const double h = 1e-6;
    for (int i = 0; i < n; ++i) {
      double lo = -h, hi = h;
      if (with_z0) {
        lo = std::max(-h, -pts[i].t);
        hi = std::min(h, 1.0 - pts[i].t);
      }
      Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
      d(i) = hi;
      std::vector<double> fp = residual(move(pts, d), beta, z0, with_z0);
      d(i) = lo;
      std::vector<double> fm = residual(move(pts, d), beta, z0, with_z0);
      for (int r = 0; r < m; ++r) jac(r, i) = circle_residual(fp[r] - fm[r]) / (hi - lo);
    }
    Eigen::VectorXd rhs(m);
    for (int r = 0; r < m; ++r) rhs(r) = -f[r];
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(rhs);
    if (!step.allFinite()) return std::nullopt;
    // Damped update.
    double lambda = 1.0, f0 = norm(f);
    bool improved = false;
    for (int ls = 0; ls < 30; ++ls) {
      std::vector<GapPoint> trial = move(pts, lambda * step);
      std::vector<double> ft = residual(trial, beta, z0, with_z0);
      if (norm(ft) < f0) {
        pts = trial;
        f = ft;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
  }
  if (norm(f) > 1e-11) return std::nullopt;
  return pts;
}

InversionSolution Inversion::finish(std::vector<GapPoint> points,
                                    const CharacterVector& beta, cplx z0,
                                    bool with_z0) const {
  InversionSolution s;
  s.points = points;
  for (const GapPoint& p : points) s.x.push_back(gap_x(set_, p));
  std::vector<double> sum = character_sum(points);
  for (int k = 0; k < genus(); ++k) {
    s.residual_cs1 = std::max(s.residual_cs1, circle_distance(sum[k], beta[k]));
  }
  if (with_z0) {
    s.residual_cs2 = std::abs(cs2(points, z0));
    cplx r = rho_complex(points, z0);
    s.rho = r.real();
    s.realness_defect = std::abs(r.imag()) / std::abs(r);
    s.rho_tilde_sq = rho_tilde_sq(points);
    s.in_region = s.rho * s.rho < s.rho_tilde_sq;
  }
  return s;
}

InversionSolution Inversion::real_inversion(const CharacterVector& beta) const {
  const int g = genus();
  if (g < 1) throw Error(ErrorKind::kDomain, "real inversion needs g >= 1");
  if (static_cast<int>(beta.size()) != g) {
    throw Error(ErrorKind::kValidation, "character length differs from genus");
  }
  CharacterVector b = reduce_mod1(beta);
  if (g == 1) {
    // omega(x, E_1) runs monotonically between 0 and 1 across the gap.
    auto f = [&](double t) { return measure(1, {1, t}) - b[0]; };
    double f0 = f(0.0), f1 = f(1.0);
    if (f0 * f1 > 0.0) {
      // b = 0 is the identified endpoint pair.
      return finish({{1, 0.0}}, b, {}, false);
    }
    return finish({{1, root_in(f, 0.0, 1.0, f0, f1)}}, b, {}, false);
  }
  const int per = g <= 2 ? 5 : 3;
  int total = 1;
  for (int j = 0; j < g; ++j) total *= per;
  for (int idx = 0; idx < total; ++idx) {
    std::vector<GapPoint> start;
    int rest = idx;
    for (int j = 1; j <= g; ++j) {
      start.push_back({j, (rest % per + 0.5) / per});
      rest /= per;
    }
    auto sol = newton(start, b, {}, false);
    if (sol) return finish(*sol, b, {}, false);
  }
  throw Error(ErrorKind::kSolver, "real inversion did not converge");
}

int Inversion::driver_gap(cplx z0) const {
  // The gap with the smaller angular span drives the balance curve so that
  // the other point always has a solution.
  return arc(set_.a(0), set_.b(0), z0) <= arc(set_.a(1), set_.b(1), z0) ? 0 : 1;
}

std::vector<GapPoint> Inversion::balance_point(double s, cplx z0,
                                               bool* ok) const {
  const int p = driver_gap(z0), q = 1 - p;
  auto pts = [&](double tq) {
    std::vector<GapPoint> v(2);
    v[p] = {p, s};
    v[q] = {q, tq};
    return v;
  };
  auto f = [&](double tq) { return cs2(pts(tq), z0); };
  double f0 = f(0.0), f1 = f(1.0);
  if (f0 > 0.0 || f1 < 0.0) {
    *ok = false;
    return {};
  }
  *ok = true;
  return pts(root_in(f, 0.0, 1.0, f0, f1));
}

Inversion::Curve Inversion::elliptic_curve(cplx z0, int grid) const {
  Curve c;
  for (int i = 0; i <= grid; ++i) {
    double s = static_cast<double>(i) / grid;
    bool ok;
    std::vector<GapPoint> v = balance_point(s, z0, &ok);
    c.s.push_back(s);
    c.beta.push_back(ok ? wrap_unit(measure(1, v[0]) + measure(1, v[1]))
                        : std::nan(""));
  }
  return c;
}

std::vector<std::vector<GapPoint>> Inversion::elliptic_solutions(
    const Curve& c, double beta, cplx z0) const {
  std::vector<std::vector<GapPoint>> out;
  auto f = [&](double s) {
    bool ok;
    std::vector<GapPoint> v = balance_point(s, z0, &ok);
    if (!ok) return std::nan("");
    return circle_residual(measure(1, v[0]) + measure(1, v[1]) - beta);
  };
  for (size_t i = 0; i + 1 < c.s.size(); ++i) {
    if (std::isnan(c.beta[i]) || std::isnan(c.beta[i + 1])) continue;
    double d0 = circle_residual(c.beta[i] - beta);
    double d1 = circle_residual(c.beta[i + 1] - beta);
    if (std::abs(d0 - d1) > 0.5) continue;
    if (d0 == 0.0 && i > 0) continue;  // counted by the previous cell
    if (d0 * d1 > 0.0) continue;
    double s = root_in(f, c.s[i], c.s[i + 1], d0, d1);
    bool ok;
    std::vector<GapPoint> v = balance_point(s, z0, &ok);
    if (ok) out.push_back(v);
  }
  return out;
}

GajiResult Inversion::gaji_solve(const CharacterVector& beta, cplx z0) const {
  if (!(z0.imag() > 0.0)) throw Error(ErrorKind::kDomain, "z0 must lie in C+");
  const int g = genus();
  if (static_cast<int>(beta.size()) != g) {
    throw Error(ErrorKind::kValidation, "character length differs from genus");
  }
  CharacterVector b = reduce_mod1(beta);
  GajiResult out;
  if (g == 0) {
    auto f = [&](double t0) { return cs2({{0, t0}}, z0); };
    double t0 = root_in(f, 0.0, 1.0, f(0.0), f(1.0));
    out.branches.push_back(finish({{0, t0}}, b, z0, true));
    return out;
  }
  std::vector<std::vector<GapPoint>> found;
  if (g == 1) {
    found = elliptic_solutions(elliptic_curve(z0, 128), b[0], z0);
  } else {
    const int per = 3;
    int total = 1;
    for (int j = 0; j <= g; ++j) total *= per;
    for (int idx = 0; idx < total; ++idx) {
      std::vector<GapPoint> start;
      int rest = idx;
      for (int j = 0; j <= g; ++j) {
        start.push_back({j, (rest % per + 0.5) / per});
        rest /= per;
      }
      auto sol = newton(start, b, z0, true);
      if (!sol) continue;
      bool fresh = true;
      for (const auto& f : found) {
        double d = 0.0;
        for (int j = 0; j <= g; ++j) d = std::max(d, std::abs(f[j].t - (*sol)[j].t));
        if (d < 1e-7) fresh = false;
      }
      if (fresh) found.push_back(*sol);
    }
  }
  for (auto& pts : found) {
    if (g >= 1) {
      auto polished = newton(pts, b, z0, true);
      if (polished) pts = *polished;
    }
    out.branches.push_back(finish(pts, b, z0, true));
  }
  if (out.branches.empty()) {
    throw Error(ErrorKind::kSolver, "no convergent branch");
  }
  return out;
}

JacobianCheck Inversion::jacobian_check(const std::vector<GapPoint>& points,
                                        cplx z0) const {
  const int n = static_cast<int>(points.size());
  const int g = genus();
  CharacterVector zero(g, 0.0);
  auto raw = [&](const std::vector<GapPoint>& p) {
    std::vector<double> v = character_sum(p);
    v.push_back(cs2(p, z0) * z0.imag() / kPi);
    return v;
  };
  Eigen::MatrixXd jac(g + 1, n);
  const double h = 1e-6;
  for (int i = 0; i < n; ++i) {
    std::vector<GapPoint> up = points, dn = points;
    up[i].t = std::min(1.0, points[i].t + h);
    dn[i].t = std::max(0.0, points[i].t - h);
    std::vector<double> fp = raw(up), fm = raw(dn);
    for (int r = 0; r <= g; ++r) jac(r, i) = (fp[r] - fm[r]) / (up[i].t - dn[i].t);
  }
  JacobianCheck out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  out.sigma_min = svd.singularValues()(std::min(g + 1, n) - 1);

  // Determinant with rows 1, x, ..., x^(g-1), R(x)/(z0 - x); the column of an
  // outer point is scaled by (x0 - m)^(1-g) so that it has a limit at infinity.
  Eigen::MatrixXcd mat(n, n);
  for (int j = 0; j < n; ++j) {
    const double x = gap_x(set_, points[j]);
    const bool outer = points[j].gap == 0 && set_.kind() == Kind::J;
    const double m = 0.5 * (set_.left() + set_.right());
    if (outer && std::isinf(x)) {
      for (int r = 0; r + 1 < n; ++r) mat(r, j) = r == g - 1 ? 1.0 : 0.0;
      mat(n - 1, j) = -1.0;
      continue;
    }
    const double scale = outer ? std::pow(x - m, 1 - g) : 1.0;
    for (int r = 0; r + 1 < n; ++r) mat(r, j) = std::pow(x, r) * scale;
    mat(n - 1, j) = radical_.upper(x).real() / (z0 - x) * scale;
  }
  out.m_value = mat.determinant();
  out.determinant = 2.0 * out.m_value.imag();
  return out;
}

std::vector<BifurcationRow> Inversion::bifurcation_scan(
    const std::vector<double>& betas, cplx z0, int grid) const {
  if (genus() != 1) throw Error(ErrorKind::kDomain, "bifurcation scan needs g = 1");
  Curve c = elliptic_curve(z0, grid);
  auto phi = [&](double x) { return 2.0 * arc(set_.a(0), x, z0); };
  std::vector<BifurcationRow> rows;
  for (double beta : betas) {
    std::vector<std::vector<GapPoint>> sols =
        elliptic_solutions(c, wrap_unit(beta), z0);
    if (sols.empty()) {
      BifurcationRow r;
      r.beta = beta;
      r.branch = -1;
      rows.push_back(r);
      continue;
    }
    for (size_t i = 0; i < sols.size(); ++i) {
      InversionSolution s = finish(sols[i], {wrap_unit(beta)}, z0, true);
      BifurcationRow r;
      r.beta = beta;
      r.branch = static_cast<int>(i);
      r.branches = static_cast<int>(sols.size());
      r.x0 = s.x[0];
      r.x1 = s.x[1];
      r.rho_sq = s.rho * s.rho;
      r.rho_tilde_sq = s.rho_tilde_sq;
      r.valid = s.in_region;
      const double c0 = 0.5 * (phi(set_.b(0)) + phi(set_.a(1)) + phi(set_.b(1)));
      r.angle_relation = std::abs(phi(s.x[0]) + phi(s.x[1]) - c0);
      rows.push_back(r);
    }
  }
  return rows;
}

InversionSolution real_inversion(const BandSystem& e, const CharacterVector& beta) {
  return Inversion(e).real_inversion(beta);
}

GajiResult gaji_solve(const BandSystem& e, const CharacterVector& beta, cplx z0) {
  return Inversion(e).gaji_solve(beta, z0);
}

}  // namespace ahlfors
