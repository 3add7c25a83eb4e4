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

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "ahlfors/error.hpp"
#include "ahlfors/lp.hpp"

namespace ahlfors {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Quotient and remainder of p / d.
std::pair<Poly, Poly> divide(Poly p, const Poly& d_in) {
  const Poly d = poly_trim(d_in);
  const int n = static_cast<int>(p.size()) - 1;
  const int m = static_cast<int>(d.size()) - 1;
  if (n < m) return {Poly{0.0}, p};
  Poly q(n - m + 1, 0.0);
  for (int k = n - m; k >= 0; --k) {
    q[k] = p[k + m] / d[m];
    for (int j = 0; j <= m; ++j) p[k + j] -= q[k] * d[j];
  }
  p.resize(std::max(m, 1));
  return {q, p};
}

// coef / (z - r) for a zero r of coef.
CPoly deflate(const CPoly& coef, cplx r) {
  const int n = static_cast<int>(coef.size()) - 1;
  CPoly q(n, cplx{});
  cplx acc{};
  for (int k = n; k >= 1; --k) {
    acc = acc * r + coef[k];
    q[k - 1] = acc;
  }
  return q;
}

double max_abs(const Poly& p) {
  double m = 0.0;
  for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

// Sample parameters on [0, 1] clustered at both ends.
std::vector<double> cheb_params(int count) {
  std::vector<double> s(count);
  for (int i = 0; i < count; ++i) {
    s[i] = count == 1 ? 0.5 : 0.5 * (1.0 - std::cos(kPi * i / (count - 1)));
  }
  return s;
}

}  // namespace

std::vector<double> real_zeros(const Poly& p, double tol) {
  std::vector<double> out;
  for (cplx z : poly_roots(p, tol)) {
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool zeros_interlace(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || b.empty()) return a.size() + b.size() <= 1;
  if (std::abs(static_cast<int>(a.size()) - static_cast<int>(b.size())) > 1) return false;
  std::vector<std::pair<double, int>> all;
  for (double x : a) all.emplace_back(x, 0);
  for (double x : b) all.emplace_back(x, 1);
  std::sort(all.begin(), all.end());
  for (size_t i = 1; i < all.size(); ++i) {
    if (all[i].second == all[i - 1].second) return false;
    if (all[i].first == all[i - 1].first) return false;
  }
  return true;
}

PellPair pell_from_preimage(const Poly& u_in, int m) {
  const Poly u = poly_trim(u_in);
  const int d = static_cast<int>(u.size()) - 1;
  if (d < 1 || m < 1) throw Error(ErrorKind::kValidation, "need deg U >= 1 and m >= 1");
  const double lc = u.back();
  const double scale = 1.0 + max_abs(u);
  for (cplx c : poly_roots(poly_derivative(u), 1e-9)) {
    if (c.imag() != 0.0) continue;
    const double v = poly_eval(u, c.real());
    if (std::abs(v) < 1.0 - 1e-12) {
      throw Error(ErrorKind::kValidation,
                  "invalid generator: critical value " + std::to_string(v) + " inside (-1, 1)");
    }
  }
  std::vector<double> roots;
  for (double shift : {-1.0, 1.0}) {
    Poly q = u;
    q[0] += shift;
    for (cplx z : poly_roots(q, 1e-7)) {
      if (z.imag() != 0.0) {
        throw Error(ErrorKind::kValidation, "invalid generator: preimage is not real");
      }
      roots.push_back(z.real());
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> ends, doubles;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i + 1 < roots.size() && roots[i + 1] - roots[i] <= 1e-6 * scale) {
      doubles.push_back(0.5 * (roots[i] + roots[i + 1]));
      ++i;
    } else {
      ends.push_back(roots[i]);
    }
  }
  PellPair out;
  out.n = m * d;
  out.psi = poly_compose(chebyshev_t(m), u);
  out.endpoints = ends;
  out.radicand = poly_from_roots(ends);
  Poly w = poly_scale(m >= 2 ? poly_compose(chebyshev_u(m - 1), u) : Poly{1.0}, lc);
  w = poly_mul(w, poly_from_roots(doubles));
  if (w.back() < 0.0) w = poly_scale(w, -1.0);
  out.w = w;
  out.extension = validate_system(ends, Kind::J);
  return out;
}

double pell_residual(const PellPair& pair, int samples) {
  const double lo = pair.endpoints.front(), hi = pair.endpoints.back();
  const double margin = 0.25 * (hi - lo);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = lo - margin + (hi - lo + 2.0 * margin) * (i + 0.5) / samples;
    const double psi = poly_eval(pair.psi, x);
    const double w = poly_eval(pair.w, x);
    const double r = poly_eval(pair.radicand, x);
    worst = std::max(worst, std::abs(psi * psi - r * w * w - 1.0) / (1.0 + psi * psi));
  }
  return worst;
}

namespace {

// The added factor R~^2 / T, checked to be a polynomial.
Poly added_factor(const BandSystem& e, const PellPair& pair) {
  if (e.kind() != Kind::J) throw Error(ErrorKind::kValidation, "candidate needs a J-kind set");
  const std::vector<double> ends = e.endpoints();
  for (int band = 0; band <= e.genus(); ++band) {
    const double lo = ends[2 * band], hi = ends[2 * band + 1];
    bool found = false;
    for (size_t k = 0; k + 1 < pair.endpoints.size(); k += 2) {
      const double tol = 1e-9 * (1.0 + std::abs(lo) + std::abs(hi));
      if (std::abs(pair.endpoints[k] - lo) <= tol && std::abs(pair.endpoints[k + 1] - hi) <= tol) {
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kGeometry, "every band of E must be a band of the extension");
    }
  }
  auto [q, r] = divide(pair.radicand, poly_from_roots(ends));
  if (max_abs(r) > 1e-8 * (1.0 + max_abs(pair.radicand))) {
    throw Error(ErrorKind::kGeometry, "extension radicand not divisible by T");
  }
  return q;
}

}  // namespace

double rho_tilde_sq_of_extension(const BandSystem& e, const PellPair& pair) {
  const Poly added = added_factor(e, pair);
  const Poly t = poly_from_roots(e.endpoints());
  const std::vector<double> ends = e.endpoints();
  double best = -std::numeric_limits<double>::infinity();
  for (int band = 0; band <= e.genus(); ++band) {
    const double lo = ends[2 * band], hi = ends[2 * band + 1];
    auto ratio = [&](double s) {
      const double x = lo + (hi - lo) * std::pow(std::sin(0.5 * kPi * s), 2);
      return poly_eval(added, x) / poly_eval(t, x);
    };
    constexpr int kSamples = 256;
    int arg = 1;
    double top = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < kSamples; ++i) {
      const double v = ratio(static_cast<double>(i) / kSamples);
      if (v > top) {
        top = v;
        arg = i;
      }
    }
    auto neg = [&](double s) { return -ratio(s); };
    auto res = boost::math::tools::brent_find_minima(
        neg, static_cast<double>(arg - 1) / kSamples, static_cast<double>(arg + 1) / kSamples, 52);
    best = std::max({best, top, -res.second});
  }
  return -best;
}

CandidatePoly candidate_from_extension(const BandSystem& e, const PellPair& pair, double rho) {
  CandidatePoly out;
  out.rho = rho;
  out.rho_tilde_sq = rho_tilde_sq_of_extension(e, pair);
  if (!(rho * rho < out.rho_tilde_sq)) {
    throw Error(ErrorKind::kAdmissibility,
                "rho^2 = " + std::to_string(rho * rho) + " not below rho~^2 = " +
                    std::to_string(out.rho_tilde_sq));
  }
  out.phi = poly_mul(poly_from_roots(e.endpoints()), pair.w);
  out.psi = pair.psi;
  const size_t len = std::max(out.phi.size(), out.psi.size());
  out.coef.assign(len, cplx{});
  for (size_t k = 0; k < out.phi.size(); ++k) out.coef[k] += rho * out.phi[k];
  for (size_t k = 0; k < out.psi.size(); ++k) out.coef[k] += cplx(0.0, out.psi[k]);
  out.coef = poly_trim(out.coef);
  for (cplx r : poly_roots(out.coef, 0.0)) {
    if (r.imag() > 1e-10 * (1.0 + std::abs(r))) {
      throw Error(ErrorKind::kAdmissibility,
                  "rho has the wrong sign: a zero lies in the upper half-plane");
    }
    out.zeros.push_back(std::conj(r));
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](cplx a, cplx b) { return a.real() < b.real(); });
  for (cplx zj : out.zeros) {
    if (zj.imag() <= 1e-12) continue;
    CPoly q = deflate(out.coef, std::conj(zj));
    out.ahlfors.push_back(poly_mul(q, CPoly{-zj, cplx(1.0, 0.0)}));
    out.derivs.push_back(std::abs(poly_eval(out.coef, zj)) / (2.0 * zj.imag()));
  }
  const std::vector<double> ends = e.endpoints();
  for (int band = 0; band <= e.genus(); ++band) {
    const double lo = ends[2 * band], hi = ends[2 * band + 1];
    for (double s : cheb_params(2001)) {
      out.sup_norm = std::max(out.sup_norm, std::abs(poly_eval(out.coef, lo + (hi - lo) * s)));
    }
  }
  if (out.sup_norm > 1.0 + 1e-8) {
    throw Error(ErrorKind::kAccuracy, "candidate exceeds 1 on E: " + std::to_string(out.sup_norm));
  }
  return out;
}

cplx Piece::at(double s) const {
  const double v = lo + (hi - lo) * s;
  return arc ? std::polar(1.0, v) : cplx(v, 0.0);
}

std::vector<Piece> pieces_of(const BandSystem& e) {
  if (e.kind() != Kind::J) throw Error(ErrorKind::kValidation, "polynomial problems need a bounded set");
  const std::vector<double> ends = e.endpoints();
  std::vector<Piece> out;
  for (size_t k = 0; k + 1 < ends.size(); k += 2) out.push_back({false, ends[k], ends[k + 1]});
  return out;
}

std::vector<Piece> pieces_of(const ArcSystem& e) {
  std::vector<Piece> out;
  for (const Interval& a : e.arcs()) out.push_back({true, a.lo, a.hi});
  return out;
}

KolmogorovResult kolmogorov_check(const CPoly& p_in, const std::vector<Piece>& e, cplx z0,
                                  const KolmogorovOptions& opt) {
  const CPoly p = poly_trim(p_in);
  const int n = static_cast<int>(p.size()) - 1;
  if (e.empty()) throw Error(ErrorKind::kValidation, "empty set");
  KolmogorovResult out;

  // Local maxima of |P| on each piece, refined by Brent's method.
  double total = 0.0;
  for (const Piece& pc : e) total += pc.hi - pc.lo;
  std::vector<cplx> peaks;
  std::vector<double> peak_mod;
  for (const Piece& pc : e) {
    const int count = std::max(64, static_cast<int>(opt.grid * (pc.hi - pc.lo) / total));
    const std::vector<double> s = cheb_params(count);
    std::vector<double> mod(count);
    for (int i = 0; i < count; ++i) mod[i] = std::abs(poly_eval(p, pc.at(s[i])));
    for (int i = 0; i < count; ++i) {
      const bool left = i == 0 || mod[i] >= mod[i - 1];
      const bool right = i == count - 1 || mod[i] >= mod[i + 1];
      if (!left || !right) continue;
      double best_s = s[i], best = mod[i];
      if (i > 0 && i < count - 1) {
        auto neg = [&](double t) { return -std::abs(poly_eval(p, pc.at(t))); };
        auto r = boost::math::tools::brent_find_minima(neg, s[i - 1], s[i + 1], 52);
        if (-r.second > best) {
          best = -r.second;
          best_s = r.first;
        }
      }
      peaks.push_back(pc.at(best_s));
      peak_mod.push_back(best);
    }
  }
  for (double v : peak_mod) out.sup_norm = std::max(out.sup_norm, v);
  std::vector<cplx> contact;
  for (size_t i = 0; i < peaks.size(); ++i) {
    if (peak_mod[i] >= (1.0 - opt.contact_tol) * out.sup_norm) contact.push_back(peaks[i]);
  }
  out.contact_count = static_cast<int>(contact.size());
  if (contact.empty() || out.sup_norm == 0.0) {
    out.inconclusive = true;
    return out;
  }
  if (n <= 1) {
    out.passes = true;
    return out;
  }

  // Basis for Q: Chebyshev polynomials on the hull for bands, powers of
  // zeta for arcs.
  const bool arcs = e.front().arc;
  double lo = e.front().lo, hi = e.front().hi;
  for (const Piece& pc : e) {
    lo = std::min(lo, pc.lo);
    hi = std::max(hi, pc.hi);
  }
  const double center = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  const int d = n - 1;
  auto basis = [&](cplx x) {
    std::vector<cplx> b(d);
    if (arcs) {
      cplx acc(1.0, 0.0);
      for (int k = 0; k < d; ++k, acc *= x) b[k] = acc;
    } else {
      const cplx u = (x - center) / half;
      for (int k = 0; k < d; ++k) {
        b[k] = k == 0 ? cplx(1.0, 0.0) : k == 1 ? u : 2.0 * u * b[k - 1] - b[k - 2];
      }
    }
    return b;
  };
  std::vector<double> obj(2 * d + 1, 0.0);
  obj[2 * d] = 1.0;
  LPSolver lp(2 * d + 1, obj);
  for (cplx x : contact) {
    cplx k = (x - std::conj(z0)) * (x - std::conj(z0)) * poly_eval(p, x);
    k /= std::abs(k);
    const std::vector<cplx> b = basis(x);
    std::vector<double> row(2 * d + 1, 0.0);
    for (int j = 0; j < d; ++j) {
      const cplx a = k * std::conj(b[j]);
      row[j] = -a.real();
      row[d + j] = -a.imag();
    }
    row[2 * d] = 1.0;
    lp.add_row(row, 0.0);
  }
  for (int j = 0; j < 2 * d; ++j) {
    std::vector<double> row(2 * d + 1, 0.0);
    row[j] = 1.0;
    lp.add_row(row, 1.0);
    row[j] = -1.0;
    lp.add_row(row, 1.0);
  }
  const LPResult res = lp.solve();
  out.margin = res.optimum;
  out.passes = out.margin <= opt.margin_tol;
  return out;
}

}  // namespace ahlfors
