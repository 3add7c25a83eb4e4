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


#include "ahlfors/kernels.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ahlfors/error.hpp"
#include "ahlfors/inversion.hpp"
#include "ahlfors/potential.hpp"

namespace ahlfors {

namespace {

// Points returned by the inversion this far out stand for infinity.
double snap_infinity(const BandSystem& e, double x) {
  double scale = 1.0;
  for (double v : e.endpoints()) {
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  }
  return std::abs(x) > 1e10 * scale ? kInf : x;
}

void check_s_kind(const BandSystem& e) {
  if (e.kind() != Kind::S) {
    throw Error(ErrorKind::kDomain, "this operation needs an S-kind set");
  }
}

int sign_at(const SignVector& eps, int j) {
  return eps.empty() ? 1 : eps[j];
}

// |Omega_eps(x)| for real x off the branch points.
double omega_modulus(const BandSystem& e, double x, const SignVector& eps) {
  double acc = 1.0 / std::sqrt(std::abs(x));
  for (int j = 1; j <= e.genus(); ++j) {
    double r = std::sqrt(std::abs((x - e.a(j)) / (x - e.b(j))));
    acc *= sign_at(eps, j - 1) > 0 ? r : 1.0 / r;
  }
  return acc;
}

}  // namespace

cplx omega_upper(const BandSystem& e, double x, const SignVector& eps) {
  check_s_kind(e);
  for (double p : e.endpoints()) {
    if (x == p) throw Error(ErrorKind::kDomain, "Omega at a branch point");
  }
  const double mod = omega_modulus(e, x, eps);
  if (x < 0.0) return mod;
  const int gap = e.gap_of(x);
  if (gap > 0) return static_cast<double>(sign_at(eps, gap - 1)) * mod;
  return cplx(0.0, mod);
}

cplx omega(const BandSystem& e, cplx z, const SignVector& eps) {
  check_s_kind(e);
  if (!eps.empty() && static_cast<int>(eps.size()) != e.genus()) {
    throw Error(ErrorKind::kValidation, "sign vector length differs from genus");
  }
  if (z.imag() == 0.0) {
    if (e.gap_of(z.real()) < 0) {
      throw Error(ErrorKind::kDomain, "Omega evaluated on E; use omega_upper");
    }
    return omega_upper(e, z.real(), eps);
  }
  cplx acc = 1.0 / std::sqrt(-z);
  for (int j = 1; j <= e.genus(); ++j) {
    cplx r = std::sqrt((z - e.a(j)) / (z - e.b(j)));
    acc *= sign_at(eps, j - 1) > 0 ? r : 1.0 / r;
  }
  return acc;
}

cplx sqrt_minus_t(const BandSystem& e, cplx z) {
  cplx num = 1.0;
  for (int j = 1; j <= e.genus(); ++j) num *= z - e.a(j);
  return num / omega(e, z);
}

HalfPeriodScan half_period_scan(const BandSystem& e, cplx z0) {
  check_s_kind(e);
  if (!(z0.imag() > 0.0)) throw Error(ErrorKind::kDomain, "z0 must lie in C+");
  const int g = e.genus();
  if (g > 12) throw Error(ErrorKind::kValidation, "half-period scan needs g <= 12");
  HalfPeriodScan out;
  double best = kInf;
  for (int mask = 0; mask < (1 << g); ++mask) {
    SignVector eps(g);
    for (int j = 0; j < g; ++j) eps[j] = (mask >> j) & 1 ? -1 : 1;
    cplx w = omega(e, z0, eps);
    double v = w.imag() / std::abs(w);
    out.variants.push_back(eps);
    out.values.push_back(v);
    if (v < best) {
      best = v;
      out.argmin = eps;
    }
  }
  return out;
}

cplx ahlfors_function(const BandSystem& e, cplx z0, cplx z) {
  if (!(z0.imag() > 0.0)) throw Error(ErrorKind::kDomain, "z0 must lie in C+");
  if (z == std::conj(z0)) throw Error(ErrorKind::kDomain, "pole of w");
  const cplx w0 = omega(e, z0);
  const cplx wz = z.imag() == 0.0 ? omega_upper(e, z.real()) : omega(e, z);
  return (z - z0) / (z - std::conj(z0)) * (wz - std::conj(w0)) / (wz + w0);
}

double derivative_density(const BandSystem& e, cplx z0) {
  if (!(z0.imag() > 0.0)) throw Error(ErrorKind::kDomain, "z0 must lie in C+");
  const cplx w0 = omega(e, z0);
  return w0.imag() / (2.0 * z0.imag() * std::abs(w0));
}

cplx kernel_omega(const BandSystem& e, cplx z, cplx z0) {
  const cplx bar = std::conj(z0);
  return (-1.0 / omega(e, z) + 1.0 / omega(e, bar)) / (2.0 * (z - bar));
}

MFunctions::MFunctions(const BandSystem& e, const Divisor& d) : set_(e) {
  check_s_kind(e);
  const int g = e.genus();
  if (static_cast<int>(d.size()) != g) {
    throw Error(ErrorKind::kValidation, "divisor needs one point per gap");
  }
  std::vector<double> xs, targets;
  for (int j = 1; j <= g; ++j) {
    const DivisorPoint& p = d[j - 1];
    if (p.x < e.a(j) || p.x > e.b(j)) {
      throw Error(ErrorKind::kValidation,
                  "divisor point outside gap " + std::to_string(j));
    }
    if (p.eps != 1 && p.eps != -1) {
      throw Error(ErrorKind::kValidation, "sheet sign must be +1 or -1");
    }
    // sqrt(-T) on gap j has the sign of prod_k (x - a_k), i.e. (-1)^(g - j).
    double t = p.x;
    for (int k = 1; k <= g; ++k) t *= (p.x - e.a(k)) * (p.x - e.b(k));
    const double branch = ((g - j) % 2 == 0 ? 1.0 : -1.0) * std::sqrt(std::abs(t));
    xs.push_back(p.x);
    targets.push_back(-p.eps * branch);
  }
  u_ = poly_from_roots(xs);
  v_.assign(g + 1, 0.0);
  if (g > 0) {
    Eigen::MatrixXd a(g, g);
    Eigen::VectorXd rhs(g);
    for (int j = 0; j < g; ++j) {
      for (int i = 0; i < g; ++i) a(j, i) = std::pow(xs[j], i + 1);
      rhs(j) = targets[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(g - 1) > 1e-13 * sv(0))) {
      throw Error(ErrorKind::kDegeneracy, "interpolation matrix is singular");
    }
    Eigen::VectorXd sol = svd.solve(rhs);
    for (int i = 0; i < g; ++i) v_[i + 1] = sol(i);
    for (int j = 0; j < g; ++j) {
      residual_ = std::max(residual_, std::abs(poly_eval(v_, xs[j]) - targets[j]));
    }
  }
}

cplx MFunctions::m_plus(cplx z) const {
  return (-sqrt_minus_t(set_, z) + poly_eval(v_, z)) / poly_eval(u_, z);
}

cplx MFunctions::m_minus(cplx z) const {
  return (-sqrt_minus_t(set_, z) - poly_eval(v_, z)) / poly_eval(u_, z);
}

cplx MFunctions::kernel(cplx z, cplx z0) const {
  const cplx bar = std::conj(z0);
  return (m_plus(z) - m_plus(bar)) / (2.0 * (z - bar));
}

cplx MFunctions::m_plus_upper(double x) const {
  cplx num = 1.0;
  for (int j = 1; j <= set_.genus(); ++j) num *= x - set_.a(j);
  cplx s = num / omega_upper(set_, x);
  return (-s + poly_eval(v_, x)) / poly_eval(u_, x);
}

cplx MFunctions::m_minus_upper(double x) const {
  cplx num = 1.0;
  for (int j = 1; j <= set_.genus(); ++j) num *= x - set_.a(j);
  cplx s = num / omega_upper(set_, x);
  return (-s - poly_eval(v_, x)) / poly_eval(u_, x);
}

double upsilon_g0(cplx lambda) {
  if (!(lambda.real() > 0.0)) {
    throw Error(ErrorKind::kDomain, "Upsilon needs Re lambda > 0");
  }
  return upsilon_kernel(lambda, lambda).real();
}

cplx upsilon_kernel(cplx lambda, cplx lambda0) {
  if (!(lambda.real() > 0.0) || !(lambda0.real() > 0.0)) {
    throw Error(ErrorKind::kDomain, "kernel needs Re lambda > 0");
  }
  const cplx s = std::sqrt(lambda), s0 = std::conj(std::sqrt(lambda0));
  const cplx d = s + s0;
  return 2.0 * s * s0 / ((lambda + std::conj(lambda0)) * d * d);
}

std::vector<double> fd_weights(int order, int half_width) {
  // Fornberg's recursion on the nodes -w..w around 0.
  const int n = 2 * half_width + 1;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = i - half_width;
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const int mn = std::min(i, order);
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - x[i - 1] * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * x[i - 1] * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (x[i] * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = x[i] * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

CMatrix hstr_matrix(const std::function<double(cplx)>& f, cplx lambda,
                    int order, double step, int half_width) {
  const int top = 2 * order;
  const int n = 2 * half_width + 1;
  std::vector<std::vector<double>> samples(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      samples[i][k] = f(lambda + cplx((i - half_width) * step, (k - half_width) * step));
  std::vector<std::vector<double>> w(top + 1);
  for (int p = 0; p <= top; ++p) w[p] = fd_weights(p, half_width);
  // d[p][q] = d^p/dx^p d^q/dy^q f.
  std::vector<std::vector<double>> d(top + 1, std::vector<double>(top + 1, 0.0));
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; p + q <= top; ++q) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) acc += w[p][i] * w[q][k] * samples[i][k];
      d[p][q] = acc / std::pow(step, p + q);
    }
  }
  auto binom = [](int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  const cplx I(0.0, 1.0);
  CMatrix out(order + 1, std::vector<cplx>(order + 1));
  for (int nn = 0; nn <= order; ++nn) {
    for (int m = 0; m <= order; ++m) {
      // d = (dx - i dy)/2 and dbar = (dx + i dy)/2.
      cplx acc = 0.0;
      for (int a = 0; a <= nn; ++a) {
        for (int b = 0; b <= m; ++b) {
          acc += binom(nn, a) * binom(m, b) * std::pow(-I, nn - a) *
                 std::pow(I, m - b) * d[a + b][(nn - a) + (m - b)];
        }
      }
      out[nn][m] = acc / std::pow(2.0, nn + m);
    }
  }
  return out;
}

CMatrix gram_matrix(const std::function<cplx(cplx, cplx)>& kernel,
                    const std::vector<cplx>& points) {
  const size_t n = points.size();
  CMatrix out(n, std::vector<cplx>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = kernel(points[i], points[j]);
  return out;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  const int n = static_cast<int>(m.size());
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
  Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double complex_value_at(const BandSystem& e, cplx z0,
                        const std::vector<double>& points) {
  if (!(z0.imag() > 0.0)) throw Error(ErrorKind::kDomain, "z0 must lie in C+");
  double sum = 0.0;
  for (double raw : points) {
    const double x = snap_infinity(e, raw);
    if (std::isinf(x)) {
      sum += green_at_infinity(e, z0);
    } else if (!e.in_set(x, 0.0)) {
      sum += PoleGreen(e, x)(z0);
    }
  }
  return std::exp(-sum) / (2.0 * z0.imag());
}

ComplexPrediction predict_complex(const BandSystem& e, cplx z0,
                                  const CharacterVector& beta) {
  GajiResult res = gaji_solve(e, beta, z0);
  ComplexPrediction out;
  out.branches = static_cast<int>(res.branches.size());
  bool chosen = false;
  for (const InversionSolution& s : res.branches) {
    double v = complex_value_at(e, z0, s.x);
    out.all_values.push_back(v);
    if (!chosen && s.in_region) {
      chosen = true;
      out.value = v;
      out.points = s.x;
      out.rho = s.rho;
      out.rho_tilde_sq = s.rho_tilde_sq;
      out.in_region = true;
    }
  }
  if (!chosen) {
    const InversionSolution& s = res.branches.front();
    throw Error(ErrorKind::kAdmissibility,
                "out of region: rho^2 = " + std::to_string(s.rho * s.rho) +
                    ", rho~^2 = " + std::to_string(s.rho_tilde_sq));
  }
  return out;
}

RealGapPrediction predict_real_gap(const BandSystem& e, double x0,
                                   const CharacterVector& beta) {
  const int gap = e.gap_of(x0);
  if (gap < 0) throw Error(ErrorKind::kDomain, "x0 must lie in a gap");
  if (static_cast<int>(beta.size()) != e.genus()) {
    throw Error(ErrorKind::kValidation, "character length differs from genus");
  }
  PoleGreen green(e, x0);
  RealGapPrediction out;
  out.robin = green.robin();
  double sum = 0.0;
  if (e.genus() > 0) {
    Inversion inv(e);
    CharacterVector shifted = character_of_point(inv.basis(), to_gap_point(e, gap, x0));
    for (size_t k = 0; k < shifted.size(); ++k) shifted[k] = beta[k] - shifted[k];
    InversionSolution sol = inv.real_inversion(reduce_mod1(shifted));
    out.points = sol.x;
    for (double raw : sol.x) {
      const double x = snap_infinity(e, raw);
      if (std::abs(x - x0) <= 1e-9 * (1.0 + std::abs(x0))) return out;
      sum += std::isinf(x) ? green(cplx(kInf, 0.0)) : green(x);
    }
  }
  out.value = 0.5 * std::exp(-out.robin - sum);
  return out;
}

}  // namespace ahlfors
