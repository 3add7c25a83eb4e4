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

#include "ahlfors/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "ahlfors/error.hpp"
#include "ahlfors/kernels.hpp"
#include "ahlfors/lp.hpp"
#include "ahlfors/potential.hpp"

namespace ahlfors {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> cheb_second(int count) {
  std::vector<double> s(count);
  for (int i = 0; i < count; ++i) {
    s[i] = count == 1 ? 0.5 : 0.5 * (1.0 - std::cos(kPi * i / (count - 1)));
  }
  return s;
}

// Largest-remainder split of n over the weights.
std::vector<int> allocate(int n, const std::vector<double>& w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<int> out(w.size());
  std::vector<std::pair<double, int>> rem;
  int used = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    const double share = n * w[i] / total;
    out[i] = static_cast<int>(std::floor(share));
    used += out[i];
    rem.emplace_back(share - out[i], static_cast<int>(i));
  }
  std::stable_sort(rem.begin(), rem.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int k = 0; used < n; ++k, ++used) ++out[rem[k % rem.size()].second];
  return out;
}

struct Peak {
  cplx x;
  cplx value;
  double mod;
};

}  // namespace

BarycentricPoly::BarycentricPoly(std::vector<cplx> nodes, cplx z0)
    : nodes_(std::move(nodes)), z0_(z0) {
  const int n = degree();
  double log_sum = 0.0;
  int pairs = 0;
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      log_sum += std::log(std::abs(nodes_[k] - nodes_[j]));
      ++pairs;
    }
  }
  cap_ = pairs > 0 ? std::exp(log_sum / pairs) : 1.0;
  weights_.assign(n, cplx(1.0, 0.0));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (j != k) weights_[k] *= cap_ / (nodes_[k] - nodes_[j]);
    }
  }
  q_.assign(n, cplx{});
}

std::vector<cplx> BarycentricPoly::lagrange(cplx z) const {
  const int n = degree();
  std::vector<cplx> l(n, cplx{});
  cplx big(1.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const cplx d = z - nodes_[j];
    if (std::abs(d) <= 1e-15 * (1.0 + std::abs(z))) {
      l[j] = 1.0;
      return l;
    }
    big *= d / cap_;
  }
  for (int k = 0; k < n; ++k) l[k] = big * weights_[k] * cap_ / (z - nodes_[k]);
  return l;
}

cplx BarycentricPoly::q(cplx z) const {
  const std::vector<cplx> l = lagrange(z);
  cplx acc{};
  for (int k = 0; k < degree(); ++k) acc += l[k] * q_[k];
  return acc;
}

CPoly BarycentricPoly::monomial() const {
  const int n = degree();
  CPoly acc{cplx{}};
  for (int k = 0; k < n; ++k) {
    CPoly basis{cplx(1.0, 0.0)};
    cplx denom(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      basis = poly_mul(basis, CPoly{-nodes_[j], cplx(1.0, 0.0)});
      denom *= nodes_[k] - nodes_[j];
    }
    acc = poly_add(acc, poly_scale(basis, q_[k] / denom));
  }
  return poly_mul(acc, CPoly{-z0_, cplx(1.0, 0.0)});
}

std::vector<double> band_equilibrium(const BandSystem& e) {
  if (e.kind() != Kind::J) throw Error(ErrorKind::kValidation, "equilibrium needs a J-kind set");
  if (e.genus() == 0) return {1.0};
  CombMap comb(e);
  const std::vector<double>& tau = comb.endpoint_values();
  std::vector<double> out;
  for (int band = 0; band <= e.genus(); ++band) {
    out.push_back(std::abs(tau[2 * band + 1] - tau[2 * band]) / kPi);
  }
  return out;
}

ExtremalResult extremal_on_pieces(const std::vector<Piece>& e, const std::vector<double>& weights,
                                  int n, cplx z0, bool real_problem, const OracleOptions& opt) {
  if (n < 1) throw Error(ErrorKind::kValidation, "degree must be at least 1");
  if (e.empty() || weights.size() != e.size()) {
    throw Error(ErrorKind::kValidation, "one weight per piece required");
  }
  if (real_problem && z0.imag() != 0.0) {
    throw Error(ErrorKind::kValidation, "real problem needs a real z0");
  }

  // Lagrange nodes for Q, degree n - 1.
  const std::vector<int> counts = allocate(n, weights);
  std::vector<cplx> nodes;
  for (size_t i = 0; i < e.size(); ++i) {
    for (int k = 0; k < counts[i]; ++k) {
      const double s = 0.5 * (1.0 - std::cos(kPi * (2 * k + 1) / (2.0 * counts[i])));
      nodes.push_back(e[i].at(s));
    }
  }
  ExtremalResult out;
  out.n = n;
  out.real_problem = real_problem;
  out.poly = BarycentricPoly(nodes, z0);
  BarycentricPoly& poly = out.poly;

  const int vars = real_problem ? n : 2 * n;
  const std::vector<cplx> l0 = poly.lagrange(z0);
  std::vector<double> obj(vars);
  for (int k = 0; k < n; ++k) {
    obj[k] = l0[k].real();
    if (!real_problem) obj[n + k] = -l0[k].imag();
  }
  LPSolver lp(vars, obj);
  auto add_point = [&](cplx x, double phase, bool both) {
    const std::vector<cplx> l = poly.lagrange(x);
    std::vector<double> row(vars);
    const cplx rot = std::polar(1.0, -phase) * (x - z0);
    for (int k = 0; k < n; ++k) {
      const cplx a = rot * l[k];
      row[k] = a.real();
      if (!real_problem) row[n + k] = -a.imag();
    }
    lp.add_row(row, 1.0);
    if (both) {
      for (double& v : row) v = -v;
      lp.add_row(row, 1.0);
    }
  };
  for (size_t i = 0; i < e.size(); ++i) {
    for (double s : cheb_second(2 * counts[i] + 2)) {
      const cplx x = e[i].at(s);
      if (real_problem) {
        add_point(x, 0.0, true);
      } else {
        for (int f = 0; f < opt.facets; ++f) add_point(x, 2.0 * kPi * f / opt.facets, false);
      }
    }
  }

  const int scan = opt.grid > 0 ? opt.grid : 30 * n;
  std::vector<Peak> peaks;
  LPResult res;
  for (out.rounds = 1;; ++out.rounds) {
    res = lp.solve();
    std::vector<cplx> q(n);
    for (int k = 0; k < n; ++k) {
      q[k] = real_problem ? cplx(res.primal[k], 0.0) : cplx(res.primal[k], res.primal[n + k]);
    }
    poly.set_values(q);

    // Local maxima of |P| along each piece.
    peaks.clear();
    for (const Piece& pc : e) {
      const std::vector<double> s = cheb_second(std::max(scan, 16));
      std::vector<double> mod(s.size());
      for (size_t i = 0; i < s.size(); ++i) mod[i] = std::abs(poly(pc.at(s[i])));
      for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && mod[i] < mod[i - 1]) continue;
        if (i + 1 < s.size() && mod[i] < mod[i + 1]) continue;
        double best_s = s[i], best = mod[i];
        if (i > 0 && i + 1 < s.size()) {
          auto neg = [&](double t) { return -std::abs(poly(pc.at(t))); };
          auto r = boost::math::tools::brent_find_minima(neg, s[i - 1], s[i + 1], 52);
          if (-r.second > best) {
            best = -r.second;
            best_s = r.first;
          }
        }
        const cplx x = pc.at(best_s);
        peaks.push_back({x, poly(x), best});
      }
    }
    out.max_modulus = 0.0;
    for (const Peak& p : peaks) out.max_modulus = std::max(out.max_modulus, p.mod);
    if (out.max_modulus <= 1.0 + opt.tol) break;
    if (out.rounds >= opt.max_rounds) {
      throw Error(ErrorKind::kAccuracy,
                  "exchange did not converge in " + std::to_string(opt.max_rounds) +
                      " rounds; bracket [" + std::to_string(res.optimum / out.max_modulus) + ", " +
                      std::to_string(res.optimum) + "]");
    }
    for (const Peak& p : peaks) {
      if (p.mod <= 1.0 + 0.1 * opt.tol) continue;
      if (real_problem) {
        add_point(p.x, p.value.real() > 0.0 ? 0.0 : kPi, false);
      } else {
        add_point(p.x, std::arg(p.value), false);
      }
    }
  }
  if (!res.certified) {
    throw Error(ErrorKind::kSolver, "dual certificate failed: gap " + std::to_string(res.gap) +
                                        ", residual " + std::to_string(res.dual_residual));
  }
  out.value = res.optimum;
  out.upper = res.optimum;
  out.lower = res.optimum / std::max(1.0, out.max_modulus);
  out.iterations = res.iterations;
  out.rows = lp.rows();
  for (const Peak& p : peaks) {
    if (p.mod >= 1.0 - opt.contact_tol) out.contact.push_back(p.x);
  }
  return out;
}

ExtremalResult extremal_deriv(const BandSystem& e, int n, cplx z0, const OracleOptions& opt) {
  const bool real = z0.imag() == 0.0;
  return extremal_on_pieces(pieces_of(e), band_equilibrium(e), n, z0, real, opt);
}

ExtremalResult extremal_deriv(const ArcSystem& e, int n, cplx z0, const OracleOptions& opt) {
  const std::vector<Piece> pieces = pieces_of(e);
  std::vector<double> w;
  for (const Piece& pc : pieces) w.push_back(pc.hi - pc.lo);
  return extremal_on_pieces(pieces, w, n, z0, false, opt);
}

std::vector<SweepRow> convergence_sweep(const SweepSpec& spec) {
  const BandSystem& e = spec.set;
  cplx z0 = spec.z0;
  double jac = 1.0;
  double predicted_g0 = 0.0;
  if (spec.source == SweepSource::kGenus0Lambda) {
    const std::vector<double> ends = e.endpoints();
    if (e.genus() != 0 || e.kind() != Kind::J || ends[0] != -2.0 || ends[1] != 2.0) {
      throw Error(ErrorKind::kValidation, "lambda scaling needs E = [-2, 2]");
    }
    const CoordValue cv = thintro_map(Coord::kJ, spec.lambda);
    z0 = cv.z;
    jac = std::abs(cv.dz);
    predicted_g0 = upsilon_g0(spec.lambda);
    // A_n is symmetric under conjugation for real sets.
    if (z0.imag() < 0.0) z0 = std::conj(z0);
  }
  if (spec.source == SweepSource::kRealGap && z0.imag() != 0.0) {
    throw Error(ErrorKind::kValidation, "real-gap sweep needs a real z0");
  }
  const double g = spec.source == SweepSource::kRealGap && e.kind() == Kind::J
                       ? green_at_infinity(e, cplx(z0.real(), 0.0))
                       : green_at_infinity(e, z0);
  std::vector<double> angles;
  if (e.genus() > 0) angles = comb_data(e).base_angles;

  const size_t count = spec.n_list.size();
  std::vector<SweepRow> rows(count);
  std::vector<std::string> errors(count);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < count; i = next++) {
      try {
        const int n = spec.n_list[i];
        const ExtremalResult r = extremal_deriv(e, n, z0, spec.oracle);
        SweepRow& row = rows[i];
        row.n = n;
        row.lower = r.lower;
        row.upper = r.upper;
        row.contact = static_cast<int>(r.contact.size());
        row.rounds = r.rounds;
        row.scaled = std::exp(-n * g) * r.upper * jac;
        if (e.genus() > 0) row.beta = limit_character(angles, n, Problem::J);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::string& err : errors) {
    if (!err.empty()) throw std::runtime_error(err);
  }

  // Predictions, one per distinct character.
  std::map<CharacterVector, double> cache;
  for (SweepRow& row : rows) {
    double pred = std::numeric_limits<double>::quiet_NaN();
    if (spec.source == SweepSource::kGenus0Lambda) {
      pred = predicted_g0;
    } else {
      auto it = cache.find(row.beta);
      if (it != cache.end()) {
        pred = it->second;
      } else {
        try {
          pred = spec.source == SweepSource::kRealGap
                     ? predict_real_gap(e, z0.real(), row.beta).value
                     : predict_complex(e, z0, row.beta).value;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::kAdmissibility) throw;
        }
        cache[row.beta] = pred;
      }
    }
    row.predicted = pred;
    row.ratio = row.scaled / pred;
  }
  return rows;
}

}  // namespace ahlfors
