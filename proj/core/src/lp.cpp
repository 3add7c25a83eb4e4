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

#include "ahlfors/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahlfors/error.hpp"

namespace ahlfors {
namespace {

constexpr double kPriceTol = 1e-11;
constexpr double kPivotTol = 1e-11;
constexpr int kRefactorEvery = 100;
constexpr int kStallLimit = 30;
constexpr int kMaxIterations = 200000;

}  // namespace

LPSolver::LPSolver(int variables, std::vector<double> objective) : n_(variables) {
  if (variables <= 0 || static_cast<int>(objective.size()) != variables) {
    throw Error(ErrorKind::kValidation, "objective length differs from variable count");
  }
  c_ = Eigen::Map<const Eigen::VectorXd>(objective.data(), variables);
  if (!c_.allFinite()) throw Error(ErrorKind::kValidation, "non-finite objective");
}

void LPSolver::add_row(const std::vector<double>& coef, double bound) {
  if (static_cast<int>(coef.size()) != n_) {
    throw Error(ErrorKind::kValidation, "row length differs from variable count");
  }
  Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(coef.data(), n_);
  const double norm = a.norm();
  if (!a.allFinite() || !std::isfinite(bound)) {
    throw Error(ErrorKind::kValidation, "non-finite constraint row");
  }
  if (norm == 0.0) {
    if (bound < 0.0) throw Error(ErrorKind::kStatus, "infeasible: 0 <= negative bound");
    return;
  }
  cols_.push_back(a / norm);
  bound_.push_back(bound / norm);
  scale_.push_back(norm);
  in_basis_.push_back(0);
}

double LPSolver::cost(int id) const {
  if (id < 0) return phase_one_done_ ? 0.0 : 1.0;
  return phase_one_done_ ? bound_[id] : 0.0;
}

Eigen::VectorXd LPSolver::column(int id) const {
  if (id >= 0) return cols_[id];
  const int i = -1 - id;
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
  e[i] = art_sign_[i];
  return e;
}

void LPSolver::refactor() {
  Eigen::MatrixXd b(n_, n_);
  for (int p = 0; p < n_; ++p) b.col(p) = column(basis_[p]);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
  binv_ = lu.inverse();
  xb_ = binv_ * c_;
  for (int p = 0; p < n_; ++p) {
    if (xb_[p] < 0.0 && xb_[p] > -1e-9) xb_[p] = 0.0;
  }
}

bool LPSolver::run(bool phase_one) {
  int stall = 0;
  int since_refactor = 0;
  const int m = rows();
  Eigen::VectorXd cb(n_);
  while (true) {
    if (++iterations_ > kMaxIterations) {
      throw Error(ErrorKind::kSolver, "simplex iteration limit reached");
    }
    for (int p = 0; p < n_; ++p) cb[p] = cost(basis_[p]);
    const Eigen::VectorXd pi = binv_.transpose() * cb;
    const bool bland = stall > kStallLimit;
    int enter = -1;
    double best = -kPriceTol;
    for (int j = 0; j < m; ++j) {
      if (in_basis_[j]) continue;
      const double d = cost(j) - pi.dot(cols_[j]);
      if (d < best) {
        enter = j;
        best = d;
        if (bland) break;
      }
    }
    if (enter < 0) return true;
    const Eigen::VectorXd u = binv_ * cols_[enter];
    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int p = 0; p < n_; ++p) {
      const int id = basis_[p];
      double r;
      if (id < 0 && !phase_one && std::abs(u[p]) > kPivotTol) {
        r = 0.0;
      } else if (u[p] > kPivotTol) {
        r = std::max(xb_[p], 0.0) / u[p];
      } else {
        continue;
      }
      const bool better = r < ratio - 1e-14 ||
                          (r <= ratio + 1e-14 && leave >= 0 && id < basis_[leave]);
      if (leave < 0 || better) {
        leave = p;
        ratio = r;
      }
    }
    if (leave < 0) return false;
    stall = ratio <= 1e-14 ? stall + 1 : 0;
    xb_ -= ratio * u;
    xb_[leave] = ratio;
    const double piv = u[leave];
    binv_.row(leave) /= piv;
    for (int p = 0; p < n_; ++p) {
      if (p != leave && u[p] != 0.0) binv_.row(p) -= u[p] * binv_.row(leave);
    }
    const int old = basis_[leave];
    if (old >= 0) in_basis_[old] = 0;
    basis_[leave] = enter;
    in_basis_[enter] = 1;
    if (++since_refactor >= kRefactorEvery) {
      refactor();
      since_refactor = 0;
    }
  }
}

LPResult LPSolver::solve() {
  if (rows() == 0) throw Error(ErrorKind::kValidation, "at least one constraint required");
  if (!started_) {
    started_ = true;
    art_sign_.assign(n_, 1.0);
    basis_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      art_sign_[i] = c_[i] >= 0.0 ? 1.0 : -1.0;
      basis_[i] = -1 - i;
    }
    refactor();
    phase_one_done_ = false;
    run(true);
    double infeas = 0.0;
    for (int p = 0; p < n_; ++p) {
      if (basis_[p] < 0) infeas += std::max(xb_[p], 0.0);
    }
    if (infeas > 1e-9 * (1.0 + c_.lpNorm<Eigen::Infinity>())) {
      started_ = false;
      throw Error(ErrorKind::kStatus, "unbounded: the rows do not bound the objective");
    }
    phase_one_done_ = true;
    // Drive zero-level artificials out of the basis where possible.
    for (int p = 0; p < n_; ++p) {
      if (basis_[p] >= 0) continue;
      const Eigen::RowVectorXd brow = binv_.row(p);
      for (int j = 0; j < rows(); ++j) {
        if (in_basis_[j]) continue;
        const double up = brow.dot(cols_[j]);
        if (std::abs(up) <= 1e-7) continue;
        const Eigen::VectorXd u = binv_ * cols_[j];
        binv_.row(p) /= u[p];
        for (int q = 0; q < n_; ++q) {
          if (q != p && u[q] != 0.0) binv_.row(q) -= u[q] * binv_.row(p);
        }
        basis_[p] = j;
        in_basis_[j] = 1;
        break;
      }
    }
    refactor();
  }
  if (!run(false)) throw Error(ErrorKind::kStatus, "infeasible: dual ray found");
  refactor();
  return report();
}

LPResult LPSolver::report() {
  const int m = rows();
  Eigen::VectorXd cb(n_);
  for (int p = 0; p < n_; ++p) cb[p] = cost(basis_[p]);
  const Eigen::VectorXd y = binv_.transpose() * cb;
  LPResult out;
  out.iterations = iterations_;
  out.primal.assign(y.data(), y.data() + n_);
  out.optimum = c_.dot(y);
  out.dual.assign(m, 0.0);
  Eigen::VectorXd resid = -c_;
  double dual_obj = 0.0;
  for (int p = 0; p < n_; ++p) {
    const int j = basis_[p];
    if (j < 0) continue;
    const double lam = xb_[p] / scale_[j];
    out.dual[j] = lam;
    resid += lam * scale_[j] * cols_[j];
    dual_obj += lam * bound_[j] * scale_[j];
  }
  double viol = -std::numeric_limits<double>::infinity();
  double bmax = 0.0;
  for (int j = 0; j < m; ++j) {
    viol = std::max(viol, (cols_[j].dot(y) - bound_[j]) * scale_[j]);
    bmax = std::max(bmax, std::abs(bound_[j] * scale_[j]));
  }
  double lam_min = 0.0;
  for (double l : out.dual) lam_min = std::min(lam_min, l);
  out.primal_violation = viol;
  out.dual_residual = resid.lpNorm<Eigen::Infinity>();
  out.gap = std::abs(dual_obj - out.optimum);
  out.certified = viol <= 1e-8 * (1.0 + bmax) &&
                  out.dual_residual <= 1e-8 * (1.0 + c_.lpNorm<Eigen::Infinity>()) &&
                  out.gap <= 1e-9 * (1.0 + std::abs(out.optimum)) && lam_min >= -1e-10;
  return out;
}

LPResult lp_solve(const LPSpec& spec) {
  LPSolver solver(spec.variables, spec.objective);
  for (const LPRow& r : spec.rows) solver.add_row(r.coef, r.bound);
  return solver.solve();
}

}  // namespace ahlfors
