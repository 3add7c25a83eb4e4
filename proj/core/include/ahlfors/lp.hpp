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

// Dense linear programming: maximize c.y subject to A y <= b with y free.
//
// The solver runs a revised simplex on the dual standard form
// min b.l, A^T l = c, l >= 0, whose basis has one column per primal
// variable. Rows may be appended between solves; the previous basis stays
// dual feasible, which gives a warm start for cutting-plane loops.

#ifndef AHLFORS_LP_HPP_
#define AHLFORS_LP_HPP_

#include <vector>

#include <Eigen/Dense>

namespace ahlfors {

struct LPRow {
  std::vector<double> coef;
  double bound = 0.0;
};

struct LPSpec {
  int variables = 0;
  std::vector<double> objective;
  std::vector<LPRow> rows;
};

struct LPResult {
  double optimum = 0.0;
  std::vector<double> primal;
  std::vector<double> dual;  // one multiplier per row, nonnegative
  int iterations = 0;
  // Dual certificate: max(A y - b), |A^T l - c|_inf, |b.l - c.y|.
  double primal_violation = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  bool certified = false;
};

class LPSolver {
 public:
  LPSolver(int variables, std::vector<double> objective);

  void add_row(const std::vector<double>& coef, double bound);
  int rows() const { return static_cast<int>(bound_.size()); }
  int variables() const { return n_; }

  // Throws a status error when the problem is unbounded or infeasible.
  LPResult solve();

 private:
  double cost(int j) const;
  Eigen::VectorXd column(int j) const;
  void refactor();
  bool run(bool phase_one);
  LPResult report();

  int n_;
  Eigen::VectorXd c_;
  std::vector<Eigen::VectorXd> cols_;  // normalized rows of A
  std::vector<double> bound_;          // normalized bounds
  std::vector<double> scale_;          // row norms
  std::vector<double> art_sign_;
  std::vector<int> basis_;             // ids: j >= 0 row, -1 - i artificial i
  std::vector<char> in_basis_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  bool started_ = false;
  bool phase_one_done_ = false;
  int iterations_ = 0;
};

LPResult lp_solve(const LPSpec& spec);

}  // namespace ahlfors

#endif  // AHLFORS_LP_HPP_
