// Copyright 2026 The Honey-X Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "honeyx/binsearch.hpp"

#include <cmath>
#include <string>

#include "honeyx/lp.hpp"

namespace honeyx {

namespace {

// Row objectives closer than this count as tied; the lower row wins.
constexpr double kRowTieTol = 1e-12;

}  // namespace

SubrationalLpResult subrational_lp(const MatrixGame& game, double budget,
                                   double v, std::size_t row) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  if (row >= m) throw InvalidArgument("subrational_lp: row out of range");
  if (!(budget >= 0.0)) throw InvalidArgument("budget must be >= 0");

  // Variables [y (n), d_plus (m), d_minus (m)].
  const std::size_t nv = n + 2 * m;
  lp::Problem p;
  p.cost.assign(nv, 0.0);
  for (std::size_t j = 0; j < n; ++j) p.cost[j] = game(row, j);
  p.ineq_lhs = Matrix(m + 1, nv);
  p.ineq_rhs.assign(m + 1, -v);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -game(i, j);
    p.ineq_lhs(i, n + i) = -1.0;
    p.ineq_lhs(i, n + m + i) = 1.0;
  }
  for (std::size_t k = 0; k < 2 * m; ++k) p.ineq_lhs(m, n + k) = 1.0;
  p.ineq_rhs[m] = budget;
  p.eq_lhs = Matrix(1, nv);
  for (std::size_t j = 0; j < n; ++j) p.eq_lhs(0, j) = 1.0;
  p.eq_rhs = {1.0};

  const lp::Solution s = lp::solve_lp(p);
  if (s.status == lp::Status::kInfeasible) {
    throw InfeasibleLevel("subrational_lp: level " + std::to_string(v) +
                          " is not inducible");
  }
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure("subrational_lp: LP not optimal");
  }
  SubrationalLpResult out;
  out.y = MixedStrategy::Normalized(
      Vector(s.primal.begin(), s.primal.begin() + static_cast<long>(n)),
      Side::kColumn);
  out.d.resize(m);
  double norm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    out.d[i] = s.primal[n + i] - s.primal[n + m + i];
    norm += std::abs(out.d[i]);
  }
  if (norm > budget && norm > 0.0) {
    for (double& di : out.d) di *= budget / norm;
  }
  out.objective = dot(game.payoffs().row(row), out.y.probs());
  return out;
}

int bisection_steps(double width, double delta) {
  if (!(width > delta)) return 0;
  return static_cast<int>(std::ceil(std::log2(width / delta)));
}

FeasibleSolution solve_feasible(const MatrixGame& game, double budget,
                                double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("search tolerance must be > 0");
  if (!(budget >= 0.0)) throw InvalidArgument("budget must be >= 0");

  FeasibleSolution sol;
  sol.delta = delta;
  double lo = inducible_lower_bracket(game, budget);
  double hi = inducible_upper_bracket(game, budget);
  while (hi - lo > delta) {
    const double mid = 0.5 * (lo + hi);
    ++sol.inducibility_checks;
    if (check_inducible(game, budget, mid).inducible) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  sol.v_hat = lo;

  bool have = false;
  SubrationalLpResult best;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    SubrationalLpResult r = subrational_lp(game, budget, sol.v_hat, i);
    if (!have || r.objective < best.objective - kRowTieTol) {
      best = std::move(r);
      sol.row = i;
      have = true;
    }
  }
  sol.v_best = best.objective;
  sol.x_bar = MixedStrategy::Vertex(game.rows(), sol.row, Side::kRow);
  sol.d_column = best.d;
  sol.d_bar = DeceptionMatrix::ColumnConstant(best.d, game.cols(), budget);
  sol.y_bar = best.y;
  return sol;
}

double robustify(const MatrixGame& game, FeasibleSolution& sol) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  if (sol.x_bar.size() != m || sol.d_bar.rows() != m ||
      sol.d_bar.cols() != n) {
    throw DimensionMismatch("robustify: solution does not match game");
  }
  const MatrixGame announced = perturb(game, sol.d_bar);

  lp::Problem p;
  p.sense = lp::Sense::kMaximize;
  p.cost = game.payoffs().multiply_transposed(sol.x_bar.probs());
  p.ineq_lhs = Matrix(m, n);
  p.ineq_rhs.assign(m, -sol.v_hat);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -announced(i, j);
  }
  p.eq_lhs = Matrix(1, n, 1.0);
  p.eq_rhs = {1.0};
  const lp::Solution s = lp::solve_lp(p);
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure("robustify: LP not optimal");
  }
  sol.robust_bound = s.objective;
  return s.objective;
}

}  // namespace honeyx
