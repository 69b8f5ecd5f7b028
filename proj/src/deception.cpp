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

#include "honeyx/deception.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "honeyx/lp.hpp"

namespace honeyx {
namespace {

void require_budget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw InvalidArgument("deception budget must be finite and >= 0");
  }
}

// Variables [y (n), d_plus (m), d_minus (m), v (optional)]. Rows:
//   -G y - d_plus + d_minus + v <= 0   (variable v), or
//   -G y - d_plus + d_minus <= -v      (fixed v),
//   sum(d_plus + d_minus) <= budget,   sum(y) = 1.
lp::Problem inducible_system(const MatrixGame& game, double budget,
                             std::optional<double> fixed_v) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  const bool has_v = !fixed_v.has_value();
  const std::size_t nv = n + 2 * m + (has_v ? 1 : 0);

  lp::Problem p;
  p.sense = lp::Sense::kMaximize;
  p.cost.assign(nv, 0.0);
  p.ineq_lhs = Matrix(m + 1, nv);
  p.ineq_rhs.assign(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -game(i, j);
    p.ineq_lhs(i, n + i) = -1.0;
    p.ineq_lhs(i, n + m + i) = 1.0;
    if (has_v) {
      p.ineq_lhs(i, nv - 1) = 1.0;
    } else {
      p.ineq_rhs[i] = -*fixed_v;
    }
  }
  for (std::size_t k = 0; k < 2 * m; ++k) p.ineq_lhs(m, n + k) = 1.0;
  p.ineq_rhs[m] = budget;
  p.eq_lhs = Matrix(1, nv);
  for (std::size_t j = 0; j < n; ++j) p.eq_lhs(0, j) = 1.0;
  p.eq_rhs = {1.0};
  p.lower.assign(nv, 0.0);
  p.upper.assign(nv, lp::kInf);
  if (has_v) {
    p.cost[nv - 1] = 1.0;
    p.lower[nv - 1] = inducible_lower_bracket(game, budget);
    p.upper[nv - 1] = inducible_upper_bracket(game, budget);
  }
  return p;
}

SubrationalCertificate certificate_from(const MatrixGame& game, double budget,
                                        double v, const Vector& z) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  SubrationalCertificate cert;
  cert.v = v;
  cert.y = MixedStrategy::Normalized(
      Vector(z.begin(), z.begin() + static_cast<long>(n)), Side::kColumn);
  cert.d.resize(m);
  double norm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    cert.d[i] = z[n + i] - z[n + m + i];
    norm += std::abs(cert.d[i]);
  }
  if (norm > budget && norm > 0.0) {
    for (double& di : cert.d) di *= budget / norm;
  }
  return cert;
}

}  // namespace

double operator_one_norm(const Matrix& d) {
  double best = 0.0;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i) s += std::abs(d(i, j));
    best = std::max(best, s);
  }
  return best;
}

DeceptionMatrix::DeceptionMatrix(Matrix d, double budget)
    : d_(std::move(d)), budget_(budget) {
  require_budget(budget_);
  if (!d_.all_finite()) {
    throw InvalidArgument("DeceptionMatrix: entries must be finite");
  }
  const double norm = operator_one_norm(d_);
  if (norm > budget_ + kAdmissibilityTol) {
    throw BudgetViolation("deception operator 1-norm " + std::to_string(norm) +
                          " exceeds budget " + std::to_string(budget_));
  }
}

DeceptionMatrix DeceptionMatrix::Zero(std::size_t rows, std::size_t cols,
                                      double budget) {
  return DeceptionMatrix(Matrix(rows, cols), budget);
}

DeceptionMatrix DeceptionMatrix::ColumnConstant(const Vector& column,
                                                std::size_t cols,
                                                double budget) {
  Matrix d(column.size(), cols);
  for (std::size_t i = 0; i < column.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) d(i, j) = column[i];
  }
  return DeceptionMatrix(std::move(d), budget);
}

DualNormMax dual_norm_max(const MixedStrategy& x, const MixedStrategy& y,
                          double budget) {
  require_budget(budget);
  const auto it = std::max_element(x.probs().begin(), x.probs().end());
  const std::size_t top = static_cast<std::size_t>(it - x.probs().begin());
  Matrix w(x.size(), y.size());
  for (std::size_t j = 0; j < y.size(); ++j) w(top, j) = budget;
  return {budget * *it, DeceptionMatrix(std::move(w), budget)};
}

MatrixGame perturb(const MatrixGame& game, const DeceptionMatrix& dec) {
  if (dec.rows() != game.rows() || dec.cols() != game.cols()) {
    throw DimensionMismatch("perturb: deception shape does not match game");
  }
  return MatrixGame(game.payoffs() + dec.matrix());
}

InducibleCheck check_inducible(const MatrixGame& game, double budget,
                               double v) {
  require_budget(budget);
  if (!std::isfinite(v)) throw InvalidArgument("check_inducible: v not finite");
  const lp::Problem p = inducible_system(game, budget, v);
  const lp::Solution s = lp::solve_lp(p);
  if (s.status == lp::Status::kInfeasible) return {false, std::nullopt};
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure("check_inducible: unexpected LP status");
  }
  return {true, certificate_from(game, budget, v, s.primal)};
}

InducibleMax max_inducible_value(const MatrixGame& game, double budget) {
  require_budget(budget);
  const lp::Problem p = inducible_system(game, budget, std::nullopt);
  const lp::Solution s = lp::solve_lp(p);
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure("max_inducible_value: LP not optimal");
  }
  const double v = s.primal.back();
  return {v, certificate_from(game, budget, v, s.primal)};
}

double inducible_lower_bracket(const MatrixGame& game, double budget) {
  return game.payoffs().min_entry() - budget;
}

double inducible_upper_bracket(const MatrixGame& game, double budget) {
  return game.payoffs().max_entry() + budget;
}

}  // namespace honeyx
