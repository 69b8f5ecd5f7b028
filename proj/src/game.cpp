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

#include "honeyx/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "honeyx/lp.hpp"

namespace honeyx {

MatrixGame::MatrixGame(Matrix payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.rows() == 0 || payoffs_.cols() == 0) {
    throw InvalidArgument("MatrixGame: payoff matrix must be non-empty");
  }
  if (!payoffs_.all_finite()) {
    throw InvalidArgument("MatrixGame: payoffs must be finite");
  }
}

std::string_view to_string(Side side) {
  return side == Side::kRow ? "row" : "column";
}

MixedStrategy::MixedStrategy(Vector probs, Side side)
    : probs_(std::move(probs)), side_(side) {
  if (probs_.empty()) throw InvalidArgument("MixedStrategy: empty");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw InvalidArgument("MixedStrategy: negative or NaN probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    throw InvalidArgument("MixedStrategy: probabilities do not sum to 1");
  }
}

MixedStrategy MixedStrategy::Normalized(Vector probs, Side side) {
  double total = 0.0;
  for (double& p : probs) {
    p = std::max(p, 0.0);
    total += p;
  }
  if (!(total > 0.0)) {
    throw InvalidArgument("MixedStrategy: cannot normalize a zero vector");
  }
  for (double& p : probs) p /= total;
  return MixedStrategy(std::move(probs), side);
}

MixedStrategy MixedStrategy::Vertex(std::size_t size, std::size_t index,
                                    Side side) {
  if (index >= size) throw InvalidArgument("MixedStrategy: vertex index");
  Vector probs(size, 0.0);
  probs[index] = 1.0;
  return MixedStrategy(std::move(probs), side);
}

MixedStrategy MixedStrategy::Uniform(std::size_t size, Side side) {
  if (size == 0) throw InvalidArgument("MixedStrategy: empty");
  return MixedStrategy(Vector(size, 1.0 / static_cast<double>(size)), side);
}

double outcome(const MatrixGame& game, const MixedStrategy& x,
               const MixedStrategy& y) {
  if (x.side() != Side::kRow || y.side() != Side::kColumn) {
    throw DimensionMismatch("outcome: expected (row, column) strategies");
  }
  if (x.size() != game.rows() || y.size() != game.cols()) {
    throw DimensionMismatch("outcome: strategy length does not match game");
  }
  return dot(x.probs(), game.payoffs().multiply(y.probs()));
}

GameSolution solve_game(const MatrixGame& game) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  const Matrix& g = game.payoffs();

  // Variables: y_0..y_{n-1}, v.
  lp::Problem p;
  p.sense = lp::Sense::kMaximize;
  p.cost.assign(n + 1, 0.0);
  p.cost[n] = 1.0;
  p.ineq_lhs = Matrix(m, n + 1);
  p.ineq_rhs.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -g(i, j);
    p.ineq_lhs(i, n) = 1.0;
  }
  p.eq_lhs = Matrix(1, n + 1);
  for (std::size_t j = 0; j < n; ++j) p.eq_lhs(0, j) = 1.0;
  p.eq_rhs = {1.0};
  p.lower.assign(n + 1, 0.0);
  p.upper.assign(n + 1, lp::kInf);
  p.lower[n] = g.min_entry() - 1.0;
  p.upper[n] = g.max_entry() + 1.0;

  const lp::Solution s = lp::solve_lp(p);
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure(std::string("solve_game: LP ") +
                        std::string(lp::to_string(s.status)));
  }
  GameSolution out;
  out.value = s.primal[n];
  out.col_policy = MixedStrategy::Normalized(
      Vector(s.primal.begin(), s.primal.begin() + static_cast<long>(n)),
      Side::kColumn);
  out.row_policy = MixedStrategy::Normalized(s.dual_ineq, Side::kRow);
  return out;
}

}  // namespace honeyx
