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

#include "honeyx/victim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "honeyx/lp.hpp"

namespace honeyx {

std::string_view to_string(ResponseMode mode) {
  return mode == ResponseMode::kOptimistic ? "optimistic" : "pessimistic";
}

ResponseMode parse_response_mode(std::string_view text) {
  if (text == "optimistic") return ResponseMode::kOptimistic;
  if (text == "pessimistic") return ResponseMode::kPessimistic;
  throw InvalidArgument("unknown response mode: " + std::string(text));
}

bool is_rational_response(const MatrixGame& announced, const MixedStrategy& y,
                          double tol) {
  if (y.size() != announced.cols()) {
    throw DimensionMismatch("is_rational_response: strategy length");
  }
  const double value = solve_game(announced).value;
  const Vector gy = announced.payoffs().multiply(y.probs());
  return *std::min_element(gy.begin(), gy.end()) >= value - tol;
}

VictimResponse select_response(const MatrixGame& true_game,
                               const MatrixGame& announced,
                               const MixedStrategy& x, ResponseMode mode) {
  return select_response(true_game, announced, solve_game(announced), x, mode);
}

VictimResponse select_response(const MatrixGame& true_game,
                               const MatrixGame& announced,
                               const GameSolution& announced_solution,
                               const MixedStrategy& x, ResponseMode mode) {
  const std::size_t m = true_game.rows();
  const std::size_t n = true_game.cols();
  if (announced.rows() != m || announced.cols() != n || x.size() != m) {
    throw DimensionMismatch("select_response: shapes differ");
  }
  const double value = announced_solution.value;

  lp::Problem p;
  p.sense = mode == ResponseMode::kOptimistic ? lp::Sense::kMinimize
                                              : lp::Sense::kMaximize;
  p.cost = true_game.payoffs().multiply_transposed(x.probs());
  p.ineq_lhs = Matrix(m, n);
  p.ineq_rhs.assign(m, -value);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -announced(i, j);
  }
  p.eq_lhs = Matrix(1, n, 1.0);
  p.eq_rhs = {1.0};

  const lp::Solution s = lp::solve_lp(p);
  if (s.status != lp::Status::kOptimal) {
    throw SolverFailure("select_response: LP over security policies failed");
  }
  return {MixedStrategy::Normalized(s.primal, Side::kColumn), value, mode};
}

double robust_victim_value(const MatrixGame& announced, double budget) {
  if (!(budget >= 0.0)) throw InvalidArgument("budget must be >= 0");
  return solve_game(announced).value - budget;
}

}  // namespace honeyx
