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

// Dense two-phase primal simplex for small linear programs.
//
// Problems have the form
//
//   minimize / maximize   cost^T z
//   subject to            ineq_lhs z <= ineq_rhs
//                         eq_lhs z    = eq_rhs
//                         lower <= z <= upper
//
// with infinite bounds allowed. The solver uses a bounded-variable tableau,
// Dantzig pricing, and switches to Bland's rule after a streak of degenerate
// pivots. The final basis is refactorized once to clean up primal and dual
// values, so results do not carry accumulated tableau drift. Output is a pure
// function of the input.

#ifndef HONEYX_LP_HPP_
#define HONEYX_LP_HPP_

#include <limits>
#include <string_view>

#include "honeyx/matrix.hpp"

namespace honeyx::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kDefaultOptTol = 1e-9;

enum class Sense { kMinimize, kMaximize };
enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(Status status);

struct Problem {
  Sense sense = Sense::kMinimize;
  Vector cost;
  Matrix ineq_lhs;  // R x N, may have zero rows
  Vector ineq_rhs;
  Matrix eq_lhs;  // E x N, may have zero rows
  Vector eq_rhs;
  // Empty vectors mean lower = 0 and upper = +inf for every variable.
  Vector lower;
  Vector upper;

  std::size_t num_vars() const { return cost.size(); }

  // Throws MalformedProblem on dimension mismatch, NaN, or lower > upper.
  void validate() const;
};

struct Solution {
  Status status = Status::kInfeasible;
  Vector primal;
  double objective = 0.0;
  // Nonnegative multipliers of the inequality rows: the objective moves by
  // -dual_ineq[r] (minimize) or +dual_ineq[r] (maximize) per unit increase
  // of ineq_rhs[r].
  Vector dual_ineq;
  // Sensitivity of the objective to eq_rhs.
  Vector dual_eq;
  // cost - ineq_lhs^T (sign-adjusted) duals; zero on variables strictly
  // between their bounds at an optimum.
  Vector reduced_costs;
  int iterations = 0;
};

Solution solve_lp(const Problem& problem, double feas_tol = kDefaultFeasTol,
                  double opt_tol = kDefaultOptTol);

// Lagrangian bound implied by the duals of `solution`: a lower bound on the
// optimum for minimization, an upper bound for maximization. Infinite when a
// reduced cost pushes toward an infinite bound.
double dual_bound(const Problem& problem, const Solution& solution);

// Largest violation of any row or bound by `z`.
double max_violation(const Problem& problem, std::span<const double> z);

}  // namespace honeyx::lp

#endif  // HONEYX_LP_HPP_
