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

// Feasible deception by bisection on the largest inducible guarantee level,
// plus a single-LP bound on the outcome against any rational victim.

#ifndef HONEYX_BINSEARCH_HPP_
#define HONEYX_BINSEARCH_HPP_

#include <optional>

#include "honeyx/deception.hpp"
#include "honeyx/game.hpp"

namespace honeyx {

inline constexpr double kDefaultSearchTolerance = 1e-3;

struct FeasibleSolution {
  double v_best = 0.0;  // e_i^T G y_bar for the chosen row i
  std::size_t row = 0;
  MixedStrategy x_bar;  // vertex e_row
  DeceptionMatrix d_bar;  // column-constant, every column equal to d_column
  Vector d_column;
  MixedStrategy y_bar;
  double v_hat = 0.0;  // highest level confirmed inducible
  double delta = 0.0;
  std::optional<double> robust_bound;
  int inducibility_checks = 0;
};

struct SubrationalLpResult {
  Vector d;
  MixedStrategy y;
  double objective = 0.0;
};

// min (G y)_row  s.t.  G y + d >= v 1, ||d||_1 <= budget, y in the simplex.
// Throws InfeasibleLevel if v is not inducible.
SubrationalLpResult subrational_lp(const MatrixGame& game, double budget,
                                   double v, std::size_t row);

// Number of bisection steps needed to shrink a bracket of `width` to at most
// `delta`: ceil(log2(width / delta)), or 0 when already narrow enough.
int bisection_steps(double width, double delta);

// Bisects [min G - budget, max G + budget] with check_inducible until the
// bracket is at most delta wide, then solves subrational_lp for every row at
// the last confirmed level and keeps the best (lowest row on ties).
FeasibleSolution solve_feasible(const MatrixGame& game, double budget,
                                double delta = kDefaultSearchTolerance);

// max x_bar^T G y  s.t.  (G + D_bar) y >= v_hat 1, y in the simplex. This
// bounds the deceiver's outcome against any rational response to the
// announced game. Stores the value in sol.robust_bound and returns it.
double robustify(const MatrixGame& game, FeasibleSolution& sol);

}  // namespace honeyx

#endif  // HONEYX_BINSEARCH_HPP_
