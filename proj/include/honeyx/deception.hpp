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

#ifndef HONEYX_DECEPTION_HPP_
#define HONEYX_DECEPTION_HPP_

#include <optional>

#include "honeyx/game.hpp"

namespace honeyx {

inline constexpr double kAdmissibilityTol = 1e-9;

// Operator 1-norm: the largest absolute column sum, max_j sum_i |D_ij|.
// This is NOT the entrywise sum of absolute values. The stealth budget
// bounds this norm, which is what guarantees ||D y||_1 <= budget for every
// column strategy y.
double operator_one_norm(const Matrix& d);

// A perturbation of the announced payoffs together with its budget.
class DeceptionMatrix {
 public:
  DeceptionMatrix() = default;
  // Throws InvalidArgument if budget < 0 or entries are not finite, and
  // BudgetViolation if operator_one_norm(d) > budget + kAdmissibilityTol.
  DeceptionMatrix(Matrix d, double budget);

  static DeceptionMatrix Zero(std::size_t rows, std::size_t cols,
                              double budget = 0.0);
  // Every column equal to `column`; its operator 1-norm is ||column||_1.
  static DeceptionMatrix ColumnConstant(const Vector& column,
                                        std::size_t cols, double budget);

  const Matrix& matrix() const { return d_; }
  double budget() const { return budget_; }
  std::size_t rows() const { return d_.rows(); }
  std::size_t cols() const { return d_.cols(); }

 private:
  Matrix d_;
  double budget_ = 0.0;
};

struct DualNormMax {
  double value = 0.0;
  DeceptionMatrix witness;
};

// max over admissible D of x^T D y, which equals budget * max_i x_i. The
// witness puts the whole budget of every column on the first row attaining
// max_i x_i.
DualNormMax dual_norm_max(const MixedStrategy& x, const MixedStrategy& y,
                          double budget);

// The announced game G + D.
MatrixGame perturb(const MatrixGame& game, const DeceptionMatrix& dec);

// Proof that level v can be guaranteed to the victim: with D = [d d ... d],
// (G + D) y = G y + d >= v 1 and ||d||_1 <= budget.
struct SubrationalCertificate {
  double v = 0.0;
  MixedStrategy y;
  Vector d;

  DeceptionMatrix deception(std::size_t cols, double budget) const {
    return DeceptionMatrix::ColumnConstant(d, cols, budget);
  }
};

struct InducibleCheck {
  bool inducible = false;
  std::optional<SubrationalCertificate> witness;
};

// Feasibility of { y in simplex, ||d||_1 <= budget, G y + d >= v 1 }.
InducibleCheck check_inducible(const MatrixGame& game, double budget,
                               double v);

struct InducibleMax {
  double v_star = 0.0;
  SubrationalCertificate witness;
};

// Largest inducible level, computed as one LP that maximizes v over the
// same feasibility system.
InducibleMax max_inducible_value(const MatrixGame& game, double budget);

// Bisection bracket endpoints: min G - budget is always inducible and
// max G + budget bounds every inducible level.
double inducible_lower_bracket(const MatrixGame& game, double budget);
double inducible_upper_bracket(const MatrixGame& game, double budget);

}  // namespace honeyx

#endif  // HONEYX_DECEPTION_HPP_
