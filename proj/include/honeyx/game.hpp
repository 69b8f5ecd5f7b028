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

#ifndef HONEYX_GAME_HPP_
#define HONEYX_GAME_HPP_

#include <cstddef>
#include <string_view>

#include "honeyx/matrix.hpp"

namespace honeyx {

// Zero-sum matrix game. Entry (i, j) is the payment from the row player
// (minimizer) to the column player (maximizer).
class MatrixGame {
 public:
  MatrixGame() = default;
  // Throws InvalidArgument on an empty or non-finite matrix.
  explicit MatrixGame(Matrix payoffs);

  std::size_t rows() const { return payoffs_.rows(); }
  std::size_t cols() const { return payoffs_.cols(); }
  const Matrix& payoffs() const { return payoffs_; }
  double operator()(std::size_t i, std::size_t j) const {
    return payoffs_(i, j);
  }

  bool operator==(const MatrixGame& other) const = default;

 private:
  Matrix payoffs_;
};

enum class Side { kRow, kColumn };

std::string_view to_string(Side side);

inline constexpr double kSimplexTol = 1e-9;

// Probability vector for one side of a game.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws InvalidArgument unless probs >= 0 and sum to 1 within kSimplexTol.
  MixedStrategy(Vector probs, Side side);

  // Clamps small negatives produced by a solver and renormalizes.
  static MixedStrategy Normalized(Vector probs, Side side);
  static MixedStrategy Vertex(std::size_t size, std::size_t index, Side side);
  static MixedStrategy Uniform(std::size_t size, Side side);

  const Vector& probs() const { return probs_; }
  Side side() const { return side_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }

  bool operator==(const MixedStrategy& other) const = default;

 private:
  Vector probs_;
  Side side_ = Side::kRow;
};

struct GameSolution {
  double value = 0.0;
  MixedStrategy row_policy;
  MixedStrategy col_policy;
};

// x^T G y.
double outcome(const MatrixGame& game, const MixedStrategy& x,
               const MixedStrategy& y);

// Value and a pair of security policies. The column policy is the primal of
//   max v  s.t.  G y >= v 1,  y in the simplex,
// and the row policy is read from the duals of its m inequality rows.
GameSolution solve_game(const MatrixGame& game);

}  // namespace honeyx

#endif  // HONEYX_GAME_HPP_
