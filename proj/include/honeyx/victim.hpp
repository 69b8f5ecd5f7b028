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

#ifndef HONEYX_VICTIM_HPP_
#define HONEYX_VICTIM_HPP_

#include <string_view>

#include "honeyx/game.hpp"

namespace honeyx {

// Which rational response the deceiver assumes among the victim's security
// policies: the best one for the deceiver (strong Stackelberg, the default)
// or the worst one.
enum class ResponseMode { kOptimistic, kPessimistic };

std::string_view to_string(ResponseMode mode);
ResponseMode parse_response_mode(std::string_view text);

struct VictimResponse {
  MixedStrategy y;
  double perceived_value = 0.0;  // v_{G'}
  ResponseMode mode = ResponseMode::kOptimistic;
};

// True iff min_i (G' y)_i >= v_{G'} - tol.
bool is_rational_response(const MatrixGame& announced, const MixedStrategy& y,
                          double tol);

// Among the security policies of the announced game, the one minimizing
// (optimistic) or maximizing (pessimistic) the true outcome x^T G y.
VictimResponse select_response(const MatrixGame& true_game,
                               const MatrixGame& announced,
                               const MixedStrategy& x, ResponseMode mode);

// Same as above with the announced game's solution already at hand.
VictimResponse select_response(const MatrixGame& true_game,
                               const MatrixGame& announced,
                               const GameSolution& announced_solution,
                               const MixedStrategy& x, ResponseMode mode);

// Optimal value of the deception-robust victim problem: v_{G'} - budget.
// The robust victim's policy set coincides with the security policies of G'.
double robust_victim_value(const MatrixGame& announced, double budget);

}  // namespace honeyx

#endif  // HONEYX_VICTIM_HPP_
