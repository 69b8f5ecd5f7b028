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

// Exact optimal deception against an optimistic rational victim.
//
// The bilevel problem "minimize x^T G y over admissible D and over y among
// the security policies of G + D" is solved in its single-level form
//
//   min  x^T G y
//   s.t. (G + D) y      >= v_p 1
//        (G + D)^T omega <= v_p 1
//        y, omega on their simplices, ||D||_1 <= budget,
//
// where the second block is the dual of the victim's LP and forces v_p to be
// the value of G + D. For each row vertex x = e_i the products D_kj y_j and
// D_kj omega_k are lifted to auxiliary variables bounded by McCormick
// envelopes, and a best-first spatial branch-and-bound closes the gap. One
// node pool is shared by all rows, so the reported gap is global.

#ifndef HONEYX_EXACT_HPP_
#define HONEYX_EXACT_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "honeyx/deception.hpp"
#include "honeyx/game.hpp"

namespace honeyx {

// One affine inequality  a_coef * a + b_coef * b + w_coef * w <= rhs.
struct EnvelopeInequality {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double w_coef = 0.0;
  double rhs = 0.0;

  double violation(double a, double b, double w) const {
    return a_coef * a + b_coef * b + w_coef * w - rhs;
  }
};

// The four McCormick inequalities relaxing w = a * b over a in [a_lo, a_hi]
// and b in [b_lo, b_hi]: two under-estimators followed by two
// over-estimators.
struct McCormickEnvelope {
  std::array<EnvelopeInequality, 4> rows;

  bool contains(double a, double b, double w, double tol = 1e-12) const;
};

// Throws InvalidInterval if a_lo > a_hi or b_lo > b_hi.
McCormickEnvelope mccormick_envelope(double a_lo, double a_hi, double b_lo,
                                     double b_hi);

enum class ExactStatus { kProven, kGapLimit, kNodeLimit, kTimeLimit };

std::string_view to_string(ExactStatus status);

// Emitted after every node relaxation; used by tests to watch the search.
struct NodeEvent {
  std::size_t row = 0;
  int depth = 0;
  double parent_bound = 0.0;  // -inf at a root
  double bound = 0.0;         // +inf when the relaxation is infeasible
  double incumbent = 0.0;     // after the node's rounding heuristic
};

struct ExactOptions {
  double gap_tol = 1e-6;
  std::int64_t node_limit = 1'000'000;
  double time_limit_s = 600.0;
  // Seed the incumbent with the binary-search deception, evaluated against
  // a fully rational optimistic victim, before branching.
  bool seed_with_feasible = true;
  // Further deceptions to evaluate as incumbents before branching, e.g. the
  // solution for a smaller budget. Each must be admissible for the budget.
  std::vector<Matrix> warm_starts;
  std::function<void(const NodeEvent&)> on_node;
};

struct ExactSolution {
  MixedStrategy x;  // a vertex e_i
  DeceptionMatrix deception;
  MixedStrategy y;
  MixedStrategy omega;
  double v_p = 0.0;
  double objective = 0.0;  // e_i^T G y
  double best_bound = 0.0;
  double gap = 0.0;  // objective - best_bound, never negative
  std::int64_t nodes_explored = 0;
  ExactStatus status = ExactStatus::kProven;
};

ExactSolution solve_exact(const MatrixGame& game, double budget,
                          const ExactOptions& options = {});

}  // namespace honeyx

#endif  // HONEYX_EXACT_HPP_
