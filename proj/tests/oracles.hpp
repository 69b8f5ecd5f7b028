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

// Independent oracles used only by tests. None of these call the solvers
// they are used to check: the 2x2 routines are closed-form, the row LP is a
// separate formulation, and the brute-force deception search evaluates the
// victim analytically.

#ifndef HONEYX_TESTS_ORACLES_HPP_
#define HONEYX_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "honeyx/lp.hpp"
#include "honeyx/matrix.hpp"

namespace honeyx::oracle {

// Value of a 2x2 zero-sum game (row minimizes) by saddle check and the
// indifference equations.
inline double TwoByTwoValue(const Matrix& g) {
  const double a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const double minimax = std::min(std::max(a, b), std::max(c, d));
  const double maximin = std::max(std::min(a, c), std::min(b, d));
  if (std::abs(minimax - maximin) < 1e-15) return minimax;
  return (a * d - b * c) / (a + d - b - c);
}

// max over y = (t, 1 - t), t on a grid of the given step, of min_i (G y)_i.
inline double GridColumnValue(const Matrix& g, double step) {
  double best = -std::numeric_limits<double>::infinity();
  const int count = static_cast<int>(std::lround(1.0 / step));
  for (int k = 0; k <= count; ++k) {
    const double t = k * step;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      worst = std::min(worst, g(i, 0) * t + g(i, 1) * (1.0 - t));
    }
    best = std::max(best, worst);
  }
  return best;
}

// Row player's LP: min u s.t. G^T x <= u 1, x in the simplex. Returns u.
inline double RowLpValue(const Matrix& g) {
  const std::size_t m = g.rows(), n = g.cols();
  lp::Problem p;
  p.cost.assign(m + 1, 0.0);
  p.cost[m] = 1.0;
  p.ineq_lhs = Matrix(n, m + 1);
  p.ineq_rhs.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) p.ineq_lhs(j, i) = g(i, j);
    p.ineq_lhs(j, m) = -1.0;
  }
  p.eq_lhs = Matrix(1, m + 1, 1.0);
  p.eq_lhs(0, m) = 0.0;
  p.eq_rhs = {1.0};
  p.lower.assign(m + 1, 0.0);
  p.upper.assign(m + 1, lp::kInf);
  p.lower[m] = -lp::kInf;
  return lp::solve_lp(p).primal[m];
}

// Largest level v with G y + s >= v 1, s >= 0, sum s <= budget, y in the
// simplex: the budget only ever needs to lift rows, so this matches the
// signed-perturbation formulation without splitting d.
inline double InducibleLpValue(const Matrix& g, double budget) {
  const std::size_t m = g.rows(), n = g.cols();
  const std::size_t nv = n + m + 1;
  lp::Problem p;
  p.cost.assign(nv, 0.0);
  p.cost[nv - 1] = -1.0;
  p.ineq_lhs = Matrix(m + 1, nv);
  p.ineq_rhs.assign(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.ineq_lhs(i, j) = -g(i, j);
    p.ineq_lhs(i, n + i) = -1.0;
    p.ineq_lhs(i, nv - 1) = 1.0;
  }
  for (std::size_t i = 0; i < m; ++i) p.ineq_lhs(m, n + i) = 1.0;
  p.ineq_rhs[m] = budget;
  p.eq_lhs = Matrix(1, nv);
  for (std::size_t j = 0; j < n; ++j) p.eq_lhs(0, j) = 1.0;
  p.eq_rhs = {1.0};
  p.lower.assign(nv, 0.0);
  p.upper.assign(nv, lp::kInf);
  p.lower[nv - 1] = -lp::kInf;
  return lp::solve_lp(p).primal[nv - 1];
}

// Calls f(x) for every x on the simplex grid {k / steps} in m dimensions.
template <typename F>
void ForEachGridPoint(std::size_t m, int steps, F&& f) {
  Vector x(m, 0.0);
  std::vector<int> k(m, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == m) {
      k[i] = left;
      for (std::size_t a = 0; a < m; ++a) x[a] = k[a] / double(steps);
      f(x);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      k[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, steps);
}

inline Matrix RandomMatrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                           double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix g(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = u(rng);
  }
  return g;
}

inline Vector RandomSimplexPoint(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  Vector p(n);
  double total = 0.0;
  for (double& v : p) total += (v = e(rng));
  for (double& v : p) v /= total;
  return p;
}

// Random D with operator 1-norm <= budget. Columns get a random sign
// pattern and weights; a fraction land exactly on the norm sphere.
inline Matrix RandomAdmissible(std::mt19937_64& rng, std::size_t m,
                               std::size_t n, double budget) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix d(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector w = RandomSimplexPoint(rng, m);
    const double radius = u(rng) < 0.3 ? budget : budget * u(rng);
    for (std::size_t i = 0; i < m; ++i) {
      d(i, j) = (u(rng) < 0.5 ? -1.0 : 1.0) * w[i] * radius;
    }
  }
  return d;
}

// Best deceiver outcome for a 2 x 2 game against an optimistic rational
// victim, found by enumerating each column of D over the grid points of the
// cross-polytope |a| + |b| <= budget. The victim's security set for G + D is
// computed in closed form over y = (t, 1 - t).
class BruteForceDeception2x2 {
 public:
  BruteForceDeception2x2(const Matrix& g, double budget, double step)
      : g_(g) {
    const int k = static_cast<int>(std::lround(budget / step));
    for (int a = -k; a <= k; ++a) {
      for (int b = -(k - std::abs(a)); b <= k - std::abs(a); ++b) {
        columns_.push_back({a * step, b * step});
      }
    }
  }

  double Solve() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c0 : columns_) {
      for (const auto& c1 : columns_) {
        const double gp[2][2] = {{g_(0, 0) + c0[0], g_(0, 1) + c1[0]},
                                 {g_(1, 0) + c0[1], g_(1, 1) + c1[1]}};
        best = std::min(best, OptimisticOutcome(gp));
      }
    }
    return best;
  }

  // min over rows i and over the security set of gp of (G y)_i.
  double OptimisticOutcome(const double gp[2][2]) const {
    auto f = [&](int k, double t) { return gp[k][0] * t + gp[k][1] * (1 - t); };
    // Candidate maximizers of the concave min f_k(t): endpoints and the
    // crossing point.
    std::vector<double> cand = {0.0, 1.0};
    const double slope0 = gp[0][0] - gp[0][1];
    const double slope1 = gp[1][0] - gp[1][1];
    if (std::abs(slope0 - slope1) > 1e-15) {
      const double t = (gp[1][1] - gp[0][1]) / (slope0 - slope1);
      if (t > 0.0 && t < 1.0) cand.push_back(t);
    }
    double value = -std::numeric_limits<double>::infinity();
    for (double t : cand) value = std::max(value, std::min(f(0, t), f(1, t)));
    // Security set {t : f_k(t) >= value - eps for k = 0, 1} is an interval.
    const double eps = 1e-12;
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 2; ++k) {
      const double s = k == 0 ? slope0 : slope1;
      const double base = gp[k][1];  // f_k(0)
      // base + s t >= value - eps
      if (std::abs(s) < 1e-15) continue;
      const double t0 = (value - eps - base) / s;
      if (s > 0) {
        lo = std::max(lo, t0);
      } else {
        hi = std::min(hi, t0);
      }
    }
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, 0.0, 1.0);
    if (lo > hi) lo = hi = std::clamp(0.5 * (lo + hi), 0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2; ++i) {
      for (double t : {lo, hi}) {
        best = std::min(best, g_(i, 0) * t + g_(i, 1) * (1 - t));
      }
    }
    return best;
  }

 private:
  Matrix g_;
  std::vector<std::array<double, 2>> columns_;
};

}  // namespace honeyx::oracle

#endif  // HONEYX_TESTS_ORACLES_HPP_
