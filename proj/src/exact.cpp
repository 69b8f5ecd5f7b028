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

#include "honeyx/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "honeyx/binsearch.hpp"
#include "honeyx/lp.hpp"
#include "honeyx/victim.hpp"

namespace honeyx {

bool McCormickEnvelope::contains(double a, double b, double w,
                                 double tol) const {
  return std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
    return r.violation(a, b, w) <= tol;
  });
}

McCormickEnvelope mccormick_envelope(double a_lo, double a_hi, double b_lo,
                                     double b_hi) {
  if (!(a_lo <= a_hi) || !(b_lo <= b_hi)) {
    throw InvalidInterval("mccormick_envelope: empty interval");
  }
  McCormickEnvelope env;
  env.rows[0] = {b_lo, a_lo, -1.0, a_lo * b_lo};
  env.rows[1] = {b_hi, a_hi, -1.0, a_hi * b_hi};
  env.rows[2] = {-b_lo, -a_hi, 1.0, -a_hi * b_lo};
  env.rows[3] = {-b_hi, -a_lo, 1.0, -a_lo * b_hi};
  return env;
}

std::string_view to_string(ExactStatus status) {
  switch (status) {
    case ExactStatus::kProven:
      return "proven";
    case ExactStatus::kGapLimit:
      return "gap_limit";
    case ExactStatus::kNodeLimit:
      return "node_limit";
    case ExactStatus::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Products closer than this to their lifted variable need no branching.
constexpr double kProductTol = 1e-9;
// Factor intervals narrower than this are not split further.
constexpr double kMinWidth = 1e-10;

struct Box {
  Vector d_lo, d_hi;  // m*n, row-major
  Vector y_lo, y_hi;  // n
  Vector w_lo, w_hi;  // m, bounds on omega
};

// Split point for a node: factor 0 is D, 1 is y, 2 is omega.
struct Branch {
  int factor = 0;
  std::size_t index = 0;
  double split = 0.0;
};

struct Node {
  std::size_t row = 0;
  int depth = 0;
  double bound = -kInf;
  std::uint64_t seq = 0;
  Box box;
  Branch branch;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.seq > b.seq;
  }
};

std::pair<double, double> product_range(double alo, double ahi, double blo,
                                        double bhi) {
  const double c[4] = {alo * blo, alo * bhi, ahi * blo, ahi * bhi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

struct Candidate {
  double objective = kInf;
  std::size_t row = 0;
  Matrix d;
  MixedStrategy y;
  MixedStrategy omega;
  double v_p = 0.0;
};

class Solver {
 public:
  Solver(const MatrixGame& game, double budget, const ExactOptions& options)
      : game_(game),
        budget_(budget),
        options_(options),
        m_(game.rows()),
        n_(game.cols()),
        mn_(m_ * n_) {
    const double honest = solve_game(game).value;
    v_lo_ = honest - budget;
    v_hi_ = honest + budget;
    off_omega_ = n_;
    off_v_ = n_ + m_;
    off_dp_ = off_v_ + 1;
    off_dm_ = off_dp_ + mn_;
    off_w_ = off_dm_ + mn_;
    off_z_ = off_w_ + mn_;
    off_u_ = off_z_ + mn_;
    off_abs_z_ = off_u_ + mn_;
    num_vars_ = off_abs_z_ + mn_;
  }

  ExactSolution Run() {
    start_ = std::chrono::steady_clock::now();
    Heuristic(Matrix(m_, n_));
    if (options_.seed_with_feasible && budget_ > 0.0) {
      Heuristic(solve_feasible(game_, budget_).d_bar.matrix());
    }
    for (const Matrix& d : options_.warm_starts) Heuristic(d);

    ExactStatus status = ExactStatus::kProven;
    bool stopped = false;
    for (std::size_t i = 0; i < m_ && !stopped; ++i) {
      Node root;
      root.row = i;
      root.box = RootBox();
      if (!Admit(std::move(root), -kInf)) stopped = true;
      status = stop_status_;
    }
    while (!stopped && !open_.empty()) {
      if (open_.top().bound >= best_.objective - options_.gap_tol) break;
      if (LimitReached()) {
        stopped = true;
        status = stop_status_;
        break;
      }
      Node node = open_.top();
      open_.pop();
      auto [left, right] = Split(node);
      if (!Admit(std::move(left), node.bound) ||
          !Admit(std::move(right), node.bound)) {
        stopped = true;
        status = stop_status_;
      }
    }

    double bound = std::min(closed_bound_, best_.objective);
    if (!open_.empty()) bound = std::min(bound, open_.top().bound);
    ExactSolution out;
    out.x = MixedStrategy::Vertex(m_, best_.row, Side::kRow);
    out.deception = DeceptionMatrix(best_.d, budget_);
    out.y = best_.y;
    out.omega = best_.omega;
    out.v_p = best_.v_p;
    out.objective = best_.objective;
    out.best_bound = std::min(bound, best_.objective);
    out.gap = std::max(0.0, best_.objective - out.best_bound);
    out.nodes_explored = nodes_;
    if (!stopped) {
      status = out.gap <= options_.gap_tol ? ExactStatus::kProven
                                           : ExactStatus::kGapLimit;
    }
    out.status = status;
    return out;
  }

 private:
  bool LimitReached() {
    if (nodes_ >= options_.node_limit) {
      stop_status_ = ExactStatus::kNodeLimit;
      return true;
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
    if (elapsed >= options_.time_limit_s) {
      stop_status_ = ExactStatus::kTimeLimit;
      return true;
    }
    return false;
  }

  Box RootBox() const {
    Box b;
    b.d_lo.assign(mn_, -budget_);
    b.d_hi.assign(mn_, budget_);
    b.y_lo.assign(n_, 0.0);
    b.y_hi.assign(n_, 1.0);
    b.w_lo.assign(m_, 0.0);
    b.w_hi.assign(m_, 1.0);
    return b;
  }

  // Solves the node relaxation, runs the heuristic and either queues the node
  // or closes it. Returns false if a limit stopped the search first.
  bool Admit(Node node, double parent_bound) {
    if (LimitReached()) {
      // The node was never solved; its parent bound still holds for it.
      node.bound = parent_bound;
      open_.push(std::move(node));
      return false;
    }
    ++nodes_;
    node.seq = seq_++;
    const lp::Problem p = Relaxation(node.row, node.box);
    const lp::Solution s = lp::solve_lp(p);
    double raw = kInf;
    if (s.status == lp::Status::kOptimal) {
      raw = s.objective;
    } else if (s.status != lp::Status::kInfeasible) {
      throw SolverFailure("solve_exact: node relaxation unbounded");
    }
    if (s.status == lp::Status::kOptimal) {
      Heuristic(RelaxedDeception(s.primal));
    }
    if (options_.on_node) {
      options_.on_node({node.row, node.depth, parent_bound, raw,
                        best_.objective});
    }
    if (raw == kInf) return true;
    node.bound = std::max(raw, parent_bound);
    if (node.bound >= best_.objective - options_.gap_tol) {
      closed_bound_ = std::min(closed_bound_, node.bound);
      return true;
    }
    if (!ChooseBranch(s.primal, node.box, node.branch)) {
      // The relaxation already satisfies every product: its bound is tight.
      closed_bound_ = std::min(closed_bound_, node.bound);
      return true;
    }
    open_.push(std::move(node));
    return true;
  }

  // Picks the most violated lifted product and the factor to split.
  bool ChooseBranch(const Vector& z, const Box& box, Branch& out) const {
    double worst = kProductTol;
    bool found = false;
    for (std::size_t k = 0; k < m_; ++k) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (int kind = 0; kind < 2; ++kind) {
          const std::size_t kj = k * n_ + j;
          const double d = z[off_dp_ + kj] - z[off_dm_ + kj];
          const double f = kind == 0 ? z[j] : z[off_omega_ + k];
          const double lifted = z[(kind == 0 ? off_w_ : off_z_) + kj];
          const double viol = std::abs(lifted - d * f);
          if (viol <= worst) continue;
          const double dw = box.d_hi[kj] - box.d_lo[kj];
          const double fw = kind == 0 ? box.y_hi[j] - box.y_lo[j]
                                      : box.w_hi[k] - box.w_lo[k];
          if (std::max(dw, fw) <= kMinWidth) continue;
          worst = viol;
          found = true;
          if (dw >= fw) {
            out = {0, kj, 0.5 * (box.d_lo[kj] + box.d_hi[kj])};
          } else if (kind == 0) {
            out = {1, j, 0.5 * (box.y_lo[j] + box.y_hi[j])};
          } else {
            out = {2, k, 0.5 * (box.w_lo[k] + box.w_hi[k])};
          }
        }
      }
    }
    return found;
  }

  std::pair<Node, Node> Split(const Node& node) const {
    const double budget = budget_;
    const Branch& b = node.branch;
    Node left = node;
    Node right = node;
    left.depth = right.depth = node.depth + 1;
    Vector* lo = nullptr;
    Vector* hi = nullptr;
    auto pick = [&](Box& box) {
      switch (b.factor) {
        case 0:
          lo = &box.d_lo, hi = &box.d_hi;
          break;
        case 1:
          lo = &box.y_lo, hi = &box.y_hi;
          break;
        default:
          lo = &box.w_lo, hi = &box.w_hi;
          break;
      }
    };
    pick(left.box);
    (*hi)[b.index] = b.split;
    pick(right.box);
    (*lo)[b.index] = b.split;
    Tighten(left.box, budget);
    Tighten(right.box, budget);
    return {std::move(left), std::move(right)};
  }

  // Shrinks a box using the simplex rows and the column budgets.
  static void Tighten(Box& box, double budget) {
    auto simplex = [](Vector& lo, Vector& hi) {
      double lo_sum = 0.0;
      double hi_sum = 0.0;
      for (std::size_t j = 0; j < lo.size(); ++j) {
        lo_sum += lo[j];
        hi_sum += hi[j];
      }
      for (std::size_t j = 0; j < lo.size(); ++j) {
        hi[j] = std::max(lo[j], std::min(hi[j], 1.0 - (lo_sum - lo[j])));
        lo[j] = std::min(hi[j], std::max(lo[j], 1.0 - (hi_sum - hi[j])));
      }
    };
    simplex(box.y_lo, box.y_hi);
    simplex(box.w_lo, box.w_hi);
    const std::size_t n = box.y_lo.size();
    const std::size_t m = box.w_lo.size();
    for (std::size_t j = 0; j < n; ++j) {
      double least = 0.0;  // smallest possible column sum of |D|
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t kj = k * n + j;
        least += std::max({0.0, box.d_lo[kj], -box.d_hi[kj]});
      }
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t kj = k * n + j;
        const double own = std::max({0.0, box.d_lo[kj], -box.d_hi[kj]});
        const double room = std::max(0.0, budget - (least - own));
        box.d_lo[kj] = std::min(box.d_hi[kj], std::max(box.d_lo[kj], -room));
        box.d_hi[kj] = std::max(box.d_lo[kj], std::min(box.d_hi[kj], room));
      }
    }
  }

  lp::Problem Relaxation(std::size_t row, const Box& box) const {
    lp::Problem p;
    p.cost.assign(num_vars_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) p.cost[j] = game_(row, j);

    p.lower.assign(num_vars_, 0.0);
    p.upper.assign(num_vars_, kInf);
    for (std::size_t j = 0; j < n_; ++j) {
      p.lower[j] = box.y_lo[j];
      p.upper[j] = box.y_hi[j];
    }
    for (std::size_t k = 0; k < m_; ++k) {
      p.lower[off_omega_ + k] = box.w_lo[k];
      p.upper[off_omega_ + k] = box.w_hi[k];
    }
    p.lower[off_v_] = v_lo_;
    p.upper[off_v_] = v_hi_;
    for (std::size_t kj = 0; kj < mn_; ++kj) {
      const double lo = box.d_lo[kj];
      const double hi = box.d_hi[kj];
      if (lo >= 0.0) {
        p.lower[off_dp_ + kj] = lo;
        p.upper[off_dp_ + kj] = hi;
        p.upper[off_dm_ + kj] = 0.0;
      } else if (hi <= 0.0) {
        p.upper[off_dp_ + kj] = 0.0;
        p.lower[off_dm_ + kj] = -hi;
        p.upper[off_dm_ + kj] = -lo;
      } else {
        p.upper[off_dp_ + kj] = hi;
        p.upper[off_dm_ + kj] = -lo;
      }
      const std::size_t k = kj / n_;
      const std::size_t j = kj % n_;
      auto [wl, wh] = product_range(lo, hi, box.y_lo[j], box.y_hi[j]);
      p.lower[off_w_ + kj] = wl;
      p.upper[off_w_ + kj] = wh;
      auto [zl, zh] = product_range(lo, hi, box.w_lo[k], box.w_hi[k]);
      p.lower[off_z_ + kj] = zl;
      p.upper[off_z_ + kj] = zh;
    }

    const std::size_t rows = m_ + 4 * n_ + 12 * mn_;
    p.ineq_lhs = Matrix(rows, num_vars_);
    p.ineq_rhs.assign(rows, 0.0);
    std::size_t r = 0;
    // (G + D) y >= v_p.
    for (std::size_t k = 0; k < m_; ++k, ++r) {
      for (std::size_t j = 0; j < n_; ++j) {
        p.ineq_lhs(r, j) = -game_(k, j);
        p.ineq_lhs(r, off_w_ + k * n_ + j) = -1.0;
      }
      p.ineq_lhs(r, off_v_) = 1.0;
    }
    // (G + D)^T omega <= v_p.
    for (std::size_t j = 0; j < n_; ++j, ++r) {
      for (std::size_t k = 0; k < m_; ++k) {
        p.ineq_lhs(r, off_omega_ + k) = game_(k, j);
        p.ineq_lhs(r, off_z_ + k * n_ + j) = 1.0;
      }
      p.ineq_lhs(r, off_v_) = -1.0;
    }
    // Column sums of |D|.
    for (std::size_t j = 0; j < n_; ++j, ++r) {
      for (std::size_t k = 0; k < m_; ++k) {
        p.ineq_lhs(r, off_dp_ + k * n_ + j) = 1.0;
        p.ineq_lhs(r, off_dm_ + k * n_ + j) = 1.0;
      }
      p.ineq_rhs[r] = budget_;
    }
    // Budget rows multiplied through by y_j and omega_k:
    //   sum_k |D_kj y_j| <= budget * y_j,
    //   sum_k |D_kj omega_k| <= sum_k |D_kj| * omega_hi_k.
    for (std::size_t kj = 0; kj < mn_; ++kj) {
      for (int sign : {1, -1}) {
        p.ineq_lhs(r, off_w_ + kj) = sign;
        p.ineq_lhs(r, off_u_ + kj) = -1.0;
        ++r;
        p.ineq_lhs(r, off_z_ + kj) = sign;
        p.ineq_lhs(r, off_abs_z_ + kj) = -1.0;
        ++r;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < m_; ++k) {
        p.ineq_lhs(r, off_u_ + k * n_ + j) = 1.0;
      }
      p.ineq_lhs(r, j) = -budget_;
      ++r;
      for (std::size_t k = 0; k < m_; ++k) {
        const std::size_t kj = k * n_ + j;
        p.ineq_lhs(r, off_abs_z_ + kj) = 1.0;
        p.ineq_lhs(r, off_dp_ + kj) = -box.w_hi[k];
        p.ineq_lhs(r, off_dm_ + kj) = -box.w_hi[k];
      }
      ++r;
    }
    auto envelope = [&](std::size_t kj, std::size_t b_var, double b_lo,
                        double b_hi, std::size_t w_var) {
      const McCormickEnvelope env =
          mccormick_envelope(box.d_lo[kj], box.d_hi[kj], b_lo, b_hi);
      for (const auto& e : env.rows) {
        p.ineq_lhs(r, off_dp_ + kj) = e.a_coef;
        p.ineq_lhs(r, off_dm_ + kj) = -e.a_coef;
        p.ineq_lhs(r, b_var) = e.b_coef;
        p.ineq_lhs(r, w_var) = e.w_coef;
        p.ineq_rhs[r] = e.rhs;
        ++r;
      }
    };
    for (std::size_t k = 0; k < m_; ++k) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t kj = k * n_ + j;
        envelope(kj, j, box.y_lo[j], box.y_hi[j], off_w_ + kj);
        envelope(kj, off_omega_ + k, box.w_lo[k], box.w_hi[k], off_z_ + kj);
      }
    }

    p.eq_lhs = Matrix(2, num_vars_);
    for (std::size_t j = 0; j < n_; ++j) p.eq_lhs(0, j) = 1.0;
    for (std::size_t k = 0; k < m_; ++k) p.eq_lhs(1, off_omega_ + k) = 1.0;
    p.eq_rhs = {1.0, 1.0};
    return p;
  }

  // Deception read off a relaxation, scaled back into the budget if the LP
  // tolerance let a column sum drift over it.
  Matrix RelaxedDeception(const Vector& z) const {
    Matrix d(m_, n_);
    for (std::size_t kj = 0; kj < mn_; ++kj) {
      double v = z[off_dp_ + kj] - z[off_dm_ + kj];
      if (std::abs(v) < 1e-12) v = 0.0;
      d(kj / n_, kj % n_) = v;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      double norm = 0.0;
      for (std::size_t k = 0; k < m_; ++k) norm += std::abs(d(k, j));
      if (norm > budget_ && norm > 0.0) {
        for (std::size_t k = 0; k < m_; ++k) d(k, j) *= budget_ / norm;
      }
    }
    return d;
  }

  // Evaluates d against an optimistic rational victim for every row and
  // keeps the best as incumbent.
  void Heuristic(const Matrix& d) {
    if (!seen_.emplace(d.data().begin(), d.data().end()).second) return;
    const MatrixGame announced(game_.payoffs() + d);
    const GameSolution sol = solve_game(announced);
    for (std::size_t i = 0; i < m_; ++i) {
      const MixedStrategy x = MixedStrategy::Vertex(m_, i, Side::kRow);
      const VictimResponse r = select_response(
          game_, announced, sol, x, ResponseMode::kOptimistic);
      const double value = dot(game_.payoffs().row(i), r.y.probs());
      if (value < best_.objective) {
        best_.objective = value;
        best_.row = i;
        best_.d = d;
        best_.y = r.y;
        best_.omega = sol.row_policy;
        best_.v_p = sol.value;
      }
    }
  }

  const MatrixGame& game_;
  double budget_;
  const ExactOptions& options_;
  std::size_t m_, n_, mn_;
  double v_lo_ = 0.0, v_hi_ = 0.0;
  std::size_t off_omega_ = 0, off_v_ = 0, off_dp_ = 0, off_dm_ = 0,
              off_w_ = 0, off_z_ = 0, off_u_ = 0, off_abs_z_ = 0,
              num_vars_ = 0;

  std::chrono::steady_clock::time_point start_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open_;
  std::set<Vector> seen_;
  Candidate best_;
  double closed_bound_ = kInf;
  std::int64_t nodes_ = 0;
  std::uint64_t seq_ = 0;
  ExactStatus stop_status_ = ExactStatus::kProven;
};

}  // namespace

ExactSolution solve_exact(const MatrixGame& game, double budget,
                          const ExactOptions& options) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw InvalidArgument("budget must be finite and >= 0");
  }
  if (!(options.gap_tol >= 0.0)) throw InvalidArgument("gap_tol must be >= 0");
  if (options.node_limit < 1) throw InvalidArgument("node_limit must be >= 1");
  if (!(options.time_limit_s > 0.0)) {
    throw InvalidArgument("time_limit_s must be > 0");
  }
  for (const Matrix& d : options.warm_starts) {
    if (d.rows() != game.rows() || d.cols() != game.cols()) {
      throw DimensionMismatch("solve_exact: warm start shape");
    }
    DeceptionMatrix(d, budget);  // throws BudgetViolation
  }
  return Solver(game, budget, options).Run();
}

}  // namespace honeyx
