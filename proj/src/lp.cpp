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

#include "honeyx/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace honeyx::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-14;
constexpr double kRatioTieTol = 1e-12;
constexpr int kDegenerateStreakForBland = 50;

// How an original variable maps onto nonnegative internal columns.
enum class VarKind : std::uint8_t { kShift, kMirror, kFree };

struct VarMap {
  VarKind kind;
  std::size_t column;  // first internal column
  double offset;       // lower (shift) or upper (mirror) bound
};

// Dense LU with partial pivoting; used once per solve to refactorize the
// final basis.
class DenseLu {
 public:
  explicit DenseLu(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          p = i;
        }
      }
      if (best < 1e-13) {
        singular_ = true;
        return;
      }
      if (p != k) {
        std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(),
                         lu_.row(p).begin());
        std::swap(perm_[k], perm_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        if (f == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  bool singular() const { return singular_; }

  // Solves A x = b.
  Vector solve(const Vector& b) const {
    const std::size_t n = lu_.rows();
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

  // Solves A^T x = b.
  Vector solve_transposed(const Vector& b) const {
    const std::size_t n = lu_.rows();
    Vector w = b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) w[i] -= lu_(j, i) * w[j];
      w[i] /= lu_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) w[i] -= lu_(j, i) * w[j];
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
    return x;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

enum class PhaseResult { kOptimal, kUnbounded };

class Simplex {
 public:
  Simplex(const Problem& p, double feas_tol, double opt_tol)
      : problem_(p), feas_tol_(feas_tol), opt_tol_(opt_tol) {
    build();
  }

  Solution run();

 private:
  void build();
  void compute_reduced_costs(const Vector& costs);
  PhaseResult iterate(int& iterations);
  void pivot(std::size_t row, std::size_t col);
  double phase_one_infeasibility() const;
  void refine();
  Solution extract(Status status, int iterations) const;

  const Problem& problem_;
  double feas_tol_;
  double opt_tol_;

  std::size_t n_orig_ = 0;
  std::size_t n_struct_ = 0;  // internal structural columns
  std::size_t n_ineq_ = 0;
  std::size_t n_eq_ = 0;
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t first_slack_ = 0;
  std::size_t first_art_ = 0;

  std::vector<VarMap> var_map_;
  Matrix a_;        // internal constraint matrix (row-scaled), kept for refine
  Vector rhs_;      // internal right-hand side (row-scaled)
  Vector row_sign_; // +1 or -1 applied to each original row
  Vector cost_;     // internal phase-2 costs (minimization)
  double cost_offset_ = 0.0;
  Vector ub_;       // internal upper bounds, lower bounds are all zero

  Matrix tab_;
  Vector beta_;     // current values of basic variables
  Vector d_;        // reduced costs
  std::vector<std::size_t> basis_;
  std::vector<char> is_basic_;
  std::vector<char> at_upper_;
  std::vector<std::size_t> nz_;  // scratch
  std::vector<std::size_t> identity_col_;  // slack or artificial per row
  bool phase_two_ = false;
};

void Simplex::build() {
  n_orig_ = problem_.num_vars();
  n_ineq_ = problem_.ineq_rhs.size();
  n_eq_ = problem_.eq_rhs.size();
  n_rows_ = n_ineq_ + n_eq_;

  const bool default_bounds = problem_.lower.empty();
  var_map_.reserve(n_orig_);
  for (std::size_t j = 0; j < n_orig_; ++j) {
    const double lo = default_bounds ? 0.0 : problem_.lower[j];
    const double hi = default_bounds ? kInf : problem_.upper[j];
    if (std::isfinite(lo)) {
      var_map_.push_back({VarKind::kShift, n_struct_, lo});
      n_struct_ += 1;
    } else if (std::isfinite(hi)) {
      var_map_.push_back({VarKind::kMirror, n_struct_, hi});
      n_struct_ += 1;
    } else {
      var_map_.push_back({VarKind::kFree, n_struct_, 0.0});
      n_struct_ += 2;
    }
  }

  // Rows with a nonnegative right-hand side can start with their slack in the
  // basis; every other row gets an artificial.
  Vector raw_rhs(n_rows_);
  Matrix raw(n_rows_, n_struct_);
  auto load_row = [&](std::size_t r, std::span<const double> coeffs,
                      double rhs) {
    double b = rhs;
    for (std::size_t j = 0; j < n_orig_; ++j) {
      const double c = coeffs[j];
      if (c == 0.0) continue;
      const VarMap& vm = var_map_[j];
      switch (vm.kind) {
        case VarKind::kShift:
          raw(r, vm.column) = c;
          b -= c * vm.offset;
          break;
        case VarKind::kMirror:
          raw(r, vm.column) = -c;
          b -= c * vm.offset;
          break;
        case VarKind::kFree:
          raw(r, vm.column) = c;
          raw(r, vm.column + 1) = -c;
          break;
      }
    }
    raw_rhs[r] = b;
  };
  for (std::size_t r = 0; r < n_ineq_; ++r) {
    load_row(r, problem_.ineq_lhs.row(r), problem_.ineq_rhs[r]);
  }
  for (std::size_t r = 0; r < n_eq_; ++r) {
    load_row(n_ineq_ + r, problem_.eq_lhs.row(r), problem_.eq_rhs[r]);
  }

  row_sign_.assign(n_rows_, 1.0);
  std::vector<std::size_t> art_rows;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (raw_rhs[r] < 0.0) row_sign_[r] = -1.0;
    if (r >= n_ineq_ || row_sign_[r] < 0.0) art_rows.push_back(r);
  }

  first_slack_ = n_struct_;
  first_art_ = first_slack_ + n_ineq_;
  n_cols_ = first_art_ + art_rows.size();

  a_ = Matrix(n_rows_, n_cols_);
  rhs_.assign(n_rows_, 0.0);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    const double s = row_sign_[r];
    for (std::size_t j = 0; j < n_struct_; ++j) a_(r, j) = s * raw(r, j);
    if (r < n_ineq_) a_(r, first_slack_ + r) = s;
    rhs_[r] = s * raw_rhs[r];
  }
  identity_col_.assign(n_rows_, 0);
  for (std::size_t r = 0; r < n_ineq_; ++r) identity_col_[r] = first_slack_ + r;
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    a_(art_rows[k], first_art_ + k) = 1.0;
    identity_col_[art_rows[k]] = first_art_ + k;
  }

  ub_.assign(n_cols_, kInf);
  for (std::size_t j = 0; j < n_orig_; ++j) {
    const VarMap& vm = var_map_[j];
    if (vm.kind == VarKind::kShift && !default_bounds) {
      ub_[vm.column] = problem_.upper[j] - problem_.lower[j];
    }
  }

  const double s = problem_.sense == Sense::kMinimize ? 1.0 : -1.0;
  cost_.assign(n_cols_, 0.0);
  cost_offset_ = 0.0;
  for (std::size_t j = 0; j < n_orig_; ++j) {
    const double c = s * problem_.cost[j];
    const VarMap& vm = var_map_[j];
    switch (vm.kind) {
      case VarKind::kShift:
        cost_[vm.column] = c;
        cost_offset_ += c * vm.offset;
        break;
      case VarKind::kMirror:
        cost_[vm.column] = -c;
        cost_offset_ += c * vm.offset;
        break;
      case VarKind::kFree:
        cost_[vm.column] = c;
        cost_[vm.column + 1] = -c;
        break;
    }
  }

  tab_ = a_;
  beta_ = rhs_;
  basis_.assign(n_rows_, 0);
  is_basic_.assign(n_cols_, 0);
  at_upper_.assign(n_cols_, 0);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (r < n_ineq_ && row_sign_[r] > 0.0) basis_[r] = first_slack_ + r;
  }
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    basis_[art_rows[k]] = first_art_ + k;
  }
  for (std::size_t b : basis_) is_basic_[b] = 1;
}

void Simplex::compute_reduced_costs(const Vector& costs) {
  d_ = costs;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    const double cb = costs[basis_[r]];
    if (cb == 0.0) continue;
    const auto row = tab_.row(r);
    for (std::size_t j = 0; j < n_cols_; ++j) d_[j] -= cb * row[j];
  }
  for (std::size_t b : basis_) d_[b] = 0.0;
}

void Simplex::pivot(std::size_t p, std::size_t q) {
  auto prow = tab_.row(p);
  const double inv = 1.0 / prow[q];
  nz_.clear();
  for (std::size_t j = 0; j < n_cols_; ++j) {
    if (prow[j] == 0.0) continue;
    prow[j] *= inv;
    if (std::abs(prow[j]) < kDropTol) {
      prow[j] = 0.0;
      continue;
    }
    nz_.push_back(j);
  }
  prow[q] = 1.0;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (r == p) continue;
    auto row = tab_.row(r);
    const double f = row[q];
    if (f == 0.0) continue;
    for (std::size_t j : nz_) {
      double v = row[j] - f * prow[j];
      row[j] = std::abs(v) < kDropTol ? 0.0 : v;
    }
    row[q] = 0.0;
  }
  const double fd = d_[q];
  if (fd != 0.0) {
    for (std::size_t j : nz_) d_[j] -= fd * prow[j];
    d_[q] = 0.0;
  }
  is_basic_[basis_[p]] = 0;
  is_basic_[q] = 1;
  basis_[p] = q;
}

PhaseResult Simplex::iterate(int& iterations) {
  const int max_iterations =
      static_cast<int>(50 * (n_rows_ + n_cols_) + 1000);
  int degenerate_streak = 0;
  bool bland = false;
  for (;;) {
    if (++iterations > max_iterations) {
      throw SolverFailure("simplex: iteration limit reached");
    }
    // Pricing.
    std::optional<std::size_t> entering;
    double best = 0.0;
    for (std::size_t j = 0; j < n_cols_; ++j) {
      if (is_basic_[j] || (phase_two_ && j >= first_art_)) continue;
      const double dj = d_[j];
      double gain = 0.0;
      if (!at_upper_[j] && dj < -opt_tol_ && ub_[j] > 0.0) {
        gain = -dj;
      } else if (at_upper_[j] && dj > opt_tol_) {
        gain = dj;
      } else {
        continue;
      }
      if (bland) {
        entering = j;
        break;
      }
      if (gain > best) {
        best = gain;
        entering = j;
      }
    }
    if (!entering) return PhaseResult::kOptimal;
    const std::size_t q = *entering;
    const double dir = at_upper_[q] ? -1.0 : 1.0;

    // Ratio test.
    double theta = ub_[q];
    std::optional<std::size_t> leave;
    double leave_alpha = 0.0;
    for (std::size_t r = 0; r < n_rows_; ++r) {
      const double alpha = tab_(r, q) * dir;
      double limit;
      if (alpha > kPivotTol) {
        limit = std::max(beta_[r], 0.0) / alpha;
      } else if (alpha < -kPivotTol && std::isfinite(ub_[basis_[r]])) {
        limit = std::max(ub_[basis_[r]] - beta_[r], 0.0) / -alpha;
      } else {
        continue;
      }
      bool take = false;
      if (limit < theta - kRatioTieTol) {
        take = true;
      } else if (leave && limit <= theta + kRatioTieTol) {
        take = bland ? basis_[r] < basis_[*leave]
                     : std::abs(alpha) > std::abs(leave_alpha);
      }
      if (take) {
        theta = std::min(theta, limit);
        leave = r;
        leave_alpha = alpha;
      }
    }
    if (!std::isfinite(theta)) return PhaseResult::kUnbounded;

    if (theta <= 1e-12) {
      if (++degenerate_streak >= kDegenerateStreakForBland) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }

    for (std::size_t r = 0; r < n_rows_; ++r) {
      const double t = tab_(r, q);
      if (t != 0.0) beta_[r] -= t * dir * theta;
    }
    const double entering_value = at_upper_[q] ? ub_[q] - theta : theta;
    if (!leave) {
      at_upper_[q] = at_upper_[q] ? 0 : 1;
      continue;
    }
    const std::size_t p = *leave;
    const std::size_t leaving = basis_[p];
    at_upper_[leaving] = leave_alpha < 0.0 ? 1 : 0;
    at_upper_[q] = 0;
    pivot(p, q);
    beta_[p] = entering_value;
  }
}

double Simplex::phase_one_infeasibility() const {
  double total = 0.0;
  for (std::size_t r = 0; r < n_rows_; ++r) {
    if (basis_[r] >= first_art_) total += std::max(beta_[r], 0.0);
  }
  return total;
}

void Simplex::refine() {
  if (n_rows_ == 0) return;
  Matrix b(n_rows_, n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    for (std::size_t k = 0; k < n_rows_; ++k) b(r, k) = a_(r, basis_[k]);
  }
  DenseLu lu(std::move(b));
  if (lu.singular()) return;
  Vector rhs = rhs_;
  for (std::size_t j = 0; j < n_cols_; ++j) {
    if (is_basic_[j] || !at_upper_[j]) continue;
    for (std::size_t r = 0; r < n_rows_; ++r) rhs[r] -= a_(r, j) * ub_[j];
  }
  beta_ = lu.solve(rhs);
}

Solution Simplex::extract(Status status, int iterations) const {
  Solution sol;
  sol.status = status;
  sol.iterations = iterations;
  if (status != Status::kOptimal) return sol;

  Vector t(n_cols_, 0.0);
  for (std::size_t j = 0; j < n_cols_; ++j) {
    if (!is_basic_[j] && at_upper_[j]) t[j] = ub_[j];
  }
  for (std::size_t r = 0; r < n_rows_; ++r) {
    // Clamp basic values into their box; refinement noise is far below the
    // feasibility tolerance.
    t[basis_[r]] = std::clamp(beta_[r], 0.0, ub_[basis_[r]]);
  }

  sol.primal.resize(n_orig_);
  for (std::size_t j = 0; j < n_orig_; ++j) {
    const VarMap& vm = var_map_[j];
    switch (vm.kind) {
      case VarKind::kShift:
        sol.primal[j] = vm.offset + t[vm.column];
        break;
      case VarKind::kMirror:
        sol.primal[j] = vm.offset - t[vm.column];
        break;
      case VarKind::kFree:
        sol.primal[j] = t[vm.column] - t[vm.column + 1];
        break;
    }
  }
  sol.objective = dot(problem_.cost, sol.primal);

  // Simplex multipliers y solve B^T y = c_B for the internal rows.
  Vector y(n_rows_, 0.0);
  if (n_rows_ > 0) {
    Matrix b(n_rows_, n_rows_);
    Vector cb(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
      for (std::size_t k = 0; k < n_rows_; ++k) b(r, k) = a_(r, basis_[k]);
    }
    for (std::size_t k = 0; k < n_rows_; ++k) cb[k] = cost_[basis_[k]];
    DenseLu lu(std::move(b));
    if (!lu.singular()) {
      y = lu.solve_transposed(cb);
    } else {
      // Read the multipliers off the tableau: each row owns a column equal
      // to a signed unit vector, whose reduced cost is -y_r times that sign.
      for (std::size_t r = 0; r < n_rows_; ++r) {
        const std::size_t j = identity_col_[r];
        y[r] = (cost_[j] - d_[j]) / a_(r, j);
      }
    }
  }

  const double s = problem_.sense == Sense::kMinimize ? 1.0 : -1.0;
  sol.dual_ineq.resize(n_ineq_);
  for (std::size_t r = 0; r < n_ineq_; ++r) {
    sol.dual_ineq[r] = -row_sign_[r] * y[r];
  }
  sol.dual_eq.resize(n_eq_);
  for (std::size_t r = 0; r < n_eq_; ++r) {
    sol.dual_eq[r] = s * row_sign_[n_ineq_ + r] * y[n_ineq_ + r];
  }

  // reduced = cost + s * (A^T lambda - E^T mu_hat), in original sense.
  sol.reduced_costs = problem_.cost;
  for (std::size_t r = 0; r < n_ineq_; ++r) {
    const double l = sol.dual_ineq[r];
    if (l == 0.0) continue;
    const auto row = problem_.ineq_lhs.row(r);
    for (std::size_t j = 0; j < n_orig_; ++j) {
      sol.reduced_costs[j] += s * l * row[j];
    }
  }
  for (std::size_t r = 0; r < n_eq_; ++r) {
    const double mu_hat = s * sol.dual_eq[r];
    if (mu_hat == 0.0) continue;
    const auto row = problem_.eq_lhs.row(r);
    for (std::size_t j = 0; j < n_orig_; ++j) {
      sol.reduced_costs[j] -= s * mu_hat * row[j];
    }
  }
  return sol;
}

Solution Simplex::run() {
  int iterations = 0;
  if (first_art_ < n_cols_) {
    Vector phase_one(n_cols_, 0.0);
    for (std::size_t j = first_art_; j < n_cols_; ++j) phase_one[j] = 1.0;
    compute_reduced_costs(phase_one);
    iterate(iterations);
    double scale = 1.0;
    for (double b : rhs_) scale = std::max(scale, std::abs(b));
    if (phase_one_infeasibility() > feas_tol_ * scale) {
      return extract(Status::kInfeasible, iterations);
    }
    for (std::size_t j = first_art_; j < n_cols_; ++j) ub_[j] = 0.0;
  }
  phase_two_ = true;
  compute_reduced_costs(cost_);
  if (iterate(iterations) == PhaseResult::kUnbounded) {
    return extract(Status::kUnbounded, iterations);
  }
  refine();
  return extract(Status::kOptimal, iterations);
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

void Problem::validate() const {
  const std::size_t n = num_vars();
  auto finite_or_throw = [](std::span<const double> v, const char* what) {
    for (double x : v) {
      if (std::isnan(x)) {
        throw MalformedProblem(std::string("LP: NaN in ") + what);
      }
    }
  };
  finite_or_throw(cost, "cost");
  if (ineq_lhs.rows() != ineq_rhs.size() ||
      (ineq_lhs.rows() > 0 && ineq_lhs.cols() != n)) {
    throw MalformedProblem("LP: inequality block has inconsistent shape");
  }
  if (eq_lhs.rows() != eq_rhs.size() ||
      (eq_lhs.rows() > 0 && eq_lhs.cols() != n)) {
    throw MalformedProblem("LP: equality block has inconsistent shape");
  }
  finite_or_throw(ineq_lhs.data(), "inequality matrix");
  finite_or_throw(ineq_rhs, "inequality rhs");
  finite_or_throw(eq_lhs.data(), "equality matrix");
  finite_or_throw(eq_rhs, "equality rhs");
  if (lower.empty() != upper.empty()) {
    throw MalformedProblem("LP: lower and upper bounds must both be given");
  }
  if (!lower.empty()) {
    if (lower.size() != n || upper.size() != n) {
      throw MalformedProblem("LP: bound vectors have wrong length");
    }
    finite_or_throw(lower, "lower bounds");
    finite_or_throw(upper, "upper bounds");
    for (std::size_t j = 0; j < n; ++j) {
      if (lower[j] > upper[j]) {
        throw MalformedProblem("LP: lower bound exceeds upper bound");
      }
      if (lower[j] == kInf || upper[j] == -kInf) {
        throw MalformedProblem("LP: bound excludes every real value");
      }
    }
  }
  for (double b : ineq_rhs) {
    if (std::isinf(b)) throw MalformedProblem("LP: infinite rhs");
  }
  for (double b : eq_rhs) {
    if (std::isinf(b)) throw MalformedProblem("LP: infinite rhs");
  }
}

Solution solve_lp(const Problem& problem, double feas_tol, double opt_tol) {
  problem.validate();
  Simplex simplex(problem, feas_tol, opt_tol);
  return simplex.run();
}

double dual_bound(const Problem& problem, const Solution& solution) {
  const double s = problem.sense == Sense::kMinimize ? 1.0 : -1.0;
  // Work in the minimization form: bound = -lambda^T b + mu_hat^T f +
  // sum_j min over the box of s * reduced_j * z_j.
  double g = 0.0;
  for (std::size_t r = 0; r < problem.ineq_rhs.size(); ++r) {
    g -= solution.dual_ineq[r] * problem.ineq_rhs[r];
  }
  for (std::size_t r = 0; r < problem.eq_rhs.size(); ++r) {
    g += s * solution.dual_eq[r] * problem.eq_rhs[r];
  }
  const bool default_bounds = problem.lower.empty();
  for (std::size_t j = 0; j < problem.num_vars(); ++j) {
    const double rc = s * solution.reduced_costs[j];
    const double lo = default_bounds ? 0.0 : problem.lower[j];
    const double hi = default_bounds ? kInf : problem.upper[j];
    // Round-off sized reduced costs against an infinite bound are noise.
    constexpr double kNoise = 1e-12;
    if (rc > 0.0) {
      if (std::isfinite(lo)) {
        g += rc * lo;
      } else if (rc > kNoise) {
        return s * -kInf;
      }
    } else if (rc < 0.0) {
      if (std::isfinite(hi)) {
        g += rc * hi;
      } else if (rc < -kNoise) {
        return s * -kInf;
      }
    }
  }
  return s * g;
}

double max_violation(const Problem& problem, std::span<const double> z) {
  double worst = 0.0;
  for (std::size_t r = 0; r < problem.ineq_rhs.size(); ++r) {
    worst = std::max(worst, dot(problem.ineq_lhs.row(r), z) -
                                problem.ineq_rhs[r]);
  }
  for (std::size_t r = 0; r < problem.eq_rhs.size(); ++r) {
    worst = std::max(worst, std::abs(dot(problem.eq_lhs.row(r), z) -
                                     problem.eq_rhs[r]));
  }
  if (!problem.lower.empty()) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      worst = std::max(worst, problem.lower[j] - z[j]);
      worst = std::max(worst, z[j] - problem.upper[j]);
    }
  } else {
    for (double v : z) worst = std::max(worst, -v);
  }
  return worst;
}

}  // namespace honeyx::lp
