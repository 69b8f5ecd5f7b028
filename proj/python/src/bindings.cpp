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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "honeyx/bench.hpp"
#include "honeyx/binsearch.hpp"
#include "honeyx/deception.hpp"
#include "honeyx/exact.hpp"
#include "honeyx/game.hpp"
#include "honeyx/victim.hpp"

namespace py = pybind11;

namespace honeyx {
namespace {

using Rows = std::vector<std::vector<double>>;

Matrix ToMatrix(const Rows& rows) { return Matrix::FromRows(rows); }

Rows FromMatrix(const Matrix& m) {
  Rows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].assign(m.row(i).begin(), m.row(i).end());
  }
  return rows;
}

py::dict SolveGame(const Rows& payoffs) {
  const GameSolution s = solve_game(MatrixGame(ToMatrix(payoffs)));
  py::dict out;
  out["value"] = s.value;
  out["x"] = s.row_policy.probs();
  out["y"] = s.col_policy.probs();
  return out;
}

py::dict SolveExact(const Rows& payoffs, double budget, double gap_tol,
                    std::int64_t node_limit, double time_limit) {
  ExactOptions opts;
  opts.gap_tol = gap_tol;
  opts.node_limit = node_limit;
  opts.time_limit_s = time_limit;
  ExactSolution s;
  {
    py::gil_scoped_release release;
    s = solve_exact(MatrixGame(ToMatrix(payoffs)), budget, opts);
  }
  py::dict out;
  out["x"] = s.x.probs();
  out["D"] = FromMatrix(s.deception.matrix());
  out["y"] = s.y.probs();
  out["omega"] = s.omega.probs();
  out["v_p"] = s.v_p;
  out["objective"] = s.objective;
  out["best_bound"] = s.best_bound;
  out["gap"] = s.gap;
  out["nodes"] = s.nodes_explored;
  out["status"] = std::string(to_string(s.status));
  return out;
}

py::dict SolveFeasible(const Rows& payoffs, double budget, double delta,
                       bool robust) {
  const MatrixGame game(ToMatrix(payoffs));
  FeasibleSolution s = solve_feasible(game, budget, delta);
  if (robust) robustify(game, s);
  py::dict out;
  out["x"] = s.x_bar.probs();
  out["D"] = FromMatrix(s.d_bar.matrix());
  out["y"] = s.y_bar.probs();
  out["v_hat"] = s.v_hat;
  out["v_best"] = s.v_best;
  out["delta"] = s.delta;
  out["robust_bound"] = s.robust_bound ? py::cast(*s.robust_bound) : py::none();
  out["checks"] = s.inducibility_checks;
  return out;
}

py::tuple Evaluate(const Rows& payoffs, const std::vector<double>& x,
                   const Rows& d, double budget, const std::string& mode) {
  const MatrixGame game(ToMatrix(payoffs));
  const bench::Evaluation e = bench::evaluate_deception(
      game, MixedStrategy(x, Side::kRow), DeceptionMatrix(ToMatrix(d), budget),
      parse_response_mode(mode));
  return py::make_tuple(e.outcome, e.improvement);
}

std::vector<double> SelectResponse(const Rows& payoffs, const Rows& announced,
                                   const std::vector<double>& x,
                                   const std::string& mode) {
  return select_response(MatrixGame(ToMatrix(payoffs)),
                         MatrixGame(ToMatrix(announced)),
                         MixedStrategy(x, Side::kRow),
                         parse_response_mode(mode))
      .y.probs();
}

}  // namespace
}  // namespace honeyx

PYBIND11_MODULE(_core, m) {
  using namespace honeyx;
  m.doc() = "Deception in zero-sum matrix games";

  auto base = py::register_exception<Error>(m, "HoneyxError", PyExc_ValueError);
  py::register_exception<BudgetViolation>(m, "BudgetViolation", base.ptr());

  m.def("solve_game", &SolveGame, py::arg("payoffs"),
        "Value and security policies; the row player minimizes.");
  m.def("solve_exact", &SolveExact, py::arg("payoffs"), py::arg("budget"),
        py::arg("gap_tol") = 1e-6, py::arg("node_limit") = 1'000'000,
        py::arg("time_limit") = 600.0,
        "Globally optimal deception by spatial branch-and-bound.");
  m.def("solve_feasible", &SolveFeasible, py::arg("payoffs"), py::arg("budget"),
        py::arg("delta") = kDefaultSearchTolerance,
        py::arg("robustify") = false,
        "Feasible deception by bisection on the inducible level.");
  m.def("check_inducible",
        [](const Rows& g, double budget, double v) {
          return check_inducible(MatrixGame(ToMatrix(g)), budget, v).inducible;
        },
        py::arg("payoffs"), py::arg("budget"), py::arg("v"));
  m.def("max_inducible_value",
        [](const Rows& g, double budget) {
          return max_inducible_value(MatrixGame(ToMatrix(g)), budget).v_star;
        },
        py::arg("payoffs"), py::arg("budget"));
  m.def("evaluate_deception", &Evaluate, py::arg("payoffs"), py::arg("x"),
        py::arg("D"), py::arg("budget"), py::arg("mode") = "optimistic",
        "Returns (outcome, improvement) against a rational victim.");
  m.def("select_response", &SelectResponse, py::arg("payoffs"),
        py::arg("announced"), py::arg("x"), py::arg("mode") = "optimistic");
  m.def("operator_one_norm",
        [](const Rows& d) { return operator_one_norm(ToMatrix(d)); },
        py::arg("D"));
  m.def("sample_game",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed) {
          return FromMatrix(bench::sample_game(rows, cols, seed).payoffs());
        },
        py::arg("m"), py::arg("n"), py::arg("seed"));
}
