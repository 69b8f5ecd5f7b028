# Copyright 2026 The Honey-X Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest
from scipy.optimize import linprog

import honeyx

PENNIES = [[1.0, -1.0], [-1.0, 1.0]]


def lp_value(g):
    """Min-max value of g via scipy, row player minimizing."""
    g = np.asarray(g, dtype=float)
    m, n = g.shape
    c = np.zeros(m + 1)
    c[-1] = 1.0
    a_ub = np.hstack([g.T, -np.ones((n, 1))])
    a_eq = np.hstack([np.ones((1, m)), np.zeros((1, 1))])
    bounds = [(0, None)] * m + [(None, None)]
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(n), A_eq=a_eq, b_eq=[1.0],
                  bounds=bounds, method="highs")
    return res.fun


def test_solve_game_matches_scipy():
    for seed in range(5):
        g = honeyx.sample_game(4, 3, seed)
        sol = honeyx.solve_game(g)
        assert sol["value"] == pytest.approx(lp_value(g), abs=1e-8)
        assert sum(sol["x"]) == pytest.approx(1.0)
        assert sum(sol["y"]) == pytest.approx(1.0)


def test_accepts_numpy_arrays():
    sol = honeyx.solve_game(np.array(PENNIES))
    assert sol["value"] == pytest.approx(0.0, abs=1e-12)


def test_feasible_deception_respects_budget():
    g = honeyx.sample_game(3, 3, 7)
    out = honeyx.solve_feasible(g, 0.5, delta=1e-3, robustify=True)
    assert honeyx.operator_one_norm(out["D"]) <= 0.5 + 1e-9
    assert out["robust_bound"] is not None
    outcome, gain = honeyx.evaluate_deception(g, out["x"], out["D"], 0.5)
    assert gain == pytest.approx(lp_value(g) - outcome)


def test_exact_pennies():
    out = honeyx.solve_exact(PENNIES, 0.4, node_limit=500)
    assert out["objective"] == pytest.approx(-0.2, abs=1e-6)
    assert out["best_bound"] <= out["objective"] + 1e-9
    assert out["status"] in {"proven", "gap_limit", "node_limit", "time_limit"}


def test_inducibility():
    g = honeyx.sample_game(3, 3, 1)
    v = honeyx.max_inducible_value(g, 1.0)
    assert honeyx.check_inducible(g, 1.0, v - 1e-6)
    assert not honeyx.check_inducible(g, 1.0, v + 1e-3)


def test_select_response_is_distribution():
    y = honeyx.select_response(PENNIES, PENNIES, [0.5, 0.5], "pessimistic")
    assert sum(y) == pytest.approx(1.0)


def test_errors():
    with pytest.raises(honeyx.BudgetViolation):
        honeyx.evaluate_deception(PENNIES, [0.5, 0.5], [[2.0, 0.0], [0.0, 0.0]], 1.0)
    with pytest.raises(ValueError):
        honeyx.solve_feasible(PENNIES, -1.0)
    with pytest.raises(honeyx.HoneyxError):
        honeyx.solve_game([[1.0, 2.0], [3.0]])
