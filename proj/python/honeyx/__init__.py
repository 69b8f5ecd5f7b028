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

"""Deception in zero-sum matrix games."""

from honeyx._core import (
    BudgetViolation,
    HoneyxError,
    check_inducible,
    evaluate_deception,
    max_inducible_value,
    operator_one_norm,
    sample_game,
    select_response,
    solve_exact,
    solve_feasible,
    solve_game,
)

__all__ = [
    "BudgetViolation",
    "HoneyxError",
    "check_inducible",
    "evaluate_deception",
    "max_inducible_value",
    "operator_one_norm",
    "sample_game",
    "select_response",
    "solve_exact",
    "solve_feasible",
    "solve_game",
]
