# Copyright 2026 The Restarts Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Stable sequences in repeated two-player games with restarts.

Games, goals, plans and instances are plain dicts/lists in the same JSON
shapes the ``restarts`` command-line tool reads and writes.
"""

from fractions import Fraction

from restarts import _restarts
from restarts._restarts import (
    FormatError,
    NoTrivialBoundError,
    OracleBudgetExceeded,
    brute_min_hazing,
    cross_check,
    derive_instance,
    deviation_payoffs,
    goal_feasibility,
    max_welfare_pairs,
    pure_nash_pairs,
    solve_dp,
    ussp_brute,
    ussp_to_game,
)


def _exact(value):
  if isinstance(value, Fraction):
    return f"{value.numerator}/{value.denominator}"
  if isinstance(value, int):
    return str(value)
  if isinstance(value, str):
    return value
  raise TypeError(f"expected Fraction, int or 'P/Q' string, got {value!r}")


def goal_value(game, goal):
  """Per-round goal values (v1, v2) as Fractions."""
  return tuple(Fraction(v) for v in _restarts.goal_value(game, goal))


def check_finite(game, plan, beta, variant="fixed", diagnostics=False):
  """Stability at discount factor beta (Fraction or 'P/Q'; floats rejected)."""
  return _restarts.check_finite(game, plan, _exact(beta), variant, diagnostics)


def check_limit(game, plan, diagnostics=False):
  return _restarts.check_limit(game, plan, diagnostics)


def game(payoff1, payoff2, actions1=None, actions2=None):
  """Builds a game dict from two payoff matrices."""
  rows, cols = len(payoff1), len(payoff1[0]) if payoff1 else 0
  return {
      "actions1": actions1 or [f"r{i}" for i in range(rows)],
      "actions2": actions2 or [f"c{j}" for j in range(cols)],
      "payoff1": payoff1,
      "payoff2": payoff2,
  }


def plan(goal, prefix=()):
  """Builds a plan dict; prefix is a sequence of (row, col) pairs."""
  runs = []
  for pair in prefix:
    pair = list(pair)
    if runs and runs[-1]["pair"] == pair:
      runs[-1]["count"] += 1
    else:
      runs.append({"pair": pair, "count": 1})
  return {"goal": [list(p) for p in goal], "prefix": runs}


__all__ = [
    "FormatError", "NoTrivialBoundError", "OracleBudgetExceeded",
    "brute_min_hazing", "check_finite", "check_limit", "cross_check",
    "derive_instance", "deviation_payoffs", "game", "goal_feasibility",
    "goal_value", "max_welfare_pairs", "plan", "pure_nash_pairs", "solve_dp",
    "ussp_brute", "ussp_to_game",
]
