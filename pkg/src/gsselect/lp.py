"""LP relaxation of a covering subproblem.

Solves ``min sum(z)`` subject to ``A z >= b`` and ``0 <= z <= 1`` with a dense
bounded-variable primal simplex. Rows are written as ``s - A z = -b`` with
surplus ``s >= 0``. Since ``A >= 0``, the point ``z = 1`` is feasible whenever
the problem is, and with every z nonbasic at its upper bound and the surplus
variables basic it is already a basic feasible solution. Phase 2 starts from
there directly; Bland's rule prevents cycling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from gsselect.constants import EPS_CEIL, EPS_FEAS, EPS_INT
from gsselect.errors import ParameterError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"

_DJ_TOL = 1e-11
_PIVOT_TOL = 1e-11
_RATIO_TIE = 1e-12


@dataclass(frozen=True, eq=False)
class LpSolution:
    values: np.ndarray
    objective: float
    status: str
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _check_inputs(alpha_free, beta_prime) -> tuple[np.ndarray, np.ndarray]:
    b = np.asarray(beta_prime, dtype=np.float64)
    A = np.asarray(alpha_free, dtype=np.float64)
    if b.ndim != 1:
        raise ParameterError(f"beta_prime: expected a vector, got shape {b.shape}")
    if A.size == 0 and A.ndim != 2:
        A = np.zeros((b.shape[0], 0))
    if A.ndim != 2 or A.shape[0] != b.shape[0]:
        raise ParameterError(f"alpha_free: shape {A.shape} does not match {b.shape[0]} rows")
    if np.any(A < 0):
        raise ParameterError("alpha_free: entries must be >= 0")
    return A, b


def solve_lp(alpha_free, beta_prime) -> LpSolution:
    A, b = _check_inputs(alpha_free, beta_prime)
    T, V = A.shape
    if np.any(A.sum(axis=1) < b - EPS_FEAS):
        return LpSolution(np.zeros(V), math.inf, INFEASIBLE)
    if V == 0:
        return LpSolution(np.zeros(0), 0.0, OPTIMAL)

    n = V + T
    tab = np.hstack([-A, np.eye(T)])
    upper = [1.0] * V + [math.inf] * T
    basis = list(range(V, V + T))
    # +1 for a nonbasic variable at its upper bound, -1 at its lower bound, 0 if basic
    side = np.zeros(n)
    side[:V] = 1.0
    # reduced costs; the starting basis holds only zero-cost surplus columns
    reduced = np.concatenate([np.ones(V), np.zeros(T)])
    x_b = np.maximum(A.sum(axis=1) - b, 0.0).tolist()

    pivots = 0
    max_steps = 200 * (n + T) + 1000
    for _ in range(max_steps):
        eligible = np.flatnonzero(side * reduced > _DJ_TOL)
        if eligible.size == 0:
            break
        j = int(eligible[0])
        direction = -side[j]
        rate = (direction * tab[:, j]).tolist()

        # a bound flip wins ties; among rows the lowest basic variable leaves
        theta = upper[j]
        leave_row, leave_to_upper = -1, False
        for i in range(T):
            r = rate[i]
            if r > _PIVOT_TOL:
                ratio, to_upper = x_b[i] / r, False
            elif r < -_PIVOT_TOL and upper[basis[i]] != math.inf:
                ratio, to_upper = (upper[basis[i]] - x_b[i]) / -r, True
            else:
                continue
            if ratio < 0.0:
                ratio = 0.0
            if ratio < theta - _RATIO_TIE or (
                leave_row >= 0 and ratio <= theta + _RATIO_TIE and basis[i] < basis[leave_row]
            ):
                theta, leave_row, leave_to_upper = ratio, i, to_upper
        if theta == math.inf:
            raise RuntimeError("LP relaxation reported unbounded; objective is bounded below by 0")

        x_b = [x - theta * r for x, r in zip(x_b, rate)]
        if leave_row < 0:
            # bound flip of the entering variable, basis unchanged
            side[j] = -side[j]
            continue

        entering_value = theta if direction > 0 else upper[j] - theta
        leaving = basis[leave_row]
        side[leaving] = 1.0 if leave_to_upper else -1.0
        side[j] = 0.0
        basis[leave_row] = j
        x_b[leave_row] = entering_value

        piv = tab[leave_row] / tab[leave_row, j]
        reduced = reduced - reduced[j] * piv
        tab -= np.outer(tab[:, j], piv)
        tab[leave_row] = piv
        pivots += 1
    else:
        raise RuntimeError("simplex iteration limit reached")

    # recompute basic values from the original rows to shed accumulated pivot error
    full = np.hstack([-A, np.eye(T)])
    x_n = np.where(side > 0, np.asarray(upper), 0.0)
    rhs = -b - full @ x_n
    x_b = np.linalg.solve(full[:, basis], rhs)

    x = x_n.copy()
    x[basis] = x_b
    values = np.clip(x[:V], 0.0, 1.0)
    return LpSolution(values, float(values.sum()), OPTIMAL, pivots)


def is_integral(solution: LpSolution) -> bool:
    if not solution.optimal:
        raise ParameterError("is_integral: solution is not optimal")
    v = solution.values
    return bool(np.all(np.minimum(np.abs(v), np.abs(1.0 - v)) <= EPS_INT))


def lower_bound(solution: LpSolution, fixed_sum: int) -> int:
    """Integer lower bound on the subproblem optimum."""
    if not solution.optimal:
        raise ParameterError("lower_bound: solution is not optimal")
    return int(math.ceil(solution.objective + fixed_sum - EPS_CEIL))
