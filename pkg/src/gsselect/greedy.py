"""Cost-function greedy construction of a feasible covering solution.

Starting from nothing installed, each pass installs the free station whose
addition leaves the smallest total constraint violation, until no period is
short. Deficits are updated incrementally, so pass i costs O(T * (V + 1 - i)).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gsselect.constants import EPS_FEAS, EPS_TIE
from gsselect.errors import InfeasibleInputError, ParameterError


@dataclass(frozen=True, eq=False)
class GreedyResult:
    z_free: np.ndarray
    cardinality: int
    iterations: int
    # number of per-candidate cost evaluations, each O(T)
    evaluations: int = 0
    order: tuple[int, ...] = ()


def cost_function(alpha_free, z, beta_prime) -> float:
    """Total constraint violation ``sum_t max(beta'_t - (A z)_t, 0)``."""
    A = np.asarray(alpha_free, dtype=np.float64)
    b = np.asarray(beta_prime, dtype=np.float64)
    zz = np.asarray(z, dtype=np.float64)
    if A.ndim != 2 or A.shape != (b.shape[0], zz.shape[0]):
        raise ParameterError(f"cost_function: shapes {A.shape}, {zz.shape}, {b.shape} disagree")
    return float(np.maximum(b - A @ zz, 0.0).sum())


def run_greedy(alpha_free, beta_prime) -> GreedyResult:
    A = np.asarray(alpha_free, dtype=np.float64)
    d = np.array(beta_prime, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != d.shape[0]:
        raise ParameterError(f"run_greedy: alpha shape {A.shape} vs beta length {d.shape[0]}")
    T, V = A.shape
    if np.any(A.sum(axis=1) < d - EPS_FEAS):
        raise InfeasibleInputError("run_greedy: installing every free station still misses a period")

    z = np.zeros(V, dtype=np.int64)
    remaining = np.arange(V)
    order = []
    evaluations = 0
    while np.any(d > EPS_FEAS):
        costs = np.maximum(d[:, None] - A[:, remaining], 0.0).sum(axis=0)
        evaluations += remaining.size
        pos = int(np.flatnonzero(costs <= costs.min() + EPS_TIE)[0])
        n = remaining[pos]
        z[n] = 1
        remaining = np.delete(remaining, pos)
        d -= A[:, n]
        order.append(int(n))
    return GreedyResult(z, int(z.sum()), len(order), evaluations, tuple(order))
