"""Log-domain covering form of the selection problem.

A product constraint ``prod_k p[k, t] ** z_k <= P_req[t]`` becomes the linear
constraint ``sum_k alpha[t, k] z_k >= beta[t]`` with ``alpha = ln(1/p)`` and
``beta = ln(1/P_req)``. Both sides are nonnegative, so the result is a 0-1
covering program with unit costs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gsselect.constants import EPS_FEAS
from gsselect.errors import ParameterError
from gsselect.instance import ProblemInstance, Selection


@dataclass(frozen=True, eq=False)
class BilpInstance:
    """``min sum(z)`` s.t. ``alpha @ z >= beta``, z binary; alpha is T x K."""

    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        alpha = np.array(self.alpha, dtype=np.float64, copy=True)
        beta = np.array(self.beta, dtype=np.float64, copy=True)
        if alpha.ndim == 1 and beta.ndim == 1 and alpha.size == 0:
            alpha = alpha.reshape(beta.shape[0], 0)
        if alpha.ndim != 2 or beta.ndim != 1 or alpha.shape[0] != beta.shape[0]:
            raise ParameterError(f"alpha/beta: shape mismatch {alpha.shape} vs {beta.shape}")
        if not (np.all(np.isfinite(alpha)) and np.all(np.isfinite(beta))):
            raise ParameterError("alpha/beta: entries must be finite")
        if np.any(alpha < 0) or np.any(beta < 0):
            raise ParameterError("alpha/beta: entries must be >= 0")
        alpha.setflags(write=False)
        beta.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def num_vars(self) -> int:
        return self.alpha.shape[1]

    @property
    def num_rows(self) -> int:
        return self.alpha.shape[0]

    def root_feasible(self) -> bool:
        """True when installing every station meets every row."""
        return bool(np.all(self.alpha.sum(axis=1) >= self.beta - EPS_FEAS))


def to_bilp(instance: ProblemInstance) -> BilpInstance:
    alpha = -np.log(instance.outage.T)
    beta = -np.log(instance.required_outage)
    # p == 1 gives -0.0; normalise so the >= 0 invariant reads cleanly
    return BilpInstance(alpha + 0.0, beta + 0.0)


def availability(instance: ProblemInstance, selection: Selection, period: int) -> float:
    """System availability ``1 - prod(p_out)`` over the chosen stations."""
    if len(selection) != instance.num_stations:
        raise ParameterError(f"selection: expected length {instance.num_stations}, got {len(selection)}")
    if not 0 <= period < instance.num_periods:
        raise ParameterError(f"period: {period} out of range")
    prod = 1.0
    for k in selection.indices:
        prod *= float(instance.outage[k, period])
    return 1.0 - prod


def is_feasible(bilp: BilpInstance, z: Selection | np.ndarray) -> bool:
    zz = z.as_array() if isinstance(z, Selection) else np.asarray(z, dtype=np.float64)
    if zz.shape != (bilp.num_vars,):
        raise ParameterError(f"z: expected length {bilp.num_vars}, got shape {zz.shape}")
    return bool(np.all(bilp.alpha @ zz >= bilp.beta - EPS_FEAS))
