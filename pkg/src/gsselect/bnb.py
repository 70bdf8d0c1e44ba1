"""FIFO branch-and-bound for the minimum-cardinality covering program.

Each examined subproblem goes through, in order: the closed-form
infeasibility test, the LP relaxation, pruning against the incumbent,
fathoming on an integral LP optimum, greedy upper bounding, fathoming when
the greedy value meets the rounded-up LP bound, and otherwise branching on the
free variable whose LP value is nearest 0.5. Children are appended to the back
of the queue, the z_b = 0 child first.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from gsselect.constants import EPS_FEAS, EPS_TIE
from gsselect.errors import ParameterError
from gsselect.greedy import run_greedy
from gsselect.instance import Selection
from gsselect.lp import LpSolution, is_integral, lower_bound, solve_lp
from gsselect.transform import BilpInstance, is_feasible


class Event(str, Enum):
    START = "start"
    INFEASIBLE = "infeasible"
    PRUNED = "pruned"
    FATHOMED_INTEGRAL = "fathomed_integral"
    FATHOMED_BOUND_MATCH = "fathomed_bound_match"
    BRANCHED = "branched"


@dataclass(frozen=True, eq=False)
class Subproblem:
    """Free variables plus a 0/1 assignment of the others.

    ``beta_prime`` is the right-hand side left after subtracting the
    contribution of variables fixed to one.
    """

    free: tuple[int, ...]
    fixed: dict
    beta_prime: np.ndarray
    fixed_sum: int

    @classmethod
    def root(cls, bilp: BilpInstance) -> Subproblem:
        return cls(tuple(range(bilp.num_vars)), {}, bilp.beta.copy(), 0)

    def recomputed_beta(self, bilp: BilpInstance) -> np.ndarray:
        """Right-hand side rebuilt from scratch out of the fixed assignment."""
        ones = [c for c, v in self.fixed.items() if v == 1]
        return bilp.beta - bilp.alpha[:, ones].sum(axis=1)

    def assemble(self, z_free, num_vars: int) -> Selection:
        z = [0] * num_vars
        for c, v in self.fixed.items():
            z[c] = v
        for pos, v in enumerate(self.free):
            z[v] = int(round(float(z_free[pos])))
        return Selection(tuple(z))


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    incumbent: int
    active_list_length: int
    event: Event


@dataclass(eq=False)
class SolveResult:
    optimum: Optional[int]
    solution: Optional[Selection]
    total_iterations: int
    iterations_to_first_optimum: int
    trace: list = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.optimum is not None

    @property
    def status(self) -> str:
        return "optimal" if self.feasible else "infeasible"


NodeCallback = Callable[[int, Subproblem, Optional[LpSolution], Event], None]


def select_branching_variable(lp_values) -> int:
    """Position of the LP value nearest 0.5; lowest position on ties."""
    v = np.asarray(lp_values, dtype=np.float64)
    if v.size == 0:
        raise RuntimeError("branching requested on a subproblem with no free variables")
    dist = np.abs(v - 0.5)
    return int(np.flatnonzero(dist <= dist.min() + EPS_TIE)[0])


def branch(parent: Subproblem, b: int, alpha: np.ndarray) -> tuple[Subproblem, Subproblem]:
    """Split on variable ``b`` (an index into the full variable vector)."""
    if b not in parent.free:
        raise RuntimeError(f"variable {b} is not free in this subproblem")
    free = tuple(v for v in parent.free if v != b)
    zero = Subproblem(free, {**parent.fixed, b: 0}, parent.beta_prime.copy(), parent.fixed_sum)
    one = Subproblem(
        free, {**parent.fixed, b: 1}, parent.beta_prime - alpha[:, b], parent.fixed_sum + 1
    )
    return zero, one


def solve(bilp: BilpInstance, node_callback: NodeCallback | None = None) -> SolveResult:
    """Certified minimum-cardinality solution of ``bilp``.

    An instance that is infeasible even with every variable set to one comes
    back as a result with ``optimum=None`` and a single infeasible trace row.
    ``node_callback(iteration, subproblem, lp, event)`` is invoked after each
    examined subproblem; ``lp`` is None when the infeasibility test fired.
    """
    alpha = bilp.alpha
    K = bilp.num_vars
    if not bilp.root_feasible():
        root = Subproblem.root(bilp)
        if node_callback is not None:
            node_callback(1, root, None, Event.INFEASIBLE)
        return SolveResult(None, None, 1, 0, [TraceRecord(1, K, 0, Event.INFEASIBLE)])

    best = Selection((1,) * K)
    upper = K
    first_hit = 0
    queue = deque([Subproblem.root(bilp)])
    trace = [TraceRecord(0, upper, 1, Event.START)]
    it = 0

    def improve(candidate: Selection, value: int) -> None:
        nonlocal best, upper, first_hit
        if not is_feasible(bilp, candidate) or candidate.cardinality != value:
            raise RuntimeError("incumbent update with an infeasible or miscounted selection")
        best, upper, first_hit = candidate, value, it

    while queue:
        node = queue.popleft()
        it += 1
        lp = None
        a_free = alpha[:, list(node.free)]
        if np.any(a_free.sum(axis=1) < node.beta_prime - EPS_FEAS):
            event = Event.INFEASIBLE
        else:
            lp = solve_lp(a_free, node.beta_prime)
            bound = lower_bound(lp, node.fixed_sum)
            event = None
            if upper <= bound:
                event = Event.PRUNED
            elif is_integral(lp):
                candidate = node.assemble(lp.values, K)
                if is_feasible(bilp, candidate):
                    improve(candidate, candidate.cardinality)
                    event = Event.FATHOMED_INTEGRAL
            if event is None:
                greedy = run_greedy(a_free, node.beta_prime)
                value = greedy.cardinality + node.fixed_sum
                if value < upper:
                    improve(node.assemble(greedy.z_free, K), value)
                if bound == value:
                    event = Event.FATHOMED_BOUND_MATCH
                else:
                    pos = select_branching_variable(lp.values)
                    queue.extend(branch(node, node.free[pos], alpha))
                    event = Event.BRANCHED
        trace.append(TraceRecord(it, upper, len(queue), event))
        if node_callback is not None:
            node_callback(it, node, lp, event)

    return SolveResult(upper, best, it, first_hit, trace)
