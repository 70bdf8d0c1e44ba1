"""Exhaustive search over station subsets, used as ground truth.

Subsets are visited by increasing size and, within a size, in lexicographic
order of their index sets, so the first feasible subset is a minimum one.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from gsselect.constants import EPS_FEAS
from gsselect.errors import SizeGuardError
from gsselect.instance import Selection
from gsselect.transform import BilpInstance

_CHUNK = 8192


@dataclass(frozen=True)
class ExhaustiveResult:
    optimum: int | None
    solution: Selection | None
    subsets_checked: int

    @property
    def feasible(self) -> bool:
        return self.optimum is not None


def solve_exhaustive(bilp: BilpInstance, max_vars: int = 25) -> ExhaustiveResult:
    K = bilp.num_vars
    if K > max_vars:
        raise SizeGuardError(f"exhaustive search capped at {max_vars} variables, got {K}")
    alpha, need = bilp.alpha, bilp.beta - EPS_FEAS
    checked = 0
    for size in range(K + 1):
        combos = itertools.combinations(range(K), size)
        while True:
            chunk = list(itertools.islice(combos, _CHUNK))
            if not chunk:
                break
            idx = np.array(chunk, dtype=np.intp).reshape(len(chunk), size)
            sums = alpha[:, idx].sum(axis=2)
            ok = np.all(sums >= need[:, None], axis=0)
            hits = np.flatnonzero(ok)
            if hits.size:
                first = int(hits[0])
                checked += first + 1
                return ExhaustiveResult(size, Selection.from_indices(chunk[first], K), checked)
            checked += len(chunk)
    return ExhaustiveResult(None, None, checked)
