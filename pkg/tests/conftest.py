import itertools
import math

import numpy as np
import pytest

from gsselect.transform import BilpInstance

# independently computed: ln(10), ln(5), ln(20)
LN10, LN5, LN20 = 2.302585092994046, 1.6094379124341003, 2.995732273553991


def brute_force_min(alpha, beta):
    """Smallest number of columns whose row sums meet beta; None if impossible.

    Plain double loop over every 0/1 vector, deliberately unlike the library's
    cardinality-ordered search.
    """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    K = alpha.shape[1]
    best = None
    for bits in itertools.product((0, 1), repeat=K):
        ok = all(
            sum(alpha[t][k] * bits[k] for k in range(K)) >= beta[t] - 1e-9 for t in range(len(beta))
        )
        if ok and (best is None or sum(bits) < best):
            best = sum(bits)
    return best


def brute_force_vertex_cover(num_nodes, edges):
    for size in range(num_nodes + 1):
        for subset in itertools.combinations(range(num_nodes), size):
            s = set(subset)
            if all(n in s or m in s for n, m in edges):
                return size
    raise AssertionError("unreachable")


def random_bilp(rng, K, T=12, availability=None, feasible=True):
    """Random covering instance from uniform [0.1, 1] outages.

    With a fixed ``availability`` every period shares one requirement and the
    draw is repeated until feasible (only sensible for larger K). Otherwise each
    period asks for a random fraction of what installing every station gives,
    which is feasible by construction at any K.
    """
    while True:
        p = rng.uniform(0.1, 1.0, size=(K, T))
        alpha = -np.log(p.T)
        if availability is None:
            beta = rng.uniform(0.15, 1.0 if feasible else 1.2, size=T) * alpha.sum(axis=1)
        else:
            beta = np.full(T, -math.log(1 - availability))
        bilp = BilpInstance(alpha, beta)
        if not feasible or bilp.root_feasible():
            return bilp


@pytest.fixture
def two_station():
    return BilpInstance([[LN10, LN5]], [LN20])


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
