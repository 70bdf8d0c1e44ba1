"""Exit criteria, each checked at its stated tolerance.

Every test appends one PASS/FAIL line, shown in the pytest terminal summary.
"""
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, brute_force_vertex_cover
from gsselect.bench import reports_to_json, run_benchmark
from gsselect.bnb import solve
from gsselect.cover import NodeCoverGraph, encode_node_cover
from gsselect.greedy import run_greedy
from gsselect.instance import derive_seed, generate_uniform
from gsselect.lp import lower_bound
from gsselect.oracle import solve_exhaustive
from gsselect.transform import BilpInstance, is_feasible, to_bilp

BATCH_K = [10, 15, 20, 25, 30]
REF_MEAN_SELECTED = {10: 9.84, 15: 11.36, 20: 10.33, 25: 9.62, 30: 9.23}
REF_MEAN_ITERATIONS = {10: 1.93, 15: 14.23, 20: 41.37, 25: 87.74, 30: 117.90}
SELECTED_TOL = 0.35
ITERATION_FACTOR = 3.0
ORACLE_K = [5, 8, 10, 12, 15]
ORACLE_N = 500
BATCH_N = 200
BATCH_SEED = 20200323
ORACLE_SEED = 1729
QUADRATIC_SLOPE_MAX = 2.2


def record(n, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def trace_ok(result):
    inc = [r.incumbent for r in result.trace]
    return (
        all(a >= b for a, b in zip(inc, inc[1:]))
        and result.trace[0].active_list_length == 1
        and result.trace[-1].active_list_length == 0
        and result.iterations_to_first_optimum <= result.total_iterations
        and inc[-1] == result.optimum
    )


def greedy_ok(bilp, greedy, optimum):
    return (
        is_feasible(bilp, greedy.z_free)
        and greedy.iterations <= bilp.num_vars
        and greedy.cardinality >= optimum
    )


@pytest.fixture(scope="module")
def oracle_batches():
    """Criterion-1 instances: raw draws, no redrawing of infeasible ones."""
    rows = []
    for k in ORACLE_K:
        for i in range(ORACLE_N):
            inst = generate_uniform(k, 12, 0.1, 1.0, 0.999, derive_seed(ORACLE_SEED, k, i))
            bilp = to_bilp(inst)
            rows.append((k, bilp, solve(bilp), solve_exhaustive(bilp)))
    return rows


@pytest.fixture(scope="module")
def reference_batches():
    checks = {"trace": 0, "greedy": 0, "n": 0, "max_iter_ratio": 0.0}

    def hook(k, index, bilp, result, greedy):
        checks["n"] += 1
        checks["trace"] += not trace_ok(result)
        checks["greedy"] += not greedy_ok(bilp, greedy, result.optimum)
        checks["max_iter_ratio"] = max(checks["max_iter_ratio"], result.total_iterations / (2 ** (k + 1) - 1))

    outcomes = {}
    reports = run_benchmark(BATCH_K, BATCH_N, 12, 0.999, BATCH_SEED, oracle_cap=15,
                            keep_outcomes=outcomes, on_result=hook)
    config = {"k_values": BATCH_K, "num_scenarios": BATCH_N, "seed": BATCH_SEED}
    return {r.k_value: r for r in reports}, outcomes, checks, reports_to_json(reports, config)


def test_c1_oracle_equivalence(oracle_batches):
    mismatches = [(k, r.optimum, o.optimum) for k, _, r, o in oracle_batches if r.optimum != o.optimum]
    feasible = {k: sum(1 for kk, _, r, _ in oracle_batches if kk == k and r.feasible) for k in ORACLE_K}
    ok = not mismatches
    record(1, ok, f"{len(oracle_batches)} instances, {len(mismatches)} mismatches; feasible per K {feasible}")
    assert ok, mismatches[:5]


def test_c2_mean_selected(reference_batches):
    reports = reference_batches[0]
    means = {k: reports[k].mean_selected for k in BATCH_K}
    within = all(abs(means[k] - REF_MEAN_SELECTED[k]) <= SELECTED_TOL for k in BATCH_K)
    peak = max(BATCH_K, key=lambda k: means[k])
    after = [means[k] for k in BATCH_K if k >= peak]
    hump = peak not in (BATCH_K[0], BATCH_K[-1]) and means[BATCH_K[0]] < means[peak] and all(
        a >= b for a, b in zip(after, after[1:])
    )
    detail = ", ".join(f"K={k}: {means[k]:.2f} (ref {REF_MEAN_SELECTED[k]})" for k in BATCH_K)
    ok = within and hump and all(reports[k].num_feasible == BATCH_N for k in BATCH_K)
    record(2, ok, f"{detail}; hump={'yes' if hump else 'no'}")
    assert ok


def test_c3_iteration_counts(reference_batches):
    reports, outcomes, checks, _ = reference_batches
    parts, ok = [], True
    for k in BATCH_K:
        r, ref = reports[k], REF_MEAN_ITERATIONS[k]
        ok &= ref / ITERATION_FACTOR <= r.mean_iterations <= ref * ITERATION_FACTOR
        ok &= max(o.total_iterations for o in outcomes[k]) <= r.iteration_upper_bound
        ok &= r.mean_iters_to_first_opt <= r.mean_iterations
        parts.append(f"K={k}: {r.mean_iterations:.2f} ({r.std_iterations:.2f}) first {r.mean_iters_to_first_opt:.2f}"
                     f" [ref {ref}]")
    record(3, ok, "; ".join(parts))
    assert ok


def test_c4_trace_properties(oracle_batches, reference_batches):
    checks = reference_batches[2]
    bad = checks["trace"] + sum(1 for _, _, r, _ in oracle_batches if r.feasible and not trace_ok(r))
    solved = checks["n"] + sum(1 for _, _, r, _ in oracle_batches if r.feasible)
    ok = bad == 0
    record(4, ok, f"{solved} solved instances, {bad} trace violations")
    assert ok


def _greedy_growth_slope():
    """Fitted log-log slope of greedy runtime against K on forced-long runs."""
    ks = [40, 80, 160, 320, 640]
    times = []
    rng = np.random.default_rng(0)
    for k in ks:
        alpha = -np.log(rng.uniform(0.1, 1.0, size=(12, k)))
        # near-full requirement forces close to K passes, the quadratic regime
        beta = 0.98 * alpha.sum(axis=1)
        best = math.inf
        for _ in range(3):
            t0 = time.perf_counter()
            res = run_greedy(alpha, beta)
            best = min(best, time.perf_counter() - t0)
        assert res.evaluations <= k * (k + 1) // 2
        times.append(best)
    return float(np.polyfit(np.log(ks), np.log(times), 1)[0])


def test_c5_greedy_contract(oracle_batches, reference_batches):
    checks = reference_batches[2]
    bad = checks["greedy"]
    for _, bilp, r, _ in oracle_batches:
        if r.feasible:
            bad += not greedy_ok(bilp, run_greedy(bilp.alpha, bilp.beta), r.optimum)
    slope = _greedy_growth_slope()
    ok = bad == 0 and slope <= QUADRATIC_SLOPE_MAX
    record(5, ok, f"{bad} greedy contract violations; runtime slope vs K = {slope:.2f} (max {QUADRATIC_SLOPE_MAX})")
    assert ok


def test_c6_lp_bound_sandwich(oracle_batches):
    picked = [bilp for _, bilp, r, _ in oracle_batches if r.feasible][:50]
    checked = violations = 0

    def watcher(bilp):
        def watch(it, node, lp, event):
            nonlocal checked, violations
            if lp is None or len(node.free) > 12:
                return
            sub = BilpInstance(bilp.alpha[:, list(node.free)], np.maximum(node.beta_prime, 0.0))
            node_opt = solve_exhaustive(sub).optimum + node.fixed_sum
            checked += 1
            violations += lower_bound(lp, node.fixed_sum) > node_opt
        return watch

    for bilp in picked:
        solve(bilp, node_callback=watcher(bilp))
    ok = len(picked) == 50 and violations == 0 and checked > 0
    record(6, ok, f"{len(picked)} instances, {checked} nodes checked, {violations} violations")
    assert ok


def test_c7_node_cover():
    cases = {
        "triangle": (3, [(0, 1), (0, 2), (1, 2)], 2),
        "path3": (3, [(0, 1), (1, 2)], 1),
        "cycle5": (5, [(i, (i + 1) % 5) for i in range(5)], 3),
        "K5": (5, [(i, j) for i in range(5) for j in range(i + 1, 5)], 4),
        "star10": (10, [(0, j) for j in range(1, 10)], 1),
    }
    got = {}
    for name, (n, edges, expected) in cases.items():
        assert brute_force_vertex_cover(n, edges) == expected
        res = solve(encode_node_cover(NodeCoverGraph(n, tuple(edges))))
        got[name] = res.optimum
    ok = all(got[name] == cases[name][2] for name in cases)
    record(7, ok, ", ".join(f"{k}={v}" for k, v in got.items()))
    assert ok


def test_c8_determinism(reference_batches):
    first = reference_batches[3]
    reports = run_benchmark(BATCH_K, BATCH_N, 12, 0.999, BATCH_SEED, oracle_cap=15)
    second = reports_to_json(reports, {"k_values": BATCH_K, "num_scenarios": BATCH_N, "seed": BATCH_SEED})
    ok = first.encode() == second.encode()
    record(8, ok, f"two runs, JSON {len(first)} bytes, identical={ok}")
    assert ok
