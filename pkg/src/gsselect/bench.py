"""Batch experiments over random scenarios.

For each station count K, scenarios are drawn with outage probabilities
uniform on [low, high]. By default a draw that cannot meet the requirement
even with every station installed is discarded and redrawn, so every reported
scenario has a finite optimum. Scenario ``i`` of batch ``K`` on attempt ``j``
uses the seed ``derive_seed(master, K, i, j)``, which makes each scenario
reproducible in isolation.

Standard deviations use the population formula (divide by n). Sums run in
scenario-index order.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from os import PathLike
from typing import Callable, Iterable, Optional

from gsselect.bnb import SolveResult, solve
from gsselect.constants import EPS_FEAS
from gsselect.errors import ParameterError
from gsselect.greedy import run_greedy
from gsselect.instance import derive_seed, generate_uniform
from gsselect.oracle import solve_exhaustive
from gsselect.transform import to_bilp

DEFAULT_MAX_DRAWS = 200_000


class OracleMismatchError(RuntimeError):
    def __init__(self, k: int, seed: int, bnb_value, oracle_value):
        super().__init__(
            f"K={k} seed={seed}: branch-and-bound optimum {bnb_value} != exhaustive optimum {oracle_value}"
        )
        self.k = k
        self.seed = seed


@dataclass(frozen=True)
class ScenarioOutcome:
    seed: int
    draws: int
    optimum: Optional[int]
    total_iterations: int
    iterations_to_first_optimum: int
    greedy_cardinality: Optional[int]
    greedy_iterations: Optional[int]
    oracle_optimum: Optional[int]
    oracle_checked: bool


@dataclass(frozen=True)
class BenchmarkReport:
    k_value: int
    num_scenarios: int
    num_feasible: int
    total_draws: int
    oracle_checked: int
    mean_selected: Optional[float]
    std_selected: Optional[float]
    mean_iterations: Optional[float]
    std_iterations: Optional[float]
    mean_iters_to_first_opt: Optional[float]
    std_iters_to_first_opt: Optional[float]
    mean_greedy_selected: Optional[float]
    pct_greedy_optimal: Optional[float]
    iteration_upper_bound: int


def _mean_std(xs: list) -> tuple[Optional[float], Optional[float]]:
    if not xs:
        return None, None
    m = math.fsum(xs) / len(xs)
    return m, math.sqrt(math.fsum((x - m) ** 2 for x in xs) / len(xs))


def run_scenario(
    k: int,
    index: int,
    *,
    num_periods: int,
    required_availability: float,
    seed: int,
    oracle_cap: int,
    low: float = 0.1,
    high: float = 1.0,
    resample_infeasible: bool = True,
    max_draws: int = DEFAULT_MAX_DRAWS,
    on_result: Optional[Callable] = None,
) -> ScenarioOutcome:
    # largest achievable log-margin per period; if even that falls short no draw can succeed
    hopeless = k * -math.log(low) < -math.log(1.0 - required_availability) - EPS_FEAS
    attempt = 0
    while True:
        scenario_seed = derive_seed(seed, k, index, attempt)
        inst = generate_uniform(k, num_periods, low, high, required_availability, scenario_seed)
        bilp = to_bilp(inst)
        attempt += 1
        if bilp.root_feasible() or not resample_infeasible or hopeless or attempt >= max_draws:
            break

    result = solve(bilp)
    greedy = run_greedy(bilp.alpha, bilp.beta) if result.feasible else None
    if on_result is not None:
        on_result(k, index, bilp, result, greedy)
    checked = k <= oracle_cap
    oracle_value = None
    if checked:
        oracle_value = solve_exhaustive(bilp, max_vars=oracle_cap).optimum
        if oracle_value != result.optimum:
            raise OracleMismatchError(k, scenario_seed, result.optimum, oracle_value)
    return ScenarioOutcome(
        seed=scenario_seed,
        draws=attempt,
        optimum=result.optimum,
        total_iterations=result.total_iterations,
        iterations_to_first_optimum=result.iterations_to_first_optimum,
        greedy_cardinality=greedy.cardinality if greedy else None,
        greedy_iterations=greedy.iterations if greedy else None,
        oracle_optimum=oracle_value,
        oracle_checked=checked,
    )


def aggregate(k: int, outcomes: list[ScenarioOutcome]) -> BenchmarkReport:
    solved = [o for o in outcomes if o.optimum is not None]
    sel_m, sel_s = _mean_std([float(o.optimum) for o in solved])
    it_m, it_s = _mean_std([float(o.total_iterations) for o in solved])
    ff_m, ff_s = _mean_std([float(o.iterations_to_first_optimum) for o in solved])
    gr_m, _ = _mean_std([float(o.greedy_cardinality) for o in solved])
    pct = None
    if solved:
        pct = 100.0 * sum(o.greedy_cardinality == o.optimum for o in solved) / len(solved)
    return BenchmarkReport(
        k_value=k,
        num_scenarios=len(outcomes),
        num_feasible=len(solved),
        total_draws=sum(o.draws for o in outcomes),
        oracle_checked=sum(o.oracle_checked for o in outcomes),
        mean_selected=sel_m,
        std_selected=sel_s,
        mean_iterations=it_m,
        std_iterations=it_s,
        mean_iters_to_first_opt=ff_m,
        std_iters_to_first_opt=ff_s,
        mean_greedy_selected=gr_m,
        pct_greedy_optimal=pct,
        iteration_upper_bound=2 ** (k + 1) - 1,
    )


def run_benchmark(
    k_values: Iterable[int],
    num_scenarios: int,
    num_periods: int = 12,
    required_availability: float = 0.999,
    seed: int = 0,
    oracle_cap: int = 15,
    *,
    low: float = 0.1,
    high: float = 1.0,
    resample_infeasible: bool = True,
    max_draws: int = DEFAULT_MAX_DRAWS,
    keep_outcomes: Optional[dict] = None,
    on_result: Optional[Callable] = None,
) -> list[BenchmarkReport]:
    """One report per K.

    ``keep_outcomes``, if given, is filled with the per-scenario records keyed
    by K. ``on_result(k, index, bilp, result, greedy)`` sees every solve.
    """
    k_values = list(k_values)
    if num_scenarios < 1:
        raise ParameterError("num_scenarios: batch must contain at least one scenario")
    if not k_values or any(k < 1 for k in k_values):
        raise ParameterError("k_values: need one or more station counts >= 1")
    if num_periods < 1:
        raise ParameterError("num_periods: must be >= 1")
    if not 0.0 < required_availability < 1.0:
        raise ParameterError("required_availability: must lie in (0, 1)")
    if seed < 0:
        raise ParameterError("seed: must be non-negative")

    reports = []
    for k in k_values:
        outcomes = [
            run_scenario(
                k, i,
                num_periods=num_periods,
                required_availability=required_availability,
                seed=seed,
                oracle_cap=oracle_cap,
                low=low,
                high=high,
                resample_infeasible=resample_infeasible,
                max_draws=max_draws,
                on_result=on_result,
            )
            for i in range(num_scenarios)
        ]
        if keep_outcomes is not None:
            keep_outcomes[k] = outcomes
        reports.append(aggregate(k, outcomes))
    return reports


def reports_to_json(reports: list[BenchmarkReport], config: dict) -> str:
    doc = {"format": 1, "config": config, "reports": [asdict(r) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _fmt(x: Optional[float], spec: str = ".2f") -> str:
    return "-" if x is None else format(x, spec)


def reports_to_table(reports: list[BenchmarkReport]) -> str:
    header = (
        f"{'K':>4}  {'scen':>5}  {'feasible':>8}  {'mean GSs':>9}  {'greedy GSs':>10}  "
        f"{'greedy opt %':>12}  {'iterations mean (std)':>22}  {'first-opt mean (std)':>21}  {'2^(K+1)-1':>11}"
    )
    lines = [header, "-" * len(header)]
    for r in reports:
        its = f"{_fmt(r.mean_iterations)} ({_fmt(r.std_iterations)})"
        first = f"{_fmt(r.mean_iters_to_first_opt)} ({_fmt(r.std_iters_to_first_opt)})"
        lines.append(
            f"{r.k_value:>4}  {r.num_scenarios:>5}  {r.num_feasible:>8}  {_fmt(r.mean_selected):>9}  "
            f"{_fmt(r.mean_greedy_selected):>10}  {_fmt(r.pct_greedy_optimal, '.1f'):>12}  "
            f"{its:>22}  {first:>21}  {r.iteration_upper_bound:>11}"
        )
    return "\n".join(lines) + "\n"


TRACE_HEADER = ("iteration", "incumbent_U", "active_list_L", "event")


def emit_trace_csv(result: SolveResult, path: str | PathLike) -> None:
    if not result.trace:
        raise ParameterError("result: no trace recorded")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        for rec in result.trace:
            writer.writerow((rec.iteration, rec.incumbent, rec.active_list_length, rec.event.value))
