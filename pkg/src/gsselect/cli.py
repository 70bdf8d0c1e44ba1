"""Command-line front end.

Exit codes: 0 solved, 1 bad input, 2 instance infeasible, 3 oracle disagreement.
Station indices are printed 1-based.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from gsselect.bench import (
    OracleMismatchError,
    emit_trace_csv,
    reports_to_json,
    reports_to_table,
    run_benchmark,
)
from gsselect.bnb import SolveResult, solve
from gsselect.cover import encode_node_cover, load_graph
from gsselect.errors import ParameterError, SizeGuardError
from gsselect.instance import ProblemInstance, generate_uniform, load_instance, save_instance
from gsselect.oracle import solve_exhaustive
from gsselect.transform import availability, to_bilp

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_MISMATCH = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def format_solution(result: SolveResult, instance: ProblemInstance | None = None) -> str:
    if not result.feasible:
        return f"infeasible iterations={result.total_iterations}\n"
    stations = ",".join(str(k + 1) for k in result.solution.indices)
    lines = [
        f"optimum={result.optimum} stations=[{stations}]",
        f"iterations={result.total_iterations} iterations_to_first_optimum={result.iterations_to_first_optimum}",
    ]
    if instance is not None:
        for t in range(instance.num_periods):
            got = availability(instance, result.solution, t)
            req = instance.required_availability[t]
            lines.append(f"period={t + 1} availability={got:.9f} required={req:.9f}")
    return "\n".join(lines) + "\n"


def _oracle_check(bilp, result: SolveResult) -> int:
    try:
        ref = solve_exhaustive(bilp)
    except SizeGuardError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if ref.optimum != result.optimum:
        _err(f"oracle mismatch: branch-and-bound {result.optimum}, exhaustive {ref.optimum}")
        return EXIT_MISMATCH
    print(f"oracle=agree optimum={ref.optimum}")
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        instance = load_instance(args.instance)
    except (OSError, ParameterError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    bilp = to_bilp(instance)
    result = solve(bilp)
    sys.stdout.write(format_solution(result, instance))
    if args.trace_out:
        emit_trace_csv(result, args.trace_out)
    if args.oracle_check:
        code = _oracle_check(bilp, result)
        if code:
            return code
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def cmd_cover(args) -> int:
    try:
        graph = load_graph(args.graph)
    except (OSError, ParameterError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    bilp = encode_node_cover(graph)
    result = solve(bilp)
    nodes = ",".join(str(k + 1) for k in result.solution.indices)
    print(f"cover_size={result.optimum} nodes=[{nodes}] iterations={result.total_iterations}")
    if args.trace_out:
        emit_trace_csv(result, args.trace_out)
    if args.oracle_check:
        return _oracle_check(bilp, result)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        instance = generate_uniform(args.k, args.t, args.low, args.high, args.availability, args.seed)
        save_instance(instance, args.out)
    except (OSError, ParameterError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    return EXIT_OK


def cmd_bench(args) -> int:
    config = {
        "k_values": args.k,
        "num_scenarios": args.scenarios,
        "num_periods": args.periods,
        "required_availability": args.availability,
        "seed": args.seed,
        "oracle_cap": args.oracle_cap,
        "low": args.low,
        "high": args.high,
        "resample_infeasible": not args.keep_infeasible,
    }
    try:
        reports = run_benchmark(
            args.k, args.scenarios, args.periods, args.availability, args.seed, args.oracle_cap,
            low=args.low, high=args.high, resample_infeasible=not args.keep_infeasible,
        )
    except OracleMismatchError as exc:
        _err(str(exc))
        return EXIT_MISMATCH
    except ParameterError as exc:
        _err(str(exc))
        return EXIT_INPUT
    table = reports_to_table(reports)
    try:
        if args.json_out:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(reports_to_json(reports, config))
        if args.table_out:
            with open(args.table_out, "w", encoding="utf-8") as fh:
                fh.write(table)
    except OSError as exc:
        _err(str(exc))
        return EXIT_INPUT
    sys.stdout.write(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gsselect", description="Minimum ground-station selection")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance JSON file")
    p.add_argument("instance")
    p.add_argument("--trace-out", help="write the per-iteration trace as CSV")
    p.add_argument("--oracle-check", action="store_true", help="confirm the optimum by exhaustive search")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a random instance JSON file")
    p.add_argument("--k", type=int, required=True, help="number of candidate stations")
    p.add_argument("--t", "--periods", dest="t", type=int, default=12, help="number of periods")
    p.add_argument("--availability", type=float, default=0.999)
    p.add_argument("--low", type=float, default=0.1)
    p.add_argument("--high", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run random-scenario batches and summarise")
    p.add_argument("--k", type=int, nargs="+", default=[10, 15, 20, 25, 30])
    p.add_argument("--scenarios", type=int, default=200)
    p.add_argument("--periods", type=int, default=12)
    p.add_argument("--availability", type=float, default=0.999)
    p.add_argument("--low", type=float, default=0.1)
    p.add_argument("--high", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-cap", type=int, default=15, help="run exhaustive search when K <= this")
    p.add_argument("--keep-infeasible", action="store_true", help="do not redraw infeasible scenarios")
    p.add_argument("--json-out")
    p.add_argument("--table-out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("cover", help="minimum node cover of a graph file")
    p.add_argument("graph")
    p.add_argument("--trace-out")
    p.add_argument("--oracle-check", action="store_true")
    p.set_defaults(func=cmd_cover)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
