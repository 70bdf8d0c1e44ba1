"""Write a per-iteration trace CSV for one feasible K=20 scenario.

The default seed search picks the first scenario whose run takes at least
``--min-iterations`` subproblems, which gives a curve comparable in shape to a
long single-run progress plot.
"""
import argparse

from gsselect.bench import emit_trace_csv
from gsselect.bnb import solve
from gsselect.instance import derive_seed, generate_uniform
from gsselect.transform import to_bilp


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--min-iterations", type=int, default=60)
    ap.add_argument("--out", default="trace.csv")
    args = ap.parse_args()

    attempt = 0
    while True:
        seed = derive_seed(args.seed, args.k, attempt)
        attempt += 1
        bilp = to_bilp(generate_uniform(args.k, 12, 0.1, 1.0, 0.999, seed))
        if not bilp.root_feasible():
            continue
        result = solve(bilp)
        if result.total_iterations >= args.min_iterations:
            break
    emit_trace_csv(result, args.out)
    print(f"seed={seed} optimum={result.optimum} iterations={result.total_iterations} "
          f"first_optimum_at={result.iterations_to_first_optimum} -> {args.out}")


if __name__ == "__main__":
    main()
