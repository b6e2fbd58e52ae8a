"""Run registered checks and print one line per check with its wall time.

    python3 scripts/run_registry.py                 # everything, default budget
    python3 scripts/run_registry.py --trials 500 nwise-hereditary
"""

import argparse
import json
import sys
import time

from softtop.oracle import REGISTRY, EnumerationBudget, check_proposition


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("names", nargs="*", help="registry names (default: all)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5000)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--exhaustive-cells", type=int, default=4)
    args = p.parse_args()

    budget = EnumerationBudget(seed=args.seed, trials=args.trials, n=args.n, m=args.m,
                               exhaustive_cells=args.exhaustive_cells)
    failed = 0
    start = time.perf_counter()
    for name in args.names or list(REGISTRY):
        t = time.perf_counter()
        rep = check_proposition(name, budget)
        print(f"{time.perf_counter() - t:7.2f}s  {rep.line()}", flush=True)
        if not rep.passed:
            failed += 1
            if rep.fixture is not None:
                print(json.dumps(rep.fixture, indent=2))
    print(f"total {time.perf_counter() - start:.1f}s, {failed} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
