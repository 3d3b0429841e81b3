"""Success rate of both placers per instance family, written as CSV plus a summary table.

    python3 scripts/separation_sweep.py --seeds 20 --output sweep.csv
"""

import argparse
import sys

from impfloor.bench import BenchConfig, bench
from impfloor.generate import Mode


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128])
    ap.add_argument("--lambdas", type=float, nargs="+", default=[3.0, 4.0, 6.0])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--output", help="CSV path (default: no CSV)")
    args = ap.parse_args(argv)

    config = BenchConfig(
        modes=(Mode.IMP_FEASIBLE, Mode.ZDS_FEASIBLE, Mode.ADVERSARIAL, Mode.UNCONSTRAINED),
        sizes=tuple(args.sizes),
        lambdas=tuple(args.lambdas),
        seeds=tuple(range(args.seeds)),
    )
    result = bench(config)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(result.to_csv())

    rates = result.success_rates()
    print(f"{'mode':<15}{'imp':>8}{'zds':>8}")
    for mode in sorted({m for _, m in rates}):
        print(f"{mode:<15}{rates.get(('imp', mode), 0):>8.1%}{rates.get(('zds', mode), 0):>8.1%}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
