"""Compare the two sufficient conditions on random area sets.

Counts how often each condition holds, and how often the merge placement
still succeeds when its own condition does not.
"""

import argparse

import numpy as np

from impfloor.feasibility import check_theorem1, check_zds_condition
from impfloor.imp import place
from impfloor.model import Circuit, Instance, SoftModule
from impfloor.verify import DEADSPACE_TOL, verify


def main(argv=None):
    ap = argparse.ArgumentParser(description="condition coverage on random instances")
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--lam", type=float, default=3.0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    counts = dict(imp=0, zds=0, both=0, placed_ok=0, placed_ok_outside=0)
    for _ in range(args.trials):
        n = int(rng.integers(2, args.max_n + 1))
        areas = np.exp(rng.uniform(0, np.log(args.lam * 2), n))
        side = float(np.sqrt(areas.sum()))
        inst = Instance(Circuit(side, side), tuple(SoftModule(f"m{i}", float(a), args.lam) for i, a in enumerate(areas)))
        imp_ok = check_theorem1(inst).guaranteed
        zds_ok = check_zds_condition(inst).guaranteed
        rep = verify(place(inst).layout, inst)
        placed = rep.ok and rep.deadspace_fraction <= DEADSPACE_TOL
        counts["imp"] += imp_ok
        counts["zds"] += zds_ok
        counts["both"] += imp_ok and zds_ok
        counts["placed_ok"] += placed
        counts["placed_ok_outside"] += placed and not imp_ok

    for k, v in counts.items():
        print(f"{k:<18}{v:>7}  {v / args.trials:.1%}")


if __name__ == "__main__":
    main()
