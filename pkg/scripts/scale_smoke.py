"""Wall-clock of generate / place / verify as n grows."""

import argparse
import time

from impfloor.generate import GenSpec, generate
from impfloor.imp import place
from impfloor.verify import verify
from impfloor.zds import zds_place


def timed(fn, *a):
    t0 = time.perf_counter()
    out = fn(*a)
    return out, time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000])
    ap.add_argument("--zds", action="store_true", help="also time the bipartition baseline")
    args = ap.parse_args(argv)

    print(f"{'n':>8}{'gen s':>9}{'place s':>9}{'verify s':>10}  ok")
    for n in args.sizes:
        inst, t_gen = timed(generate, GenSpec(n=n, seed=n))
        report, t_place = timed(place, inst)
        rep, t_ver = timed(verify, report.layout, inst)
        print(f"{n:>8}{t_gen:>9.3f}{t_place:>9.3f}{t_ver:>10.3f}  {rep.ok}")
        if args.zds:
            z, t_z = timed(zds_place, inst)
            print(f"{'':>8}{'zds':>9}{t_z:>9.3f}{'':>10}  {verify(z.layout, inst).ok}")


if __name__ == "__main__":
    main()
