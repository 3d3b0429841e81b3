"""Command-line front end.

Exit codes: 0 success with a legal layout, 1 the run completed but the layout
has violations, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bench import ALGORITHMS, BenchConfig, bench
from .generate import GenSpec, Mode, generate
from .io import dumps, instance_to_dict, layout_to_dict, read_instance, read_layout
from .model import EPS_REL, FloorplanError
from .svg import render_svg
from .verify import VerifyReport, verify

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="impfloor", description="Fixed-outline soft-module floorplanner")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("place", help="place an instance and verify the result")
    p.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--input", required=True, type=Path, help="instance JSON")
    p.add_argument("--output", type=Path, help="layout JSON (default: stdout)")
    p.add_argument("--svg", type=Path, help="write an SVG rendering here")
    p.add_argument("--report", type=Path, help="write the verification report JSON here")
    p.add_argument("--tolerance", type=float, default=EPS_REL, help="relative tolerance for checks")

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--mode", default=Mode.IMP_FEASIBLE.value, choices=[m.value for m in Mode])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--lambda", dest="lam", type=float, default=3.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--ratio-spread", type=float, default=0.9)
    g.add_argument("--aspect", type=float, help="fix the circuit aspect ratio (height/width)")
    g.add_argument("--nets", action="store_true", help="add random 2-5 pin nets")
    g.add_argument("--output", type=Path, help="instance JSON (default: stdout)")

    v = sub.add_parser("verify", help="check a layout against its instance")
    v.add_argument("--input", required=True, type=Path, help="instance JSON")
    v.add_argument("--layout", required=True, type=Path, help="layout JSON")
    v.add_argument("--report", type=Path, help="write the verification report JSON here")
    v.add_argument("--tolerance", type=float, default=EPS_REL)

    b = sub.add_parser("bench", help="sweep generated instances through both algorithms")
    b.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS) + ["both"])
    b.add_argument("--modes", nargs="+", default=[m.value for m in BenchConfig.modes],
                   choices=[m.value for m in Mode])
    b.add_argument("--sizes", nargs="+", type=int, default=list(BenchConfig.sizes))
    b.add_argument("--lambdas", nargs="+", type=float, default=list(BenchConfig.lambdas))
    b.add_argument("--seeds", type=int, default=10, help="number of seeds per configuration")
    b.add_argument("--seed-start", type=int, default=0)
    b.add_argument("--ratio-spread", type=float, default=0.9)
    b.add_argument("--output", type=Path, help="CSV table (default: stdout)")
    b.add_argument("--summary", type=Path, help="write aggregate success rates as JSON here")
    return parser


def report_to_dict(report: VerifyReport) -> dict:
    return {
        "ok": report.ok,
        "deadspace_fraction": report.deadspace_fraction,
        "hpwl": report.hpwl,
        "violations": [dataclasses.asdict(v) for v in report.violations],
    }


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _log_violations(report: VerifyReport) -> None:
    for v in report.violations:
        fields = " ".join(f"{k}={val!r}" for k, val in dataclasses.asdict(v).items() if k != "kind")
        print(f"{v.kind} {fields}", file=sys.stderr)
    print(
        f"{'ok' if report.ok else 'FAILED'}: {len(report.violations)} violation(s), "
        f"deadspace {report.deadspace_fraction:.3g}",
        file=sys.stderr,
    )


def _cmd_place(args) -> int:
    inst = read_instance(args.input)
    result = ALGORITHMS[args.algorithm](inst)
    report = verify(result.layout, inst, args.tolerance)
    _emit(dumps(layout_to_dict(result.layout)), args.output)
    if args.svg is not None:
        args.svg.write_text(render_svg(result.layout, inst), encoding="utf-8")
    if args.report is not None:
        args.report.write_text(dumps(report_to_dict(report)), encoding="utf-8")
    _log_violations(report)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def _cmd_gen(args) -> int:
    spec = GenSpec(
        n=args.n, lam=args.lam, seed=args.seed, mode=Mode(args.mode),
        ratio_spread=args.ratio_spread, aspect=args.aspect, with_nets=args.nets,
    )
    inst = generate(spec)
    _emit(dumps(instance_to_dict(inst)), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = read_instance(args.input)
    layout = read_layout(args.layout)
    report = verify(layout, inst, args.tolerance)
    if args.report is not None:
        args.report.write_text(dumps(report_to_dict(report)), encoding="utf-8")
    _log_violations(report)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def _cmd_bench(args) -> int:
    algorithms = sorted(ALGORITHMS) if args.algorithm == "both" else [args.algorithm]
    config = BenchConfig(
        algorithms=algorithms,
        modes=[Mode(m) for m in args.modes],
        sizes=args.sizes,
        lambdas=args.lambdas,
        seeds=range(args.seed_start, args.seed_start + args.seeds),
        ratio_spread=args.ratio_spread,
    )
    result = bench(config)
    _emit(result.to_csv(), args.output)
    rates = result.success_rates()
    for (algorithm, mode), rate in sorted(rates.items()):
        print(f"{algorithm:>4} {mode:<14} success {rate:6.1%}", file=sys.stderr)
    if args.summary is not None:
        summary = [{"algorithm": a, "mode": m, "success_rate": r} for (a, m), r in sorted(rates.items())]
        args.summary.write_text(dumps({"success_rates": summary}), encoding="utf-8")
    return EXIT_OK


COMMANDS = {"place": _cmd_place, "gen": _cmd_gen, "verify": _cmd_verify, "bench": _cmd_bench}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (FloorplanError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
