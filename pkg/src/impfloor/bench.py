"""Benchmark sweep comparing the merge placement with the bipartition baseline."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .generate import GenSpec, Mode, generate
from .imp import place
from .verify import DEADSPACE_TOL, verify
from .zds import zds_place

CSV_HEADER = ["mode", "n", "lambda", "seed", "algorithm", "success", "max_violation", "deadspace", "wall_ms"]
ALGORITHMS = {"imp": place, "zds": zds_place}


@dataclass(frozen=True)
class BenchConfig:
    algorithms: Sequence[str] = ("imp", "zds")
    modes: Sequence[Mode] = (Mode.IMP_FEASIBLE, Mode.ZDS_FEASIBLE, Mode.ADVERSARIAL)
    sizes: Sequence[int] = (4, 16, 64)
    lambdas: Sequence[float] = (3.0,)
    seeds: Sequence[int] = tuple(range(10))
    ratio_spread: float = 0.9


@dataclass(frozen=True)
class BenchRow:
    mode: str
    n: int
    lam: float
    seed: int
    algorithm: str
    success: bool
    max_violation: float
    deadspace: float
    wall_ms: float


@dataclass
class BenchResult:
    rows: list[BenchRow] = field(default_factory=list)

    def success_rates(self) -> dict[tuple[str, str], float]:
        tally: dict[tuple[str, str], list[int]] = {}
        for r in self.rows:
            t = tally.setdefault((r.algorithm, r.mode), [0, 0])
            t[0] += r.success
            t[1] += 1
        return {k: ok / total for k, (ok, total) in tally.items()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [r.mode, r.n, repr(r.lam), r.seed, r.algorithm, int(r.success),
                 repr(r.max_violation), repr(r.deadspace), f"{r.wall_ms:.3f}"]
            )
        return buf.getvalue()


def run_one(spec: GenSpec, algorithm: str) -> BenchRow:
    inst = generate(spec)
    t0 = time.perf_counter()
    report = ALGORITHMS[algorithm](inst)
    wall = (time.perf_counter() - t0) * 1000.0
    check = verify(report.layout, inst)
    magnitudes = [v.magnitude for v in check.violations if v.kind == "AspectOutOfRange"]
    return BenchRow(
        mode=spec.mode.value,
        n=spec.n,
        lam=spec.lam,
        seed=spec.seed,
        algorithm=algorithm,
        success=check.ok and check.deadspace_fraction <= DEADSPACE_TOL,
        max_violation=max(magnitudes, default=0.0),
        deadspace=check.deadspace_fraction,
        wall_ms=wall,
    )


def _specs(config: BenchConfig) -> Iterable[GenSpec]:
    for mode in sorted(config.modes, key=lambda m: m.value):
        for n in sorted(config.sizes):
            for lam in config.lambdas:
                for seed in sorted(config.seeds):
                    yield GenSpec(n=n, lam=lam, seed=seed, mode=mode, ratio_spread=config.ratio_spread)


def bench(config: BenchConfig) -> BenchResult:
    result = BenchResult()
    for spec in _specs(config):
        for algorithm in config.algorithms:
            result.rows.append(run_one(spec, algorithm))
    return result
