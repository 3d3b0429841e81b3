"""Seeded random instance families.

Randomness comes from numpy's Philox counter-based bit generator, so a given
seed reproduces the same instance on any platform.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import Circuit, FloorplanError, Instance, SoftModule

RNG_NAME = "numpy.random.Philox"
GENERATOR_VERSION = 1
AREA_CAP = 1e6


class InvalidSpec(FloorplanError, ValueError):
    pass


class Mode(enum.Enum):
    IMP_FEASIBLE = "imp_feasible"
    ZDS_FEASIBLE = "zds_feasible"
    ADVERSARIAL = "adversarial"
    UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class GenSpec:
    n: int
    lam: float = 3.0
    seed: int = 0
    mode: Mode = Mode.IMP_FEASIBLE
    # fraction of each bound the draws may reach; 1.0 allows the boundary itself
    ratio_spread: float = 0.9
    # fixed circuit aspect ratio instead of a random one
    aspect: Optional[float] = None
    with_nets: bool = False

    def __post_init__(self):
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", Mode(self.mode))
        if int(self.n) != self.n or self.n < 2:
            raise InvalidSpec(f"n must be an integer >= 2, got {self.n!r}")
        if not (math.isfinite(self.lam) and self.lam >= 1):
            raise InvalidSpec(f"lambda must be >= 1, got {self.lam!r}")
        if self.mode is not Mode.UNCONSTRAINED and self.lam < 3:
            raise InvalidSpec(f"mode {self.mode.value} requires lambda >= 3, got {self.lam!r}")
        if not 0 <= self.seed < 2**64:
            raise InvalidSpec(f"seed must fit in 64 unsigned bits, got {self.seed!r}")
        if not 0 < self.ratio_spread <= 1:
            raise InvalidSpec(f"ratio_spread must lie in (0, 1], got {self.ratio_spread!r}")
        if self.aspect is not None and not (math.isfinite(self.aspect) and self.aspect > 0):
            raise InvalidSpec(f"aspect must be positive, got {self.aspect!r}")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _areas(spec: GenSpec, rng: np.random.Generator) -> list[float]:
    n, lam, spread = spec.n, spec.lam, spec.ratio_spread
    if spec.mode is Mode.ADVERSARIAL:
        return [float(n - 1)] + [1.0] * (n - 1)
    if spec.mode is Mode.UNCONSTRAINED:
        return [float(a) for a in np.exp(rng.uniform(0.0, math.log(100.0), size=n))]
    # built back to front; u is drawn ahead so the stream does not depend on the bounds
    u = rng.uniform(size=n - 1)
    areas = [1.0]
    suffix = 1.0
    for k in range(n - 1):
        nxt = areas[-1]
        if spec.mode is Mode.IMP_FEASIBLE:
            top = min(spread * (lam - 1.0) * suffix, AREA_CAP)
        else:
            top = max(min(spread * (lam - 1.0) * nxt, AREA_CAP), nxt)
        a = nxt + float(u[k]) * (top - nxt)
        areas.append(a)
        suffix += a
    areas.reverse()
    return areas


def _nets(names: list[str], rng: np.random.Generator) -> list[list[str]]:
    n = len(names)
    nets = []
    for _ in range(max(1, n // 2)):
        k = int(rng.integers(2, min(5, n) + 1))
        members = rng.choice(n, size=k, replace=False)
        nets.append([names[i] for i in sorted(members.tolist())])
    return nets


def generate(spec: GenSpec) -> Instance:
    rng = _rng(spec.seed)
    areas = _areas(spec, rng)
    total = math.fsum(areas)
    if spec.aspect is not None:
        gamma = spec.aspect
    else:
        bound = max(1.0, spec.ratio_spread * spec.lam)
        gamma = float(rng.uniform(1.0 / bound, bound))
    width = math.sqrt(total / gamma)
    height = total / width
    names = [f"m{i + 1}" for i in range(spec.n)]
    modules = tuple(SoftModule(name, a, spec.lam) for name, a in zip(names, areas))
    nets = _nets(names, rng) if spec.with_nets else []
    meta = {
        "generator": "impfloor.generate",
        "generator_version": GENERATOR_VERSION,
        "rng": RNG_NAME,
        "seed": spec.seed,
        "mode": spec.mode.value,
        "n": spec.n,
        "lambda": spec.lam,
        "ratio_spread": spec.ratio_spread,
    }
    return Instance(Circuit(width, height), modules, nets, meta)
