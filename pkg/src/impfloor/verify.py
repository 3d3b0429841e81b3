"""Legality checks for a layout, recomputed from the raw rectangles.

This module deliberately depends on nothing but the domain types, so it can
judge any placement engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .model import EPS_REL, Instance, InvalidLayout, Layout

DEADSPACE_TOL = 1e-6


@dataclass(frozen=True)
class DimensionMismatch:
    name: str
    w: float
    h: float
    kind: str = field(default="DimensionMismatch", init=False)


@dataclass(frozen=True)
class AspectOutOfRange:
    name: str
    ratio: float
    lo: float
    hi: float
    magnitude: float
    kind: str = field(default="AspectOutOfRange", init=False)


@dataclass(frozen=True)
class Overlap:
    first: str
    second: str
    area: float
    kind: str = field(default="Overlap", init=False)


@dataclass(frozen=True)
class OutOfBounds:
    name: str
    excess_x: float
    excess_y: float
    kind: str = field(default="OutOfBounds", init=False)


Violation = Union[DimensionMismatch, AspectOutOfRange, Overlap, OutOfBounds]


@dataclass(frozen=True)
class VerifyReport:
    violations: list
    deadspace_fraction: float
    hpwl: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def zero_deadspace(self) -> bool:
        return self.ok and self.deadspace_fraction <= DEADSPACE_TOL


def _arrays(layout: Layout, names: Sequence[str]):
    p = layout.placements
    x = np.fromiter((p[n].x for n in names), dtype=float, count=len(names))
    y = np.fromiter((p[n].y for n in names), dtype=float, count=len(names))
    w = np.fromiter((p[n].w for n in names), dtype=float, count=len(names))
    h = np.fromiter((p[n].h for n in names), dtype=float, count=len(names))
    return x, y, w, h


def overlapping_pairs(x1, y1, x2, y2, slack: float, chunk: int = 1 << 20):
    """Index pairs (i, j), i < j, whose rectangles overlap by more than ``slack`` on both axes.

    Sweep along x: after sorting by left edge, each rectangle only needs to be
    compared with the run of rectangles whose left edge starts before its own
    right edge.
    """
    n = len(x1)
    order = np.argsort(x1, kind="stable")
    sx1 = x1[order]
    ends = np.searchsorted(sx1, x2[order] - slack, side="left")
    starts = np.arange(1, n + 1)
    counts = np.maximum(ends - starts, 0)
    found_i: list[np.ndarray] = []
    found_j: list[np.ndarray] = []
    # expand candidate pairs in bounded chunks
    cum = np.cumsum(counts)
    lo = 0
    while lo < n:
        base = cum[lo - 1] if lo else 0
        hi = int(np.searchsorted(cum, base + chunk, side="right"))
        hi = max(hi, lo + 1)
        c = counts[lo:hi]
        total = int(c.sum())
        if total:
            ii = np.repeat(np.arange(lo, hi), c)
            offs = np.arange(total) - np.repeat(np.cumsum(c) - c, c)
            jj = starts[ii] + offs
            a, b = order[ii], order[jj]
            dx = np.minimum(x2[a], x2[b]) - np.maximum(x1[a], x1[b])
            dy = np.minimum(y2[a], y2[b]) - np.maximum(y1[a], y1[b])
            hit = (dx > slack) & (dy > slack)
            if hit.any():
                found_i.append(np.minimum(a[hit], b[hit]))
                found_j.append(np.maximum(a[hit], b[hit]))
        lo = hi
    if not found_i:
        return np.empty(0, dtype=int), np.empty(0, dtype=int)
    return np.concatenate(found_i), np.concatenate(found_j)


def verify(layout: Layout, instance: Instance, eps_rel: float = EPS_REL) -> VerifyReport:
    names = [m.name for m in instance.modules]
    placed = set(layout.placements)
    if placed != set(names):
        missing = sorted(set(names) - placed)
        extra = sorted(placed - set(names))
        raise InvalidLayout(f"layout/instance mismatch: missing {missing}, unknown {extra}")
    W, H = layout.circuit.width, layout.circuit.height
    slack = eps_rel * min(W, H)
    x, y, w, h = _arrays(layout, names)
    x2, y2 = x + w, y + h
    violations: list = []

    # (1) positive dimensions
    bad_dim = ~((w > 0) & (h > 0))
    for i in np.flatnonzero(bad_dim):
        violations.append(DimensionMismatch(names[i], float(w[i]), float(h[i])))

    # (2) aspect ratio within [1/lambda, lambda]
    lam = np.fromiter((m.bounding_factor for m in instance.modules), dtype=float, count=len(names))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = h / w
        lo, hi = 1.0 / lam, lam
        outside = ~bad_dim & ((ratio < lo * (1 - eps_rel)) | (ratio > hi * (1 + eps_rel)))
        magnitude = np.maximum(lo / ratio, ratio / hi) - 1.0
    for i in np.flatnonzero(outside):
        violations.append(
            AspectOutOfRange(names[i], float(ratio[i]), float(lo[i]), float(hi[i]), float(magnitude[i]))
        )

    # (3) no pairwise overlap
    pi, pj = overlapping_pairs(x, y, x2, y2, slack)
    overlaps = []
    for i, j in zip(pi.tolist(), pj.tolist()):
        a, b = sorted((names[i], names[j]))
        area = (min(x2[i], x2[j]) - max(x[i], x[j])) * (min(y2[i], y2[j]) - max(y[i], y[j]))
        overlaps.append(Overlap(a, b, float(area)))
    violations.extend(sorted(overlaps, key=lambda o: (o.first, o.second)))

    # (4) containment in the circuit
    ex = np.maximum(np.maximum(-x, x2 - W), 0.0)
    ey = np.maximum(np.maximum(-y, y2 - H), 0.0)
    for i in np.flatnonzero((ex > slack) | (ey > slack)):
        violations.append(OutOfBounds(names[i], float(ex[i]), float(ey[i])))

    covered = float(np.sum(w * h))
    deadspace = min(max(1.0 - covered / (W * H), 0.0), 1.0)
    wl = hpwl(layout, instance.nets) if instance.nets else None
    return VerifyReport(violations, deadspace, wl)


def hpwl(layout: Layout, nets: Sequence[Sequence[str]]) -> float:
    """Sum over nets of the half-perimeter of the bounding box of member centers."""
    total = 0.0
    p = layout.placements
    for net in nets:
        try:
            centers = [p[name].center for name in net]
        except KeyError as exc:
            raise InvalidLayout(f"net member {exc.args[0]!r} is not placed") from None
        xs = [c[0] for c in centers]
        ys = [c[1] for c in centers]
        total += (max(xs) - min(xs)) + (max(ys) - min(ys))
    return total
