"""Domain types for fixed-outline floorplanning with soft modules.

Aspect ratios are always height / width.  All types are frozen dataclasses
that validate their fields on construction, so downstream code never sees an
invalid value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

EPS_REL = 1e-9
_INF = math.inf


class FloorplanError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(FloorplanError, ValueError):
    pass


class InvalidInstance(FloorplanError, ValueError):
    pass


class InvalidLayout(FloorplanError, ValueError):
    pass


class AreaMismatch(FloorplanError, ValueError):
    pass


def _positive(value: float, what: str, exc: type[Exception] = InvalidArgument) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise exc(f"{what} must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class SoftModule:
    name: str
    area: float
    bounding_factor: float = 3.0

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise InvalidArgument(f"module name must be a non-empty string, got {self.name!r}")
        object.__setattr__(self, "area", _positive(self.area, f"area of {self.name}"))
        lam = float(self.bounding_factor)
        if not (math.isfinite(lam) and lam >= 1.0):
            raise InvalidArgument(f"bounding factor of {self.name} must be >= 1, got {lam!r}")
        object.__setattr__(self, "bounding_factor", lam)


@dataclass(frozen=True)
class Circuit:
    width: float
    height: float

    def __post_init__(self):
        object.__setattr__(self, "width", _positive(self.width, "circuit width"))
        object.__setattr__(self, "height", _positive(self.height, "circuit height"))

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def aspect_ratio(self) -> float:
        return self.height / self.width


@dataclass(frozen=True)
class AspectInterval:
    """Closed interval ``[lo, hi]`` of admissible height/width ratios."""

    lo: float
    hi: float

    def __post_init__(self):
        lo = _positive(self.lo, "interval lower bound")
        hi = _positive(self.hi, "interval upper bound")
        if lo > hi:
            raise InvalidArgument(f"empty aspect interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def reciprocal(self) -> AspectInterval:
        """Interval of w/h, i.e. the same shapes rotated by 90 degrees."""
        return AspectInterval(1.0 / self.hi, 1.0 / self.lo)

    def contains(self, ratio: float, rel_tol: float = 0.0) -> bool:
        return self.lo * (1.0 - rel_tol) <= ratio <= self.hi * (1.0 + rel_tol)

    def violation(self, ratio: float) -> float:
        """``max(lo/ratio, ratio/hi) - 1``; positive iff ``ratio`` lies outside."""
        return max(self.lo / ratio, ratio / self.hi) - 1.0


@dataclass(frozen=True, slots=True)
class PlacedRect:
    """Axis-aligned rectangle given by its bottom-left corner and size."""

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        # hot path: one comparison chain, conversion only for non-float input
        x, y, w, h = self.x, self.y, self.w, self.h
        if not (-_INF < x < _INF and -_INF < y < _INF and 0.0 < w < _INF and 0.0 < h < _INF):
            raise InvalidArgument(f"invalid rect (x={x!r}, y={y!r}, w={w!r}, h={h!r})")
        for attr, v in (("x", x), ("y", y), ("w", w), ("h", h)):
            if type(v) is not float:
                object.__setattr__(self, attr, float(v))

    @property
    def x2(self) -> float:
        return self.x + self.w

    @property
    def y2(self) -> float:
        return self.y + self.h

    @property
    def ratio(self) -> float:
        return self.h / self.w

    @property
    def area(self) -> float:
        return self.w * self.h

    @property
    def center(self) -> tuple[float, float]:
        return self.x + 0.5 * self.w, self.y + 0.5 * self.h


@dataclass(frozen=True)
class Layout:
    circuit: Circuit
    placements: Mapping[str, PlacedRect]


@dataclass(frozen=True)
class Instance:
    circuit: Circuit
    modules: tuple[SoftModule, ...]
    nets: tuple[tuple[str, ...], ...] = ()
    meta: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        modules = tuple(self.modules)
        if not modules:
            raise InvalidInstance("instance has no modules")
        names = set()
        for m in modules:
            if not isinstance(m, SoftModule):
                raise InvalidInstance(f"expected SoftModule, got {type(m).__name__}")
            if m.name in names:
                raise InvalidInstance(f"duplicate module name {m.name!r}")
            names.add(m.name)
        nets = tuple(tuple(net) for net in self.nets)
        for net in nets:
            if len(net) < 2:
                raise InvalidInstance(f"net {list(net)} has fewer than two members")
            unknown = [p for p in net if p not in names]
            if unknown:
                raise InvalidInstance(f"net references unknown modules {unknown}")
        object.__setattr__(self, "modules", modules)
        object.__setattr__(self, "nets", nets)

    @property
    def names(self) -> list[str]:
        return [m.name for m in self.modules]

    def module(self, name: str) -> SoftModule:
        for m in self.modules:
            if m.name == name:
                return m
        raise KeyError(name)


def interval_of_module(m: SoftModule) -> AspectInterval:
    return AspectInterval(1.0 / m.bounding_factor, m.bounding_factor)


def total_area(modules: Iterable[SoftModule]) -> float:
    # plain left-to-right summation; callers rely on the order being fixed
    total = 0.0
    count = 0
    for m in modules:
        total += m.area
        count += 1
    if count == 0:
        raise InvalidInstance("cannot sum the area of an empty module list")
    return total


def check_zero_deadspace(modules: Sequence[SoftModule], circuit: Circuit, rel_tol: float = EPS_REL) -> float:
    """Return the total module area, raising AreaMismatch unless it fills the circuit."""
    area = total_area(modules)
    if abs(area - circuit.area) > rel_tol * circuit.area:
        raise AreaMismatch(
            f"module area {area!r} does not match circuit area {circuit.area!r} "
            f"({circuit.width!r} x {circuit.height!r})"
        )
    return area


@dataclass(frozen=True)
class AspectViolation:
    name: str
    ratio: float
    allowed: AspectInterval
    magnitude: float


def find_aspect_violations(
    layout: Layout, modules: Sequence[SoftModule], rel_tol: float = EPS_REL
) -> list[AspectViolation]:
    out = []
    placements = layout.placements
    for m in modules:
        ratio = placements[m.name].ratio
        lam = m.bounding_factor
        if ratio < (1.0 - rel_tol) / lam or ratio > lam * (1.0 + rel_tol):
            allowed = interval_of_module(m)
            out.append(AspectViolation(m.name, ratio, allowed, allowed.violation(ratio)))
    return out
