"""Interval algebra for merging two soft modules into a composite.

A *vertical* merge stacks the two sub-modules on top of each other so they
share a common width; a *horizontal* merge puts them side by side so they
share a common height.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .model import EPS_REL, AreaMismatch, AspectInterval, InvalidArgument, PlacedRect


class Orientation(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


class Position(enum.Enum):
    TOP_OR_LEFT = "top_or_left"
    BOTTOM_OR_RIGHT = "bottom_or_right"


@dataclass(frozen=True)
class OrientedIntervals:
    """Ratio intervals a composite can reach in each merge orientation (None = unreachable)."""

    vertical: Optional[AspectInterval]
    horizontal: Optional[AspectInterval]


@dataclass(frozen=True)
class SplitSpec:
    orientation: Orientation
    first_area: float
    second_area: float
    first_position: Position = Position.TOP_OR_LEFT

    def __post_init__(self):
        if not (self.first_area > 0 and self.second_area > 0):
            raise InvalidArgument("split areas must be positive")


def _check_area(s: float) -> None:
    if not (math.isfinite(s) and s > 0):
        raise InvalidArgument(f"area must be positive, got {s!r}")


def merged_interval_vertical(
    s1: float, i1: AspectInterval, s2: float, i2: AspectInterval
) -> Optional[AspectInterval]:
    """Ratio interval of the vertical composite of two modules, or None if they cannot share a width.

    A module of area ``s`` and ratio ``s / w**2`` in ``[lo, hi]`` admits widths
    ``[sqrt(s/hi), sqrt(s/lo)]``.  The composite ratio ``(s1+s2)/w**2`` is
    monotone in ``w``, so its extremes sit at the ends of the common range.
    """
    _check_area(s1)
    _check_area(s2)
    w_min = max(math.sqrt(s1 / i1.hi), math.sqrt(s2 / i2.hi))
    w_max = min(math.sqrt(s1 / i1.lo), math.sqrt(s2 / i2.lo))
    if w_min > w_max:
        return None
    total = s1 + s2
    lo = total / (w_max * w_max)
    hi = total / (w_min * w_min)
    return AspectInterval(lo, max(lo, hi))


def merged_interval_horizontal(
    s1: float, i1: AspectInterval, s2: float, i2: AspectInterval
) -> Optional[AspectInterval]:
    vert = merged_interval_vertical(s1, i1.reciprocal(), s2, i2.reciprocal())
    return None if vert is None else vert.reciprocal()


def oriented_intervals(
    s1: float, i1: AspectInterval, s2: float, i2: AspectInterval
) -> OrientedIntervals:
    return OrientedIntervals(
        merged_interval_vertical(s1, i1, s2, i2),
        merged_interval_horizontal(s1, i1, s2, i2),
    )


def closed_form_vertical(alpha: float, lam1: float, lam2: float) -> tuple[float, float]:
    """Composite ratio bounds for reciprocal-symmetric children, with ``alpha = s1/s2``.

    The pair returned may be inverted (lo > hi) when no common width exists.
    """
    lo = max((1.0 + alpha) / (alpha * lam1), (1.0 + alpha) / lam2)
    hi = min((1.0 + 1.0 / alpha) * lam1, (1.0 + alpha) * lam2)
    return lo, hi


def check_merge_feasible(s_big: float, lam_big: float, s_small: float, lam_small: float) -> bool:
    """True iff merging yields a composite whose interval reaches down to ratio 1 (bounds inclusive)."""
    _check_area(s_big)
    _check_area(s_small)
    if s_big < s_small:
        raise InvalidArgument(f"expected s_big >= s_small, got {s_big!r} < {s_small!r}")
    if lam_big < 1 or lam_small < 1:
        raise InvalidArgument("bounding factors must be >= 1")
    if lam_big <= 1.0 or lam_small <= 1.0:
        return False
    alpha = s_big / s_small
    return 1.0 / (lam_big - 1.0) <= alpha <= lam_small - 1.0


def composite_bound(lam1: float, lam2: float, alpha: float) -> float:
    if not alpha >= 1.0:
        raise InvalidArgument(f"alpha must be >= 1, got {alpha!r}")
    if lam1 < 1 or lam2 < 1:
        raise InvalidArgument("bounding factors must be >= 1")
    return min((1.0 + 1.0 / alpha) * lam1, (1.0 + alpha) * lam2)


def split_realize(
    parent: PlacedRect, spec: SplitSpec, rel_tol: float = EPS_REL, scale: Optional[float] = None
) -> tuple[PlacedRect, PlacedRect]:
    """Cut ``parent`` into the two sub-module rectangles ``(first, second)``.

    The cut is placed proportionally to the areas, so the children tile the
    parent exactly even when the stored areas drift by rounding.  ``scale``
    is the area the tolerance is relative to; deep in a tree the coordinate
    rounding is set by the whole circuit, not by the small parent.
    """
    total = spec.first_area + spec.second_area
    ref = max(total, parent.w * parent.h) if scale is None else scale
    if abs(total - parent.w * parent.h) > rel_tol * ref:
        raise AreaMismatch(
            f"split areas sum to {total!r} but parent rect has area {parent.w * parent.h!r}"
        )
    first_on_top_or_left = spec.first_position is Position.TOP_OR_LEFT
    if spec.orientation is Orientation.VERTICAL:
        bottom_area = spec.second_area if first_on_top_or_left else spec.first_area
        cut = parent.y + parent.h * (bottom_area / total)
        bottom = PlacedRect(parent.x, parent.y, parent.w, cut - parent.y)
        top = PlacedRect(parent.x, cut, parent.w, parent.y + parent.h - cut)
        return (top, bottom) if first_on_top_or_left else (bottom, top)
    left_area = spec.first_area if first_on_top_or_left else spec.second_area
    cut = parent.x + parent.w * (left_area / total)
    left = PlacedRect(parent.x, parent.y, cut - parent.x, parent.h)
    right = PlacedRect(cut, parent.y, parent.x + parent.w - cut, parent.h)
    return (left, right) if first_on_top_or_left else (right, left)


def child_target_ratios(
    gamma_c: float, orientation: Orientation, s1: float, s2: float
) -> tuple[float, float]:
    """Height/width ratios the two children take when the composite has ratio ``gamma_c``."""
    if not gamma_c > 0:
        raise InvalidArgument(f"composite ratio must be positive, got {gamma_c!r}")
    _check_area(s1)
    _check_area(s2)
    total = s1 + s2
    if orientation is Orientation.VERTICAL:
        return gamma_c * s1 / total, gamma_c * s2 / total
    return gamma_c * total / s1, gamma_c * total / s2
