"""Zero-dead-space baseline: recursive top-down area bipartitioning.

Each region's modules are split into two groups of nearly equal total area,
and the region is cut parallel to its shorter side in proportion to the group
totals.  Recursion stops when a region holds a single module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .imp import PlacementReport
from .model import (
    Instance,
    InvalidArgument,
    Layout,
    PlacedRect,
    SoftModule,
    check_zero_deadspace,
    find_aspect_violations,
)


@dataclass(frozen=True)
class Bipartition:
    left_group: list[SoftModule]
    right_group: list[SoftModule]
    imbalance: float


@dataclass(frozen=True)
class Cut:
    region: PlacedRect
    # "x": a vertical line at x = offset; "y": a horizontal line at y = offset
    axis: str
    offset: float
    left_count: int
    right_count: int


def bipartition(modules: Sequence[SoftModule]) -> Bipartition:
    """Greedy largest-first balancing; ties go to the left group."""
    if len(modules) < 2:
        raise InvalidArgument("bipartition needs at least two modules")
    left: list[SoftModule] = []
    right: list[SoftModule] = []
    left_sum = right_sum = 0.0
    for m in sorted(modules, key=lambda m: -m.area):
        if left_sum <= right_sum:
            left.append(m)
            left_sum += m.area
        else:
            right.append(m)
            right_sum += m.area
    return Bipartition(left, right, abs(left_sum - right_sum) / (left_sum + right_sum))


def zds_place(instance: Instance) -> PlacementReport:
    circuit = instance.circuit
    check_zero_deadspace(instance.modules, circuit)
    rects: dict[str, PlacedRect] = {}
    cuts: list[Cut] = []
    work = [(PlacedRect(0.0, 0.0, circuit.width, circuit.height), list(instance.modules))]
    while work:
        region, group = work.pop()
        if len(group) == 1:
            rects[group[0].name] = region
            continue
        part = bipartition(group)
        left_area = sum(m.area for m in part.left_group)
        right_area = sum(m.area for m in part.right_group)
        frac = left_area / (left_area + right_area)
        if region.w >= region.h:
            offset = region.x + region.w * frac
            first = PlacedRect(region.x, region.y, offset - region.x, region.h)
            second = PlacedRect(offset, region.y, region.x + region.w - offset, region.h)
            axis = "x"
        else:
            offset = region.y + region.h * frac
            first = PlacedRect(region.x, region.y, region.w, offset - region.y)
            second = PlacedRect(region.x, offset, region.w, region.y + region.h - offset)
            axis = "y"
        cuts.append(Cut(region, axis, offset, len(part.left_group), len(part.right_group)))
        work.append((second, part.right_group))
        work.append((first, part.left_group))

    layout = Layout(circuit, {m.name: rects[m.name] for m in instance.modules})
    return PlacementReport(
        layout=layout,
        aspect_violations=find_aspect_violations(layout, instance.modules),
        cuts=cuts,
    )
