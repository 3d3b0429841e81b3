"""Iterative merging placement.

Stage I repeatedly merges the two smallest modules of a non-increasing
sequence into a composite, which yields a slicing tree.  Stage II walks the
tree top-down from the circuit rectangle: a node that is at least as tall as
it is wide is split by a horizontal line with the larger child on top,
otherwise by a vertical line with the larger child on the left.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .merge import Orientation, Position, SplitSpec, split_realize
from .model import (
    EPS_REL,
    AreaMismatch,
    AspectViolation,
    Circuit,
    Instance,
    InvalidInstance,
    Layout,
    PlacedRect,
    SoftModule,
    check_zero_deadspace,
    find_aspect_violations,
)
from .tree import Internal, Leaf, MergeStack, SlicingNode, iter_leaves


@dataclass(frozen=True)
class MergeTraceEntry:
    step: int
    first: str
    second: str
    # 1-based index of the composite in the sequence right after insertion
    position: int


@dataclass(frozen=True)
class RealizedNode:
    node: SlicingNode
    rect: PlacedRect
    orientation: Optional[Orientation] = None
    first_position: Optional[Position] = None


@dataclass(frozen=True)
class PlacementReport:
    layout: Layout
    aspect_violations: list[AspectViolation]
    merge_trace: list[MergeTraceEntry] = field(default_factory=list)
    realized: list[RealizedNode] = field(default_factory=list)
    # recursion trace of the bipartition baseline; empty for IMP
    cuts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.aspect_violations


def _sorted_sequence(modules: Sequence[SoftModule]) -> list[SoftModule]:
    # stable: equal areas keep input order
    return sorted(modules, key=lambda m: -m.area)


def stage1_merge(
    modules: Sequence[SoftModule], trace: Optional[list[MergeTraceEntry]] = None
) -> tuple[SlicingNode, MergeStack]:
    """Merge the two rearmost modules until one composite remains.

    The sequence is kept as two queues: the sorted original modules, and the
    composites, whose areas never decrease from one step to the next.  The
    rearmost element is the smaller tail of the two; on equal area an
    original module is behind every composite, and an older composite is
    behind a newer one, since composites are inserted ahead of equal peers.
    """
    if not modules:
        raise InvalidInstance("cannot merge an empty module list")
    originals = [Leaf(m) for m in _sorted_sequence(modules)]
    # originals are popped from the end; keep ascending negated areas for bisect
    neg_orig = [-leaf.area for leaf in originals]
    composites: list[Internal] = []
    comp_areas: list[float] = []
    head = 0
    stack: MergeStack = []

    def pop_rearmost() -> SlicingNode:
        nonlocal head
        if originals and (head == len(composites) or originals[-1].area <= composites[head].area):
            neg_orig.pop()
            return originals.pop()
        node = composites[head]
        head += 1
        return node

    step = 0
    while len(originals) + len(composites) - head > 1:
        step += 1
        second = pop_rearmost()
        first = pop_rearmost()
        node = Internal(first, second, first.area + second.area, step)
        if comp_areas and node.area < comp_areas[-1]:
            raise AssertionError("composite areas decreased; merge sequence corrupted")
        if trace is not None:
            # elements strictly larger than the new composite precede it
            larger = bisect_left(neg_orig, -node.area)
            larger += len(comp_areas) - bisect_right(comp_areas, node.area, head)
            trace.append(MergeTraceEntry(step, first.name, second.name, larger + 1))
        composites.append(node)
        comp_areas.append(node.area)
        stack.append(node)

    root = originals[0] if originals else composites[head]
    return root, stack


def stage2_realize(
    root: SlicingNode,
    stack: MergeStack,
    circuit: Circuit,
    modules: Optional[Sequence[SoftModule]] = None,
) -> PlacementReport:
    """Place the root on the circuit and split every composite top-down."""
    if abs(root.area - circuit.area) > EPS_REL * circuit.area:
        raise AreaMismatch(f"tree area {root.area!r} does not match circuit area {circuit.area!r}")

    root_rect = PlacedRect(0.0, 0.0, circuit.width, circuit.height)
    rects: dict[int, PlacedRect] = {id(root): root_rect}
    by_name: dict[str, PlacedRect] = {}
    if isinstance(root, Leaf):
        by_name[root.name] = root_rect
    realized = []
    for node in reversed(stack):
        rect = rects.pop(id(node))
        # first.area >= second.area always, so "first" is the larger child and wins ties
        orientation = Orientation.VERTICAL if rect.h >= rect.w else Orientation.HORIZONTAL
        spec = SplitSpec(orientation, node.first.area, node.second.area, Position.TOP_OR_LEFT)
        first_rect, second_rect = split_realize(rect, spec, scale=circuit.area)
        for child, child_rect in ((node.first, first_rect), (node.second, second_rect)):
            if isinstance(child, Leaf):
                by_name[child.module.name] = child_rect
            else:
                rects[id(child)] = child_rect
        realized.append(RealizedNode(node, rect, orientation, Position.TOP_OR_LEFT))

    if modules is None:
        modules = [leaf.module for leaf in iter_leaves(root)]
    placements = {m.name: by_name[m.name] for m in modules}
    layout = Layout(circuit, placements)
    return PlacementReport(
        layout=layout,
        aspect_violations=find_aspect_violations(layout, modules),
        realized=realized,
    )


def place(instance: Instance) -> PlacementReport:
    check_zero_deadspace(instance.modules, instance.circuit)
    trace: list[MergeTraceEntry] = []
    root, stack = stage1_merge(instance.modules, trace)
    report = stage2_realize(root, stack, instance.circuit, instance.modules)
    return PlacementReport(
        layout=report.layout,
        aspect_violations=report.aspect_violations,
        merge_trace=trace,
        realized=report.realized,
    )
