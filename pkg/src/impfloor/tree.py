"""Slicing tree built bottom-up by the merge stage.

Internal nodes only record which two sub-modules were merged.  Orientation and
order are decided later, when the tree is realized on a circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .model import SoftModule


@dataclass(frozen=True, eq=False, slots=True)
class Leaf:
    module: SoftModule

    @property
    def area(self) -> float:
        return self.module.area

    @property
    def name(self) -> str:
        return self.module.name


@dataclass(frozen=True, eq=False, slots=True)
class Internal:
    first: "SlicingNode"
    second: "SlicingNode"
    area: float
    step: int

    @property
    def name(self) -> str:
        return f"__c{self.step}"


SlicingNode = Union[Leaf, Internal]

# Internal nodes in merge order; the root is last.
MergeStack = list


def node_area(node: SlicingNode) -> float:
    return node.area


def iter_leaves(tree: SlicingNode) -> Iterator[Leaf]:
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            yield node
        else:
            stack.append(node.second)
            stack.append(node.first)


def leaves(tree: SlicingNode) -> list[SoftModule]:
    """Leaf modules in first-then-second order."""
    return [leaf.module for leaf in iter_leaves(tree)]


def internal_nodes(tree: SlicingNode) -> list[Internal]:
    out = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Internal):
            out.append(node)
            stack.append(node.second)
            stack.append(node.first)
    return out


def dump(tree: SlicingNode) -> str:
    """Indented one-node-per-line text dump, for debugging and trace tests."""
    lines = []
    stack = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        pad = "  " * depth
        if isinstance(node, Leaf):
            lines.append(f"{pad}leaf={node.name} area={node.area!r}")
        else:
            lines.append(f"{pad}step={node.step} area={node.area!r}")
            stack.append((node.second, depth + 1))
            stack.append((node.first, depth + 1))
    return "\n".join(lines)
