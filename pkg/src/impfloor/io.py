"""JSON file formats for instances and layouts.

Floats are written with Python's shortest round-trip repr, so reading a file
back reproduces every value bit for bit.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .model import Circuit, FloorplanError, Instance, InvalidLayout, Layout, PlacedRect, SoftModule

PathLike = Union[str, Path]


class FormatError(FloorplanError, ValueError):
    pass


def _circuit_to_dict(c: Circuit) -> dict:
    return {"width": c.width, "height": c.height}


def _circuit_from_dict(d: Any) -> Circuit:
    try:
        return Circuit(float(d["width"]), float(d["height"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad circuit entry: {exc}") from None


def instance_to_dict(inst: Instance) -> dict:
    out: dict = {
        "circuit": _circuit_to_dict(inst.circuit),
        "modules": [{"name": m.name, "area": m.area, "lambda": m.bounding_factor} for m in inst.modules],
    }
    if inst.nets:
        out["nets"] = [list(net) for net in inst.nets]
    if inst.meta:
        out["meta"] = dict(inst.meta)
    return out


def instance_from_dict(d: Any) -> Instance:
    if not isinstance(d, dict):
        raise FormatError("instance file must hold a JSON object")
    try:
        modules = tuple(
            SoftModule(str(m["name"]), float(m["area"]), float(m.get("lambda", 3.0))) for m in d["modules"]
        )
        nets = tuple(tuple(str(p) for p in net) for net in d.get("nets") or ())
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"bad module or net entry: {exc}") from None
    return Instance(_circuit_from_dict(d.get("circuit")), modules, nets, dict(d.get("meta") or {}))


def layout_to_dict(layout: Layout) -> dict:
    return {
        "circuit": _circuit_to_dict(layout.circuit),
        "placements": [
            {"name": name, "x": r.x, "y": r.y, "w": r.w, "h": r.h} for name, r in layout.placements.items()
        ],
    }


def layout_from_dict(d: Any) -> Layout:
    if not isinstance(d, dict):
        raise FormatError("layout file must hold a JSON object")
    placements: dict[str, PlacedRect] = {}
    try:
        for p in d["placements"]:
            name = str(p["name"])
            if name in placements:
                raise InvalidLayout(f"module {name!r} placed twice")
            placements[name] = PlacedRect(float(p["x"]), float(p["y"]), float(p["w"]), float(p["h"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad placement entry: {exc}") from None
    return Layout(_circuit_from_dict(d.get("circuit")), placements)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1, allow_nan=False) + "\n"


def write_instance(inst: Instance, path: PathLike) -> None:
    Path(path).write_text(dumps(instance_to_dict(inst)), encoding="utf-8")


def read_instance(path: PathLike) -> Instance:
    return instance_from_dict(_load(path))


def write_layout(layout: Layout, path: PathLike) -> None:
    Path(path).write_text(dumps(layout_to_dict(layout)), encoding="utf-8")


def read_layout(path: PathLike) -> Layout:
    return layout_from_dict(_load(path))


def _load(path: PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
