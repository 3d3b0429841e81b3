"""SVG rendering of a layout.  Circuit y grows upward, so rows are flipped."""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .model import Instance, Layout, interval_of_module

OK_FILL = "#9ecae1"
WARN_FILL = "#f46d43"
CANVAS = 800.0


def render_svg(layout: Layout, instance: Instance, canvas: float = CANVAS) -> str:
    W, H = layout.circuit.width, layout.circuit.height
    scale = canvas / max(W, H)
    pad = 10.0
    width, height = W * scale + 2 * pad, H * scale + 2 * pad
    lam = {m.name: m for m in instance.modules}

    def fmt(v: float) -> str:
        return f"{v:.3f}".rstrip("0").rstrip(".")

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f'<rect class="circuit" x="{fmt(pad)}" y="{fmt(pad)}" width="{fmt(W * scale)}" '
        f'height="{fmt(H * scale)}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for name, r in layout.placements.items():
        m = lam.get(name)
        warn = m is not None and not interval_of_module(m).contains(r.ratio, 1e-9)
        sx = pad + r.x * scale
        sy = pad + (H - r.y - r.h) * scale
        sw, sh = r.w * scale, r.h * scale
        cls = "module warn" if warn else "module"
        fill = WARN_FILL if warn else OK_FILL
        out.append(
            f'<rect class="{cls}" x="{fmt(sx)}" y="{fmt(sy)}" width="{fmt(sw)}" height="{fmt(sh)}" '
            f'fill="{fill}" stroke="#333" stroke-width="0.5"><title>{escape(name)}</title></rect>'
        )
        font = max(4.0, min(14.0, sw / 6, sh / 3))
        area = m.area if m is not None else r.area
        out.append(
            f'<text x="{fmt(sx + sw / 2)}" y="{fmt(sy + sh / 2)}" font-size="{fmt(font)}" '
            f'text-anchor="middle" dominant-baseline="middle" data-name={quoteattr(name)}>'
            f"{escape(name)} ({area:.4g})</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
