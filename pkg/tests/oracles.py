"""Independent reference computations used by the tests.

None of these import the code paths they check: the interval oracle finds
feasible widths by bisection on the raw child-ratio predicates, the merge
oracle replays the sequence literally with list insertion, and the tiling
oracle rasterizes the circuit.
"""

from __future__ import annotations

import numpy as np


def _bisect_vec(pred, lo, hi, iters=200):
    """For each lane, the boundary between pred False (at lo side) and True (at hi side)."""
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        ok = pred(mid)
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return hi


def width_range_by_bisection(s, ratio_lo, ratio_hi):
    """Widths w for which a module of area s has ratio (s/w)/w within [ratio_lo, ratio_hi].

    Bisects on the child-ratio predicate itself (no closed-form square roots),
    working on log(w) so every magnitude gets the same relative resolution.
    """
    s = np.asarray(s, float)
    far_lo = np.full_like(s, -300.0)
    far_hi = np.full_like(s, 300.0)

    def ratio(logw):
        w = np.exp(logw)
        return (s / w) / w

    # smallest w with ratio <= hi; largest w with ratio >= lo
    w_min = np.exp(_bisect_vec(lambda lw: ratio(lw) <= ratio_hi, far_lo, far_hi))
    w_max = np.exp(_bisect_vec(lambda lw: ratio(lw) < ratio_lo, far_lo, far_hi))
    return w_min, w_max


def vertical_interval_oracle(s1, i1, s2, i2, samples=10_000):
    """Brute-force [lo, hi] of the stacked composite's ratio, or None per lane.

    Arrays in, list of (lo, hi) or None out.  Widths are sampled across the
    feasible intersection (endpoints included) and the composite ratio is
    evaluated from the stacked geometry, h = s1/w + s2/w.
    """
    s1, s2 = np.asarray(s1, float), np.asarray(s2, float)
    a_min, a_max = width_range_by_bisection(s1, i1[0], i1[1])
    b_min, b_max = width_range_by_bisection(s2, i2[0], i2[1])
    w_lo = np.maximum(a_min, b_min)
    w_hi = np.minimum(a_max, b_max)
    out = []
    t = np.linspace(0.0, 1.0, samples)
    for k in range(len(s1)):
        if w_lo[k] > w_hi[k]:
            out.append(None)
            continue
        w = w_lo[k] + t * (w_hi[k] - w_lo[k])
        h = s1[k] / w + s2[k] / w
        g = h / w
        out.append((float(g.min()), float(g.max())))
    return out


def naive_stage1(areas_and_names):
    """Replay the merge loop on a plain Python list, exactly as written in pseudocode.

    Returns the list of (step, first_name, second_name, area, insert_position)
    and the final sequence contents.
    """
    seq = sorted(areas_and_names, key=lambda t: -t[0])  # stable
    trace = []
    step = 0
    while len(seq) > 1:
        step += 1
        second = seq.pop()
        first = seq.pop()
        area = first[0] + second[0]
        name = f"__c{step}"
        # first k with s_{k-1} > s_k' and the new element >= everything after it
        k = 0
        while k < len(seq) and seq[k][0] > area:
            k += 1
        seq.insert(k, (area, name))
        trace.append((step, first[1], second[1], area, k + 1))
    return trace, seq


def naive_overlaps(rects, slack=0.0):
    """All index pairs whose interiors overlap by more than slack on both axes (O(n^2))."""
    out = []
    for i in range(len(rects)):
        xi, yi, wi, hi = rects[i]
        for j in range(i + 1, len(rects)):
            xj, yj, wj, hj = rects[j]
            dx = min(xi + wi, xj + wj) - max(xi, xj)
            dy = min(yi + hi, yj + hj) - max(yi, yj)
            if dx > slack and dy > slack:
                out.append((i, j))
    return out


def raster_coverage(rects, width, height, cells=1000, margin=1e-9):
    """Per-cell coverage counts of cell centres on a cells x cells grid.

    Returns (closed, open): ``closed`` counts rects whose slightly enlarged
    box contains the centre, ``open`` counts rects whose slightly shrunk box
    contains it.  Exact single coverage means closed >= 1 and open <= 1
    everywhere; centres lying on an edge are the excluded boundary cells.
    """
    cx = (np.arange(cells) + 0.5) * (width / cells)
    cy = (np.arange(cells) + 0.5) * (height / cells)
    closed = np.zeros((cells + 1, cells + 1), dtype=np.int16)
    open_ = np.zeros((cells + 1, cells + 1), dtype=np.int16)
    mx, my = margin * width, margin * height
    for x, y, w, h in rects:
        # closed: centres in [x - m, x + w + m]; open: centres in (x + m, x + w - m)
        for grid, ex, ey, lo_side, hi_side in (
            (closed, mx, my, "left", "right"),
            (open_, -mx, -my, "right", "left"),
        ):
            i0 = np.searchsorted(cx, x - ex, side=lo_side)
            i1 = np.searchsorted(cx, x + w + ex, side=hi_side)
            j0 = np.searchsorted(cy, y - ey, side=lo_side)
            j1 = np.searchsorted(cy, y + h + ey, side=hi_side)
            if i0 < i1 and j0 < j1:
                grid[j0, i0] += 1
                grid[j0, i1] -= 1
                grid[j1, i0] -= 1
                grid[j1, i1] += 1
    # int16 keeps the prefix sums cheap; fine for fewer than 32k rects
    closed = np.cumsum(np.cumsum(closed, 0, dtype=np.int16), 1, dtype=np.int16)[:cells, :cells]
    open_ = np.cumsum(np.cumsum(open_, 0, dtype=np.int16), 1, dtype=np.int16)[:cells, :cells]
    return closed, open_
