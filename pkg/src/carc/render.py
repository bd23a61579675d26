"""Static SVG rendering of an arc model: a clock with concentric arc bands."""
from __future__ import annotations

import math
from typing import TYPE_CHECKING

from carc.arcs import ArcModel

if TYPE_CHECKING:
    from carc.graph import RPartiteGraph

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
)


def _point(cx: float, cy: float, radius: float, n: int, position: float) -> tuple[float, float]:
    theta = (position - 1) / n * 2 * math.pi
    return cx + radius * math.sin(theta), cy - radius * math.cos(theta)


def model_to_svg(g: RPartiteGraph, m: ArcModel, size: int = 480) -> str:
    """Deterministic figure: hour markers on the clock, one band per vertex
    (ordered by vertex id, innermost first), stroke colored by part."""
    n = m.n_positions
    cx = cy = size / 2
    items = m.sorted_items()
    bands = max(len(items), 1)
    clock_r = size * 0.22
    band_gap = (size * 0.46 - clock_r) / (bands + 1)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{cx}" cy="{cy}" r="{clock_r:.2f}" fill="none" '
        'stroke="#999" stroke-width="1"/>',
    ]
    for p in range(1, n + 1):
        x, y = _point(cx, cy, clock_r, n, p)
        lx, ly = _point(cx, cy, clock_r * 0.86, n, p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="#333"/>')
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="{size * 0.025:.1f}" '
            f'text-anchor="middle" dominant-baseline="middle">{p}</text>'
        )
    for band, (v, arc) in enumerate(items, start=1):
        radius = clock_r + band * band_gap
        color = _PALETTE[(g.part_of(v) - 1) % len(_PALETTE)]
        span = arc.span(n)
        x1, y1 = _point(cx, cy, radius, n, arc.start)
        if span == 0:
            out.append(
                f'<circle cx="{x1:.2f}" cy="{y1:.2f}" r="3.5" fill="{color}">'
                f"<title>v{v} [{arc.start},{arc.end}]</title></circle>"
            )
        else:
            x2, y2 = _point(cx, cy, radius, n, arc.end)
            large = 1 if span > n / 2 else 0
            out.append(
                f'<path d="M {x1:.2f} {y1:.2f} A {radius:.2f} {radius:.2f} 0 {large} 1 '
                f'{x2:.2f} {y2:.2f}" fill="none" stroke="{color}" stroke-width="3" '
                f'stroke-linecap="round"><title>v{v} [{arc.start},{arc.end}]</title></path>'
            )
        lx, ly = _point(cx, cy, radius + band_gap * 0.35, n, arc.end)
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="{size * 0.022:.1f}" '
            f'text-anchor="middle" dominant-baseline="middle" fill="{color}">v{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out)
