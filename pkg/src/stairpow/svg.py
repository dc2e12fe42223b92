"""Deterministic SVG staircase diagrams for bivariate monomial ideals.

The staircase boundary of the exponent region is drawn as an axis-aligned
polyline, minimal generators as dots with the persistent ones highlighted,
and optionally the Newton-polyhedron boundary through the persistent
corners.  Output depends only on the input, so identical calls yield
byte-identical files.
"""

from __future__ import annotations

from .ideals import MonomialIdeal
from .geometry import persistent_generators

#: Pixels per exponent unit before any downscaling.
SCALE = 12
#: Hard cap on either canvas dimension, in pixels.
MAX_CANVAS = 4096

_PAD = 30  # outer padding in px
_RAY = 2  # length of the boundary rays past the extreme generators, in units


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return s if s else "0"


def render_svg(ideal: MonomialIdeal, hull: bool = False) -> str:
    """An SVG document for the staircase diagram of ``ideal``."""
    gens = ideal.gens
    max_a = max(a for a, _ in gens) + _RAY
    max_b = max(b for _, b in gens) + _RAY
    scale = min(
        SCALE,
        (MAX_CANVAS - 2 * _PAD) / max(max_a, 1),
        (MAX_CANVAS - 2 * _PAD) / max(max_b, 1),
    )
    width = 2 * _PAD + max_a * scale
    height = 2 * _PAD + max_b * scale

    def pt(a: float, b: float) -> tuple[float, float]:
        return (_PAD + a * scale, height - _PAD - b * scale)

    persistent = set()
    if not ideal.is_principal:
        persistent = set(persistent_generators(ideal))

    # Staircase boundary: vertical ray above the first generator, steps
    # between consecutive generators, horizontal ray after the last.
    path: list[tuple[float, float]] = [pt(gens[0][0], gens[0][1] + _RAY)]
    path.append(pt(*gens[0]))
    for g, h in zip(gens, gens[1:]):
        path.append(pt(h[0], g[1]))
        path.append(pt(*h))
    path.append(pt(gens[-1][0] + _RAY, gens[-1][1]))
    steps = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in path)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
        # axes
        f'<line x1="{_fmt(_PAD)}" y1="{_fmt(height - _PAD)}" x2="{_fmt(width - 8)}" '
        f'y2="{_fmt(height - _PAD)}" stroke="#999" stroke-width="1"/>',
        f'<line x1="{_fmt(_PAD)}" y1="{_fmt(height - _PAD)}" x2="{_fmt(_PAD)}" '
        f'y2="8" stroke="#999" stroke-width="1"/>',
        f'<polyline points="{steps}" fill="none" stroke="#1f77b4" stroke-width="2"/>',
    ]
    if hull and persistent:
        corners = persistent_generators(ideal)
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (pt(*c) for c in corners))
        lines.append(
            f'<polyline points="{pts}" fill="none" stroke="#2ca02c" '
            'stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    radius = max(2.0, min(4.0, scale / 3))
    for g in gens:
        x, y = pt(*g)
        color = "#d62728" if g in persistent else "#111"
        r = radius * (1.4 if g in persistent else 1.0)
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{color}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(ideal: MonomialIdeal, path: str, hull: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(ideal, hull=hull))
