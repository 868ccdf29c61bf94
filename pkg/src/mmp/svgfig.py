"""Deterministic SVG rendering of point sets, matchings, disks,
ellipses, and witness points.

Output is plain SVG 1.1 text assembled with fixed formatting, so the
same input always produces identical bytes.  The world-to-canvas
transform is written into a comment at the top of the file.
"""

from __future__ import annotations

import math

from .geom import Disk, Point, dist, midpoint
from .matching import Color, Matching, PointSet

__all__ = ["render_svg"]

CANVAS = 840.0
MARGIN_FRAC = 0.08

_RED = "#c0392b"
_BLUE = "#2e66a5"
_PLAIN = "#333333"
_DISK = "#888888"
_ELLIPSE = "#7d3c98"
_SEGMENT = "#111111"
_WITNESS = "#1e8449"


def _fmt(x: float) -> str:
    # fixed decimal formatting keeps the output byte-stable
    return f"{x:.4f}"


def render_svg(
    ps: PointSet | None,
    matching: Matching | None = None,
    witness: Point | None = None,
    ellipse_factor: float | None = None,
) -> str:
    """Figure for one instance; pass the matching to draw segments and
    diametral disks, and an ellipse factor (semimajor = factor * pair
    length) to overlay the ellipse family.  ``ps=None`` yields the bare
    canvas."""
    pairs = matching.segments(ps) if (matching is not None and ps is not None) else []
    disks = [Disk.diametral(a, b) for a, b in pairs]

    xs: list[float] = []
    ys: list[float] = []
    for p in ps.points if ps is not None else ():
        xs.append(p.x)
        ys.append(p.y)
    for d in disks:
        xs.extend((d.center.x - d.radius, d.center.x + d.radius))
        ys.extend((d.center.y - d.radius, d.center.y + d.radius))
    if witness is not None:
        xs.append(witness.x)
        ys.append(witness.y)
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]

    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    pad = span * MARGIN_FRAC
    span += 2.0 * pad
    lo_x -= pad
    lo_y -= pad
    s = CANVAS / span
    # world (x, y) -> canvas (ox + s*x, oy - s*y)
    ox = -lo_x * s
    oy = CANVAS + lo_y * s

    def tx(p: Point) -> tuple[float, float]:
        return ox + s * p.x, oy - s * p.y

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(CANVAS)}" '
        f'height="{_fmt(CANVAS)}" viewBox="0 0 {_fmt(CANVAS)} {_fmt(CANVAS)}">',
        f"<!-- transform: canvas_x = {ox!r} + {s!r} * x ; canvas_y = {oy!r} - {s!r} * y -->",
        f'<rect width="{_fmt(CANVAS)}" height="{_fmt(CANVAS)}" fill="#ffffff"/>',
    ]

    for i, d in enumerate(disks):
        cx, cy = tx(d.center)
        lines.append(
            f'<circle class="disk" id="disk-{i}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(s * d.radius)}" fill="{_DISK}" fill-opacity="0.12" '
            f'stroke="{_DISK}" stroke-width="1.5"/>'
        )

    if ellipse_factor is not None:
        for i, (a, b) in enumerate(pairs):
            length = dist(a, b)
            if length == 0.0:
                continue
            semi_major = ellipse_factor * length
            c = midpoint(a, b)
            half_focal = length / 2.0
            semi_minor = math.sqrt(max(semi_major * semi_major - half_focal * half_focal, 0.0))
            cx, cy = tx(c)
            angle = -math.degrees(math.atan2(b.y - a.y, b.x - a.x))
            lines.append(
                f'<ellipse class="ellipse" id="ellipse-{i}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                f'rx="{_fmt(s * semi_major)}" ry="{_fmt(s * semi_minor)}" '
                f'transform="rotate({_fmt(angle)} {_fmt(cx)} {_fmt(cy)})" '
                f'fill="none" stroke="{_ELLIPSE}" stroke-width="1.5" stroke-dasharray="6 4"/>'
            )

    for i, (a, b) in enumerate(pairs):
        x1, y1 = tx(a)
        x2, y2 = tx(b)
        lines.append(
            f'<line class="pair" id="pair-{i}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{_SEGMENT}" stroke-width="2"/>'
        )

    for i, p in enumerate(ps.points if ps is not None else ()):
        color = _PLAIN
        if ps.colors is not None:
            color = _RED if ps.colors[i] is Color.RED else _BLUE
        cx, cy = tx(p)
        lines.append(
            f'<circle class="point" id="point-{i}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="5" fill="{color}"/>'
        )

    if witness is not None:
        cx, cy = tx(witness)
        arm = 9.0
        lines.append(
            f'<path class="witness" d="M {_fmt(cx - arm)} {_fmt(cy)} H {_fmt(cx + arm)} '
            f'M {_fmt(cx)} {_fmt(cy - arm)} V {_fmt(cy + arm)}" '
            f'stroke="{_WITNESS}" stroke-width="3" fill="none"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
