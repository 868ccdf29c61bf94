"""Planar primitives and tolerance-aware predicates.

Everything downstream (matching oracles, disk piercing, configuration
classification, the inequality ladder) is built on the handful of types
and predicates in this module.  All operations are pure functions of
their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum

from .tolerances import boundary_tol, collinear_tol

__all__ = [
    "Point",
    "Segment",
    "Disk",
    "EllipseRegion",
    "HyperbolaArc",
    "Orientation",
    "Region",
    "ArcSide",
    "Crossing",
    "dist",
    "midpoint",
    "orientation",
    "in_disk",
    "segments_cross",
    "points_to",
    "in_ellipse",
    "hyperbola_side",
    "point_segment_distance",
    "coordinate_scale",
]


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates: ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True, slots=True)
class Segment:
    """Oriented segment from ``p`` (tail) to ``q`` (head).

    Zero length is permitted; several constructions pair coincident
    points on purpose.
    """

    p: Point
    q: Point

    def reversed(self) -> "Segment":
        return Segment(self.q, self.p)

    def length(self) -> float:
        return dist(self.p, self.q)


@dataclass(frozen=True, slots=True)
class Disk:
    """Closed disk with the given center and radius."""

    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.radius) or self.radius < 0:
            raise ValueError(f"invalid radius: {self.radius}")

    @staticmethod
    def diametral(p: Point, q: Point) -> "Disk":
        """Smallest disk covering ``p`` and ``q``: centered at the
        midpoint with radius half the separation."""
        return Disk(midpoint(p, q), 0.5 * dist(p, q))


@dataclass(frozen=True, slots=True)
class EllipseRegion:
    """Region bounded by the ellipse with the given foci and semimajor
    axis, i.e. the points whose focal-distance sum is at most
    ``2 * semimajor``."""

    focus_a: Point
    focus_b: Point
    semimajor: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.semimajor) or self.semimajor <= 0:
            raise ValueError(f"invalid semimajor axis: {self.semimajor}")
        c = 0.5 * dist(self.focus_a, self.focus_b)
        if self.semimajor < c * (1.0 - 1e-12):
            raise ValueError("semimajor axis shorter than half the focal distance")


@dataclass(frozen=True, slots=True)
class HyperbolaArc:
    """One branch of the hyperbola with the given foci, pinned by a
    point it passes through.

    The arc is the locus of points ``x`` with
    ``|focus_a - x| - |focus_b - x| == |focus_a - through| - |focus_b - through|``.
    When the constant equals plus/minus the focal distance the branch
    degenerates to a ray; the representation stays valid.
    """

    focus_a: Point
    focus_b: Point
    through: Point

    def constant(self) -> float:
        return dist(self.focus_a, self.through) - dist(self.focus_b, self.through)


class Orientation(IntEnum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


class Region(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


class ArcSide(Enum):
    ON_ARC = "on_arc"
    SIDE_OF_FOCUS_A = "side_of_focus_a"
    SIDE_OF_FOCUS_B = "side_of_focus_b"


@dataclass(frozen=True, slots=True)
class Crossing:
    """Outcome of a segment-pair intersection test.

    ``improper`` marks endpoint-touching or collinear-overlap contacts,
    as opposed to a transversal crossing.
    """

    crosses: bool
    improper: bool = False

    def __bool__(self) -> bool:
        return self.crosses


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def coordinate_scale(*points: Point) -> float:
    """Largest absolute coordinate among the points (tolerance scale)."""
    scale = 0.0
    for p in points:
        scale = max(scale, abs(p.x), abs(p.y))
    return scale


def cross(o: Point, a: Point, b: Point) -> float:
    """Signed doubled area of the triangle ``o a b``."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Which side of the oriented line through ``a``, ``b`` the point
    ``c`` lies on, with a quadratic collinearity band."""
    value = cross(a, b, c)
    tol = collinear_tol(coordinate_scale(a, b, c))
    if abs(value) <= tol:
        return Orientation.COLLINEAR
    return Orientation.LEFT if value > 0 else Orientation.RIGHT


def in_disk(p: Point, d: Disk) -> Region:
    """Classify ``p`` against the disk with a boundary band."""
    tol = boundary_tol(max(coordinate_scale(p, d.center), d.radius))
    gap = dist(p, d.center) - d.radius
    if abs(gap) <= tol:
        return Region.BOUNDARY
    return Region.INTERIOR if gap < 0 else Region.EXTERIOR


def in_ellipse(e: EllipseRegion, x: Point) -> Region:
    """Classify ``x`` against the ellipse region by its focal-distance sum."""
    tol = boundary_tol(max(coordinate_scale(e.focus_a, e.focus_b, x), e.semimajor))
    gap = dist(x, e.focus_a) + dist(x, e.focus_b) - 2.0 * e.semimajor
    if abs(gap) <= tol:
        return Region.BOUNDARY
    return Region.INTERIOR if gap < 0 else Region.EXTERIOR


def hyperbola_side(h: HyperbolaArc, x: Point) -> ArcSide:
    """Compare the focal-distance difference at ``x`` against the arc's
    constant.  A strictly larger difference means ``x`` lies in the open
    region containing ``focus_b``."""
    tol = boundary_tol(coordinate_scale(h.focus_a, h.focus_b, h.through, x))
    gap = (dist(h.focus_a, x) - dist(h.focus_b, x)) - h.constant()
    if abs(gap) <= tol:
        return ArcSide.ON_ARC
    return ArcSide.SIDE_OF_FOCUS_B if gap > 0 else ArcSide.SIDE_OF_FOCUS_A


def point_segment_distance(x: Point, s: Segment) -> float:
    """Euclidean distance from ``x`` to the closed segment."""
    vx, vy = s.q.x - s.p.x, s.q.y - s.p.y
    wx, wy = x.x - s.p.x, x.y - s.p.y
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return dist(x, s.p)
    t = (wx * vx + wy * vy) / vv
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(wx - t * vx, wy - t * vy)


def _on_segment(x: Point, s: Segment) -> bool:
    tol = boundary_tol(coordinate_scale(x, s.p, s.q))
    return point_segment_distance(x, s) <= tol


def segments_cross(s1: Segment, s2: Segment) -> Crossing:
    """Whether the closed segments share at least one point.

    Transversal crossings report ``improper=False``; endpoint contacts
    and collinear overlaps report ``improper=True``.
    """
    o1 = orientation(s1.p, s1.q, s2.p)
    o2 = orientation(s1.p, s1.q, s2.q)
    o3 = orientation(s2.p, s2.q, s1.p)
    o4 = orientation(s2.p, s2.q, s1.q)

    if o1 * o2 < 0 and o3 * o4 < 0:
        return Crossing(True, improper=False)

    if (
        _on_segment(s2.p, s1)
        or _on_segment(s2.q, s1)
        or _on_segment(s1.p, s2)
        or _on_segment(s1.q, s2)
    ):
        return Crossing(True, improper=True)
    return Crossing(False)


def strictly_inside_triangle(x: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict interior test; degenerate triangles have no interior."""
    o1 = orientation(a, b, x)
    o2 = orientation(b, c, x)
    o3 = orientation(c, a, x)
    if Orientation.COLLINEAR in (o1, o2, o3):
        return False
    return o1 == o2 == o3


def points_to(s1: Segment, s2: Segment) -> bool:
    """Oriented pointing relation between two segments.

    ``s1 = p -> q`` points to ``s2 = r s`` when the head ``q`` lies
    strictly inside the triangle ``p r s`` and strictly inside the
    diametral disk of ``r s``.  Degenerate cases (zero-length ``s2``,
    collinear triangle) have no interior and return ``False``.
    """
    if dist(s2.p, s2.q) == 0.0:
        return False
    if not strictly_inside_triangle(s1.q, s1.p, s2.p, s2.q):
        return False
    return in_disk(s1.q, Disk.diametral(s2.p, s2.q)) is Region.INTERIOR
