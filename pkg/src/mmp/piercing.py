"""Common-point (piercing) decisions for disk and ellipse families.

The quantity minimized everywhere is the convex depth function

    f(x) = max_i (|x - c_i| - r_i)          for disks, and
    g(x) = max_i (focal_sum_i(x) - 2 a_i)   for ellipse regions.

A family has a common point iff the minimum is <= 0; the minimizing
point is the reported witness.  Families of at most three disks are
solved exactly by candidate enumeration (centers, pair balance points,
circle-circle intersections, and equal-depth points of three cones);
larger families run a subgradient descent polished by the exact
small-family solver on the active disks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize as _scipy_minimize

from .geom import Disk, EllipseRegion, Point, Segment, dist, midpoint, point_segment_distance
from .tolerances import pierce_tol

__all__ = [
    "PiercingVerdict",
    "PairVerdict",
    "PiercingResult",
    "PairStretch",
    "StretchReport",
    "STRETCH_BOUNDS",
    "pairwise_intersect",
    "triple_intersect_exact",
    "pierce_disks",
    "pierce_ellipses",
    "stretch_report",
    "midpoint_shortest_edge",
    "circle_circle_points",
    "disk_depth",
]

# Stretch-factor bounds checked by reports and the CLI.
STRETCH_BOUNDS = {
    "fingerhut": 2.0 / math.sqrt(3.0),
    "sqrt2": math.sqrt(2.0),
    "sqrt5": math.sqrt(5.0),
    "eppstein": 2.5,
}


class PiercingVerdict(Enum):
    NONEMPTY = "nonempty"
    TANGENT = "tangent"
    EMPTY = "empty"


class PairVerdict(Enum):
    OVERLAP = "overlap"
    TANGENT = "tangent"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class PiercingResult:
    verdict: PiercingVerdict
    witness: Point | None
    depth: float
    iterations: int = 0


def _disk_scale(disks: Sequence[Disk]) -> float:
    s = 0.0
    for d in disks:
        s = max(s, abs(d.center.x), abs(d.center.y), d.radius)
    return s


def disk_depth(x: Point, disks: Sequence[Disk]) -> float:
    """max_i (|x - c_i| - r_i); <= 0 iff x lies in every disk."""
    return max(dist(x, d.center) - d.radius for d in disks)


def pairwise_intersect(d1: Disk, d2: Disk) -> PairVerdict:
    """Overlap / external tangency / disjointness of two closed disks.

    Containment and internal tangency count as overlap.
    """
    tol = pierce_tol(_disk_scale((d1, d2)))
    gap = dist(d1.center, d2.center) - (d1.radius + d2.radius)
    if abs(gap) <= tol:
        return PairVerdict.TANGENT
    return PairVerdict.OVERLAP if gap < 0 else PairVerdict.DISJOINT


def circle_circle_points(d1: Disk, d2: Disk) -> list[Point]:
    """Intersection points of the two boundary circles (0, 1, or 2).

    A tangency within the tolerance band yields the single touching
    point.  Coincident circles yield nothing.
    """
    c1, c2 = d1.center, d2.center
    r1, r2 = d1.radius, d2.radius
    d = dist(c1, c2)
    tol = pierce_tol(_disk_scale((d1, d2)))
    if d == 0.0:
        return []
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h_sq = r1 * r1 - a * a
    h = math.sqrt(h_sq) if h_sq > 0.0 else 0.0
    ux, uy = (c2.x - c1.x) / d, (c2.y - c1.y) / d
    base = Point(c1.x + a * ux, c1.y + a * uy)
    if h == 0.0:
        return [base]
    return [
        Point(base.x - h * uy, base.y + h * ux),
        Point(base.x + h * uy, base.y - h * ux),
    ]


def _pair_balance_point(d1: Disk, d2: Disk) -> Point | None:
    """Minimizer of max(f1, f2) when it lies strictly between the
    centers; ``None`` when one cone dominates (nested disks)."""
    d = dist(d1.center, d2.center)
    if d == 0.0:
        return None
    s1 = 0.5 * (d + d1.radius - d2.radius)
    if s1 < 0.0 or s1 > d:
        return None
    t = s1 / d
    return Point(
        d1.center.x + t * (d2.center.x - d1.center.x),
        d1.center.y + t * (d2.center.y - d1.center.y),
    )


def _equal_depth_points(d1: Disk, d2: Disk, d3: Disk) -> list[Point]:
    """Points where all three cone depths agree: |x-c_i| = t + r_i.

    Subtracting the squared equations pairwise leaves a linear system in
    (x, t); substituting back gives a quadratic in t.  Both real roots
    with nonnegative distances are returned.
    """
    c1, c2, c3 = d1.center, d2.center, d3.center
    r1, r2, r3 = d1.radius, d2.radius, d3.radius
    m = np.array(
        [
            [2.0 * (c1.x - c2.x), 2.0 * (c1.y - c2.y)],
            [2.0 * (c1.x - c3.x), 2.0 * (c1.y - c3.y)],
        ]
    )
    det = np.linalg.det(m)
    norm = max(abs(m).max(), 1e-300)
    if abs(det) <= 1e-14 * norm * norm:
        return []  # collinear centers; covered by pair candidates
    q1 = c1.x * c1.x + c1.y * c1.y - r1 * r1
    rhs = np.array(
        [
            q1 - (c2.x * c2.x + c2.y * c2.y - r2 * r2),
            q1 - (c3.x * c3.x + c3.y * c3.y - r3 * r3),
        ]
    )
    dvec = np.array([2.0 * (r1 - r2), 2.0 * (r1 - r3)])
    p = np.linalg.solve(m, rhs)
    q = np.linalg.solve(m, -dvec)
    # |p + q t - c1|^2 = (t + r1)^2
    ex, ey = p[0] - c1.x, p[1] - c1.y
    aa = q[0] * q[0] + q[1] * q[1] - 1.0
    bb = 2.0 * (ex * q[0] + ey * q[1] - r1)
    cc = ex * ex + ey * ey - r1 * r1
    roots: list[float] = []
    if abs(aa) < 1e-14:
        if abs(bb) > 1e-300:
            roots.append(-cc / bb)
    else:
        disc = bb * bb - 4.0 * aa * cc
        if disc >= 0.0:
            sq = math.sqrt(disc)
            roots.extend(((-bb - sq) / (2.0 * aa), (-bb + sq) / (2.0 * aa)))
    rmin = min(r1, r2, r3)
    out = []
    for t in roots:
        if t + rmin < -1e-9 * (1.0 + abs(rmin)):
            continue  # would need a negative distance
        out.append(Point(float(p[0] + q[0] * t), float(p[1] + q[1] * t)))
    return out


def _containment_reduce(disks: list[Disk], tol: float) -> list[Disk]:
    """Drop disks that contain another disk of the family; the depth of
    a container is dominated everywhere, so this is exact."""
    keep = list(disks)
    changed = True
    while changed and len(keep) > 1:
        changed = False
        for i, j in itertools.permutations(range(len(keep)), 2):
            di, dj = keep[i], keep[j]
            if dist(di.center, dj.center) <= dj.radius - di.radius + tol:
                keep.pop(j)  # D_i inside D_j: drop the container D_j
                changed = True
                break
    return keep


def _candidate_points(disks: Sequence[Disk]) -> list[Point]:
    cands = [d.center for d in disks]
    for d1, d2 in itertools.combinations(disks, 2):
        bp = _pair_balance_point(d1, d2)
        if bp is not None:
            cands.append(bp)
        cands.extend(circle_circle_points(d1, d2))
    for trio in itertools.combinations(disks, 3):
        cands.extend(_equal_depth_points(*trio))
    return cands


def _best_candidate(
    cands: Sequence[Point], all_disks: Sequence[Disk]
) -> tuple[Point, float]:
    best: Point | None = None
    best_depth = math.inf
    for x in cands:
        depth = disk_depth(x, all_disks)
        if depth < best_depth - 1e-15 or (
            abs(depth - best_depth) <= 1e-15
            and best is not None
            and (x.x, x.y) < (best.x, best.y)
        ):
            best = x
            best_depth = depth
    assert best is not None
    return best, best_depth


def _exact_small(disks: Sequence[Disk]) -> tuple[Point, float]:
    """Exact minimax point for at most three disks."""
    assert 1 <= len(disks) <= 3
    tol = pierce_tol(_disk_scale(disks))
    reduced = _containment_reduce(list(disks), tol)
    cands = _candidate_points(reduced)
    return _best_candidate(cands, disks)


def _verdict(depth: float, tol: float) -> PiercingVerdict:
    if abs(depth) <= tol:
        return PiercingVerdict.TANGENT
    return PiercingVerdict.NONEMPTY if depth < 0 else PiercingVerdict.EMPTY


def _result(witness: Point, depth: float, tol: float, iterations: int) -> PiercingResult:
    verdict = _verdict(depth, tol)
    if verdict is PiercingVerdict.EMPTY:
        return PiercingResult(verdict, None, depth, iterations)
    return PiercingResult(verdict, witness, depth, iterations)


def triple_intersect_exact(d1: Disk, d2: Disk, d3: Disk) -> PiercingResult:
    """Exact common-point decision for three disks.

    The deepest candidate point decides the verdict; candidates cover
    every possible support of the convex depth minimum.
    """
    tol = pierce_tol(_disk_scale((d1, d2, d3)))
    witness, depth = _exact_small((d1, d2, d3))
    return _result(witness, depth, tol, 0)


def _subgradient(
    value_grad: Callable[[Point], tuple[float, float, float]],
    x0: Point,
    scale: float,
    max_iter: int,
) -> tuple[Point, float, int]:
    """Minimize a convex max-function by subgradient steps with
    geometric step decay, tracking the best iterate seen."""
    x = x0
    fx, gx, gy = value_grad(x)
    best_x, best_f = x, fx
    step = max(1.0 + scale, 1e-6)
    floor = 1e-13 * (1.0 + scale)
    beta = (floor / step) ** (1.0 / max(max_iter, 1))
    move_tol = 1e-12 * (1.0 + scale)
    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        x = Point(x.x - step * gx, x.y - step * gy)
        fx, gx, gy = value_grad(x)
        if fx < best_f:
            best_f, best_x = fx, x
        step *= beta
        if step < move_tol:
            break
    return best_x, best_f, iterations


def _disk_value_grad(disks: Sequence[Disk]) -> Callable[[Point], tuple[float, float, float]]:
    def eval_at(x: Point) -> tuple[float, float, float]:
        best = -math.inf
        bi = 0
        for i, d in enumerate(disks):
            v = dist(x, d.center) - d.radius
            if v > best:
                best = v
                bi = i
        c = disks[bi].center
        dx, dy = x.x - c.x, x.y - c.y
        norm = math.hypot(dx, dy)
        if norm == 0.0:
            return best, 1.0, 0.0  # arbitrary fixed direction at a cone apex
        return best, dx / norm, dy / norm

    return eval_at


def _polish_disks(
    disks: Sequence[Disk], x: Point, depth: float, band: float, pool_cap: int = 8
) -> tuple[Point, float]:
    """Run the exact small solver over subsets of the near-active disks
    and keep whichever point attains the smallest full-family depth."""
    vals = sorted(
        range(len(disks)),
        key=lambda i: dist(x, disks[i].center) - disks[i].radius,
        reverse=True,
    )
    fmax = dist(x, disks[vals[0]].center) - disks[vals[0]].radius
    near = [i for i in vals if dist(x, disks[i].center) - disks[i].radius >= fmax - band]
    near = near[:pool_cap]
    best_x, best_depth = x, depth
    for size in (1, 2, 3):
        for subset in itertools.combinations(near, size):
            cand, _ = _exact_small([disks[i] for i in subset])
            d_all = disk_depth(cand, disks)
            if d_all < best_depth:
                best_x, best_depth = cand, d_all
    return best_x, best_depth


def _sweep_all_small_subsets(disks: Sequence[Disk], best_x: Point, best_depth: float) -> tuple[Point, float]:
    for size in (1, 2, 3):
        for subset in itertools.combinations(disks, min(size, len(disks))):
            cand, _ = _exact_small(list(subset))
            d_all = disk_depth(cand, disks)
            if d_all < best_depth:
                best_x, best_depth = cand, d_all
    return best_x, best_depth


def pierce_disks(disks: Sequence[Disk], max_iter: int = 6000) -> PiercingResult:
    """Witness point and verdict for an arbitrary disk family.

    Families of up to three disks are dispatched to the exact solver.
    Larger families run the subgradient scheme from the centroid of the
    centers, then polish with the exact solver on the (at most three)
    active disks at the numeric optimum.
    """
    if not disks:
        raise ValueError("need at least one disk")
    disks = list(disks)
    scale = _disk_scale(disks)
    tol = pierce_tol(scale)
    if len(disks) <= 3:
        witness, depth = _exact_small(disks)
        return _result(witness, depth, tol, 0)

    max_iter = min(max_iter, 1_000_000)
    x0 = Point(
        sum(d.center.x for d in disks) / len(disks),
        sum(d.center.y for d in disks) / len(disks),
    )
    x, depth, iterations = _subgradient(_disk_value_grad(disks), x0, scale, max_iter)
    band = max(1e-5 * (1.0 + scale), 1e3 * tol)
    x, depth = _polish_disks(disks, x, depth, band)
    # A barely-positive depth after polishing may be solver error; the
    # support of the true minimum has at most three disks, so a sweep of
    # all small subsets settles it exactly for modest family sizes.
    if tol < depth <= 1e-3 * (1.0 + scale) and len(disks) <= 12:
        x, depth = _sweep_all_small_subsets(disks, x, depth)
    return _result(x, depth, tol, iterations)


def _ellipse_scale(regions: Sequence[EllipseRegion]) -> float:
    s = 0.0
    for e in regions:
        s = max(
            s,
            abs(e.focus_a.x),
            abs(e.focus_a.y),
            abs(e.focus_b.x),
            abs(e.focus_b.y),
            e.semimajor,
        )
    return s


def ellipse_depth(x: Point, regions: Sequence[EllipseRegion]) -> float:
    return max(
        dist(x, e.focus_a) + dist(x, e.focus_b) - 2.0 * e.semimajor for e in regions
    )


def _ellipse_value_grad(
    regions: Sequence[EllipseRegion],
) -> Callable[[Point], tuple[float, float, float]]:
    def eval_at(x: Point) -> tuple[float, float, float]:
        best = -math.inf
        bi = 0
        for i, e in enumerate(regions):
            v = dist(x, e.focus_a) + dist(x, e.focus_b) - 2.0 * e.semimajor
            if v > best:
                best = v
                bi = i
        e = regions[bi]
        gx = gy = 0.0
        for f in (e.focus_a, e.focus_b):
            dx, dy = x.x - f.x, x.y - f.y
            norm = math.hypot(dx, dy)
            if norm > 0.0:
                gx += dx / norm
                gy += dy / norm
        if gx == 0.0 and gy == 0.0:
            gx = 1.0
        return best, gx, gy

    return eval_at


def pierce_ellipses(regions: Sequence[EllipseRegion], max_iter: int = 60000) -> PiercingResult:
    """Common-point decision for ellipse regions (numeric minimax only).

    A single region is handled in closed form (any point of the focal
    segment is deepest; the midpoint is reported).  Families run the
    subgradient scheme followed by a derivative-free refinement.
    """
    if not regions:
        raise ValueError("need at least one ellipse region")
    regions = list(regions)
    scale = _ellipse_scale(regions)
    tol = pierce_tol(scale)
    if len(regions) == 1:
        e = regions[0]
        witness = midpoint(e.focus_a, e.focus_b)
        depth = dist(e.focus_a, e.focus_b) - 2.0 * e.semimajor
        return _result(witness, depth, tol, 0)

    max_iter = min(max_iter, 1_000_000)
    mids = [midpoint(e.focus_a, e.focus_b) for e in regions]
    x0 = Point(sum(m.x for m in mids) / len(mids), sum(m.y for m in mids) / len(mids))
    x, depth, iterations = _subgradient(_ellipse_value_grad(regions), x0, scale, max_iter)

    def objective(v: np.ndarray) -> float:
        return ellipse_depth(Point(float(v[0]), float(v[1])), regions)

    res = _scipy_minimize(
        objective,
        np.array([x.x, x.y]),
        method="Nelder-Mead",
        options={
            "xatol": 1e-14 * (1.0 + scale),
            "fatol": 1e-15 * (1.0 + scale),
            "maxiter": 4000,
            "maxfev": 4000,
        },
    )
    refined = Point(float(res.x[0]), float(res.x[1]))
    refined_depth = ellipse_depth(refined, regions)
    if refined_depth < depth:
        x, depth = refined, refined_depth
    return _result(x, depth, tol, iterations)


@dataclass(frozen=True)
class PairStretch:
    """Stretch statistics of one matched pair around a center point."""

    index: int
    length: float
    ratio: float | None  # None for zero-length pairs
    segment_distance: float
    within_half_length: bool


@dataclass(frozen=True)
class StretchReport:
    center: Point
    bound: float
    pairs: tuple[PairStretch, ...]
    max_ratio: float | None
    holds: bool
    zero_length_pairs: tuple[int, ...]


def stretch_report(
    pairs: Sequence[tuple[Point, Point]], o: Point, bound: float
) -> StretchReport:
    """Per-pair detour ratios (|a-o| + |b-o|) / |a-b| against a bound.

    Zero-length pairs have no ratio and are listed separately.  Each
    entry also records the distance from ``o`` to the pair's segment
    and whether it is at most half the pair length (the disk-membership
    equivalent).
    """
    scale = 0.0
    for a, b in pairs:
        scale = max(scale, abs(a.x), abs(a.y), abs(b.x), abs(b.y))
    scale = max(scale, abs(o.x), abs(o.y))
    tol = pierce_tol(scale)

    stats: list[PairStretch] = []
    zeros: list[int] = []
    max_ratio: float | None = None
    for idx, (a, b) in enumerate(pairs):
        length = dist(a, b)
        seg_dist = point_segment_distance(o, Segment(a, b))
        within = seg_dist <= 0.5 * length + tol
        if length == 0.0:
            zeros.append(idx)
            stats.append(PairStretch(idx, 0.0, None, seg_dist, within))
            continue
        ratio = (dist(a, o) + dist(b, o)) / length
        stats.append(PairStretch(idx, length, ratio, seg_dist, within))
        if max_ratio is None or ratio > max_ratio:
            max_ratio = ratio
    holds = max_ratio is None or max_ratio <= bound + tol
    return StretchReport(o, bound, tuple(stats), max_ratio, holds, tuple(zeros))


def midpoint_shortest_edge(pairs: Sequence[tuple[Point, Point]]) -> Point:
    """Midpoint of a minimum-length pair; ties go to the lowest index."""
    if not pairs:
        raise ValueError("need at least one pair")
    best_idx = 0
    best_len = dist(pairs[0][0], pairs[0][1])
    for idx in range(1, len(pairs)):
        length = dist(pairs[idx][0], pairs[idx][1])
        if length < best_len:
            best_idx, best_len = idx, length
    a, b = pairs[best_idx]
    return midpoint(a, b)
