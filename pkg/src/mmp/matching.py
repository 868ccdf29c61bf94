"""Perfect matchings of planar point sets and the max-sum oracle.

The brute-force enumerator is the ground truth everywhere: uncolored
sets are enumerated over all (2n-1)!! pairings, colored (red/blue) sets
over all n! bichromatic assignments.  A greedy + 2-opt local search is
available for sizes beyond the enumeration cap but is always labeled as
a heuristic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .geom import Point, dist
from .tolerances import cost_tol

__all__ = [
    "Color",
    "PointSet",
    "Matching",
    "MatchingError",
    "SizeLimitError",
    "cost",
    "iter_matchings",
    "max_sum_bruteforce",
    "max_sum_2opt",
    "verify_2opt_maximality",
    "TwoOptViolation",
    "BRUTE_FORCE_POINT_CAP",
]

BRUTE_FORCE_POINT_CAP = 16


class Color(Enum):
    RED = "red"
    BLUE = "blue"


class MatchingError(ValueError):
    """A pairing that is not a valid (bichromatic) perfect matching."""


class SizeLimitError(ValueError):
    """Point set too large for exhaustive enumeration."""


@dataclass(frozen=True)
class PointSet:
    """An even-sized list of points, optionally colored red/blue.

    Colored sets must be balanced; every matching of a colored set joins
    one red and one blue point.
    """

    points: tuple[Point, ...]
    colors: tuple[Color, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.points)
        if n < 2 or n % 2 != 0:
            raise ValueError(f"point set must have even size >= 2, got {n}")
        if self.colors is not None:
            if len(self.colors) != n:
                raise ValueError("one color per point required")
            reds = sum(1 for c in self.colors if c is Color.RED)
            if reds * 2 != n:
                raise ValueError(f"unbalanced coloring: {reds} red of {n}")

    @staticmethod
    def uncolored(points: Iterable[tuple[float, float] | Point]) -> "PointSet":
        return PointSet(tuple(_as_point(p) for p in points))

    @staticmethod
    def colored(
        red: Iterable[tuple[float, float] | Point],
        blue: Iterable[tuple[float, float] | Point],
    ) -> "PointSet":
        reds = tuple(_as_point(p) for p in red)
        blues = tuple(_as_point(p) for p in blue)
        return PointSet(
            reds + blues,
            (Color.RED,) * len(reds) + (Color.BLUE,) * len(blues),
        )

    @property
    def n_pairs(self) -> int:
        return len(self.points) // 2

    @property
    def is_colored(self) -> bool:
        return self.colors is not None

    def scale(self) -> float:
        return max(max(abs(p.x), abs(p.y)) for p in self.points)


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(float(x), float(y))


def canonical_pairs(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Sort each pair and the pair list; the canonical form used for
    lexicographic tie-breaking and serialization."""
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


@dataclass(frozen=True)
class Matching:
    """A perfect pairing of point indices with its total Euclidean cost."""

    pairs: tuple[tuple[int, int], ...]
    cost: float

    @staticmethod
    def of(ps: PointSet, pairs: Iterable[tuple[int, int]]) -> "Matching":
        pairs = canonical_pairs(pairs)
        _validate_pairs(ps, pairs)
        return Matching(pairs, _pair_cost(ps.points, pairs))

    def segments(self, ps: PointSet) -> list[tuple[Point, Point]]:
        return [(ps.points[i], ps.points[j]) for i, j in self.pairs]


def _validate_pairs(ps: PointSet, pairs: Sequence[tuple[int, int]]) -> None:
    n = len(ps.points)
    seen: set[int] = set()
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise MatchingError(f"invalid pair ({i}, {j}) for {n} points")
        if i in seen or j in seen:
            raise MatchingError(f"index reused in pair ({i}, {j})")
        seen.update((i, j))
        if ps.colors is not None and ps.colors[i] is ps.colors[j]:
            raise MatchingError(f"monochromatic pair ({i}, {j})")
    if len(seen) != n:
        raise MatchingError("pairs do not cover every point")


def _pair_cost(points: Sequence[Point], pairs: Sequence[tuple[int, int]]) -> float:
    # summed in ascending pair order for bit-reproducibility
    total = 0.0
    for i, j in pairs:
        total += dist(points[i], points[j])
    return total


def cost(ps: PointSet, m: Matching) -> float:
    """Total Euclidean length of the matching (validates it first)."""
    _validate_pairs(ps, m.pairs)
    return _pair_cost(ps.points, m.pairs)


def iter_matchings(ps: PointSet) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings in lexicographic order of their canonical
    pair lists.  Colored sets yield bichromatic matchings only."""
    if ps.colors is None:
        yield from _iter_uncolored(list(range(len(ps.points))))
    else:
        reds = [i for i, c in enumerate(ps.colors) if c is Color.RED]
        blues = [i for i, c in enumerate(ps.colors) if c is Color.BLUE]
        for perm in itertools.permutations(blues):
            yield canonical_pairs(zip(reds, perm))


def _iter_uncolored(indices: list[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not indices:
        yield ()
        return
    first = indices[0]
    rest = indices[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _iter_uncolored(remaining):
            yield ((first, partner),) + tail


def _check_cap(ps: PointSet) -> None:
    if len(ps.points) > BRUTE_FORCE_POINT_CAP:
        raise SizeLimitError(
            f"{len(ps.points)} points exceed the exhaustive-enumeration cap "
            f"of {BRUTE_FORCE_POINT_CAP}; use max_sum_2opt for a heuristic"
        )


def _enumerate_uncolored_best(points: Sequence[Point]) -> tuple[tuple[tuple[int, int], ...], float, float]:
    """Exhaustive (2n-1)!! scan tracking the best and second-best costs.

    Enumeration pairs the lowest free index with increasing partners, so
    the first matching attaining the maximum is the lexicographically
    smallest among exact ties.
    """
    n = len(points)
    dmat = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dmat[i][j] = dmat[j][i] = dist(points[i], points[j])
    best = -math.inf
    second = -math.inf
    best_pairs: list[tuple[int, int]] = []
    stack: list[tuple[int, int]] = []
    used = [False] * n

    def rec(acc: float, remaining: int) -> None:
        nonlocal best, second
        if remaining == 0:
            if acc > best:
                second = best
                best = acc
                best_pairs[:] = stack
            elif acc > second:
                second = acc
            return
        i = 0
        while used[i]:
            i += 1
        used[i] = True
        di = dmat[i]
        for j in range(i + 1, n):
            if used[j]:
                continue
            used[j] = True
            stack.append((i, j))
            rec(acc + di[j], remaining - 2)
            stack.pop()
            used[j] = False
        used[i] = False

    rec(0.0, n)
    return tuple(best_pairs), best, second


def _enumerate_colored_best(ps: PointSet) -> tuple[tuple[tuple[int, int], ...], float, float]:
    """All n! bichromatic assignments, same tracking as the uncolored scan."""
    reds = [i for i, c in enumerate(ps.colors) if c is Color.RED]
    blues = [i for i, c in enumerate(ps.colors) if c is Color.BLUE]
    points = ps.points
    best = -math.inf
    second = -math.inf
    best_perm: tuple[int, ...] | None = None
    for perm in itertools.permutations(blues):
        c = 0.0
        for r, b in zip(reds, perm):
            c += dist(points[r], points[b])
        if c > best:
            second = best
            best = c
            best_perm = perm
        elif c > second:
            second = c
    assert best_perm is not None
    return canonical_pairs(zip(reds, best_perm)), best, second


def max_sum_bruteforce(ps: PointSet) -> tuple[Matching, bool]:
    """Exact max-sum matching by exhaustive enumeration.

    Returns the optimal matching (lexicographically smallest pair list
    among exact ties) and whether it is unique, i.e. no other matching
    comes within the cost tie tolerance of the optimum.
    """
    _check_cap(ps)
    if ps.colors is None:
        pairs, best, second = _enumerate_uncolored_best(ps.points)
    else:
        pairs, best, second = _enumerate_colored_best(ps)
    is_unique = (best - second) > cost_tol(best)
    return Matching(canonical_pairs(pairs), best), is_unique


@dataclass(frozen=True)
class TwoOptViolation:
    """A pair of matched pairs admitting an improving rematch."""

    pair_indices: tuple[int, int]
    replacement: tuple[tuple[int, int], tuple[int, int]]
    gain: float


def _rematch_options(
    ps: PointSet, a: tuple[int, int], b: tuple[int, int]
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    (i, j), (k, l) = a, b
    options = []
    for p1, p2 in (((i, k), (j, l)), ((i, l), (j, k))):
        if ps.colors is not None and (
            ps.colors[p1[0]] is ps.colors[p1[1]] or ps.colors[p2[0]] is ps.colors[p2[1]]
        ):
            continue
        options.append((p1, p2))
    return options


def verify_2opt_maximality(ps: PointSet, m: Matching) -> list[TwoOptViolation]:
    """All pairwise rematches that would increase the total cost.

    An empty list is a necessary (not sufficient) condition for the
    matching to be max-sum.
    """
    _validate_pairs(ps, m.pairs)
    pts = ps.points
    tol = cost_tol(m.cost)
    violations = []
    for a in range(len(m.pairs)):
        for b in range(a + 1, len(m.pairs)):
            (i, j), (k, l) = m.pairs[a], m.pairs[b]
            current = dist(pts[i], pts[j]) + dist(pts[k], pts[l])
            for p1, p2 in _rematch_options(ps, m.pairs[a], m.pairs[b]):
                candidate = dist(pts[p1[0]], pts[p1[1]]) + dist(pts[p2[0]], pts[p2[1]])
                gain = candidate - current
                if gain > tol:
                    violations.append(TwoOptViolation((a, b), (p1, p2), gain))
    return violations


def max_sum_2opt(ps: PointSet) -> Matching:
    """Greedy longest-pair start followed by 2-opt ascent.

    Heuristic: the result is 2-opt maximal but carries no optimality
    guarantee.  Deterministic for a given input.
    """
    pts = ps.points
    n = len(pts)
    candidates = []
    for i in range(n):
        for j in range(i + 1, n):
            if ps.colors is not None and ps.colors[i] is ps.colors[j]:
                continue
            candidates.append((-dist(pts[i], pts[j]), i, j))
    candidates.sort()

    used: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for _, i, j in candidates:
        if i in used or j in used:
            continue
        pairs.append((i, j))
        used.update((i, j))

    matching = Matching.of(ps, pairs)
    while True:
        violations = verify_2opt_maximality(ps, matching)
        if not violations:
            return matching
        worst = max(violations, key=lambda v: v.gain)
        a, b = worst.pair_indices
        new_pairs = [p for idx, p in enumerate(matching.pairs) if idx not in (a, b)]
        new_pairs.extend(worst.replacement)
        matching = Matching.of(ps, new_pairs)
