import itertools
import math

import numpy as np
import pytest

from mmp.geom import Disk, EllipseRegion, Point, dist
from mmp.matching import PointSet, max_sum_bruteforce
from mmp.piercing import (
    PairVerdict,
    PiercingVerdict,
    circle_circle_points,
    disk_depth,
    midpoint_shortest_edge,
    pairwise_intersect,
    pierce_disks,
    pierce_ellipses,
    stretch_report,
    triple_intersect_exact,
)

SQRT3 = math.sqrt(3.0)


def P(x, y):
    return Point(float(x), float(y))


def family_disks(eps=0.02):
    a, b, c = P(-1, 0), P(1, 0), P(0, SQRT3)
    ap = P(eps / 2, SQRT3 * (1 - eps / 2))
    bp = P(-eps / 2, SQRT3 * (1 - eps / 2))
    cp = P(0, 3)
    return Disk.diametral(a, ap), Disk.diametral(b, bp), Disk.diametral(c, cp)


class TestPairwise:
    def test_overlap(self):
        assert pairwise_intersect(Disk(P(0, 0), 1), Disk(P(1, 0), 1)) is PairVerdict.OVERLAP

    def test_tangent(self):
        assert pairwise_intersect(Disk(P(0, 0), 1), Disk(P(2, 0), 1)) is PairVerdict.TANGENT

    def test_disjoint(self):
        assert (
            pairwise_intersect(Disk(P(0, 0), 0.5), Disk(P(2, 0), 0.5)) is PairVerdict.DISJOINT
        )

    def test_containment_is_overlap(self):
        assert pairwise_intersect(Disk(P(0, 0), 2), Disk(P(0.5, 0), 0.1)) is PairVerdict.OVERLAP


class TestTripleExact:
    def test_unit_triangle_nonempty(self):
        d1 = Disk(P(0, 0), 1)
        d2 = Disk(P(1, 0), 1)
        d3 = Disk(P(0.5, SQRT3 / 2), 1)
        res = triple_intersect_exact(d1, d2, d3)
        assert res.verdict is PiercingVerdict.NONEMPTY
        assert res.witness is not None

    def test_family_triple_empty(self):
        res = triple_intersect_exact(*family_disks())
        assert res.verdict is PiercingVerdict.EMPTY
        assert res.witness is None
        assert res.depth > 1e-3

    def test_spoke_triple_singleton(self):
        z = P(1, 1)
        disks = [Disk.diametral(v, z) for v in (P(0, 0), P(4, 0), P(0, 4))]
        res = triple_intersect_exact(*disks)
        assert res.verdict is PiercingVerdict.TANGENT
        assert res.witness is not None
        assert dist(res.witness, z) < 1e-9
        assert abs(res.depth) < 1e-9

    def test_nested_disks(self):
        res = triple_intersect_exact(Disk(P(0, 0), 3), Disk(P(1, 0), 2), Disk(P(2, 0), 1))
        assert res.verdict is PiercingVerdict.NONEMPTY
        assert res.depth == pytest.approx(-1.0, abs=1e-12)

    def test_matches_bruteforce_grid_probe(self):
        # independent probe: dense grid minimum of the depth function
        rng = np.random.default_rng(2)
        for _ in range(20):
            disks = [
                Disk(P(*rng.uniform(-1, 1, 2)), float(rng.uniform(0.2, 1.2)))
                for _ in range(3)
            ]
            res = triple_intersect_exact(*disks)
            xs = np.linspace(-2.5, 2.5, 101)
            grid_depth = min(
                disk_depth(P(x, y), disks) for x in xs for y in xs
            )
            # the exact depth can only improve on any grid point
            assert res.depth <= grid_depth + 1e-9
            # and the grid cannot beat it by more than one cell diagonal
            assert grid_depth <= res.depth + 0.08


class TestPierceDisks:
    def test_single_disk(self):
        res = pierce_disks([Disk(P(3, 4), 2)])
        assert res.verdict is PiercingVerdict.NONEMPTY
        assert res.witness == P(3, 4)
        assert res.depth == pytest.approx(-2.0)

    def test_two_tangent_disks(self):
        res = pierce_disks([Disk(P(0, 0), 1), Disk(P(2, 0), 1)])
        assert res.verdict is PiercingVerdict.TANGENT
        assert dist(res.witness, P(1, 0)) < 1e-9
        assert abs(res.depth) < 1e-9

    def test_max_sum_disks_share_point(self):
        rng = np.random.default_rng(8)
        for _ in range(12):
            pts = rng.uniform(-1, 1, (6, 2))
            ps = PointSet.uncolored([tuple(p) for p in pts])
            m, _ = max_sum_bruteforce(ps)
            disks = [Disk.diametral(a, b) for a, b in m.segments(ps)]
            res = pierce_disks(disks)
            assert res.verdict is not PiercingVerdict.EMPTY
            triple = triple_intersect_exact(*disks)
            assert triple.verdict is not PiercingVerdict.EMPTY

    def test_helly_consistency_random_families(self):
        rng = np.random.default_rng(44)
        for _ in range(40):
            n = int(rng.integers(4, 8))
            disks = [
                Disk(P(*rng.uniform(-1, 1, 2)), float(rng.uniform(0.3, 1.5)))
                for _ in range(n)
            ]
            res = pierce_disks(disks)
            triples_ok = all(
                triple_intersect_exact(*trio).verdict is not PiercingVerdict.EMPTY
                for trio in itertools.combinations(disks, 3)
            )
            assert (res.verdict is not PiercingVerdict.EMPTY) == triples_ok

    def test_witness_validity(self):
        rng = np.random.default_rng(45)
        for _ in range(30):
            n = int(rng.integers(1, 9))
            disks = [
                Disk(P(*rng.uniform(-1, 1, 2)), float(rng.uniform(0.4, 1.6)))
                for _ in range(n)
            ]
            res = pierce_disks(disks)
            if res.verdict is not PiercingVerdict.EMPTY:
                assert disk_depth(res.witness, disks) <= 1e-8

    def test_sqrt2_chain_inside_disk(self):
        # any point of a diametral disk detours by at most sqrt(2)
        rng = np.random.default_rng(46)
        for _ in range(300):
            a, b = P(*rng.uniform(-1, 1, 2)), P(*rng.uniform(-1, 1, 2))
            if dist(a, b) < 1e-6:
                continue
            d = Disk.diametral(a, b)
            r = d.radius * math.sqrt(rng.uniform(0, 1))
            t = rng.uniform(0, 2 * math.pi)
            x = P(d.center.x + r * math.cos(t), d.center.y + r * math.sin(t))
            assert dist(a, x) + dist(b, x) <= math.sqrt(2) * dist(a, b) + 1e-9


class TestLens:
    def test_tangent_circles_single_point(self):
        pts = circle_circle_points(Disk(P(0, 0), 1), Disk(P(2, 0), 1))
        assert len(pts) == 1
        assert dist(pts[0], P(1, 0)) < 1e-9

    def test_unit_circles_lens(self):
        pts = circle_circle_points(Disk(P(0, 0), 1), Disk(P(1, 0), 1))
        assert len(pts) == 2
        for p in pts:
            assert abs(dist(p, P(0, 0)) - 1) < 1e-12
            assert abs(dist(p, P(1, 0)) - 1) < 1e-12


class TestStretch:
    def test_point_on_segment_ratio_one(self):
        rep = stretch_report([(P(0, 0), P(2, 0))], P(0.5, 0), math.sqrt(2))
        assert rep.max_ratio == pytest.approx(1.0, abs=1e-12)
        assert rep.holds

    def test_equilateral_centroid_exact_fingerhut_ratio(self):
        pairs = [
            (P(0, 0), P(1, 0)),
            (P(1, 0), P(0.5, SQRT3 / 2)),
            (P(0.5, SQRT3 / 2), P(0, 0)),
        ]
        centroid = P(0.5, SQRT3 / 6)
        rep = stretch_report(pairs, centroid, 2 / SQRT3)
        assert rep.holds
        for s in rep.pairs:
            assert s.ratio == pytest.approx(2 / SQRT3, abs=1e-12)

    def test_zero_length_pairs_reported_separately(self):
        rep = stretch_report([(P(0, 0), P(0, 0)), (P(0, 0), P(1, 0))], P(5, 5), 2.5)
        assert rep.zero_length_pairs == (0,)
        assert rep.pairs[0].ratio is None
        assert rep.max_ratio is not None

    def test_segment_distance_flag(self):
        rep = stretch_report([(P(0, 0), P(2, 0))], P(1, 0.9), math.sqrt(2))
        assert rep.pairs[0].within_half_length
        rep2 = stretch_report([(P(0, 0), P(2, 0))], P(1, 1.1), math.sqrt(2))
        assert not rep2.pairs[0].within_half_length


class TestMidpointShortest:
    def test_basic(self):
        assert midpoint_shortest_edge([(P(0, 0), P(2, 0)), (P(5, 0), P(5.5, 0))]) == P(5.25, 0)

    def test_tie_lowest_index(self):
        assert midpoint_shortest_edge([(P(0, 0), P(1, 0)), (P(10, 0), P(11, 0))]) == P(0.5, 0)

    def test_family_shortest_is_top_pair(self):
        eps = 0.02
        pairs = [
            (P(-1, 0), P(eps / 2, SQRT3 * (1 - eps / 2))),
            (P(1, 0), P(-eps / 2, SQRT3 * (1 - eps / 2))),
            (P(0, SQRT3), P(0, 3)),
        ]
        mid = midpoint_shortest_edge(pairs)
        assert mid == P(0, (3 + SQRT3) / 2)


class TestPierceEllipses:
    def test_single_region_midpoint(self):
        res = pierce_ellipses([EllipseRegion(P(0, 0), P(2, 0), 2.0)])
        assert res.witness == P(1, 0)
        assert res.verdict is PiercingVerdict.NONEMPTY

    def test_equilateral_tight_factor_singleton(self):
        pairs = [
            (P(0, 0), P(1, 0)),
            (P(1, 0), P(0.5, SQRT3 / 2)),
            (P(0.5, SQRT3 / 2), P(0, 0)),
        ]
        regions = [EllipseRegion(a, b, dist(a, b) / SQRT3) for a, b in pairs]
        res = pierce_ellipses(regions)
        assert res.verdict is PiercingVerdict.TANGENT
        assert dist(res.witness, P(0.5, SQRT3 / 6)) < 1e-6

    def test_equilateral_below_tight_factor_empty(self):
        pairs = [
            (P(0, 0), P(1, 0)),
            (P(1, 0), P(0.5, SQRT3 / 2)),
            (P(0.5, SQRT3 / 2), P(0, 0)),
        ]
        regions = [EllipseRegion(a, b, 0.99 * dist(a, b) / SQRT3) for a, b in pairs]
        res = pierce_ellipses(regions)
        assert res.verdict is PiercingVerdict.EMPTY
