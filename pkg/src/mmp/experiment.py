"""Randomized verification campaigns over brute-force max-sum matchings.

Each campaign samples point sets uniformly from [-1, 1]^2, computes the
exact max-sum matching, and checks every guarantee the theory provides
at that size: the piercing verdict and witness stretch for uncolored
sets, pairwise disk overlap and the vector inequality for colored sets,
the midpoint-of-shortest-edge bounds for both, and the configuration
dichotomy at three pairs.  Violation counts must be zero; observed
empty intersections for colored sets are reported but are not failures.

Reports are deterministic for a given seed (no timing fields) and
serialize canonically.
"""

from __future__ import annotations

import math

import numpy as np

from .classify import EASY_LABELS, CaseLabel, WitnessConstructionError, classify_three, witness_easy_case
from .geom import Disk, Segment, dist
from .matching import PointSet, max_sum_bruteforce
from .piercing import (
    PairVerdict,
    PiercingVerdict,
    midpoint_shortest_edge,
    pairwise_intersect,
    pierce_disks,
    stretch_report,
)
from .tolerances import pierce_tol

__all__ = ["run_campaign", "CAMPAIGN_SCHEMA"]

CAMPAIGN_SCHEMA = "mmp.campaign/1"

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)

# Fixed histogram bins for the witness stretch ratio (1 .. sqrt(2)).
_HIST_BINS = 16
_HIST_LO = 1.0
_HIST_HI = 1.45


def _hist_index(ratio: float) -> int:
    if ratio <= _HIST_LO:
        return 0
    if ratio >= _HIST_HI:
        return _HIST_BINS - 1
    return min(int((ratio - _HIST_LO) / (_HIST_HI - _HIST_LO) * _HIST_BINS), _HIST_BINS - 1)


def run_campaign(
    n_values: list[int],
    trials: int,
    seed: int,
    colored: bool = False,
) -> dict:
    """Run ``trials`` random instances per n and aggregate the checks."""
    rng = np.random.default_rng(seed)
    per_n: dict[str, dict] = {}
    total_violations = 0

    for n in n_values:
        if n < 2:
            raise ValueError(f"campaign needs n >= 2, got {n}")
        violations: dict[str, int] = {}
        label_counts: dict[str, int] = {}
        fragile_count = 0
        empty_observed = 0
        max_witness_ratio = 0.0
        max_midpoint_ratio = 0.0
        hist = [0] * _HIST_BINS

        def bump(key: str) -> None:
            violations[key] = violations.get(key, 0) + 1

        for _ in range(trials):
            coords = rng.uniform(-1.0, 1.0, (2 * n, 2))
            if colored:
                ps = PointSet.colored(
                    [tuple(p) for p in coords[:n]], [tuple(p) for p in coords[n:]]
                )
            else:
                ps = PointSet.uncolored([tuple(p) for p in coords])
            matching, _ = max_sum_bruteforce(ps)
            pairs = matching.segments(ps)
            disks = [Disk.diametral(a, b) for a, b in pairs]
            scale = max(ps.scale(), max(d.radius for d in disks))
            tol = pierce_tol(scale)

            if colored:
                for i in range(len(disks)):
                    for j in range(i + 1, len(disks)):
                        if pairwise_intersect(disks[i], disks[j]) is PairVerdict.DISJOINT:
                            bump("pairwise_disjoint")
                        (ai, aj) = matching.pairs[i]
                        (bi, bj) = matching.pairs[j]
                        a, ap = ps.points[ai], ps.points[aj]
                        b, bp = ps.points[bi], ps.points[bj]
                        lhs = math.hypot(
                            (a.x + ap.x) - (b.x + bp.x), (a.y + ap.y) - (b.y + bp.y)
                        )
                        rhs = dist(a, ap) + dist(b, bp)
                        if lhs > rhs + 1e-9 * (1.0 + rhs):
                            bump("prop1_vector_inequality")
                if n >= 3:
                    result = pierce_disks(disks)
                    if result.verdict is PiercingVerdict.EMPTY:
                        empty_observed += 1
            else:
                result = pierce_disks(disks)
                if result.verdict is PiercingVerdict.EMPTY or result.witness is None:
                    bump("empty_intersection")
                else:
                    witness = result.witness
                    worst = max(dist(witness, d.center) - d.radius for d in disks)
                    if worst > tol:
                        bump("witness_invalid")
                    sr = stretch_report(pairs, witness, SQRT2)
                    if sr.max_ratio is not None:
                        max_witness_ratio = max(max_witness_ratio, sr.max_ratio)
                        hist[_hist_index(sr.max_ratio)] += 1
                        if sr.max_ratio > SQRT2 + 1e-9:
                            bump("sqrt2_stretch")
                    if not all(s.within_half_length for s in sr.pairs):
                        bump("segment_distance_above_half_length")

                if n == 3:
                    segs = [Segment(a, b) for a, b in pairs]
                    cls = classify_three(segs)
                    label_counts[cls.label.value] = label_counts.get(cls.label.value, 0) + 1
                    if cls.fragile:
                        fragile_count += 1
                    elif cls.label is CaseLabel.NOT_MAX_SUM:
                        bump("dichotomy")
                    elif cls.label in EASY_LABELS:
                        try:
                            witness_easy_case(segs, cls)
                        except WitnessConstructionError:
                            bump("easy_witness_failed")

            mid = midpoint_shortest_edge(pairs)
            sr5 = stretch_report(pairs, mid, SQRT5)
            if sr5.max_ratio is not None:
                max_midpoint_ratio = max(max_midpoint_ratio, sr5.max_ratio)
            if not sr5.holds:
                bump("sqrt5_midpoint")
            sr25 = stretch_report(pairs, mid, 2.5)
            if not sr25.holds:
                bump("eppstein_midpoint")

        total_violations += sum(violations.values())
        per_n[str(n)] = {
            "trials": trials,
            "violations": dict(sorted(violations.items())),
            "max_witness_stretch": max_witness_ratio,
            "max_midpoint_stretch": max_midpoint_ratio,
            "stretch_histogram": hist,
            "label_counts": dict(sorted(label_counts.items())),
            "fragile_instances": fragile_count,
            "empty_intersections_observed": empty_observed,
        }

    return {
        "schema": CAMPAIGN_SCHEMA,
        "colored": colored,
        "seed": seed,
        "n_values": list(n_values),
        "trials_per_n": trials,
        "per_n": per_n,
        "total_violations": total_violations,
    }
