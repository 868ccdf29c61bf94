"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The randomized
criteria share module-scoped campaign runs; seeds are frozen here.
"""

import math
import time

import pytest

from mmp.constructions import (
    ConstructionError,
    equilateral_tightness,
    many_pair_eps_max,
    theorem2_instance,
    theorem3_instance,
)
from mmp.docio import canonical_json
from mmp.experiment import run_campaign
from mmp.geom import EllipseRegion, Point, dist
from mmp.lemmas import run_checker
from mmp.matching import Matching, max_sum_bruteforce
from mmp.piercing import (
    PiercingVerdict,
    pierce_ellipses,
    stretch_report,
    triple_intersect_exact,
)
from mmp.tolerances import pierce_tol

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)
SQRT10 = math.sqrt(10.0)

SEED_UNCOLORED = 71
SEED_COLORED = 72
SEED_LEMMAS = 73

UNCOLORED_NS = [2, 3, 4, 5, 6]
COLORED_NS = [2, 3, 4, 5]
CAMPAIGN_TRIALS = 500

# 10^4 accepted trials, except 10^3 for the oracle-backed checkers.
LEMMA_TRIALS = {
    "lemma1": 10_000,
    "lemma5": 10_000,
    "lemma6": 10_000,
    "monotone3": 10_000,
    "common-point-7": 1_000,
    "common-point-8": 1_000,
    "common-point-9-adjacent": 1_000,
    "prop2": 1_000,
    "extension": 1_000,
}
CONTROL_TRIALS = 500


def note(criterion: int, message: str) -> None:
    print(f"\nACCEPTANCE {criterion}: PASS - {message}")


@pytest.fixture(scope="module")
def campaign_uncolored():
    start = time.perf_counter()
    report = run_campaign(UNCOLORED_NS, CAMPAIGN_TRIALS, seed=SEED_UNCOLORED)
    return report, time.perf_counter() - start


@pytest.fixture(scope="module")
def campaign_colored():
    start = time.perf_counter()
    report = run_campaign(COLORED_NS, CAMPAIGN_TRIALS, seed=SEED_COLORED, colored=True)
    return report, time.perf_counter() - start


@pytest.fixture(scope="module")
def lemma_reports():
    start = time.perf_counter()
    reports = {
        lemma_id: run_checker(lemma_id, trials, seed=SEED_LEMMAS)
        for lemma_id, trials in LEMMA_TRIALS.items()
    }
    controls = {
        lemma_id: run_checker(lemma_id, CONTROL_TRIALS, seed=SEED_LEMMAS + 1, negative_control=True)
        for lemma_id in LEMMA_TRIALS
    }
    return reports, controls, time.perf_counter() - start


def test_criterion_01_three_pair_counterexample():
    start = time.perf_counter()
    eps = 0.02
    inst = theorem2_instance(eps)
    ps = inst.point_set

    optimum, unique = max_sum_bruteforce(ps)
    assert optimum.pairs == ((0, 3), (1, 4), (2, 5))
    assert unique
    assert optimum.cost >= 7 - SQRT3 - 2 * eps - 1e-12

    rot1 = Matching.of(ps, [(0, 4), (1, 5), (2, 3)])
    rot2 = Matching.of(ps, [(0, 5), (1, 3), (2, 4)])
    assert abs(rot1.cost - (2 + SQRT10)) <= 1e-9
    assert abs(rot2.cost - (2 + SQRT10)) <= 1e-9

    result = triple_intersect_exact(*inst.triple_disks())
    assert result.verdict is PiercingVerdict.EMPTY
    scale = max(max(abs(p.x), abs(p.y)) for p in ps.points)
    assert result.depth > 10 * pierce_tol(scale)

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    note(
        1,
        f"unique optimum cost {optimum.cost:.6f} >= {7 - SQRT3 - 2 * eps:.6f}, "
        f"alternatives at 2+sqrt(10), triple depth {result.depth:.4f} in {elapsed * 1000:.0f} ms",
    )


def test_criterion_02_threshold_fidelity():
    theorem2_instance(0.026)
    with pytest.raises(ConstructionError):
        theorem2_instance(0.027)
    for n in range(4, 9):
        limit = many_pair_eps_max(n)
        with pytest.raises(ConstructionError):
            theorem3_instance(n, limit)
        with pytest.raises(ConstructionError):
            theorem3_instance(n, limit * 1.5)
        theorem3_instance(n, limit * 0.9)
    note(2, "epsilon 0.026 accepted / 0.027 rejected; n-pair threshold enforced for n in 4..8")


def test_criterion_03_many_pair_counterexample():
    start = time.perf_counter()
    for n in (4, 5, 6):
        inst = theorem3_instance(n)
        eps = inst.epsilon
        lower = 7 - SQRT3 - 2 * eps
        upper = SQRT10 + 2 + eps + 2 * (n - 2) * eps
        assert lower > upper + 1e-9
        assert inst.claimed_optimum.cost >= lower - 1e-9
        result = triple_intersect_exact(*inst.triple_disks())
        assert result.verdict is PiercingVerdict.EMPTY
        if n == 4:
            optimum, _ = max_sum_bruteforce(inst.point_set)
            partner = {i: j for i, j in optimum.pairs} | {j: i for i, j in optimum.pairs}
            assert partner[n + 2] not in (0, 1)  # c' never matched to a or b
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    note(3, f"n in {{4,5,6}}: bound separation, empty named triples, n=4 oracle shape in {elapsed:.2f} s")


def test_criterion_04_common_point_property(campaign_uncolored):
    report, elapsed = campaign_uncolored
    assert report["total_violations"] == 0
    for n in UNCOLORED_NS:
        block = report["per_n"][str(n)]
        assert block["trials"] == CAMPAIGN_TRIALS
        assert block["violations"] == {}
        assert block["max_witness_stretch"] <= SQRT2 + 1e-9
    assert elapsed < 120.0
    worst = max(report["per_n"][str(n)]["max_witness_stretch"] for n in UNCOLORED_NS)
    note(
        4,
        f"{CAMPAIGN_TRIALS} trials x n in {UNCOLORED_NS}: 0 violations, "
        f"max witness stretch {worst:.6f} <= sqrt(2), {elapsed:.1f} s",
    )


def test_criterion_05_pairwise_property(campaign_colored):
    report, elapsed = campaign_colored
    assert report["total_violations"] == 0
    for n in COLORED_NS:
        block = report["per_n"][str(n)]
        assert block["trials"] == CAMPAIGN_TRIALS
        assert block.get("violations", {}).get("pairwise_disjoint", 0) == 0
        assert block.get("violations", {}).get("prop1_vector_inequality", 0) == 0
    note(
        5,
        f"{CAMPAIGN_TRIALS} colored trials x n in {COLORED_NS}: no disjoint matched disks, "
        f"vector inequality holds, {elapsed:.1f} s",
    )


def test_criterion_06_stretch_ladder(campaign_uncolored, campaign_colored):
    for report, _ in (campaign_uncolored, campaign_colored):
        for block in report["per_n"].values():
            assert block["violations"].get("sqrt5_midpoint", 0) == 0
            assert block["violations"].get("eppstein_midpoint", 0) == 0

    ps = equilateral_tightness(1.0)
    matching, _ = max_sum_bruteforce(ps)
    pairs = matching.segments(ps)
    centroid = Point(0.5, SQRT3 / 6.0)
    ratios = stretch_report(pairs, centroid, 2.0 / SQRT3)
    assert ratios.holds
    for s in ratios.pairs:
        assert abs(s.ratio - 2.0 / SQRT3) <= 1e-9

    regions = [EllipseRegion(a, b, 0.99 * dist(a, b) / SQRT3) for a, b in pairs]
    assert pierce_ellipses(regions).verdict is PiercingVerdict.EMPTY
    note(
        6,
        "midpoint-of-shortest-edge within sqrt(5) and 2.5 on all campaign instances; "
        "equilateral ratios exactly 2/sqrt(3); factor 0.99/sqrt(3) empty",
    )


def test_criterion_07_lemma_suite(lemma_reports):
    reports, controls, elapsed = lemma_reports
    for lemma_id, report in reports.items():
        assert report.trials_accepted >= LEMMA_TRIALS[lemma_id], lemma_id
        assert report.violations == 0, lemma_id
    for lemma_id, control in controls.items():
        assert control.violations >= 1, lemma_id
    assert elapsed < 300.0
    accepted = sum(r.trials_accepted for r in reports.values())
    note(
        7,
        f"{len(reports)} checkers, {accepted} accepted trials, 0 violations; "
        f"all negative controls detect; {elapsed:.1f} s",
    )


def test_criterion_08_classifier_dichotomy(campaign_uncolored):
    report, _ = campaign_uncolored
    block = report["per_n"]["3"]
    assert block["violations"].get("dichotomy", 0) == 0
    assert block["violations"].get("easy_witness_failed", 0) == 0
    assert block["violations"].get("empty_intersection", 0) == 0
    labels = block["label_counts"]
    assert set(labels) <= set("ABCDEFGHIJ")
    non_fragile = sum(labels.values()) - block["fragile_instances"]
    assert non_fragile > 0
    note(
        8,
        f"n=3 campaign labels {labels} all within A..J; easy-case witnesses verified; "
        f"hard cases pierce",
    )


def test_criterion_09_segment_distance_bound(campaign_uncolored):
    report, _ = campaign_uncolored
    for block in report["per_n"].values():
        assert block["violations"].get("segment_distance_above_half_length", 0) == 0
    note(9, "witness-to-segment distance <= half pair length on every campaign instance")


def test_criterion_10_determinism(campaign_uncolored, campaign_colored, lemma_reports):
    report_u, _ = campaign_uncolored
    report_c, _ = campaign_colored
    rerun_u = run_campaign(UNCOLORED_NS, CAMPAIGN_TRIALS, seed=SEED_UNCOLORED)
    assert canonical_json(rerun_u) == canonical_json(report_u)
    rerun_c = run_campaign(COLORED_NS, CAMPAIGN_TRIALS, seed=SEED_COLORED, colored=True)
    assert canonical_json(rerun_c) == canonical_json(report_c)
    reports, _, _ = lemma_reports
    for lemma_id, report in reports.items():
        rerun = run_checker(lemma_id, LEMMA_TRIALS[lemma_id], seed=SEED_LEMMAS)
        assert canonical_json(rerun.to_dict()) == canonical_json(report.to_dict()), lemma_id
    note(10, "campaigns and lemma reports reproduce bit-identical JSON under fixed seeds")
