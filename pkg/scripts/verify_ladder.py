#!/usr/bin/env python3
"""Run every inequality-ladder checker plus its negative control.

Usage:
    python scripts/verify_ladder.py [--seed 73] [--full]

Default trial counts are small for a quick look; --full uses the
acceptance-grade counts (10^4 accepted trials, 10^3 for the
oracle-backed checkers).  Exits 3 if any positive run records a
violation or any control fails to detect one.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mmp.lemmas import LEMMA_CHECKERS, run_checker

ORACLE_BACKED = {"common-point-7", "common-point-8", "common-point-9-adjacent", "prop2", "extension"}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=73)
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()

    failed = False
    for lemma_id in sorted(LEMMA_CHECKERS):
        trials = (1_000 if lemma_id in ORACLE_BACKED else 10_000) if args.full else 500
        t0 = time.perf_counter()
        rep = run_checker(lemma_id, trials, seed=args.seed)
        ctrl = run_checker(lemma_id, max(trials // 10, 200), seed=args.seed + 1, negative_control=True)
        dt = time.perf_counter() - t0
        ok = rep.violations == 0 and ctrl.violations >= 1
        failed |= not ok
        status = "ok" if ok else "FAIL"
        print(
            f"{lemma_id:28s} {status}  accepted {rep.trials_accepted:6d}/{rep.trials_attempted:7d}"
            f"  violations {rep.violations}  worst margin {rep.worst_margin:+.3e}"
            f"  control detects {ctrl.violations:4d}  ({dt:.1f} s)"
        )
    return 3 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
