#!/usr/bin/env python3
"""Run the randomized verification campaigns and print a summary.

Usage:
    python scripts/run_experiments.py [--trials 500] [--seed 71]
                                      [--out campaigns.json]

Runs the uncolored campaign (n = 2..6; common intersection, sqrt(2)
witness stretch, midpoint bounds, configuration dichotomy) and the
colored campaign (n = 2..5; pairwise disk overlap, vector inequality).
Any nonzero violation count exits with status 3.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mmp.docio import canonical_json
from mmp.experiment import run_campaign


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=71)
    parser.add_argument("--out", type=Path, default=None)
    args = parser.parse_args()

    results = {}
    for label, ns, colored, seed in (
        ("uncolored", [2, 3, 4, 5, 6], False, args.seed),
        ("colored", [2, 3, 4, 5], True, args.seed + 1),
    ):
        t0 = time.perf_counter()
        report = run_campaign(ns, args.trials, seed=seed, colored=colored)
        dt = time.perf_counter() - t0
        results[label] = report
        print(f"{label}: {args.trials} trials x n in {ns} "
              f"-> {report['total_violations']} violations ({dt:.1f} s)")
        for n, block in report["per_n"].items():
            extra = ""
            if not colored:
                extra = f", max stretch {block['max_witness_stretch']:.6f}"
            if block["label_counts"]:
                extra += f", labels {block['label_counts']}"
            print(f"  n={n}: violations {block['violations'] or 'none'}{extra}")

    if args.out is not None:
        args.out.write_text(canonical_json(results) + "\n", encoding="utf-8")
        print(f"wrote {args.out}")

    total = sum(r["total_violations"] for r in results.values())
    return 0 if total == 0 else 3


if __name__ == "__main__":
    sys.exit(main())
