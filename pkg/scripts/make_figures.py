#!/usr/bin/env python3
"""Export the named fixtures as JSON documents and SVG figures.

Usage:
    python scripts/make_figures.py [--out-dir out]

Writes, for each fixture (thm2_eps0.02, thm3_n4, equilateral,
singleton), the point-set document and a figure with the max-sum
matching, its diametral disks, and the piercing witness.  The
equilateral figure also overlays the tight ellipse family at factor
1/sqrt(3).
"""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mmp.constructions import named_fixtures
from mmp.docio import canonical_json, document_of
from mmp.geom import Point
from mmp.matching import Matching
from mmp.report import analyze
from mmp.svgfig import render_svg


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("out"))
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for name, ps in named_fixtures().items():
        doc_path = args.out_dir / f"{name}.json"
        doc_path.write_text(canonical_json(document_of(ps, name)) + "\n", encoding="utf-8")

        report = analyze(ps, name=name)
        matching = Matching.of(ps, [tuple(p) for p in report["matching"]["pairs"]])
        witness = None
        if report["piercing"]["witness"] is not None:
            witness = Point(*report["piercing"]["witness"])
        factor = 1.0 / math.sqrt(3.0) if name == "equilateral" else None
        svg = render_svg(ps, matching, witness, ellipse_factor=factor)
        svg_path = args.out_dir / f"{name}.svg"
        svg_path.write_text(svg, encoding="utf-8")
        print(f"{name}: verdict {report['piercing']['verdict']}, wrote {doc_path} and {svg_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
