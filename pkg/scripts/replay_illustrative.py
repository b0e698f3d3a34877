#!/usr/bin/env python3
"""Replay the bundled 10-year illustrative ledger with both dynamic methods.

Prints the expertise matrix per year for the counting baseline and the
allocation engine, next to the bundled reference matrices, and writes the
per-entry delta table under reports/.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from hinalloc.dynamic import run_series
from hinalloc.fixtures import (
    AUTHOR_ORDER,
    CATEGORY_ORDER,
    REFERENCE_BL,
    REFERENCE_DHA,
    illustrative_timeline,
    store_matrix,
)


def fmt(matrix):
    return "\n".join(
        "  " + "  ".join(f"{v:7.2f}" for v in row) for row in matrix
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reports", default="reports", help="directory for the delta table")
    args = parser.parse_args()

    bl_store, _ = run_series("bl", illustrative_timeline())
    dha_store, _ = run_series("dha", illustrative_timeline())

    lines = ["year\tauthor\tcategory\tcomputed\treference\tdelta"]
    for year in range(1, 11):
        bl = store_matrix(bl_store.snapshot(year))
        dha = store_matrix(dha_store.snapshot(year))
        print(f"== year {year} ==")
        print("counting baseline (computed):")
        print(fmt(bl))
        print("allocation engine (computed):")
        print(fmt(dha))
        print("allocation engine (reference):")
        print(fmt(REFERENCE_DHA[year]))
        assert bl == [[float(v) for v in row] for row in REFERENCE_BL[year]]
        for i, author in enumerate(AUTHOR_ORDER):
            for j, category in enumerate(CATEGORY_ORDER):
                delta = dha[i][j] - REFERENCE_DHA[year][i][j]
                lines.append(
                    f"{year}\t{author}\t{category}\t{dha[i][j]:.6g}"
                    f"\t{REFERENCE_DHA[year][i][j]:.6g}\t{delta:+.6g}"
                )

    reports = Path(args.reports)
    reports.mkdir(parents=True, exist_ok=True)
    out = reports / "dha_illustrative_deltas.tsv"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"\ndelta table written to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
