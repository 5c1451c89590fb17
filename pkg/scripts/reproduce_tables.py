#!/usr/bin/env python3
"""Regenerate both order-54 family tables and check the embedded golden rows.

Writes family_a.csv and family_b.csv into --out-dir (default: cwd), prints
per-family verdict tallies, then runs the golden-row recomputation and
prints its report. Exits 1 if any golden verdict disagrees.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from circio import enumerate_family, family, verify_goldens
from circio.cli import export_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("."))
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    total_t2 = 0
    for name in ("a", "b"):
        records = enumerate_family(family(name), workers=args.workers)
        path = args.out_dir / f"family_{name}.csv"
        export_csv(records, path)
        t2 = sum(1 for r in records if r.verdict.table_verdict == "T2")
        t1 = sum(1 for r in records if r.verdict.table_verdict == "T1")
        total_t2 += t2
        print(f"family {name}: {len(records)} rows ({t2} T2, {t1} T1) -> {path}")
    print(f"combined Type-2 triples: {total_t2}")

    report = verify_goldens()
    print(report.summary())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
