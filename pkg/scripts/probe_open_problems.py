#!/usr/bin/env python3
"""Run the isomorphism oracle over the undecided pair and triple questions.

Prints one verdict line per oracle run (35 in all: eight order-48 pairs and
nine order-54 triples checked pairwise) and a closing tally. A JSON copy of
the report can be written with --out.
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from pathlib import Path

from circio import DEFAULT_BUDGET, probe_open_problems


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--out", type=Path, default=None)
    args = parser.parse_args()

    report = probe_open_problems(budget=args.budget)
    print(report.summary())
    tally = Counter(entry.verdict.kind for entry in report.entries)
    print("tally:", dict(sorted(tally.items())))
    if args.out is not None:
        args.out.write_text(json.dumps(report.to_json(), indent=2) + "\n")
        print(f"report -> {args.out}")


if __name__ == "__main__":
    main()
