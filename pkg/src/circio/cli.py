"""Command-line driver: classification, enumeration, export, golden checks.

Exit codes: 0 on success, 1 when verify-goldens finds a verdict mismatch,
2 on usage errors (including parameter values the library rejects).
"""

from __future__ import annotations

import json
import os
from typing import Optional, Sequence

import click

from . import __version__
from .classify import TupleRecord, classify_pair, classify_tuple
from .core import ConnectionSet
from .enumeration import (
    DEFAULT_SCAN_BUDGET,
    enumerate_family,
    family,
    full_scan,
    generate_a17c,
    generate_c1,
    probe_open_problems,
)
from .errors import CircioError
from .goldens import verify_goldens
from .multipliers import adam_orbit
from .oracle import DEFAULT_BUDGET
from .theta import theta_image

CSV_HEADER = "row,R,theta_t2,theta_t4,adam_orbit,verdict"


def export_csv(records: Sequence[TupleRecord], path: str | os.PathLike) -> None:
    """Write records as the tables' six columns, one row per record.

    Cells use the canonical C<n>(...) text. The orbit cell is quoted and
    ';'-joined; the others are written bare, matching the published layout.
    Built by hand rather than with the csv module so the bytes stay fixed.
    """
    if not records:
        raise ValueError("refusing to export an empty record list")
    lines = [CSV_HEADER]
    for row_no, rec in enumerate(records, start=1):
        orbit_cell = ";".join(str(c) for c in rec.verdict.orbit.members)
        lines.append(
            "%d,%s,%s,%s,\"%s\",%s"
            % (
                row_no,
                rec.members[0],
                rec.theta_images.get(2, ""),
                rec.theta_images.get(4, ""),
                orbit_cell,
                rec.verdict.table_verdict,
            )
        )
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"writing {path}: {exc}") from exc


def export_jsonl(records: Sequence[TupleRecord], path: str | os.PathLike) -> None:
    """One record per line as JSON, in enumeration order."""
    if not records:
        raise ValueError("refusing to export an empty record list")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_json()) + "\n")
    except OSError as exc:
        raise OSError(f"writing {path}: {exc}") from exc


def _parse_set(text: str) -> ConnectionSet:
    try:
        return ConnectionSet.parse(text)
    except (ValueError, CircioError) as exc:
        raise click.UsageError(f"bad connection set {text!r}: {exc}") from exc


@click.group()
@click.version_option(__version__, prog_name="circio")
def main() -> None:
    """Isomorphism tooling for circulant graphs."""


@main.command("orbit")
@click.argument("connection_set")
def orbit_cmd(connection_set: str) -> None:
    """Print every multiplier image of CONNECTION_SET, one per line."""
    cs = _parse_set(connection_set)
    for member in adam_orbit(cs).members:
        click.echo(str(member))


@main.command("theta")
@click.option("--m", "m", type=int, required=True, help="Block modulus.")
@click.option("--t", "t", type=int, required=True, help="Shift index.")
@click.argument("connection_set")
def theta_cmd(m: int, t: int, connection_set: str) -> None:
    """Apply the block-shift transform; print the image or 'not circulant'."""
    cs = _parse_set(connection_set)
    try:
        img = theta_image(cs, m, t)
    except CircioError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(str(img) if img is not None else "not circulant")


@main.command("classify")
@click.option(
    "--budget",
    type=int,
    default=DEFAULT_BUDGET,
    show_default=True,
    help="Oracle search-node budget.",
)
@click.argument("connection_sets", nargs=-1, required=True)
def classify_cmd(budget: int, connection_sets: tuple[str, ...]) -> None:
    """Classify two or more sets; print the verdict and its witness."""
    if len(connection_sets) < 2:
        raise click.UsageError("classify needs at least two connection sets")
    sets = [_parse_set(text) for text in connection_sets]
    try:
        if len(sets) == 2:
            verdict = classify_pair(sets[0], sets[1], budget=budget)
        else:
            verdict = classify_tuple(tuple(sets), budget=budget).verdict
    except CircioError as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(verdict.describe())


@main.command("enumerate-family")
@click.option(
    "--family",
    "family_name",
    type=click.Choice(["a", "b"]),
    required=True,
    help="Which order-54 family to enumerate.",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    required=True,
    help="Output file; a .jsonl suffix selects JSON-lines, anything else CSV.",
)
@click.option("--workers", type=int, default=None, help="Worker processes.")
def enumerate_family_cmd(
    family_name: str, out_path: str, workers: Optional[int]
) -> None:
    """Enumerate all 511 rows of one family and write them to --out."""
    spec = family(family_name)
    click.echo(f"enumerating family {family_name} (511 rows)...", err=True)
    records = enumerate_family(spec, workers=workers)
    t2 = sum(1 for r in records if r.verdict.table_verdict == "T2")
    t1 = sum(1 for r in records if r.verdict.table_verdict == "T1")
    if out_path.endswith(".jsonl"):
        export_jsonl(records, out_path)
    else:
        export_csv(records, out_path)
    click.echo(
        f"family {family_name}: {len(records)} rows, {t2} T2, {t1} T1 -> {out_path}"
    )


@main.command("scan")
@click.option("--n", "n", type=int, required=True, help="Graph order to scan.")
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    required=True,
    help="Report file (JSON).",
)
@click.option(
    "--budget",
    type=int,
    default=DEFAULT_SCAN_BUDGET,
    show_default=True,
    help="Ceiling on scan work units.",
)
@click.option(
    "--max-jumps", type=int, default=None, help="Skip sets with more jumps."
)
@click.option("--workers", type=int, default=None, help="Worker processes.")
def scan_cmd(
    n: int,
    out_path: str,
    budget: int,
    max_jumps: Optional[int],
    workers: Optional[int],
) -> None:
    """Exhaustively scan one order and write a JSON report to --out."""
    click.echo(f"scanning n={n}...", err=True)
    try:
        report = full_scan(n, max_jump_count=max_jumps, budget=budget, workers=workers)
    except CircioError as exc:
        raise click.UsageError(str(exc)) from exc
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2)
        fh.write("\n")
    parts = ", ".join(f"{k}={v}" for k, v in sorted(report.counts.items()))
    click.echo(f"n={n}: {parts} -> {out_path}")


@main.command("generate")
@click.option(
    "--a17c",
    "a17c_args",
    type=int,
    nargs=2,
    default=None,
    metavar="K S",
    help="Order-8k pair construction.",
)
@click.option(
    "--c1",
    "c1_args",
    type=int,
    nargs=4,
    default=None,
    metavar="BASE P X Y",
    help="Order-base*p^3 chain construction.",
)
def generate_cmd(
    a17c_args: Optional[tuple[int, int]], c1_args: Optional[tuple[int, int, int, int]]
) -> None:
    """Run one construction and classify its output."""
    if (a17c_args is None) == (c1_args is None):
        raise click.UsageError("pass exactly one of --a17c or --c1")
    try:
        if a17c_args is not None:
            k, s = a17c_args
            left, right = generate_a17c(k, s)
            click.echo(str(left))
            click.echo(str(right))
            click.echo(classify_pair(left, right).describe())
        else:
            base, p, x, y = c1_args
            chain = tuple(generate_c1(base, p, x, y, i) for i in range(1, p + 1))
            for member in chain:
                click.echo(str(member))
            click.echo(classify_tuple(chain).verdict.describe())
    except CircioError as exc:
        raise click.UsageError(str(exc)) from exc


@main.command("probe-open")
@click.option(
    "--budget",
    type=int,
    default=DEFAULT_BUDGET,
    show_default=True,
    help="Oracle search-node budget per pair.",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Optional JSON report file.",
)
def probe_open_cmd(budget: int, out_path: Optional[str]) -> None:
    """Run the oracle over the undecided pair/triple questions."""
    click.echo("probing open questions (35 oracle runs)...", err=True)
    report = probe_open_problems(budget=budget)
    click.echo(report.summary())
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)
            fh.write("\n")


@main.command("verify-goldens")
@click.pass_context
def verify_goldens_cmd(ctx: click.Context) -> None:
    """Recompute the embedded table rows; exit 1 on any verdict mismatch."""
    report = verify_goldens()
    click.echo(report.summary())
    if not report.ok:
        ctx.exit(1)


if __name__ == "__main__":
    main()
