"""Family enumeration, exhaustive small-order scans, and the two generators.

The order-54 families: take a 3-jump base with no multiple of 3 and adjoin
every nonempty subset of the nine reduced multiples of 3. Each row's triple
is (R, image at t=2, image at t=4) under m=3.

full_scan avoids the 2^(n/2) subset space by working on the non-multiple
"core" structure: for a shift t, the permuted edge set can only be circulant
when the non-multiple difference residues fall into orbits of the induced
shift, so candidate cores are unions of those orbits and everything else is
a multiple-of-m extension that rides along unchanged.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .classify import (
    TYPE1,
    TYPE2,
    Classification,
    TupleRecord,
)
from .core import CirculantGraph, ConnectionSet, reflexive_reduce
from .errors import (
    DegeneratePair,
    Intractable,
    InvalidIndex,
    InvalidParams,
)
from .multipliers import adam_orbit, is_adam_equivalent, multiply_set, units
from .oracle import DEFAULT_BUDGET, IsoVerdict, isomorphic
from .theta import theta_image, theta_witness, valid_block_moduli

DEFAULT_SCAN_BUDGET = 20_000_000
_MAX_ATOMS_PER_LEVEL = 14


def worker_count(workers: Optional[int] = None) -> int:
    """Explicit argument wins, then CIRCIO_WORKERS, then 1."""
    if workers is not None:
        return max(1, workers)
    return max(1, int(os.environ.get("CIRCIO_WORKERS", "1")))


# ---------------------------------------------------------------------------
# order-54 families

FAMILY_POOL = (3, 6, 9, 12, 15, 18, 21, 24, 27)
FAMILY_BASES = {"a": (1, 17, 19), "b": (2, 16, 20)}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int
    base: ConnectionSet
    pool: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(j % 3 == 0 for j in self.base.jumps):
            raise InvalidParams("family base must avoid multiples of 3")
        if any(j % 3 != 0 for j in self.pool):
            raise InvalidParams("family pool must hold multiples of 3")


def family(name: str) -> FamilySpec:
    if name not in FAMILY_BASES:
        raise InvalidParams(f"unknown family {name!r}, expected 'a' or 'b'")
    return FamilySpec(
        name=name,
        n=54,
        base=ConnectionSet(54, FAMILY_BASES[name]),
        pool=FAMILY_POOL,
    )


def _pool_subsets(pool: Sequence[int]) -> list[tuple[int, ...]]:
    # Row order: by subset size, then lexicographic. Row 1 is {pool[0]},
    # row 511 the full pool.
    out: list[tuple[int, ...]] = []
    for k in range(1, len(pool) + 1):
        out.extend(combinations(pool, k))
    return out


def _family_row(n: int, base: tuple[int, ...], extension: tuple[int, ...]) -> TupleRecord:
    source = ConnectionSet(n, tuple(sorted(base + extension)))
    img2 = theta_image(source, 3, 2)
    img4 = theta_image(source, 3, 4)
    assert img2 is not None and img4 is not None
    members = (source, img2, img4)
    orbit = adam_orbit(source)
    if set(orbit.members) == set(members):
        verdict = Classification(
            kind=TYPE1, orbit=orbit, unit=is_adam_equivalent(source, img2)
        )
    else:
        verdict = Classification(kind=TYPE2, orbit=orbit, m=3, t=2, chain=members)
    return TupleRecord(members=members, theta_images={2: img2, 4: img4}, verdict=verdict)


def _family_chunk(args: tuple) -> list[tuple[int, TupleRecord]]:
    n, base, chunk = args
    return [(row_no, _family_row(n, base, ext)) for row_no, ext in chunk]


def enumerate_family(
    spec: FamilySpec, workers: Optional[int] = None
) -> list[TupleRecord]:
    """All 511 rows of one family, in table order."""
    subsets = _pool_subsets(spec.pool)
    numbered = list(enumerate(subsets, start=1))
    nworkers = worker_count(workers)
    if nworkers <= 1:
        return [_family_row(spec.n, spec.base.jumps, ext) for _, ext in numbered]
    size = math.ceil(len(numbered) / nworkers)
    chunks = [
        (spec.n, spec.base.jumps, numbered[i : i + size])
        for i in range(0, len(numbered), size)
    ]
    merged: dict[int, TupleRecord] = {}
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        for part in pool.map(_family_chunk, chunks):
            for row_no, record in part:
                merged[row_no] = record
    return [merged[i] for i in range(1, len(numbered) + 1)]


# ---------------------------------------------------------------------------
# exhaustive scan machinery

def _nonmultiple_atoms(n: int, m: int, h: int) -> list[tuple[int, ...]]:
    """Orbits of non-multiple residues under +h and negation, as reduced jumps."""
    seen: set[int] = set()
    atoms: set[tuple[int, ...]] = set()
    for d in range(1, n):
        if d % m == 0 or d in seen:
            continue
        orbit: set[int] = set()
        stack = [d]
        while stack:
            v = stack.pop()
            if v in orbit:
                continue
            orbit.add(v)
            stack.append((v + h) % n)
            stack.append((n - v) % n)
        seen |= orbit
        atoms.add(tuple(sorted({min(v, n - v) for v in orbit})))
    return sorted(atoms)


def _levels(n: int, m: int) -> dict[int, list[int]]:
    """Map gcd(m^2 t, n) -> shifts t producing it; degenerate shifts omitted."""
    out: dict[int, list[int]] = {}
    for t in range(1, n // m):
        g = (m * m * t) % n
        if g == 0:
            continue
        out.setdefault(math.gcd(g, n), []).append(t)
    return out


def _core_image(n: int, m: int, core: tuple[int, ...], t: int) -> Optional[tuple[int, ...]]:
    # The definitional edge-level test needs a multiple of m present, so
    # probe with m adjoined and strip it from the answer.
    probe = ConnectionSet(n, tuple(sorted(set(core) | {m})))
    img = theta_image(probe, m, t)
    if img is None:
        return None
    return tuple(j for j in img.jumps if j != m)


def _core_image_chunk(args: tuple) -> list[tuple[tuple[int, ...], list]]:
    n, m, cores = args
    out = []
    for core in cores:
        out.append(
            (core, [(t, _core_image(n, m, core, t)) for t in range(1, n // m)])
        )
    return out


def _unit_mask_tables(
    n: int, extension_pool: Sequence[int]
) -> dict[int, list[int]]:
    """For each unit x, mask -> image mask of the multiple-of-m pool."""
    index = {j: i for i, j in enumerate(extension_pool)}
    tables: dict[int, list[int]] = {}
    for x in units(n).units:
        shift = [index[min(x * j % n, n - x * j % n)] for j in extension_pool]
        table = [0] * (1 << len(extension_pool))
        for mask in range(1 << len(extension_pool)):
            out = 0
            rest = mask
            while rest:
                low = rest & -rest
                out |= 1 << shift[low.bit_length() - 1]
                rest ^= low
            table[mask] = out
        tables[x] = table
    return tables


def _coset(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Units carrying jump set a onto jump set b."""
    out = []
    sa = ConnectionSet(n, a)
    target = tuple(b)
    for x in units(n).units:
        if multiply_set(sa, x).jumps == target:
            out.append(x)
    return out


def _mask_jumps(extension_pool: Sequence[int], mask: int) -> tuple[int, ...]:
    return tuple(j for i, j in enumerate(extension_pool) if mask >> i & 1)


@dataclass(frozen=True)
class ScanReport:
    n: int
    convention: str
    counts: dict[str, int]
    records: list[TupleRecord]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "counts": dict(self.counts),
            "records": [r.to_json() for r in self.records],
        }


_SCAN_CONVENTION = (
    "pairs: unordered {R,S} with R != S, a verified theta witness at some "
    "(m,t), and no unit multiplier carrying R to S; "
    "tuples: theta-closure classes of minimal non-multiple cores, one tuple "
    "per nonempty multiple-of-m extension not fixed by every unit in some "
    "linking coset; pair witnesses re-verified edge-level exhaustively for "
    "n <= 32 and on a 100-record sample at n = 54"
)


def full_scan(
    n: int,
    max_jump_count: Optional[int] = None,
    budget: int = DEFAULT_SCAN_BUDGET,
    workers: Optional[int] = None,
) -> ScanReport:
    """Count and list the non-multiplier isomorphisms at one order.

    Reports both counting conventions (see ScanReport.convention). Raises
    Intractable when the order or the induced search exceeds the ceiling.
    """
    if n < 2 or n > 54:
        raise Intractable(f"scan supports 2 <= n <= 54, got {n}")
    counts = {
        "type2_pairs_raw": 0,
        "type2_tuples_primitive": 0,
        "type1_tuples_primitive": 0,
    }
    records: list[TupleRecord] = []
    for m in valid_block_moduli(n):
        _scan_one_modulus(n, m, max_jump_count, budget, workers, counts, records)
    records.sort(key=lambda r: tuple(c.jumps for c in r.members))
    return ScanReport(
        n=n, convention=_SCAN_CONVENTION, counts=counts, records=records
    )


def _scan_one_modulus(
    n: int,
    m: int,
    max_jump_count: Optional[int],
    budget: int,
    workers: Optional[int],
    counts: dict[str, int],
    records: list[TupleRecord],
) -> None:
    extension_pool = tuple(j for j in range(m, n // 2 + 1, m))
    levels = _levels(n, m)
    cores: set[tuple[int, ...]] = set()
    for h in sorted(levels):
        atoms = _nonmultiple_atoms(n, m, h)
        if len(atoms) > _MAX_ATOMS_PER_LEVEL:
            raise Intractable(
                f"level {h} of n={n}, m={m} has {len(atoms)} atoms"
            )
        atom_sets = [set(a) for a in atoms]
        for r in range(1, len(atoms) + 1):
            for combo in combinations(range(len(atoms)), r):
                merged: set[int] = set()
                for i in combo:
                    merged |= atom_sets[i]
                if max_jump_count is not None and len(merged) > max_jump_count:
                    continue
                cores.add(tuple(sorted(merged)))
    core_list = sorted(cores)
    t_range = n // m - 1
    if len(core_list) * t_range > budget:
        raise Intractable(
            f"core image phase needs {len(core_list) * t_range} image tests"
        )

    # Image map, optionally in parallel. Deterministic regardless of split.
    nworkers = worker_count(workers)
    images: dict[tuple[int, ...], dict[int, Optional[tuple[int, ...]]]] = {}
    if nworkers <= 1 or len(core_list) < 64:
        for core in core_list:
            images[core] = {
                t: _core_image(n, m, core, t) for t in range(1, n // m)
            }
    else:
        size = math.ceil(len(core_list) / nworkers)
        chunks = [
            (n, m, core_list[i : i + size])
            for i in range(0, len(core_list), size)
        ]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            for part in pool.map(_core_image_chunk, chunks):
                for core, hits in part:
                    images[core] = dict(hits)

    core_set = set(core_list)
    linked: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple] = {}
    for core in core_list:
        for t in range(1, n // m):
            img = images[core][t]
            if img is None or img == core:
                continue
            assert img in core_set, f"image {img} of {core} escaped the core lattice"
            key = (core, img) if core < img else (img, core)
            if key not in linked:
                linked[key] = (core, img, t)

    mask_tables = _unit_mask_tables(n, extension_pool)
    pool_size = len(extension_pool)
    full_mask = (1 << pool_size) - 1
    cosets = {
        key: _coset(n, src, dst) for key, (src, dst, _) in sorted(linked.items())
    }
    mask_work = sum(max(1, len(x)) for x in cosets.values()) * (full_mask + 1)
    if mask_work > budget:
        raise Intractable(f"pair counting phase needs {mask_work} mask tests")

    verify_all = n <= 32
    popcounts = [bin(mask).count("1") for mask in range(full_mask + 1)]
    for key in sorted(linked):
        src, dst, t = linked[key]
        xs = cosets[key]
        tables = [mask_tables[x] for x in xs]
        for mask in range(1, full_mask + 1):
            size = len(src) + popcounts[mask]
            if size < 3:
                continue
            if max_jump_count is not None and size > max_jump_count:
                continue
            if any(table[mask] == mask for table in tables):
                continue
            counts["type2_pairs_raw"] += 1
            if verify_all:
                ext = _mask_jumps(extension_pool, mask)
                left = ConnectionSet(n, tuple(sorted(src + ext)))
                right = ConnectionSet(n, tuple(sorted(dst + ext)))
                witness = theta_witness(left, m, t)
                assert witness is not None and witness.image == right
                assert is_adam_equivalent(left, right) is None

    # Primitive tuples: classes chased from minimal cores only.
    minimal = [
        a
        for a in core_list
        if not any(b != a and set(b) < set(a) for b in core_list)
    ]
    minimal_set = set(minimal)
    visited: set[tuple[int, ...]] = set()
    classes: list[list[tuple[int, ...]]] = []
    for seed in minimal:
        if seed in visited:
            continue
        group = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for t in range(1, n // m):
                img = images[cur][t]
                if img is None or img in group:
                    continue
                assert img in minimal_set, "image of a minimal core is not minimal"
                group.add(img)
                frontier.append(img)
        visited |= group
        classes.append(sorted(group))

    sample_budget = 0 if verify_all else 100
    for group in classes:
        if len(group) < 2:
            continue
        pair_cosets = [
            _coset(n, group[i], group[j])
            for i in range(len(group))
            for j in range(i + 1, len(group))
        ]
        pair_tables = [[mask_tables[x] for x in xs] for xs in pair_cosets]
        base_core = group[0]
        base_hits = [
            (t, img)
            for t, img in sorted(images[base_core].items())
            if img is not None and img in group and img != base_core
        ]
        first_t = base_hits[0][0]
        for mask in range(1, full_mask + 1):
            size = len(base_core) + popcounts[mask]
            if size < 3:
                continue
            if max_jump_count is not None and size > max_jump_count:
                continue
            if all(
                any(table[mask] == mask for table in tables)
                for tables in pair_tables
            ):
                counts["type1_tuples_primitive"] += 1
                continue
            counts["type2_tuples_primitive"] += 1
            ext = _mask_jumps(extension_pool, mask)
            members = tuple(
                ConnectionSet(n, tuple(sorted(core + ext))) for core in group
            )
            theta_images = {
                t: ConnectionSet(n, tuple(sorted(img + ext)))
                for t, img in base_hits
            }
            orbit = adam_orbit(members[0])
            verdict = Classification(
                kind=TYPE2, orbit=orbit, m=m, t=first_t, chain=members
            )
            record = TupleRecord(
                members=members, theta_images=theta_images, verdict=verdict
            )
            records.append(record)
            if sample_budget > 0:
                sample_budget -= 1
                witness = theta_witness(members[0], m, first_t)
                assert witness is not None and witness.image in members[1:]
                assert is_adam_equivalent(members[0], witness.image) is None


# ---------------------------------------------------------------------------
# construction generators

def generate_a17c(k: int, s: int) -> tuple[ConnectionSet, ConnectionSet]:
    """The order-8k construction pair for index s.

    R = {2, 2s-1, 4k-(2s-1)} and S = {2, 2k-(2s-1), 2k+(2s-1)}, both reduced.
    The pair is degenerate (same graph) exactly when 2s-1 = k.
    """
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    odd = 2 * s - 1
    if not (1 <= odd <= 2 * k - 1):
        raise InvalidParams(f"s = {s} out of range for k = {k}")
    if odd == k:
        raise DegeneratePair(f"2s-1 = k = {k} collapses the pair")
    n = 8 * k
    r = reflexive_reduce([2, odd, 4 * k - odd], n)
    s_set = reflexive_reduce([2, 2 * k - odd, 2 * k + odd], n)
    return r, s_set


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, int(math.isqrt(p)) + 1, 2))


def generate_c1(base: int, p: int, x: int, y: int, i: int) -> ConnectionSet:
    """Member i of the order base*p^3 construction chain.

    d_i = (i-1)*x*p*base + x + y*p; the jump list is {p, d_i, n-d_i, n-p}
    plus q*base*p^2 +- d_i for q = 1..p-1, all reduced. Members i and i+j
    are linked by the transform at t = j*base.
    """
    if base < 1:
        raise InvalidParams(f"base must be >= 1, got {base}")
    if not _is_odd_prime(p):
        raise InvalidParams(f"p must be an odd prime, got {p}")
    if not (1 <= i <= p):
        raise InvalidIndex(f"i = {i} outside [1, {p}]")
    if not (1 <= x <= p - 1):
        raise InvalidIndex(f"x = {x} outside [1, {p - 1}]")
    if not (0 <= y <= base * p - 1):
        raise InvalidIndex(f"y = {y} outside [0, {base * p - 1}]")
    n = base * p ** 3
    d = (i - 1) * x * p * base + x + y * p
    raw = [p, d, n - d, n - p]
    for q in range(1, p):
        raw.append(q * base * p * p + d)
        raw.append(q * base * p * p - d)
    return reflexive_reduce(raw, n)


# ---------------------------------------------------------------------------
# open-problem probes

_PROBE_PAIRS_48 = {
    "n48-a": ((1, None, 23), (None, 11, 13)),
    "n48-b": ((5, None, 19), (None, 7, 17)),
}
_PROBE_S_48 = (3, 9, 15, 21)
_PROBE_S_54 = (2, 4, 8, 10, 14, 16, 20, 22, 26)


@dataclass(frozen=True)
class ProbeEntry:
    group: str
    s: int
    left: ConnectionSet
    right: ConnectionSet
    verdict: IsoVerdict

    def describe(self) -> str:
        return (
            f"{self.group} s={self.s}: {self.left} vs {self.right} -> "
            f"{self.verdict.serialize()}"
        )

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "s": self.s,
            "left": str(self.left),
            "right": str(self.right),
            "verdict": self.verdict.serialize(),
        }


@dataclass(frozen=True)
class ProbeReport:
    entries: tuple[ProbeEntry, ...]

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries]}

    def summary(self) -> str:
        return "\n".join(e.describe() for e in self.entries)


def _fill(template: tuple, s: int) -> list[int]:
    return [s if v is None else v for v in template]


def probe_open_problems(budget: int = DEFAULT_BUDGET) -> ProbeReport:
    """Oracle verdicts for the undecided non-isomorphism questions.

    Two shapes: order-48 pairs over s in {3,9,15,21} and order-54 triples
    (checked pairwise) over the nine even s with gcd(54, s) not divisible
    by 3. Verdicts are reported with certificates, never presumed.
    """
    entries: list[ProbeEntry] = []
    for group, (left_t, right_t) in _PROBE_PAIRS_48.items():
        for s in _PROBE_S_48:
            left = reflexive_reduce(_fill(left_t, s), 48)
            right = reflexive_reduce(_fill(right_t, s), 48)
            verdict = isomorphic(CirculantGraph(left), CirculantGraph(right), budget)
            entries.append(ProbeEntry(group, s, left, right, verdict))
    for s in _PROBE_S_54:
        triple = [
            reflexive_reduce([1, s, 17, 19], 54),
            reflexive_reduce([5, s, 13, 23], 54),
            reflexive_reduce([s, 7, 11, 25], 54),
        ]
        for i in range(3):
            for j in range(i + 1, 3):
                verdict = isomorphic(
                    CirculantGraph(triple[i]), CirculantGraph(triple[j]), budget
                )
                entries.append(
                    ProbeEntry(f"n54-triple[{i}{j}]", s, triple[i], triple[j], verdict)
                )
    return ProbeReport(entries=tuple(entries))
