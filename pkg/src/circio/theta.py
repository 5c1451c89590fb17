"""The block-shift vertex transform and its circulant images.

theta_{n,m,t} sends vertex x to x + (x mod m)*t*m (mod n). For most t the
image of a circulant edge set is not circulant; the interesting pairs are
the ones where it is and no unit multiplier explains the isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    CirculantGraph,
    ConnectionSet,
    EdgeImage,
    is_circulant,
    reflexive_reduce,
)
from .errors import InvalidParams, NotBijective, NotMultipleOfM

# When true, union_shift re-derives every answer from the definitional
# edge-level image and compares. Tests flip this on.
CROSS_CHECK = False


@dataclass(frozen=True)
class ThetaParams:
    n: int
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise InvalidParams(f"m must be >= 2, got {self.m}")
        if self.n % (self.m ** 3) != 0:
            raise InvalidParams(f"m^3 = {self.m ** 3} must divide n = {self.n}")
        if not (0 <= self.t <= self.n // self.m - 1):
            raise InvalidParams(f"t = {self.t} outside [0, {self.n // self.m - 1}]")


@dataclass(frozen=True)
class ThetaWitness:
    params: ThetaParams
    source: ConnectionSet
    image: ConnectionSet
    vertex_map: tuple[int, ...]


def valid_block_moduli(n: int) -> list[int]:
    """All m >= 2 with m cubed dividing n, ascending."""
    out = []
    m = 2
    while m ** 3 <= n:
        if n % (m ** 3) == 0:
            out.append(m)
        m += 1
    return out


def theta_params_valid(n: int, m: int, cs: ConnectionSet) -> bool:
    """True iff m^3 | n and cs carries at least one multiple of m."""
    if m < 2:
        raise InvalidParams(f"m must be >= 2, got {m}")
    if n % (m ** 3) != 0:
        return False
    return any(j % m == 0 for j in cs.jumps)


def theta_vertex_map(params: ThetaParams) -> tuple[int, ...]:
    """The permutation x -> x + (x mod m)*t*m mod n."""
    n, m, t = params.n, params.m, params.t
    perm = tuple((x + (x % m) * t * m) % n for x in range(n))
    if len(set(perm)) != n:
        # Cannot happen while the params invariants hold.
        raise NotBijective(f"theta map collides for {params}")
    return perm


def _check_params(cs: ConnectionSet, m: int, t: int) -> ThetaParams:
    if not theta_params_valid(cs.n, m, cs):
        raise InvalidParams(f"theta is undefined for n={cs.n}, m={m}, jumps={cs.jumps}")
    return ThetaParams(cs.n, m, t)


def theta_image(cs: ConnectionSet, m: int, t: int) -> Optional[ConnectionSet]:
    """Image connection set, or None when the permuted edges are not circulant.

    Runs on the full permuted edge set; no jump-arithmetic shortcuts here.
    """
    params = _check_params(cs, m, t)
    if t == 0:
        return cs
    n = cs.n
    perm = theta_vertex_map(params)
    out = set()
    for a, b in CirculantGraph(cs).edges:
        pa, pb = perm[a], perm[b]
        out.add((pa, pb) if pa < pb else (pb, pa))
    return is_circulant(EdgeImage(n, frozenset(out)))


def theta_witness(cs: ConnectionSet, m: int, t: int) -> Optional[ThetaWitness]:
    """Like theta_image, plus an end-to-end edge bijection re-check."""
    params = _check_params(cs, m, t)
    image = theta_image(cs, m, t)
    if image is None:
        return None
    perm = theta_vertex_map(params)
    src_edges = CirculantGraph(cs).edges
    img_edges = CirculantGraph(image).edges
    mapped = set()
    for a, b in src_edges:
        pa, pb = perm[a], perm[b]
        mapped.add((pa, pb) if pa < pb else (pb, pa))
    # The witness must certify a genuine isomorphism, not just a jump match.
    assert mapped == set(img_edges), "vertex map does not carry edges onto the image"
    return ThetaWitness(params, cs, image, perm)


def theta_scan(cs: ConnectionSet, m: int) -> list[tuple[int, ConnectionSet]]:
    """All t in [1, n/m - 1] with a circulant image, ascending by t."""
    if not theta_params_valid(cs.n, m, cs):
        raise InvalidParams(f"theta is undefined for n={cs.n}, m={m}, jumps={cs.jumps}")
    hits = []
    mults = {j for j in cs.jumps if j % m == 0}
    for t in range(1, cs.n // m):
        img = theta_image(cs, m, t)
        if img is not None:
            # Multiples of m ride through every successful transform unchanged.
            assert {j for j in img.jumps if j % m == 0} == mults
            hits.append((t, img))
    return hits


def union_shift(
    cs: ConnectionSet, extra: Iterable[int], m: int, t: int
) -> Optional[ConnectionSet]:
    """theta_image(cs + extra, m, t) where extra holds reduced multiples of m.

    Multiples of m are fixed pointwise by the transform, so the image is just
    theta_image(cs, m, t) with extra unioned back in. CROSS_CHECK re-derives
    the slow way and compares.
    """
    extra = tuple(sorted(set(extra)))
    half = cs.n // 2
    for e in extra:
        if e % m != 0:
            raise NotMultipleOfM(f"extension jump {e} is not a multiple of {m}")
        if not (1 <= e <= half):
            raise NotMultipleOfM(f"extension jump {e} is not reduced for n={cs.n}")
        if e in cs.jumps:
            raise NotMultipleOfM(f"extension jump {e} already present in {cs}")
    fast: Optional[ConnectionSet]
    base = theta_image(cs, m, t)
    if base is None:
        fast = None
    else:
        fast = reflexive_reduce(base.jumps + extra, cs.n)
    if CROSS_CHECK:
        union = reflexive_reduce(cs.jumps + extra, cs.n)
        direct = theta_image(union, m, t)
        assert fast == direct, f"fast path diverged for {cs} + {extra} at t={t}"
    return fast
