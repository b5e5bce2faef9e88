"""Codeword enumeration and brute-force minimality checking.

A two-row generator matrix over Z/M spans at most M^2 codewords; at desk
scale we simply enumerate them all, dedupe, and test the cover relation
pairwise.  Supports are reported 1-based; internally each codeword carries a
bitmask so subset tests are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EnumerationCapError,
    MembershipError,
    ShapeError,
    ZeroCodewordError,
)
from .ring import RingSpec

# Work budget for enumerate_code: M^2 * m component evaluations.
DEFAULT_CAP = 10**8

Vector = Sequence[int]


class Codeword:
    """A length-m vector with its support and originating coefficient pairs."""

    __slots__ = ("components", "support", "coefficients", "mask")

    def __init__(self, components: Iterable[int], coefficients: Iterable[tuple[int, int]] = ()):
        comps = tuple(components)
        sup = []
        mask = 0
        for i, x in enumerate(comps):
            if x:
                sup.append(i + 1)
                mask |= 1 << i
        self.components = comps
        self.support = tuple(sup)
        self.mask = mask
        self.coefficients = frozenset(coefficients)

    @property
    def weight(self) -> int:
        return len(self.support)

    def is_zero(self) -> bool:
        return self.mask == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Codeword):
            return self.components == other.components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components)

    def __lt__(self, other: "Codeword") -> bool:
        return self.components < other.components

    def __repr__(self) -> str:
        return f"Codeword({self.components})"


def _as_components(v) -> tuple[int, ...]:
    return v.components if isinstance(v, Codeword) else tuple(v)


def support(v) -> tuple[int, ...]:
    """Sorted 1-based indices of the nonzero entries."""
    comps = _as_components(v)
    return tuple(i + 1 for i, x in enumerate(comps) if x)


def covers(u, v) -> bool:
    """True iff support(v) is contained in support(u)."""
    uc = _as_components(u)
    vc = _as_components(v)
    if len(uc) != len(vc):
        raise ShapeError(f"length mismatch: {len(uc)} vs {len(vc)}")
    return all(a != 0 for a, b in zip(uc, vc) if b != 0)


def hamming_weight(v) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for x in _as_components(v) if x)


def hamming_distance(x, y) -> int:
    """Number of coordinates where x and y differ."""
    xc = _as_components(x)
    yc = _as_components(y)
    if len(xc) != len(yc):
        raise ShapeError(f"length mismatch: {len(xc)} vs {len(yc)}")
    return sum(1 for a, b in zip(xc, yc) if a != b)


@dataclass(frozen=True)
class GeneratorMatrix:
    """2 x m matrix over the ring, rows row1 and row2.

    block_layout, when present, names the column spans of the canonical
    construction as (label, start, end) with end exclusive, 0-based.
    """

    ring: RingSpec
    row1: tuple[int, ...]
    row2: tuple[int, ...]
    block_layout: tuple[tuple[str, int, int], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))
        if len(self.row1) != len(self.row2):
            raise ShapeError(
                f"rows differ in length: {len(self.row1)} vs {len(self.row2)}"
            )
        if not self.row1:
            raise ShapeError("matrix needs at least one column")
        M = self.ring.modulus
        for x in self.row1 + self.row2:
            if not 0 <= x < M:
                raise ValueError(f"entry {x} outside [0, {M})")
        if self.block_layout is not None:
            spans = tuple(self.block_layout)
            object.__setattr__(self, "block_layout", spans)
            covered = sorted((s, e) for _, s, e in spans)
            edges = [0] + [e for _, e in covered]
            if [s for s, _ in covered] != edges[:-1] or edges[-1] != self.m:
                raise ShapeError(f"block spans {spans} do not partition the columns")

    @property
    def m(self) -> int:
        return len(self.row1)

    def column(self, i: int) -> tuple[int, int]:
        return (self.row1[i], self.row2[i])

    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.row1, self.row2))

    def block(self, label: str) -> tuple[int, int] | None:
        if self.block_layout is None:
            return None
        for name, s, e in self.block_layout:
            if name == label:
                return (s, e)
        return None


class LinearCode:
    """All distinct codewords spanned by a generator matrix."""

    def __init__(self, generator: GeneratorMatrix, codewords: Iterable[Codeword]):
        self.generator = generator
        self.codewords = tuple(codewords)
        self.cardinality = len(self.codewords)
        self._index = {w.components: w for w in self.codewords}

    def find(self, v) -> Codeword | None:
        return self._index.get(_as_components(v))

    def nonzero_codewords(self) -> tuple[Codeword, ...]:
        return tuple(w for w in self.codewords if w.mask)

    def __contains__(self, v) -> bool:
        return _as_components(v) in self._index

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.codewords)

    def __len__(self) -> int:
        return self.cardinality


@dataclass(frozen=True)
class MinimalityReport:
    """Verdict of the pairwise cover scan over all nonzero codewords.

    witnesses lists every violating pair as (covered, coverer): the covered
    word's support sits inside the coverer's, yet no ring scalar maps the
    coverer onto it.  ab_ratio_ok reports the field-style weight-ratio test
    w_min/w_max > (q-1)/q with q = M, informational for non-field rings.
    """

    minimal: bool
    witnesses: tuple[tuple[Codeword, Codeword], ...]
    w_min: int
    w_max: int
    ab_ratio_ok: bool
    cases_checked: int


def enumerate_code(G: GeneratorMatrix, cap: int | None = None) -> LinearCode:
    """Expand c1*row1 + c2*row2 over all (c1, c2), deduplicating vectors.

    Distinct coefficient pairs can land on the same vector; the codeword
    keeps the full coefficient set.  Codewords come back sorted
    lexicographically by components.
    """
    if cap is None:
        cap = DEFAULT_CAP
    M = G.ring.modulus
    m = G.m
    budget = M * M * m
    if budget > cap:
        raise EnumerationCapError(required=budget, cap=cap)
    r1, r2 = G.row1, G.row2
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for c1 in range(M):
        base = [c1 * a for a in r1]
        for c2 in range(M):
            vec = tuple((x + c2 * y) % M for x, y in zip(base, r2))
            groups.setdefault(vec, []).append((c1, c2))
    return LinearCode(
        G, (Codeword(vec, pairs) for vec, pairs in sorted(groups.items()))
    )


def _scalar_multiples(components: tuple[int, ...], M: int) -> set[tuple[int, ...]]:
    return {tuple(a * x % M for x in components) for a in range(M)}


def is_minimal_codeword(code: LinearCode, u) -> tuple[bool, Codeword | None]:
    """Is u covered only by its own scalar multiples within the code?

    Returns (True, None) or (False, v) with v a codeword whose support sits
    inside u's but which is no ring multiple of u.
    """
    word = code.find(u)
    if word is None:
        raise MembershipError(f"{_as_components(u)} is not a codeword")
    if word.is_zero():
        raise ZeroCodewordError("minimality is asked of nonzero codewords only")
    M = code.generator.ring.modulus
    mults = _scalar_multiples(word.components, M)
    um = word.mask
    for v in code.codewords:
        if v.mask == 0:
            continue
        if v.mask & ~um == 0 and v.components not in mults:
            return False, v
    return True, None


def is_minimal_code(code: LinearCode) -> MinimalityReport:
    """Pairwise cover scan over all nonzero codewords, collecting every
    violating (covered, coverer) pair."""
    M = code.generator.ring.modulus
    nz = code.nonzero_codewords()
    items = [(w.mask, w) for w in nz]
    witnesses = []
    cases = 0
    mult_cache: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for um, u in items:
        not_um = ~um
        for vm, v in items:
            if v is u:
                continue
            cases += 1
            if vm & not_um:
                continue
            mults = mult_cache.get(u.components)
            if mults is None:
                mults = _scalar_multiples(u.components, M)
                mult_cache[u.components] = mults
            if v.components not in mults:
                witnesses.append((v, u))
    weights = [w.weight for w in nz]
    w_min = min(weights) if weights else 0
    w_max = max(weights) if weights else 0
    ab_ok = w_min * M > w_max * (M - 1)
    return MinimalityReport(
        minimal=not witnesses,
        witnesses=tuple(witnesses),
        w_min=w_min,
        w_max=w_max,
        ab_ratio_ok=ab_ok,
        cases_checked=cases,
    )


def one_dim_minimal_check(
    ring: RingSpec, v: Vector, cap: int | None = None
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Brute-force the cover structure of the cyclic module {a*v : a in R}.

    True iff any two distinct nonzero members with nested supports are
    scalar-related (one is a ring multiple of the other).  Returns the
    offending (covered, coverer) pair otherwise.
    """
    if cap is None:
        cap = DEFAULT_CAP
    comps = _as_components(v)
    if not any(comps):
        raise ZeroCodewordError("the zero vector generates only itself")
    M = ring.modulus
    budget = M * len(comps)
    if budget > cap:
        raise EnumerationCapError(required=budget, cap=cap)
    members = {tuple(a * x % M for x in comps) for a in range(M)}
    members.discard(tuple(0 for _ in comps))
    mults = {w: _scalar_multiples(w, M) for w in members}
    sups = {w: set(support(w)) for w in members}
    for x in sorted(members):
        for y in sorted(members):
            if x == y:
                continue
            if sups[x] <= sups[y] and x not in mults[y] and y not in mults[x]:
                return False, (x, y)
    return True, None
