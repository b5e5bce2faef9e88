"""Exhaustive verifiers for the structural facts behind the code construction.

Each verifier sweeps its entire quantified domain (never a sample) and
returns a LemmaReport that either holds or carries a concrete counterexample
re-checkable by direct arithmetic.  classify_pair decomposes an arbitrary
coefficient pair into scalar * canonical form, the five-way split that drives
both the construction and the omission checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import UnsupportedRingError, WrongClassError
from .ring import (
    ElementClass,
    RingSpec,
    classify,
    element_tables,
    units,
    zero_divisors,
)


class LemmaId(Enum):
    ZD_CLOSURE = "ZdClosure"
    UNIT_ZD_SUM = "UnitZdSum"
    ZD_TRANSLATES = "ZdTranslates"
    UNIT_ORBIT = "UnitOrbit"
    UNIQUE_NEG_PARTNER = "UniqueNegPartner"
    UNIQUE_ADDITIVE_PARTNER = "UniqueAdditivePartner"


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: LemmaId
    holds: bool
    witness: tuple[int, ...] | None
    cases_checked: int


class PairKind(Enum):
    E1 = "E1"
    E2 = "E2"
    UNIT_COL = "UnitCol"
    D_COL = "DCol"
    D_STAR_COL = "DStarCol"


class PairDecomposition(NamedTuple):
    """(c1, c2) written as scalar * canonical with canonical of fixed shape.

    The canonical pair is (1,0), (0,1), (1,u), (1,d) or (d,1) according to
    pair_type, and scalar * canonical == (c1, c2) componentwise mod M.
    """

    pair_type: PairKind
    scalar: int
    canonical: tuple[int, int]


def _require_prime_power(ring: RingSpec, what: str) -> None:
    if not ring.is_prime_power:
        raise UnsupportedRingError(
            f"{what} requires a prime-power modulus, got {ring.modulus}"
        )


def classify_pair(ring: RingSpec, c1: int, c2: int) -> PairDecomposition:
    """Sort (c1, c2) into one of the five column types.

    Case order matters for ties: c1 == 0 wins (so (0, 0) is E2 with scalar
    0), then c2 == 0.  For two zero divisors the one of smaller p-adic
    valuation is scaled to 1.
    """
    _require_prime_power(ring, "classify_pair")
    M = ring.modulus
    if c1 == 0:
        return PairDecomposition(PairKind.E2, c2, (0, 1))
    if c2 == 0:
        return PairDecomposition(PairKind.E1, c1, (1, 0))
    tags, invs, val_k, val_u = element_tables(ring)
    t1 = tags[c1]
    if t1 == 1:
        if tags[c2] == 1:
            return PairDecomposition(PairKind.UNIT_COL, c1, (1, c2 * invs[c1] % M))
        return PairDecomposition(PairKind.D_COL, c1, (1, c2 * invs[c1] % M))
    if tags[c2] == 1:
        return PairDecomposition(PairKind.D_STAR_COL, c2, (c1 * invs[c2] % M, 1))
    k1 = val_k[c1]
    k2 = val_k[c2]
    if k1 < k2:
        rest = ring.p ** (k2 - k1) * val_u[c2] * invs[val_u[c1]] % M
        return PairDecomposition(PairKind.D_COL, c1, (1, rest))
    if k2 < k1:
        rest = ring.p ** (k1 - k2) * val_u[c1] * invs[val_u[c2]] % M
        return PairDecomposition(PairKind.D_STAR_COL, c2, (rest, 1))
    return PairDecomposition(PairKind.UNIT_COL, c1, (1, val_u[c2] * invs[val_u[c1]] % M))


def zd_translates(ring: RingSpec, d: int) -> list[int]:
    """The multiset {d + d_j} over all zero divisors d_j, in d_j order."""
    _require_prime_power(ring, "zd_translates")
    if classify(ring, d) is not ElementClass.ZERO_DIVISOR:
        raise WrongClassError(f"{d} is not a zero divisor of Z_{ring.modulus}")
    M = ring.modulus
    return [(d + dj) % M for dj in zero_divisors(ring)]


def unit_orbit(ring: RingSpec, u: int) -> list[int]:
    """The multiset {1 + u*u_j} over all units u_j, in u_j order."""
    _require_prime_power(ring, "unit_orbit")
    if classify(ring, u) is not ElementClass.UNIT:
        raise WrongClassError(f"{u} is not a unit of Z_{ring.modulus}")
    M = ring.modulus
    return [(1 + u * uj) % M for uj in units(ring)]


def verify_zd_closure(ring: RingSpec) -> LemmaReport:
    """Sum and product of any two zero divisors is zero or a zero divisor."""
    _require_prime_power(ring, "verify_zd_closure")
    M = ring.modulus
    tags, _, _, _ = element_tables(ring)
    zds = zero_divisors(ring)
    cases = 0
    for a in zds:
        for b in zds:
            cases += 1
            if tags[(a + b) % M] == 1 or tags[a * b % M] == 1:
                return LemmaReport(LemmaId.ZD_CLOSURE, False, (a, b), cases)
    return LemmaReport(LemmaId.ZD_CLOSURE, True, None, cases)


def verify_unit_zd_sum(ring: RingSpec) -> LemmaReport:
    """The sum of a unit and a zero divisor is a unit."""
    _require_prime_power(ring, "verify_unit_zd_sum")
    M = ring.modulus
    tags, _, _, _ = element_tables(ring)
    zds = zero_divisors(ring)
    cases = 0
    for u in units(ring):
        for d in zds:
            cases += 1
            if tags[(u + d) % M] != 1:
                return LemmaReport(LemmaId.UNIT_ZD_SUM, False, (u, d), cases)
    return LemmaReport(LemmaId.UNIT_ZD_SUM, True, None, cases)


def verify_zd_translates(ring: RingSpec) -> LemmaReport:
    """d + D runs over every zero divisor except d, plus 0, without repeats."""
    _require_prime_power(ring, "verify_zd_translates")
    zds = zero_divisors(ring)
    cases = 0
    for d in zds:
        got = zd_translates(ring, d)
        cases += len(got)
        expected = sorted(x for x in zds if x != d) + [0]
        if sorted(got) != sorted(expected):
            return LemmaReport(LemmaId.ZD_TRANSLATES, False, (d,), cases)
    return LemmaReport(LemmaId.ZD_TRANSLATES, True, None, cases)


def verify_unit_orbit(ring: RingSpec) -> LemmaReport:
    """1 + u*U hits every zero divisor exactly once and zero exactly once."""
    _require_prime_power(ring, "verify_unit_orbit")
    M = ring.modulus
    us = units(ring)
    zd_set = set(zero_divisors(ring))
    cases = 0
    for u in us:
        cases += len(us)
        orbit = {(1 + u * w) % M for w in us}
        # distinct values + containment give "exactly once" for a multiset
        # of |U| entries
        if len(orbit) != len(us) or 0 not in orbit or not zd_set <= orbit:
            return LemmaReport(LemmaId.UNIT_ORBIT, False, (u,), cases)
    return LemmaReport(LemmaId.UNIT_ORBIT, True, None, cases)


def verify_unique_neg_partner(ring: RingSpec) -> LemmaReport:
    """Exactly one unit u' satisfies 1 + u*u' = 0, and it is -u^(-1)."""
    _require_prime_power(ring, "verify_unique_neg_partner")
    M = ring.modulus
    _, invs, _, _ = element_tables(ring)
    us = units(ring)
    cases = 0
    for u in us:
        partner = (M - invs[u]) % M
        for w in us:
            cases += 1
            if ((1 + u * w) % M == 0) != (w == partner):
                return LemmaReport(LemmaId.UNIQUE_NEG_PARTNER, False, (u, w), cases)
    return LemmaReport(LemmaId.UNIQUE_NEG_PARTNER, True, None, cases)


def verify_unique_additive_partner(ring: RingSpec) -> LemmaReport:
    """Exactly one zero divisor d' satisfies d + d' = 0, and it is M - d."""
    _require_prime_power(ring, "verify_unique_additive_partner")
    M = ring.modulus
    zds = zero_divisors(ring)
    cases = 0
    for d in zds:
        partner = M - d
        for w in zds:
            cases += 1
            if ((d + w) % M == 0) != (w == partner):
                return LemmaReport(
                    LemmaId.UNIQUE_ADDITIVE_PARTNER, False, (d, w), cases
                )
    return LemmaReport(LemmaId.UNIQUE_ADDITIVE_PARTNER, True, None, cases)


def verify_all(ring: RingSpec) -> list[LemmaReport]:
    """Run all six verifiers, in a fixed order."""
    return [
        verify_zd_closure(ring),
        verify_unit_zd_sum(ring),
        verify_zd_translates(ring),
        verify_unit_orbit(ring),
        verify_unique_neg_partner(ring),
        verify_unique_additive_partner(ring),
    ]
