"""Arithmetic and structural classification in Z/M.

Ring elements are plain ints in [0, M); every operation takes the RingSpec
explicitly, so several rings can coexist (no global state).  For prime-power
moduli the nonzero elements split into units and zero divisors, and every
nonzero x decomposes as p^k * u with u a unit; that decomposition is what the
rest of the package builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from enum import Enum
from typing import NamedTuple

from .errors import (
    InvalidModulusError,
    NoValuationError,
    NotInvertibleError,
    UnsupportedRingError,
    WrongClassError,
)

# Full unit/zero-divisor listings are only built up to this modulus.
LIST_CAP = 1 << 16
# make_ring factors by trial division; bounded so that stays instant.
FACTOR_CAP = 1 << 32


class ElementClass(Enum):
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"


@dataclass(frozen=True)
class RingSpec:
    """The ring Z/modulus with its factorization metadata."""

    modulus: int
    prime_factors: tuple[tuple[int, int], ...]

    @property
    def is_prime_power(self) -> bool:
        return len(self.prime_factors) == 1

    @property
    def p(self) -> int | None:
        """The prime, when the modulus is a prime power."""
        return self.prime_factors[0][0] if self.is_prime_power else None

    @property
    def n(self) -> int | None:
        """The exponent, when the modulus is a prime power."""
        return self.prime_factors[0][1] if self.is_prime_power else None

    def __repr__(self) -> str:
        return f"RingSpec(Z_{self.modulus})"


class Valuation(NamedTuple):
    """Decomposition x = p^k * unit_part of a nonzero element."""

    k: int
    unit_part: int


def make_ring(modulus: int) -> RingSpec:
    """Factor the modulus and return the ring Z/modulus."""
    if not isinstance(modulus, int) or isinstance(modulus, bool):
        raise InvalidModulusError(f"modulus must be an int, got {modulus!r}")
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
    if modulus > FACTOR_CAP:
        raise InvalidModulusError(f"modulus must be <= {FACTOR_CAP}, got {modulus}")
    factors = []
    m = modulus
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return RingSpec(modulus, tuple(factors))


def classify(ring: RingSpec, x: int) -> ElementClass:
    """Every element is zero, a unit, or a zero divisor; say which."""
    if x == 0:
        return ElementClass.ZERO
    if math.gcd(x, ring.modulus) == 1:
        return ElementClass.UNIT
    return ElementClass.ZERO_DIVISOR


@lru_cache(maxsize=256)
def units(ring: RingSpec) -> tuple[int, ...]:
    """All units in ascending order; the canonical indexing u_1 < u_2 < ..."""
    M = ring.modulus
    if M > LIST_CAP:
        raise InvalidModulusError(f"element listings capped at modulus {LIST_CAP}")
    gcd = math.gcd
    return tuple(x for x in range(1, M) if gcd(x, M) == 1)


@lru_cache(maxsize=256)
def zero_divisors(ring: RingSpec) -> tuple[int, ...]:
    """All nonzero non-units in ascending order; indexing d_1 < d_2 < ..."""
    M = ring.modulus
    if M > LIST_CAP:
        raise InvalidModulusError(f"element listings capped at modulus {LIST_CAP}")
    gcd = math.gcd
    return tuple(x for x in range(1, M) if gcd(x, M) != 1)


def inv(ring: RingSpec, u: int) -> int:
    """Multiplicative inverse of a unit."""
    M = ring.modulus
    if not 0 <= u < M or math.gcd(u, M) != 1:
        raise NotInvertibleError(f"{u} is not a unit of Z_{M}")
    return pow(u, -1, M)


def valuation(ring: RingSpec, x: int) -> Valuation:
    """Write nonzero x as p^k * u with u a unit, 0 <= k < n.

    The unit part is the exact integer quotient x // p^k, which makes the
    decomposition deterministic (it is only unique mod p^(n-k)).
    """
    if not ring.is_prime_power:
        raise UnsupportedRingError(
            f"valuation needs a prime-power modulus, got {ring.modulus}"
        )
    if x == 0:
        raise NoValuationError("zero has no p^k * u decomposition")
    p = ring.p
    k = 0
    u = x
    while u % p == 0:
        u //= p
        k += 1
    return Valuation(k, u)


def neg_unit_partner(ring: RingSpec, u: int) -> int:
    """The unique unit u' with 1 + u*u' = 0, namely -u^(-1)."""
    M = ring.modulus
    if not 0 <= u < M or math.gcd(u, M) != 1:
        raise NotInvertibleError(f"{u} is not a unit of Z_{M}")
    return (M - pow(u, -1, M)) % M


def additive_partner(ring: RingSpec, d: int) -> int:
    """The unique zero divisor d' with d + d' = 0, namely M - d."""
    if classify(ring, d) is not ElementClass.ZERO_DIVISOR:
        raise WrongClassError(f"{d} is not a zero divisor of Z_{ring.modulus}")
    return ring.modulus - d


@lru_cache(maxsize=256)
def element_tables(ring: RingSpec) -> tuple[list[int], list[int], list[int], list[int]]:
    """Per-element lookup tables for the exhaustive sweeps.

    Returns (tags, invs, val_k, val_u) indexed by element value:
    tags[x] is 0/1/2 for zero/unit/zero-divisor, invs[x] the inverse of a
    unit (0 otherwise), and val_k/val_u the p^k * u decomposition (only
    meaningful for prime-power rings; empty lists otherwise).
    """
    M = ring.modulus
    if M > LIST_CAP:
        raise InvalidModulusError(f"element tables capped at modulus {LIST_CAP}")
    gcd = math.gcd
    tags = [0] * M
    invs = [0] * M
    for x in range(1, M):
        if gcd(x, M) == 1:
            tags[x] = 1
            invs[x] = pow(x, -1, M)
        else:
            tags[x] = 2
    if not ring.is_prime_power:
        return tags, invs, [], []
    p = ring.p
    val_k = [0] * M
    val_u = [1] * M
    for x in range(1, M):
        k = 0
        u = x
        while u % p == 0:
            u //= p
            k += 1
        val_k[x] = k
        val_u[x] = u
    return tags, invs, val_k, val_u
