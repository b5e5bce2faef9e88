"""Builders for the two-row generator matrices.

The canonical matrix over Z/p^n strings together the identity columns, one
(1, u) column per unit, one (d, 1) and one (1, d) column per zero divisor
(all in ascending element order), then any extra columns.  Variants scale
the canonical prefix by units or drop one column kind entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .codes import GeneratorMatrix
from .errors import (
    MatrixFormatError,
    OmissionViolatedError,
    ShapeError,
    UnsupportedRingError,
    WrongClassError,
)
from .ring import ElementClass, RingSpec, classify, inv, make_ring, units, zero_divisors
from .structure import PairKind, classify_pair

Column = tuple[int, int]


@dataclass(frozen=True)
class ColumnKind:
    """One of the five column types, with its defining element if any."""

    tag: PairKind
    param: int | None = None

    @classmethod
    def e1(cls) -> "ColumnKind":
        return cls(PairKind.E1)

    @classmethod
    def e2(cls) -> "ColumnKind":
        return cls(PairKind.E2)

    @classmethod
    def unit(cls, u: int) -> "ColumnKind":
        return cls(PairKind.UNIT_COL, u)

    @classmethod
    def d_col(cls, d: int) -> "ColumnKind":
        return cls(PairKind.D_COL, d)

    @classmethod
    def d_star(cls, d: int) -> "ColumnKind":
        return cls(PairKind.D_STAR_COL, d)


@dataclass(frozen=True)
class ScalingVector:
    """Per-column unit multipliers for the canonical prefix."""

    scalars: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.scalars)


def _require_prime_power(ring: RingSpec) -> None:
    if not ring.is_prime_power:
        raise UnsupportedRingError(
            f"construction requires a prime-power modulus, got {ring.modulus}"
        )


def canonical_blocks(
    ring: RingSpec,
) -> tuple[list[Column], list[Column], list[Column]]:
    """The (U, DStar, D) column blocks, each in ascending element order."""
    _require_prime_power(ring)
    us = units(ring)
    zds = zero_divisors(ring)
    U = [(1, u) for u in us]
    DStar = [(d, 1) for d in zds]
    D = [(1, d) for d in zds]
    return U, DStar, D


def _assemble(
    ring: RingSpec,
    prefix: list[Column],
    layout: list[tuple[str, int, int]],
    extra: Sequence[Column],
) -> GeneratorMatrix:
    cols = prefix + [tuple(c) for c in extra]
    start = len(prefix)
    layout = layout + [("A", start, start + len(extra))]
    row1 = tuple(c[0] for c in cols)
    row2 = tuple(c[1] for c in cols)
    return GeneratorMatrix(ring, row1, row2, tuple(layout))


def build_G(ring: RingSpec, extra: Sequence[Column] = ()) -> GeneratorMatrix:
    """The canonical matrix (I2 | U | DStar | D | extra); m = p^n + p^(n-1) + k."""
    U, DStar, D = canonical_blocks(ring)
    prefix = [(1, 0), (0, 1)] + U + DStar + D
    layout = _prefix_layout(len(U), len(DStar), len(D))
    return _assemble(ring, prefix, layout, extra)


def _prefix_layout(nu: int, nds: int, nd: int) -> list[tuple[str, int, int]]:
    i = 2
    layout = [("I2", 0, 2)]
    layout.append(("U", i, i + nu))
    i += nu
    layout.append(("DStar", i, i + nds))
    i += nds
    layout.append(("D", i, i + nd))
    return layout


def build_G_scaled(
    ring: RingSpec,
    scaling: ScalingVector | Sequence[int],
    extra: Sequence[Column] = (),
) -> GeneratorMatrix:
    """Canonical matrix with column i of the prefix multiplied by a unit.

    Scaling the extra block is pointless (it is arbitrary anyway), so it is
    left untouched.  Dividing the scalars back out recovers build_G exactly.
    """
    U, DStar, D = canonical_blocks(ring)
    prefix = [(1, 0), (0, 1)] + U + DStar + D
    scalars = tuple(scaling.scalars if isinstance(scaling, ScalingVector) else scaling)
    if len(scalars) != len(prefix):
        raise ShapeError(
            f"scaling needs {len(prefix)} entries, got {len(scalars)}"
        )
    M = ring.modulus
    for s in scalars:
        if classify(ring, s) is not ElementClass.UNIT:
            raise WrongClassError(f"scaling entry {s} is not a unit of Z_{M}")
    scaled = [(a * s % M, b * s % M) for (a, b), s in zip(prefix, scalars)]
    layout = _prefix_layout(len(U), len(DStar), len(D))
    return _assemble(ring, scaled, layout, extra)


def inverse_scaling(ring: RingSpec, scaling: ScalingVector | Sequence[int]) -> tuple[int, ...]:
    """The unit inverses of a scaling vector (the diagonal that undoes it)."""
    scalars = scaling.scalars if isinstance(scaling, ScalingVector) else scaling
    return tuple(inv(ring, s) for s in scalars)


def _kind_param(decomp) -> int | None:
    if decomp.pair_type is PairKind.UNIT_COL or decomp.pair_type is PairKind.D_COL:
        return decomp.canonical[1]
    if decomp.pair_type is PairKind.D_STAR_COL:
        return decomp.canonical[0]
    return None


def _validate_omit(ring: RingSpec, omit: ColumnKind) -> None:
    if omit.tag in (PairKind.E1, PairKind.E2):
        if omit.param is not None:
            raise WrongClassError(f"{omit.tag.value} takes no parameter")
        return
    if omit.param is None:
        raise WrongClassError(f"{omit.tag.value} needs a defining element")
    cls = classify(ring, omit.param)
    if omit.tag is PairKind.UNIT_COL and cls is not ElementClass.UNIT:
        raise WrongClassError(f"{omit.param} is not a unit of Z_{ring.modulus}")
    if omit.tag in (PairKind.D_COL, PairKind.D_STAR_COL) and cls is not ElementClass.ZERO_DIVISOR:
        raise WrongClassError(
            f"{omit.param} is not a zero divisor of Z_{ring.modulus}"
        )


def build_G_omitted(
    ring: RingSpec, omit: ColumnKind, extra: Sequence[Column] = ()
) -> GeneratorMatrix:
    """Canonical matrix with every column of one kind removed.

    The extra block must not smuggle the kind back in: any extra column that
    is a unit multiple of the omitted column is rejected.
    """
    _require_prime_power(ring)
    _validate_omit(ring, omit)
    for col in extra:
        a, b = col
        decomp = classify_pair(ring, a, b)
        if (
            decomp.pair_type is omit.tag
            and _kind_param(decomp) == omit.param
            and classify(ring, decomp.scalar) is ElementClass.UNIT
        ):
            raise OmissionViolatedError(
                (a, b),
                f"extra column {(a, b)} is a unit multiple of the omitted kind",
            )
    U, DStar, D = canonical_blocks(ring)
    i2 = [(1, 0), (0, 1)]
    if omit.tag is PairKind.E1:
        i2 = [(0, 1)]
    elif omit.tag is PairKind.E2:
        i2 = [(1, 0)]
    elif omit.tag is PairKind.UNIT_COL:
        U = [c for c in U if c[1] != omit.param]
    elif omit.tag is PairKind.D_STAR_COL:
        DStar = [c for c in DStar if c[0] != omit.param]
    elif omit.tag is PairKind.D_COL:
        D = [c for c in D if c[1] != omit.param]
    prefix = i2 + U + DStar + D
    i = len(i2)
    layout = [("I2", 0, i)]
    layout.append(("U", i, i + len(U)))
    i += len(U)
    layout.append(("DStar", i, i + len(DStar)))
    i += len(DStar)
    layout.append(("D", i, i + len(D)))
    return _assemble(ring, prefix, layout, extra)


def shuffle_columns(G: GeneratorMatrix, permutation: Sequence[int]) -> GeneratorMatrix:
    """Reorder columns by a 1-based permutation of [1, m]; layout is dropped."""
    m = G.m
    perm = list(permutation)
    if sorted(perm) != list(range(1, m + 1)):
        raise ShapeError(f"permutation must be a bijection on [1, {m}]")
    cols = [G.column(i - 1) for i in perm]
    return GeneratorMatrix(
        G.ring, tuple(c[0] for c in cols), tuple(c[1] for c in cols), None
    )


class DemoName(Enum):
    Z4_EXAMPLE = "z4"
    Z6_COUNTEREXAMPLE = "z6"
    Z3_CONCLUSION = "z3-conclusion"


_DEMOS: dict[DemoName, tuple[int, tuple[int, ...], tuple[int, ...]]] = {
    DemoName.Z4_EXAMPLE: (
        4,
        (1, 0, 1, 1, 2, 1, 2, 0, 2),
        (0, 1, 1, 3, 1, 2, 0, 2, 2),
    ),
    DemoName.Z6_COUNTEREXAMPLE: (
        6,
        (1, 0, 1, 1, 1, 1, 1, 2, 3, 4),
        (0, 1, 1, 5, 2, 3, 4, 1, 1, 1),
    ),
    DemoName.Z3_CONCLUSION: (
        3,
        (1, 0, 1, 1, 1, 1),
        (0, 1, 1, 2, 2, 2),
    ),
}


def demo_matrix(name: DemoName | str) -> GeneratorMatrix:
    """One of the fixed demonstration matrices, by enum or CLI token."""
    if isinstance(name, str):
        try:
            name = DemoName(name)
        except ValueError:
            tokens = ", ".join(d.value for d in DemoName)
            raise ValueError(f"unknown demo {name!r}; expected one of {tokens}")
    modulus, row1, row2 = _DEMOS[name]
    return GeneratorMatrix(make_ring(modulus), row1, row2, None)


def to_text(G: GeneratorMatrix) -> str:
    """Serialize as the 4-line text format (modulus, shape, two rows)."""
    lines = [
        f"modulus {G.ring.modulus}",
        f"rows 2 cols {G.m}",
        " ".join(str(x) for x in G.row1),
        " ".join(str(x) for x in G.row2),
    ]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> GeneratorMatrix:
    """Parse the 4-line text format back into a matrix (no block layout)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 4:
        raise MatrixFormatError(f"expected 4 non-empty lines, got {len(lines)}")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "modulus":
        raise MatrixFormatError(f"bad header line: {lines[0]!r}")
    shape = lines[1].split()
    if len(shape) != 4 or shape[0] != "rows" or shape[2] != "cols":
        raise MatrixFormatError(f"bad shape line: {lines[1]!r}")
    try:
        modulus = int(head[1])
        nrows = int(shape[1])
        ncols = int(shape[3])
        row1 = tuple(int(x) for x in lines[2].split())
        row2 = tuple(int(x) for x in lines[3].split())
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer field: {exc}") from None
    if nrows != 2:
        raise MatrixFormatError(f"only 2-row matrices are supported, got {nrows}")
    if len(row1) != ncols or len(row2) != ncols:
        raise MatrixFormatError(
            f"declared {ncols} cols but rows have {len(row1)} and {len(row2)}"
        )
    ring = make_ring(modulus)
    for x in row1 + row2:
        if not 0 <= x < modulus:
            raise MatrixFormatError(f"entry {x} outside [0, {modulus})")
    return GeneratorMatrix(ring, row1, row2, None)
