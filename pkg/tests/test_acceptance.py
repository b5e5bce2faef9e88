"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines.  The heavy exhaustive sweep (criterion 7) is partitioned across two
worker processes; results are merged per modulus, so the outcome does not
depend on the partitioning.
"""

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor

from ringcodes.codes import enumerate_code, is_minimal_code
from ringcodes.construction import (
    ColumnKind,
    build_G,
    build_G_omitted,
    build_G_scaled,
    demo_matrix,
    inverse_scaling,
)
from ringcodes.ring import make_ring, units
from ringcodes.structure import classify_pair, verify_all


def _pass(n: int, detail: str, elapsed: float | None = None) -> None:
    timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    print(f"\nACCEPTANCE {n}: PASS -- {detail}{timing}")


def prime_power_moduli(cap: int) -> list[int]:
    return [m for m in range(2, cap + 1) if make_ring(m).is_prime_power]


# ---------------------------------------------------------------------------
# 1. Z_4 golden reproduction
# ---------------------------------------------------------------------------

Z4_GOLDEN = [
    ((0, 0, 0, 0, 0, 0, 0, 0, 0), ()),
    ((1, 0, 1, 1, 2, 1, 2, 0, 2), (1, 3, 4, 5, 6, 7, 9)),
    ((0, 1, 1, 3, 1, 2, 0, 2, 2), (2, 3, 4, 5, 6, 8, 9)),
    ((2, 0, 2, 2, 0, 2, 0, 0, 0), (1, 3, 4, 6)),
    ((3, 0, 3, 3, 2, 3, 2, 0, 2), (1, 3, 4, 5, 6, 7, 9)),
    ((0, 2, 2, 2, 2, 0, 0, 0, 0), (2, 3, 4, 5)),
    ((0, 3, 3, 1, 3, 2, 0, 2, 2), (2, 3, 4, 5, 6, 8, 9)),
    ((1, 1, 2, 0, 3, 3, 2, 2, 0), (1, 2, 3, 5, 6, 7, 8)),
    ((2, 2, 0, 0, 2, 2, 0, 0, 0), (1, 2, 5, 6)),
    ((3, 3, 2, 0, 1, 1, 2, 2, 0), (1, 2, 3, 5, 6, 7, 8)),
    ((1, 2, 3, 3, 0, 1, 2, 0, 2), (1, 2, 3, 4, 6, 7, 9)),
    ((1, 3, 0, 2, 1, 3, 2, 2, 0), (1, 2, 4, 5, 6, 7, 8)),
    ((2, 1, 3, 1, 1, 0, 0, 2, 2), (1, 2, 3, 4, 5, 8, 9)),
    ((2, 3, 1, 3, 3, 0, 0, 2, 2), (1, 2, 3, 4, 5, 8, 9)),
    ((3, 1, 0, 2, 3, 1, 2, 2, 0), (1, 2, 4, 5, 6, 7, 8)),
    ((3, 2, 1, 1, 0, 3, 2, 0, 2), (1, 2, 3, 4, 6, 7, 9)),
]


def test_criterion_1_z4_golden_reproduction():
    start = time.perf_counter()
    code = enumerate_code(demo_matrix("z4"))
    got = {w.components: w.support for w in code.codewords}
    assert got == dict(Z4_GOLDEN)
    assert len(code) == 16
    report = is_minimal_code(code)
    assert report.minimal and report.witnesses == ()
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _pass(1, "Z_4 demo: 16 exact codewords/supports, minimal", elapsed)


# ---------------------------------------------------------------------------
# 2. the five omission counterexamples over Z_4
# ---------------------------------------------------------------------------

A_BLOCK = [(2, 0), (0, 2), (2, 2)]

OMISSION_WITNESSES = [
    (ColumnKind.e1(), (0, 2, 2, 0, 2, 0, 0, 0), (1, 1, 3, 1, 2, 0, 2, 2)),
    (ColumnKind.e2(), (0, 2, 2, 2, 0, 0, 0, 0), (1, 1, 1, 2, 1, 2, 0, 2)),
    (ColumnKind.unit(1), (2, 0, 2, 0, 2, 0, 0, 0), (1, 3, 2, 1, 3, 2, 2, 0)),
    (ColumnKind.d_col(2), (2, 0, 2, 2, 0, 0, 0, 0), (2, 1, 3, 1, 1, 0, 2, 2)),
    (ColumnKind.d_star(2), (0, 2, 2, 2, 0, 0, 0, 0), (1, 2, 3, 3, 1, 2, 0, 2)),
]


def test_criterion_2_omission_counterexamples():
    start = time.perf_counter()
    ring = make_ring(4)
    for kind, covered, coverer in OMISSION_WITNESSES:
        G = build_G_omitted(ring, kind, A_BLOCK)
        report = is_minimal_code(enumerate_code(G))
        assert not report.minimal, kind
        pairs = {(v.components, u.components) for v, u in report.witnesses}
        assert (covered, coverer) in pairs, kind
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _pass(2, "five omission variants over Z_4 all non-minimal with the "
             "expected witness", elapsed)


# ---------------------------------------------------------------------------
# 3. Z_6 impossibility demo
# ---------------------------------------------------------------------------

def test_criterion_3_z6_counterexample():
    start = time.perf_counter()
    report = is_minimal_code(enumerate_code(demo_matrix("z6")))
    assert not report.minimal
    pairs = {(v.components, u.components) for v, u in report.witnesses}
    assert ((1, 0, 1, 1, 1, 1, 1, 2, 3, 4), (2, 3, 5, 5, 2, 5, 2, 1, 3, 5)) in pairs
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _pass(3, "Z_6 demo non-minimal with the exact witness pair", elapsed)


# ---------------------------------------------------------------------------
# 4. canonical construction minimal at desk scale
# ---------------------------------------------------------------------------

def test_criterion_4_canonical_minimal_desk_scale():
    start = time.perf_counter()
    for m in [2, 3, 5, 7, 4, 8, 9, 25, 27]:
        report = is_minimal_code(enumerate_code(build_G(make_ring(m))))
        assert report.minimal, m
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _pass(4, "canonical codes minimal for Z_2..Z_27 (9 rings)", elapsed)


# ---------------------------------------------------------------------------
# 5. random extra columns never break minimality
# ---------------------------------------------------------------------------

def test_criterion_5_random_extra_columns():
    start = time.perf_counter()
    checked = 0
    for m in [2, 3, 4, 5, 7, 8, 9]:
        ring = make_ring(m)
        rng = random.Random(1000 + m)
        for _ in range(20):
            extra = [
                (rng.randrange(m), rng.randrange(m))
                for _ in range(rng.randint(0, 3))
            ]
            report = is_minimal_code(enumerate_code(build_G(ring, extra)))
            assert report.minimal, (m, extra)
            checked += 1
    elapsed = time.perf_counter() - start
    _pass(5, f"{checked} seeded random extra blocks, 100% minimal", elapsed)


# ---------------------------------------------------------------------------
# 6. unit scalings preserve minimality and invert exactly
# ---------------------------------------------------------------------------

def test_criterion_6_unit_scalings():
    start = time.perf_counter()
    for m in (4, 9):
        ring = make_ring(m)
        us = units(ring)
        width = build_G(ring).m
        rng = random.Random(600 + m)
        base = build_G(ring).columns()
        for _ in range(20):
            scal = [rng.choice(us) for _ in range(width)]
            G1 = build_G_scaled(ring, scal)
            assert is_minimal_code(enumerate_code(G1)).minimal, (m, scal)
            back = inverse_scaling(ring, scal)
            rebuilt = [
                (a * s % m, b * s % m)
                for (a, b), s in zip(G1.columns(), back)
            ]
            assert rebuilt == base, (m, scal)
    elapsed = time.perf_counter() - start
    _pass(6, "40 seeded unit scalings over Z_4/Z_9: minimal, inverse "
             "scaling reproduces the canonical matrix", elapsed)


# ---------------------------------------------------------------------------
# 7. exhaustive structural checks for every prime power <= 729
# ---------------------------------------------------------------------------

def _criterion7_worker(m: int) -> tuple[int, list[str], int, int]:
    ring = make_ring(m)
    failed = [r.lemma_id.value for r in verify_all(ring) if not r.holds]
    mismatches = 0
    pairs = 0
    for c1 in range(m):
        for c2 in range(m):
            _, scalar, (x, y) = classify_pair(ring, c1, c2)
            if (scalar * x - c1) % m or (scalar * y - c2) % m:
                mismatches += 1
            pairs += 1
    return m, failed, mismatches, pairs


def test_criterion_7_lemma_suites_and_pair_reconstruction():
    start = time.perf_counter()
    moduli = sorted(prime_power_moduli(729), reverse=True)  # big rings first
    with ProcessPoolExecutor(max_workers=2) as pool:
        results = list(pool.map(_criterion7_worker, moduli))
    total_pairs = 0
    for m, failed, mismatches, pairs in results:
        assert failed == [], (m, failed)
        assert mismatches == 0, m
        assert pairs == m * m
        total_pairs += pairs
    assert {m for m, _, _, _ in results} == set(moduli)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _pass(7, f"6 lemma suites + pair reconstruction over {len(moduli)} "
             f"prime-power rings, {total_pairs} pairs", elapsed)


# ---------------------------------------------------------------------------
# 8. the ternary example that beats the weight-ratio bound
# ---------------------------------------------------------------------------

def _weight_range_oracle(M: int, rows) -> tuple[int, int]:
    r1, r2 = rows
    weights = set()
    for c1 in range(M):
        for c2 in range(M):
            vec = [(c1 * a + c2 * b) % M for a, b in zip(r1, r2)]
            if any(vec):
                weights.add(sum(1 for x in vec if x))
    return min(weights), max(weights)


def test_criterion_8_z3_ab_violation():
    G = demo_matrix("z3-conclusion")
    report = is_minimal_code(enumerate_code(G))
    assert report.minimal
    assert not report.ab_ratio_ok
    # independent enumeration oracle, then the frozen golden values
    assert _weight_range_oracle(3, (G.row1, G.row2)) == (3, 5)
    assert (report.w_min, report.w_max) == (3, 5)
    assert not (3 / 5 > 2 / 3)
    _pass(8, "Z_3 2x6 demo: minimal with w_min/w_max = 3/5 <= 2/3")


# ---------------------------------------------------------------------------
# 9. the q+1 length lower bound
# ---------------------------------------------------------------------------

def _oracle_two_dim_minimal(M: int, columns) -> bool | None:
    """Self-contained minimality check; None when the span is not free of
    rank two (fewer than M^2 distinct words)."""
    vecs = set()
    for c1 in range(M):
        for c2 in range(M):
            vecs.add(tuple((c1 * a + c2 * b) % M for a, b in columns))
    if len(vecs) != M * M:
        return None
    words = [v for v in vecs if any(v)]
    supports = {v: {i for i, x in enumerate(v) if x} for v in words}
    for u in words:
        su = supports[u]
        multiples = {tuple(a * x % M for x in u) for a in range(M)}
        for v in words:
            if supports[v] <= su and v not in multiples:
                return False
    return True


def test_criterion_9_length_lower_bound():
    start = time.perf_counter()
    for p in (2, 3, 5, 7):
        assert build_G(make_ring(p)).m == p + 1
    # the oracle accepts the canonical length-4 ternary construction ...
    assert _oracle_two_dim_minimal(3, build_G(make_ring(3)).columns()) is True
    # ... and rejects every shorter candidate
    column_space = list(itertools.product(range(3), repeat=2))
    two_dim = 0
    for m in (1, 2, 3):
        for cols in itertools.product(column_space, repeat=m):
            verdict = _oracle_two_dim_minimal(3, cols)
            if verdict is not None:
                two_dim += 1
                assert verdict is False, cols
    assert two_dim > 0
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _pass(9, f"canonical m = p+1 for primes; no 2-dim minimal ternary code "
             f"of length <= 3 among {two_dim} rank-2 candidates", elapsed)
