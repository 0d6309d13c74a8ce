"""Bit-packed GF(2) elimination against independent naive oracles."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cuplength.gf2linalg import (
    BitMatrix,
    Eliminator,
    echelonize,
    kernel_basis,
    rank,
    reduce_vector,
)


def naive_rank(rows: list[int]) -> int:
    """Textbook elimination with per-column scans, no pivot bookkeeping."""
    rows = [r for r in rows if r]
    count = 0
    while rows:
        pivot_row = rows[0]
        pivot_bit = pivot_row & -pivot_row
        count += 1
        rows = [r ^ pivot_row if r & pivot_bit else r for r in rows[1:]]
        rows = [r for r in rows if r]
    return count


def span_of(rows: list[int]) -> set[int]:
    span = {0}
    for r in rows:
        span |= {v ^ r for v in span}
    return span


def test_membership_against_span_enumeration():
    rng = random.Random(20240817)
    for _ in range(300):
        width = rng.randint(1, 24)
        count = rng.randint(0, min(12, width))
        rows = [rng.getrandbits(width) for _ in range(count)]
        elim = Eliminator()
        for r in rows:
            elim.add(r)
        span = span_of(rows)
        assert elim.rank == naive_rank(rows)
        sample = rng.sample(sorted(span), min(16, len(span)))
        for v in sample:
            assert elim.contains(v)
        for _ in range(16):
            v = rng.getrandbits(width)
            assert elim.contains(v) == (v in span)


def random_row(rng: random.Random, width: int, density_draws: int) -> int:
    """AND of several uniform draws: density 2^-draws, draws=1 is uniform."""
    r = (1 << width) - 1
    for _ in range(density_draws):
        r &= rng.getrandbits(width)
    return r


def test_rank_against_naive_elimination_200x200():
    rng = random.Random(99173)
    for trial in range(100):
        draws = rng.choice((1, 1, 2, 4))
        rows = [random_row(rng, 200, draws) for _ in range(200)]
        m = BitMatrix(tuple(rows), 200)
        assert rank(m) == naive_rank(rows), f"trial {trial}"


def test_spec_reduced_echelon_example():
    m = BitMatrix((0b011, 0b110), 3)
    basis = echelonize(m)
    assert basis.pivots == (0, 1)
    assert basis.rows == (0b101, 0b110)


@settings(max_examples=80)
@given(st.lists(st.integers(0, 2**16 - 1), max_size=12))
def test_reduced_echelon_shape(rows):
    basis = echelonize(BitMatrix(tuple(rows), 16))
    assert list(basis.pivots) == sorted(basis.pivots)
    for i, row in enumerate(basis.rows):
        assert row & (1 << basis.pivots[i])
        for j, p in enumerate(basis.pivots):
            if i != j:
                assert not row & (1 << p), "pivot column not cleared"


@settings(max_examples=80)
@given(st.lists(st.integers(0, 2**12 - 1), max_size=10))
def test_reduce_vector_fixed_point(rows):
    basis = echelonize(BitMatrix(tuple(rows), 12))
    for r in rows:
        assert reduce_vector(r, basis) == 0
    for v in range(0, 2**12, 173):
        reduced = reduce_vector(v, basis)
        assert reduce_vector(reduced, basis) == reduced
        assert reduce_vector(v ^ reduced, basis) == 0


@settings(max_examples=60)
@given(st.lists(st.integers(0, 2**10 - 1), max_size=12))
def test_kernel_rank_nullity(rows):
    m = BitMatrix(tuple(rows), 10)
    kernel = kernel_basis(m)
    assert rank(m) + len(kernel) == 10
    for kv in kernel:
        for row in rows:
            assert bin(row & kv).count("1") % 2 == 0
    assert naive_rank(list(kernel)) == len(kernel)


def test_eliminator_add_reports_growth():
    elim = Eliminator()
    assert elim.add(0b101)
    assert not elim.add(0b101)
    assert elim.add(0b011)
    assert not elim.add(0b110)
    assert elim.rank == 2


def test_finalize_idempotent_membership():
    rng = random.Random(5)
    rows = [rng.getrandbits(20) for _ in range(9)]
    elim = Eliminator()
    for r in rows:
        elim.add(r)
    before = {v: elim.contains(v) for v in (rng.getrandbits(20) for _ in range(50))}
    elim.finalize()
    for v, was in before.items():
        assert elim.contains(v) == was
    basis = elim.basis(20)
    assert basis.rank == elim.rank
    for r in rows:
        assert reduce_vector(r, basis) == 0
