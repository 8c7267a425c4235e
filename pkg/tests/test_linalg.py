import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from picardtorus.errors import SizeGuardExceeded
from picardtorus.linalg import (
    RationalMatrix,
    integer_determinant,
    kernel_basis,
    normalize_integer_vector,
    rank_bareiss,
    rank_naive_oracle,
    solve,
)

DIAG_I_ROWS = [[1, 0, -1, 0, 0, 0], [0, -1, 0, 0, 1, 0]]


def matrices(max_rows=8, max_cols=12, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_empty_matrix_has_rank_zero():
    assert rank_bareiss(RationalMatrix.zeros(0, 6)) == 0
    assert rank_naive_oracle(RationalMatrix.zeros(0, 6)) == 0


def test_small_examples():
    assert rank_bareiss(DIAG_I_ROWS) == 2
    assert rank_bareiss(RationalMatrix.identity(5)) == 5
    u, v = [1, -2, 3, 0, 5, 1], [2, 1, 0, -1, 4, 7]
    assert rank_bareiss([[a * b for b in v] for a in u]) == 1
    for M in (DIAG_I_ROWS, RationalMatrix.identity(5)):
        assert rank_naive_oracle(M) == rank_bareiss(M)


def test_kernel_examples():
    assert kernel_basis(RationalMatrix.identity(3)) == []
    assert kernel_basis(RationalMatrix.zeros(0, 4)) == [tuple(int(i == j) for j in range(4)) for i in range(4)]
    K = kernel_basis(DIAG_I_ROWS)
    assert len(K) == 4
    M = RationalMatrix.from_rows(DIAG_I_ROWS)
    assert all(M.apply(v) == [0, 0] for v in K)
    assert rank_bareiss(K) == 4


def test_normalize_integer_vector():
    assert normalize_integer_vector([Fraction(-1, 2), Fraction(3, 4), 0]) == (2, -3, 0)
    assert normalize_integer_vector([0, 0]) == (0, 0)


def test_oracle_size_guard():
    with pytest.raises(SizeGuardExceeded):
        rank_naive_oracle(RationalMatrix.zeros(1001, 1000))


def test_rational_entries():
    M = [[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 3), Fraction(4, 7)]]
    assert rank_bareiss(M) == 1
    assert kernel_basis(M) == [(6, -7)]


@given(matrices())
def test_rank_matches_oracle(rows):
    assert rank_bareiss(rows) == rank_naive_oracle(rows)


@given(matrices())
def test_rank_nullity_and_kernel(rows):
    M = RationalMatrix.from_rows(rows)
    K = kernel_basis(M)
    assert rank_bareiss(M) + len(K) == M.cols
    for v in K:
        assert all(x == 0 for x in M.apply(v))
        assert v == normalize_integer_vector(v)


@given(matrices())
def test_transpose_preserves_rank(rows):
    M = RationalMatrix.from_rows(rows)
    assert rank_bareiss(M) == rank_bareiss(M.transpose())


@given(matrices(max_rows=4, max_cols=4))
def test_rank_invariant_under_row_operations(rows):
    rng = random.Random(len(rows))
    A = [list(r) for r in rows]
    for _ in range(5):
        i, j = rng.randrange(len(A)), rng.randrange(len(A))
        if i != j:
            A[i] = [a + 2 * b for a, b in zip(A[i], A[j])]
    assert rank_bareiss(A) == rank_bareiss(rows)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
def test_determinant_and_solve(rows):
    d = integer_determinant(rows)
    assert (d != 0) == (rank_bareiss(rows) == 4)
    b = [1, 2, 3, 4]
    sol = solve(rows, [b])
    if d == 0:
        assert sol is None
    else:
        assert RationalMatrix.from_rows(rows).apply(sol[0]) == b


def test_thousand_random_matrices_against_oracle():
    rng = random.Random(2024)
    for _ in range(1000):
        r, c = rng.randint(1, 12), rng.randint(1, 20)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.3 and r > 1:
            rows[-1] = [a - b for a, b in zip(rows[0], rows[1 % r])]
        assert rank_bareiss(rows) == rank_naive_oracle(rows)
