"""Exact linear algebra over Q.

``rank_bareiss`` and ``kernel_basis`` share one fraction-free elimination on
integer rows.  ``rank_naive_oracle`` is a deliberately separate rational
Gaussian elimination with a different pivot rule, used only to cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import SizeGuardExceeded

ORACLE_SIZE_GUARD = 10**6


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [[Fraction(x) for x in r] for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * Fraction(x) for a, x in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]


def _as_matrix(M) -> RationalMatrix:
    return M if isinstance(M, RationalMatrix) else RationalMatrix.from_rows(M)


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    out = []
    for i in range(M.rows):
        row = M.row(i)
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _bareiss_echelon(M: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form and its pivot columns.

    Pivot rule: for each column left to right, the first row (top-down) at or
    below the current pivot row with a nonzero entry.
    """
    A = _integer_rows(M)
    nrows, ncols = M.rows, M.cols
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        piv_row = A[r]
        pv = piv_row[c]
        for i in range(r + 1, nrows):
            row = A[i]
            f = row[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j] - f * piv_row[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_bareiss(M) -> int:
    """Exact rank over Q."""
    M = _as_matrix(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_bareiss_echelon(M)[1])


def normalize_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Clear denominators, divide by the content, make the first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(M) -> list[tuple[int, ...]]:
    """Q-basis of the right kernel, one primitive integer vector per free column."""
    M = _as_matrix(M)
    n = M.cols
    if M.rows == 0:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    E, pivots = _bareiss_echelon(M)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = E[r]
            s = sum((row[j] * x[j] for j in range(c + 1, n) if row[j] and x[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(normalize_integer_vector(x))
    return basis


def rank_naive_oracle(M) -> int:
    """Rank by plain rational elimination; pivot = smallest numerator+denominator size."""
    M = _as_matrix(M)
    if M.rows * M.cols > ORACLE_SIZE_GUARD:
        raise SizeGuardExceeded(f"{M.rows}x{M.cols} exceeds the oracle size guard")
    A = M.to_rows()
    nrows, ncols = M.rows, M.cols
    rank = 0
    for c in range(ncols):
        nonzero = [i for i in range(rank, nrows) if A[i][c] != 0]
        if not nonzero:
            continue

        def size(i):
            x = A[i][c]
            return abs(x.numerator).bit_length() + x.denominator.bit_length()

        p = min(nonzero, key=size)
        A[rank], A[p] = A[p], A[rank]
        pv = A[rank][c]
        for i in range(rank + 1, nrows):
            if A[i][c] != 0:
                f = A[i][c] / pv
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def integer_determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * (A[n - 1][n - 1] if n else 1)


def solve(M, rhs: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Solve M x = b for each b in ``rhs`` (M square, nonsingular); None if singular."""
    M = _as_matrix(M)
    n = M.rows
    if M.cols != n:
        raise ValueError("solve needs a square matrix")
    A = [list(M.row(i)) + [Fraction(b[i]) for b in rhs] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return None
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [[A[i][n + k] for i in range(n)] for k in range(len(rhs))]
