"""Normalized period matrices (tau I_g) and the linear systems built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .balls import RealBall, ball_det
from .errors import DegenerateImaginaryPart, FieldMismatch, InputError, NotUnimodular, SingularRightBlock
from .linalg import RationalMatrix, integer_determinant
from .numberfield import DEFAULT_MAX_PRECISION, FieldElement, NumberField, embed

Matrix = tuple[tuple[FieldElement, ...], ...]


@dataclass(frozen=True)
class FieldMatrix:
    rows: int
    cols: int
    field: NumberField
    entries: Matrix

    def rationalize(self) -> RationalMatrix:
        """Expand each field row into ``degree`` rational rows (one per power-basis coordinate)."""
        n = self.field.degree
        out = []
        for row in self.entries:
            for k in range(n):
                out.append([e.coords[k] for e in row])
        return RationalMatrix.from_rows(out, self.cols)


@dataclass(frozen=True)
class PeriodMatrix:
    g: int
    field: NumberField
    tau: Matrix
    validated: bool = False
    precision: int = 0

    def entry(self, i: int, j: int) -> FieldElement:
        return self.tau[i][j]

    def entries(self) -> list[FieldElement]:
        return [x for row in self.tau for x in row]


@dataclass(frozen=True)
class NSClass:
    """Integral alternating form [[A, B], [-B^t, C]] on the lattice of (tau I_g)."""

    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]

    @property
    def g(self) -> int:
        return len(self.B)

    def matrix(self) -> list[list[int]]:
        g = self.g
        top = [list(self.A[i]) + list(self.B[i]) for i in range(g)]
        bottom = [[-self.B[j][i] for j in range(g)] + list(self.C[i]) for i in range(g)]
        return top + bottom

    def __neg__(self) -> "NSClass":
        neg = lambda M: tuple(tuple(-x for x in r) for r in M)  # noqa: E731
        return NSClass(neg(self.A), neg(self.B), neg(self.C))

    def is_skew(self) -> bool:
        g = self.g
        return all(
            self.A[i][j] == -self.A[j][i] and self.C[i][j] == -self.C[j][i] for i in range(g) for j in range(g)
        )

    def residual(self, P: PeriodMatrix) -> list[list[FieldElement]]:
        """W = A - B tau + tau^t B^t + tau^t C tau, computed exactly."""
        g, K, t = P.g, P.field, P.tau
        W = []
        for i in range(g):
            row = []
            for j in range(g):
                w = K.scalar(self.A[i][j])
                for k in range(g):
                    if self.B[i][k]:
                        w = w - t[k][j] * self.B[i][k]
                    if self.B[j][k]:
                        w = w + t[k][i] * self.B[j][k]
                for l in range(g):
                    for k in range(g):
                        if self.C[l][k]:
                            w = w + t[l][i] * t[k][j] * self.C[l][k]
                row.append(w)
            W.append(row)
        return W

    def satisfies(self, P: PeriodMatrix) -> bool:
        return self.is_skew() and all(w.is_zero() for row in self.residual(P) for w in row)

    def to_json(self) -> dict:
        return {"A": [list(r) for r in self.A], "B": [list(r) for r in self.B], "C": [list(r) for r in self.C]}


def _as_matrix(field: NumberField, tau) -> Matrix:
    rows = []
    for r in tau:
        row = []
        for x in r:
            if isinstance(x, FieldElement):
                if x.field is not field and x.field != field:
                    raise FieldMismatch("period matrix entries must share the ambient field")
                row.append(x)
            else:
                row.append(field.scalar(x))
        rows.append(tuple(row))
    g = len(rows)
    if g == 0 or any(len(r) != g for r in rows):
        raise InputError("tau must be a nonempty square matrix")
    return tuple(rows)


def imaginary_determinant(field: NumberField, tau: Matrix, prec: int) -> RealBall:
    im = [[embed(x, prec).im for x in row] for row in tau]
    return ball_det(im)


def period_matrix_new(
    field: NumberField,
    tau,
    precision: int = 64,
    max_precision: int = DEFAULT_MAX_PRECISION,
) -> PeriodMatrix:
    """Validate tau by certifying det(Im tau) != 0 with escalating ball precision."""
    tau = _as_matrix(field, tau)
    prec = max(int(precision), 32)
    while True:
        det = imaginary_determinant(field, tau, prec)
        if not det.contains_zero():
            return PeriodMatrix(len(tau), field, tau, True, prec)
        if prec >= max_precision:
            raise DegenerateImaginaryPart(
                f"det(Im tau) could not be certified nonzero at {max_precision} bits"
            )
        prec = min(2 * prec, max_precision)


# --- variable bookkeeping for T ----------------------------------------------------

def pairs(g: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g) for j in range(i + 1, g)]


def t_columns(g: int) -> list[tuple[str, int, int]]:
    """Column labels of T: all a_ij (i<j), then b_st row-major, then c_lk (l<k)."""
    return (
        [("a", i, j) for i, j in pairs(g)]
        + [("b", s, t) for s in range(g) for t in range(g)]
        + [("c", l, k) for l, k in pairs(g)]
    )


def build_T(P: PeriodMatrix) -> FieldMatrix:
    """Field matrix of (a, b, c) -> (w_ij)_{i<j}, one row per pair i<j."""
    g, K, t = P.g, P.field, P.tau
    m = g * (g - 1) // 2
    ncols = 2 * g * g - g
    pr = pairs(g)
    c_index = {p: m + g * g + idx for idx, p in enumerate(pr)}
    rows = []
    for r, (i, j) in enumerate(pr):
        row = [K.zero()] * ncols
        row[r] = K.one()
        for k in range(g):
            row[m + j * g + k] = row[m + j * g + k] + t[k][i]
            row[m + i * g + k] = row[m + i * g + k] - t[k][j]
        for l, k in pr:
            row[c_index[(l, k)]] = t[k][j] * t[l][i] - t[l][j] * t[k][i]
        rows.append(tuple(row))
    return FieldMatrix(m, ncols, K, tuple(rows))


def assemble_ns_class(g: int, v: Sequence[int]) -> NSClass:
    """Read a kernel vector of T (column order of ``t_columns``) as (A, B, C)."""
    m = g * (g - 1) // 2
    A = [[0] * g for _ in range(g)]
    C = [[0] * g for _ in range(g)]
    for idx, (i, j) in enumerate(pairs(g)):
        A[i][j], A[j][i] = v[idx], -v[idx]
        c = v[m + g * g + idx]
        C[i][j], C[j][i] = c, -c
    B = [[v[m + s * g + t] for t in range(g)] for s in range(g)]
    freeze = lambda M: tuple(tuple(int(x) for x in r) for r in M)  # noqa: E731
    return NSClass(freeze(A), freeze(B), freeze(C))


def build_hom_system(P: PeriodMatrix, Q: PeriodMatrix) -> FieldMatrix:
    """Equations (sigma B + D) tau - sigma A - C = 0 for rational representations.

    ``P`` carries tau (source, size g_P), ``Q`` carries sigma (target, size g_Q).
    Unknowns are the g_Q x g_P blocks A, B, C, D, each row-major, in that order.
    """
    if P.field is not Q.field and P.field != Q.field:
        raise FieldMismatch("Hom system needs a common ambient field")
    K, tau, sigma = P.field, P.tau, Q.tau
    gp, gq = P.g, Q.g
    blk = gq * gp
    idx = lambda block, r, c: block * blk + r * gp + c  # noqa: E731
    rows = []
    for r in range(gq):
        for s in range(gp):
            row = [K.zero()] * (4 * blk)
            for u in range(gq):
                row[idx(0, u, s)] = row[idx(0, u, s)] - sigma[r][u]
                for t in range(gp):
                    row[idx(1, u, t)] = row[idx(1, u, t)] + sigma[r][u] * tau[t][s]
            row[idx(2, r, s)] = row[idx(2, r, s)] - 1
            for t in range(gp):
                row[idx(3, r, t)] = row[idx(3, r, t)] + tau[t][s]
            rows.append(tuple(row))
    return FieldMatrix(len(rows), 4 * blk, K, tuple(rows))


# --- constructions ----------------------------------------------------------------

def field_matrix_inverse(M: Sequence[Sequence[FieldElement]]) -> list[list[FieldElement]] | None:
    """Gauss-Jordan inverse over the field; None if singular."""
    n = len(M)
    K = M[0][0].field
    A = [list(r) + [K.one() if i == j else K.zero() for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next((i for i in range(c, n) if not A[i][c].is_zero()), None)
        if p is None:
            return None
        A[c], A[p] = A[p], A[c]
        inv = A[c][c].inverse()
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [r[n:] for r in A]


def _matmul(X, Y):
    K = X[0][0].field
    return [
        [sum((X[i][k] * Y[k][j] for k in range(len(Y))), K.zero()) for j in range(len(Y[0]))]
        for i in range(len(X))
    ]


def unimodular_transform(P: PeriodMatrix, M: Sequence[Sequence[int]], max_precision: int | None = None) -> PeriodMatrix:
    """Re-normalize (tau I) . M to (tau2^-1 tau' I); an isomorphic torus."""
    g, K = P.g, P.field
    M = [[int(x) for x in r] for r in M]
    if len(M) != 2 * g or any(len(r) != 2 * g for r in M):
        raise InputError(f"M must be {2 * g}x{2 * g}")
    if abs(integer_determinant(M)) != 1:
        raise NotUnimodular("det M must be +-1")
    tau = P.tau
    left = [[sum((tau[i][k] * M[k][j] for k in range(g)), K.zero()) + M[g + i][j] for j in range(g)] for i in range(g)]
    right = [
        [sum((tau[i][k] * M[k][g + j] for k in range(g)), K.zero()) + M[g + i][g + j] for j in range(g)]
        for i in range(g)
    ]
    inv = field_matrix_inverse(right)
    if inv is None:
        raise SingularRightBlock("right block of (tau I) M is singular")
    new_tau = _matmul(inv, left)
    return period_matrix_new(K, new_tau, max(P.precision, 64), max_precision or K.max_precision)


def dual(P: PeriodMatrix) -> PeriodMatrix:
    tau_t = [[P.tau[j][i] for j in range(P.g)] for i in range(P.g)]
    return period_matrix_new(P.field, tau_t, max(P.precision, 64), P.field.max_precision)


def direct_sum(*blocks: PeriodMatrix) -> PeriodMatrix:
    if not blocks:
        raise InputError("direct_sum needs at least one block")
    K = blocks[0].field
    for B in blocks:
        if B.field is not K and B.field != K:
            raise FieldMismatch("direct_sum blocks must share the ambient field")
    g = sum(B.g for B in blocks)
    tau = [[K.zero()] * g for _ in range(g)]
    off = 0
    for B in blocks:
        for i in range(B.g):
            for j in range(B.g):
                tau[off + i][off + j] = B.tau[i][j]
        off += B.g
    prec = max(B.precision for B in blocks)
    return period_matrix_new(K, tau, max(prec, 64), K.max_precision)


def elliptic(field: NumberField, t: FieldElement) -> PeriodMatrix:
    return period_matrix_new(field, [[t]])

