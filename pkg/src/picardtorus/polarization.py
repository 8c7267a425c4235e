"""Heuristic search for a positive class in NS(X), certified with ball arithmetic.

Candidates are integer combinations of the NS generators.  The first ones
tried are rounded projections of Kaehler forms onto NS_R (for rho-maximal tori
NS_Q is dense in the real (1,1)-classes, so a fine enough rounding of the
flat Kaehler form is positive); then single generators, then an exhaustive
coefficient box or random samples.  Floating point only ranks candidates;
acceptance always goes through the certified check in ``certify_positive``.

Returning None means "unknown".  It is not a proof that X is non-algebraic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .balls import IndeterminateSign, RealBall
from .numberfield import embed
from .torus import NSClass, PeriodMatrix


@dataclass(frozen=True)
class PolarizationSearch:
    bound: int = 2
    samples: int = 1000
    precision: int = 256
    seed: int = 0
    kaehler_forms: int = 16
    exhaustive_limit: int = 20000


def combine(basis: Sequence[NSClass], coeffs: Sequence[int]) -> NSClass:
    g = basis[0].g

    def blk(name):
        return tuple(
            tuple(sum(c * getattr(b, name)[i][j] for c, b in zip(coeffs, basis)) for j in range(g)) for i in range(g)
        )

    return NSClass(blk("A"), blk("B"), blk("C"))


# --- certified positivity ---------------------------------------------------------

def _ball_inverse(M: list[list[RealBall]]) -> list[list[RealBall]]:
    n = len(M)
    one, zero = RealBall.exact(1, M[0][0].prec), RealBall.exact(0, M[0][0].prec)
    A = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        cand = [i for i in range(c, n) if not A[i][c].contains_zero()]
        if not cand:
            raise IndeterminateSign("no certified pivot while inverting Im(tau)")
        p = max(cand, key=lambda i: abs(A[i][c].mid))
        A[c], A[p] = A[p], A[c]
        inv = A[c][c].inverse()
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [r[n:] for r in A]


def _ball_complex_structure(P: PeriodMatrix, prec: int) -> list[list[RealBall]]:
    """Multiplication by i on R^2g in lattice coordinates of (tau I)."""
    g = P.g
    balls = [[embed(x, prec) for x in row] for row in P.tau]
    X = [[b.re for b in row] for row in balls]
    Y = [[b.im for b in row] for row in balls]
    Yi = _ball_inverse(Y)
    zero = RealBall.exact(0, prec)

    def mm(U, V):
        return [[sum((U[i][k] * V[k][j] for k in range(g)), zero) for j in range(g)] for i in range(g)]

    YiX = mm(Yi, X)
    XYi = mm(X, Yi)
    XYiX = mm(X, YiX)
    J = [[zero] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        for j in range(g):
            J[i][j] = YiX[i][j]
            J[i][g + j] = Yi[i][j]
            J[g + i][j] = -Y[i][j] - XYiX[i][j]
            J[g + i][g + j] = -XYi[i][j]
    return J


def _ball_is_positive_definite(S: list[list[RealBall]]) -> bool:
    """Sylvester's criterion via elimination without pivoting: all pivots > 0."""
    A = [list(r) for r in S]
    n = len(A)
    for k in range(n):
        if not A[k][k].is_positive():
            return False
        inv = A[k][k].inverse()
        for i in range(k + 1, n):
            f = A[i][k] * inv
            for j in range(k + 1, n):
                A[i][j] = A[i][j] - f * A[k][j]
    return True


def certify_positive(P: PeriodMatrix, cls: NSClass, prec: int = 256, J=None) -> bool:
    """True when S(x, y) = E(Jx, y) is certified positive definite."""
    try:
        J = J or _ball_complex_structure(P, prec)
        M = cls.matrix()
        n = len(M)
        zero = RealBall.exact(0, prec)
        S = [[sum((J[k][i] * M[k][j] for k in range(n) if M[k][j]), zero) for j in range(n)] for i in range(n)]
        half = Fraction(1, 2)
        Ssym = [[(S[i][j] + S[j][i]) * half for j in range(n)] for i in range(n)]
        return _ball_is_positive_definite(Ssym)
    except IndeterminateSign:
        return False


# --- candidate generation ------------------------------------------------------------

def _float_data(P: PeriodMatrix, basis: Sequence[NSClass]):
    g = P.g
    tau = np.array([[complex(embed(x, 64)) for x in row] for row in P.tau])
    X, Y = tau.real, tau.imag
    Yi = np.linalg.inv(Y)
    J = np.block([[Yi @ X, Yi], [-Y - X @ Yi @ X, -X @ Yi]])
    Pi = np.hstack([tau, np.eye(g)])
    mats = [np.array(b.matrix(), dtype=float) for b in basis]
    return Pi, J, mats


def _kaehler_candidates(Pi, mats, count: int, rng: random.Random) -> Iterator[tuple[int, ...]]:
    g = Pi.shape[0]
    iu = np.triu_indices(2 * g, 1)
    design = np.array([m[iu] for m in mats]).T
    forms = [np.eye(g, dtype=complex)]
    for _ in range(count - 1):
        L = np.array([[complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(g)] for _ in range(g)])
        forms.append(L @ L.conj().T + 0.1 * np.eye(g))
    for H in forms:
        E = (Pi.T @ H @ Pi.conj()).imag
        c, *_ = np.linalg.lstsq(design, E[iu], rcond=None)
        top = np.max(np.abs(c))
        if not np.isfinite(top) or top == 0:
            continue
        c = c / top
        for q in (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 64, 128, 256, 1024):
            yield tuple(int(round(q * x)) for x in c)


def candidates(P: PeriodMatrix, basis: Sequence[NSClass], search: PolarizationSearch) -> Iterator[tuple[int, ...]]:
    rho = len(basis)
    rng = random.Random(search.seed)
    Pi, _, mats = _float_data(P, basis)
    yield from _kaehler_candidates(Pi, mats, search.kaehler_forms, rng)
    for k in range(rho):
        yield tuple(int(i == k) for i in range(rho))
    N = search.bound
    if rho * (2 * N + 1) ** rho <= search.exhaustive_limit:
        yield from itertools.product(range(-N, N + 1), repeat=rho)
    else:
        for _ in range(search.samples):
            yield tuple(rng.randint(-N, N) for _ in range(rho))


def find_polarization(
    P: PeriodMatrix, search: PolarizationSearch | None = None, basis: Sequence[NSClass] | None = None
) -> NSClass | None:
    """First certified positive class among the candidates, or None."""
    from .analysis import ns_basis

    search = search or PolarizationSearch()
    basis = list(ns_basis(P) if basis is None else basis)
    if not basis:
        return None
    _, Jf, mats = _float_data(P, basis)
    J = None
    seen = set()
    for coeffs in candidates(P, basis, search):
        if coeffs in seen or not any(coeffs):
            continue
        seen.add(coeffs)
        M = sum(c * m for c, m in zip(coeffs, mats))
        S = Jf.T @ M
        eig = np.linalg.eigvalsh((S + S.T) / 2)
        scale = max(np.max(np.abs(eig)), 1.0)
        if np.all(eig > 1e-9 * scale):
            sign = 1
        elif np.all(eig < -1e-9 * scale):
            sign = -1
        else:
            continue
        cls = combine(basis, [sign * c for c in coeffs])
        if J is None:
            try:
                J = _ball_complex_structure(P, search.precision)
            except IndeterminateSign:
                return None
        if certify_positive(P, cls, search.precision, J):
            return cls
    return None
