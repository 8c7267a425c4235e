"""Exact arithmetic in Q(theta) with a distinguished complex embedding.

Elements are rational coordinate vectors in the power basis
1, theta, ..., theta^(n-1) where theta is a root of a monic integral
polynomial.  The embedding is pinned by a certified isolating disk around one
root; the disk is refined on demand by Newton steps and re-certified with the
bound |z - root| <= n |f(z) / f'(z)|.

Initial isolation certifies every root at once with Weierstrass corrections:
disks D(z_k, n |W_k|) that are pairwise disjoint each contain exactly one root.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .balls import ComplexBall, RealBall, sqrt_lower, sqrt_upper
from .errors import AmbiguousRoot, FieldMismatch, InputError, NoRootNearHint, ReduciblePolynomial
from .linalg import rank_bareiss

DEFAULT_PRECISION = 64
DEFAULT_MAX_PRECISION = 4096
DEFAULT_HINT_TOLERANCE = Fraction(1, 4)

Gauss = tuple[Fraction, Fraction]


# --- Gaussian-rational helpers (exact complex numbers) -----------------------

def _gmul(a: Gauss, b: Gauss) -> Gauss:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gabs2(a: Gauss) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def _poly_eval(coeffs: Sequence[int], z: Gauss) -> tuple[Gauss, Gauss]:
    """Value and derivative of sum coeffs[k] z^k at an exact complex point."""
    val: Gauss = (Fraction(coeffs[-1]), Fraction(0))
    der: Gauss = (Fraction(0), Fraction(0))
    for c in reversed(coeffs[:-1]):
        der = _gmul(der, z)
        der = (der[0] + val[0], der[1] + val[1])
        val = _gmul(val, z)
        val = (val[0] + c, val[1])
    return val, der


def _mpf_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_ if hasattr(x, "_mpf_") else mpmath.mpf(x)._mpf_
    if sign:
        man = -man
    if man == 0:
        return Fraction(0)
    return Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)


def _fraction_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _to_gauss(z) -> Gauss:
    if not hasattr(z, "imag"):
        return (_mpf_fraction(z), Fraction(0))
    return (_mpf_fraction(z.real), _mpf_fraction(z.imag))


def _round_gauss(z: Gauss, bits: int) -> Gauss:
    from .balls import _round_dyadic

    return (_round_dyadic(z[0], bits)[0], _round_dyadic(z[1], bits)[0])


# --- polynomial normalization and irreducibility -----------------------------

def _strip(coeffs: Sequence[int]) -> list[int]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return c


def _normalize(coeffs: Sequence[int]) -> tuple[list[int], int]:
    """Monic integral polynomial of scale*alpha; returns (coeffs, scale)."""
    from math import gcd

    c = _strip(coeffs)
    g = 0
    for x in c:
        g = gcd(g, x)
    c = [x // g for x in c]
    if c[-1] < 0:
        c = [-x for x in c]
    n = len(c) - 1
    lead = c[-1]
    monic = [c[k] * lead ** (n - 1 - k) for k in range(n)] + [1]
    return monic, lead


def is_irreducible(coeffs: Sequence[int]) -> bool:
    import sympy

    c = _strip(coeffs)
    if len(c) <= 2:
        return len(c) == 2
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(c)), x, domain="ZZ")
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree() == len(c) - 1


# --- root isolation -----------------------------------------------------------

def _approx_roots(monic: Sequence[int], prec: int) -> list:
    n = len(monic) - 1
    if n == 1:
        return [mpmath.mpc(-monic[0])]
    with mpmath.workprec(prec + 32):
        coeffs = [mpmath.mpf(c) for c in reversed(monic)]
        steps = 100
        while True:
            try:
                return list(mpmath.polyroots(coeffs, maxsteps=steps, extraprec=prec + 32))
            except mpmath.libmp.libhyper.NoConvergence:
                steps *= 4
                if steps > 20000:
                    raise


@dataclass(frozen=True)
class RootDisk:
    center: Gauss
    radius: Fraction  # dyadic upper bound


def isolate_roots(monic: Sequence[int], prec: int) -> list[RootDisk] | None:
    """Certified pairwise-disjoint disks, one per root; None if overlap at ``prec``."""
    n = len(monic) - 1
    if n == 1:
        return [RootDisk((Fraction(-monic[0]), Fraction(0)), Fraction(0))]
    zs = [_round_gauss(_to_gauss(z), prec) for z in _approx_roots(monic, prec)]
    disks = []
    for k, z in enumerate(zs):
        fz, _ = _poly_eval(monic, z)
        denom = Fraction(1)
        for j, w in enumerate(zs):
            if j != k:
                denom *= _gabs2((z[0] - w[0], z[1] - w[1]))
        if denom == 0:
            return None
        r2 = n * n * _gabs2(fz) / denom
        disks.append(RootDisk(z, sqrt_upper(r2, prec + 16)))
    for a in range(n):
        for b in range(a + 1, n):
            d2 = _gabs2((disks[a].center[0] - disks[b].center[0], disks[a].center[1] - disks[b].center[1]))
            if d2 <= (disks[a].radius + disks[b].radius) ** 2:
                return None
    return disks


def _widen(disks: list[RootDisk], prec: int) -> list[RootDisk]:
    """Grow each disk halfway towards its nearest neighbour; still isolating."""
    if len(disks) == 1:
        return disks
    widened = []
    for a, d in enumerate(disks):
        room = min(
            sqrt_lower(_gabs2((d.center[0] - e.center[0], d.center[1] - e.center[1])), prec) - e.radius
            for b, e in enumerate(disks)
            if b != a
        )
        widened.append(RootDisk(d.center, max(d.radius, (d.radius + room) / 2)))
    return widened


@lru_cache(maxsize=256)
def _canonical_disks(monic: tuple[int, ...]) -> tuple[tuple[RootDisk, ...], int]:
    """Isolating disks at the first working precision from 64 bits up.

    These depend on the polynomial alone, so two fields built from the same
    polynomial and the same root carry identical root data.
    """
    prec = 64
    while True:
        disks = isolate_roots(monic, prec)
        if disks is not None:
            return tuple(_widen(disks, prec)), prec
        prec *= 2


def _disks_meet(a: RootDisk, b: RootDisk) -> bool:
    d2 = _gabs2((a.center[0] - b.center[0], a.center[1] - b.center[1]))
    return d2 <= (a.radius + b.radius) ** 2


def _parse_decimal(s) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a decimal number: {s!r}") from exc


# --- the field ------------------------------------------------------------------

@dataclass(frozen=True)
class NumberField:
    """Q(theta), theta a root of the monic integral ``minpoly`` (a_0..a_n).

    ``input_poly`` and ``scale`` record the user's presentation: the user's
    generator alpha satisfies theta = scale * alpha.
    """

    minpoly: tuple[int, ...]
    root: RootDisk
    input_poly: tuple[int, ...]
    scale: int = 1
    root_hint: tuple[str, str] = dc_field(default=("0", "0"), compare=False)
    max_precision: int = dc_field(default=DEFAULT_MAX_PRECISION, compare=False)
    _reduction: tuple = dc_field(default=(), compare=False, repr=False, hash=False)

    def __post_init__(self):
        n = self.degree
        # theta^(n+k) as power-basis coordinates, k = 0..n-2
        table = []
        cur = [Fraction(-c) for c in self.minpoly[:-1]]
        for _ in range(max(n - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [x - top * c for x, c in zip(cur, self.minpoly[:-1])]
        object.__setattr__(self, "_reduction", tuple(table))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def root_box(self) -> tuple[Gauss, Gauss]:
        (x, y), r = self.root.center, self.root.radius
        return (x - r, y - r), (x + r, y + r)

    # element constructors
    def element(self, coords: Iterable) -> "FieldElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise InputError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def from_input_coords(self, coords: Iterable) -> "FieldElement":
        """Coordinates w.r.t. powers of the user's generator alpha = theta / scale."""
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.degree:
            raise InputError(f"expected {self.degree} coordinates, got {len(coords)}")
        return self.element(c / Fraction(self.scale) ** k for k, c in enumerate(coords))

    def to_input_coords(self, a: "FieldElement") -> tuple[Fraction, ...]:
        return tuple(c * Fraction(self.scale) ** k for k, c in enumerate(a.coords))

    def scalar(self, q) -> "FieldElement":
        return self.element([Fraction(q)] + [0] * (self.degree - 1))

    def zero(self) -> "FieldElement":
        return self.scalar(0)

    def one(self) -> "FieldElement":
        return self.scalar(1)

    def gen(self) -> "FieldElement":
        """theta itself (equal to the user's generator when the input is monic)."""
        if self.degree == 1:
            return self.scalar(-self.minpoly[0])
        return self.element([0, 1] + [0] * (self.degree - 2))

    # embedding
    def root_ball(self, prec: int) -> ComplexBall:
        disk = _refined_root(self, prec)
        r = disk.radius
        return ComplexBall(RealBall(disk.center[0], r, prec), RealBall(disk.center[1], r, prec))

    def _mul_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
        n = self.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                red = self._reduction[k - n]
                out = [o + c * r for o, r in zip(out, red)]
        return tuple(out)


@lru_cache(maxsize=256)
def _refined_root(K: NumberField, prec: int) -> RootDisk:
    """An isolating disk for the distinguished root of radius <= 2**-prec."""
    target = Fraction(1, 1 << prec)
    base = K.root
    if base.radius <= target:
        return base
    n = K.degree
    work = prec + 32
    while True:
        with mpmath.workprec(work):
            z = mpmath.mpc(_fraction_mpf(base.center[0]), _fraction_mpf(base.center[1]))
            coeffs = [mpmath.mpf(c) for c in reversed(K.minpoly)]
            for _ in range(200):
                f = mpmath.polyval(coeffs, z)
                df = mpmath.polyval(coeffs, z, derivative=True)[1]
                if df == 0:
                    break
                step = f / df
                z -= step
                if step == 0 or abs(step) < mpmath.mpf(2) ** (-work + 4):
                    break
        zq = _round_gauss(_to_gauss(z), work)
        fz, dfz = _poly_eval(K.minpoly, zq)
        d2 = _gabs2(dfz)
        if d2 != 0:
            rad = sqrt_upper(n * n * _gabs2(fz) / d2, work)
            dist = sqrt_upper(_gabs2((zq[0] - base.center[0], zq[1] - base.center[1])), work)
            if dist + rad <= base.radius and rad <= target:
                return RootDisk(zq, rad)
        work *= 2
        if work > 8 * (K.max_precision + prec):
            raise AmbiguousRoot("root refinement failed to converge")


def field_new(
    minpoly: Sequence[int],
    root_hint: tuple[str, str] = ("0", "0"),
    precision: int = DEFAULT_PRECISION,
    max_precision: int = DEFAULT_MAX_PRECISION,
    hint_tolerance=DEFAULT_HINT_TOLERANCE,
) -> NumberField:
    """Build Q(alpha) for an irreducible integer polynomial and pick the root near the hint.

    A root is selected when it is the only root within ``hint_tolerance`` of
    the hint.  Precision doubles from ``precision`` up to ``max_precision``
    until every root is certified inside or outside the tolerance disk.
    """
    coeffs = _strip(minpoly)
    if len(coeffs) < 2:
        raise InputError("minimal polynomial must be nonzero of degree >= 1")
    if not is_irreducible(coeffs):
        raise ReduciblePolynomial(f"{coeffs} is reducible over Q")
    monic, scale = _normalize(coeffs)
    hre, him = (_parse_decimal(x) for x in root_hint)
    h = (hre * scale, him * scale)
    tol = Fraction(hint_tolerance) * abs(scale)
    prec = max(int(precision), 32)
    while True:
        disks = isolate_roots(monic, prec)
        if disks is not None:
            inside, undecided = [], False
            for d in disks:
                dist2 = _gabs2((d.center[0] - h[0], d.center[1] - h[1]))
                dist_hi = sqrt_upper(dist2, prec) + d.radius
                dist_lo = sqrt_lower(dist2, prec) - d.radius
                if dist_hi <= tol:
                    inside.append(d)
                elif dist_lo > tol:
                    continue
                else:
                    undecided = True
            if not undecided:
                if not inside:
                    raise NoRootNearHint(f"no root of {coeffs} within {hint_tolerance} of {root_hint}")
                if len(inside) > 1:
                    raise AmbiguousRoot(f"{len(inside)} roots of {coeffs} lie within {hint_tolerance} of {root_hint}")
                canon, _ = _canonical_disks(tuple(monic))
                meets = [c for c in canon if _disks_meet(c, inside[0])]
                if len(meets) == 1:
                    return NumberField(
                        minpoly=tuple(monic),
                        root=meets[0],
                        input_poly=tuple(coeffs),
                        scale=scale,
                        root_hint=(str(root_hint[0]), str(root_hint[1])),
                        max_precision=max_precision,
                    )
        if prec >= max_precision:
            raise AmbiguousRoot(f"could not separate the roots of {coeffs} near {root_hint} at {max_precision} bits")
        prec = min(2 * prec, max_precision)


# --- elements -------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    field: NumberField
    coords: tuple[Fraction, ...]

    def _same(self, other: "FieldElement") -> None:
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("elements belong to different fields")

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(q * a for a in self.coords))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        u = _poly_inverse_mod(list(self.coords), [Fraction(c) for c in self.field.minpoly])
        n = self.field.degree
        return FieldElement(self.field, tuple(u + [Fraction(0)] * (n - len(u))))

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def embed(self, prec: int = DEFAULT_PRECISION) -> ComplexBall:
        return embed(self, prec)

    def __complex__(self) -> complex:
        return complex(embed(self, 64))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*t^{k}")
        return "FieldElement(" + (" + ".join(terms) or "0") + ")"


def _poly_inverse_mod(a: list[Fraction], f: list[Fraction]) -> list[Fraction]:
    """u with a*u = 1 mod f, by the extended Euclidean algorithm over Q[x]."""

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_poly(p, q):
        p = list(p)
        out = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
        while len(p) >= len(q) and p:
            c = p[-1] / q[-1]
            shift = len(p) - len(q)
            out[shift] = c
            for i, qc in enumerate(q):
                p[i + shift] -= c * qc
            p = trim(p)
        return trim(out), p

    def sub(p, q):
        n = max(len(p), len(q))
        return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])

    def mul(p, q):
        if not p or not q:
            return []
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return trim(out)

    r0, r1 = trim(f), trim(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ArithmeticError("element not invertible: minimal polynomial is reducible")
    c = r0[0]
    _, rem = divmod_poly([x / c for x in s0], trim(f))
    return rem


# --- free functions -------------------------------------------------------------

def elem_arith(a: FieldElement, b: FieldElement | None, kind: str) -> FieldElement:
    if b is not None:
        a._same(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    if kind in ("inv", "inv-of-a"):
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


def coordinates(a: FieldElement) -> tuple[Fraction, ...]:
    return a.coords


def embed(a: FieldElement, prec: int = DEFAULT_PRECISION) -> ComplexBall:
    """Ball enclosing the image of ``a`` under the distinguished embedding."""
    prec = max(int(prec), 32)
    if a.is_rational():
        return ComplexBall.exact(a.coords[0], 0, prec)
    work = prec + 16 + 4 * a.field.degree
    theta = a.field.root_ball(work)
    acc = ComplexBall.exact(0, 0, work)
    for c in reversed(a.coords):
        acc = acc * theta + ComplexBall.exact(c, 0, work)
    return acc


def span_dimension(elements: Iterable[FieldElement]) -> int:
    """dim_Q of the Q-span of the given elements."""
    elements = list(elements)
    if not elements:
        return 0
    K = elements[0].field
    for e in elements:
        if e.field is not K and e.field != K:
            raise FieldMismatch("elements belong to different fields")
    return rank_bareiss([e.coords for e in elements])


class _EchelonSpan:
    """Incrementally maintained Q-subspace of Q^n in reduced echelon form."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, list[Fraction]] = {}

    def add(self, v: Sequence[Fraction]) -> bool:
        v = list(v)
        for p, row in self.rows.items():
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        for p, row in self.rows.items():
            c = row[pivot]
            if c:
                self.rows[p] = [x - c * y for x, y in zip(row, v)]
        self.rows[pivot] = v
        return True

    def __len__(self) -> int:
        return len(self.rows)


def generated_subfield_dimension(S: Iterable[FieldElement], field: NumberField | None = None) -> int:
    """[Q(S):Q], by closing span{1} + S under products until the dimension stabilizes."""
    S = list(S)
    if field is None:
        if not S:
            raise ValueError("need the ambient field when S is empty")
        field = S[0].field
    for s in S:
        if s.field is not field and s.field != field:
            raise FieldMismatch("elements belong to different fields")
    span = _EchelonSpan(field.degree)
    basis: list[FieldElement] = []
    for e in [field.one()] + S:
        if span.add(e.coords):
            basis.append(e)
    fresh = list(basis)
    while fresh and len(basis) < field.degree:
        new = []
        for x in fresh:
            for y in basis:
                p = x * y
                if span.add(p.coords):
                    new.append(p)
        basis.extend(new)
        fresh = new
    return len(span)
