"""Midpoint-radius ball arithmetic over dyadic rationals.

Every operation returns a ball that encloses the exact result of the same
operation applied to any points of the input balls.  Midpoints are rounded
to ``prec`` significant bits and the rounding error is pushed into the
radius, so enclosures stay valid at any precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_RAD_BITS = 32


def _round_dyadic(q: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Round ``q`` to ``prec`` significant bits; return (value, error bound)."""
    if q == 0:
        return Fraction(0), Fraction(0)
    n, d = q.numerator, q.denominator
    if d & (d - 1) == 0 and abs(n).bit_length() <= prec:
        return q, Fraction(0)
    e = n.bit_length() - d.bit_length() - prec - 1
    if e >= 0:
        den = d << e
        m = (2 * n + den) // (2 * den)
        value = Fraction(m << e)
        return value, Fraction(1 << e)
    num = n << -e
    m = (2 * num + d) // (2 * d)
    return Fraction(m, 1 << -e), Fraction(1, 1 << -e)


def _round_up(q: Fraction) -> Fraction:
    """Smallest dyadic with _RAD_BITS significant bits that is >= q >= 0."""
    if q == 0:
        return q
    n, d = q.numerator, q.denominator
    if d & (d - 1) == 0 and n.bit_length() <= _RAD_BITS:
        return q
    e = n.bit_length() - d.bit_length() - _RAD_BITS
    if e >= 0:
        den = d << e
        return Fraction(-(-n // den) << e)
    num = n << -e
    return Fraction(-(-num // d), 1 << -e)


def sqrt_upper(q: Fraction, bits: int = 64) -> Fraction:
    """A dyadic upper bound for sqrt(q), relative accuracy about 2**-bits."""
    from math import isqrt

    if q <= 0:
        return Fraction(0)
    shift = 2 * bits - (q.numerator.bit_length() - q.denominator.bit_length())
    shift += shift & 1
    if shift >= 0:
        scaled = -(-(q.numerator << shift) // q.denominator)
    else:
        scaled = -(-q.numerator // (q.denominator << -shift))
    r = isqrt(scaled)
    if r * r < scaled:
        r += 1
    return Fraction(r, 1 << (shift // 2)) if shift >= 0 else Fraction(r << (-shift // 2))


def sqrt_lower(q: Fraction, bits: int = 64) -> Fraction:
    """A dyadic lower bound for sqrt(q)."""
    from math import isqrt

    if q <= 0:
        return Fraction(0)
    shift = 2 * bits - (q.numerator.bit_length() - q.denominator.bit_length())
    shift += shift & 1
    if shift >= 0:
        scaled = (q.numerator << shift) // q.denominator
        return Fraction(isqrt(scaled), 1 << (shift // 2))
    scaled = q.numerator // (q.denominator << -shift)
    return Fraction(isqrt(scaled) << (-shift // 2))


class IndeterminateSign(ArithmeticError):
    """A ball straddles zero where a certified sign was required."""


@dataclass(frozen=True)
class RealBall:
    mid: Fraction
    rad: Fraction
    prec: int = 64

    @classmethod
    def exact(cls, q, prec: int = 64) -> "RealBall":
        q = Fraction(q)
        mid, err = _round_dyadic(q, prec)
        return cls(mid, _round_up(err), prec)

    def _make(self, mid: Fraction, rad: Fraction, prec: int) -> "RealBall":
        m, err = _round_dyadic(mid, prec)
        return RealBall(m, _round_up(rad + err), prec)

    def _coerce(self, other) -> "RealBall":
        if isinstance(other, RealBall):
            return other
        return RealBall.exact(other, self.prec)

    def __add__(self, other) -> "RealBall":
        other = self._coerce(other)
        return self._make(self.mid + other.mid, self.rad + other.rad, max(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self) -> "RealBall":
        return RealBall(-self.mid, self.rad, self.prec)

    def __sub__(self, other) -> "RealBall":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RealBall":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RealBall":
        other = self._coerce(other)
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return self._make(self.mid * other.mid, rad, max(self.prec, other.prec))

    __rmul__ = __mul__

    def inverse(self) -> "RealBall":
        m, r = self.mid, self.rad
        if abs(m) <= r:
            raise IndeterminateSign("inverse of a ball containing zero")
        rad = r / (abs(m) * (abs(m) - r))
        return self._make(1 / m, rad, self.prec)

    def __truediv__(self, other) -> "RealBall":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RealBall":
        return self._coerce(other) * self.inverse()

    @property
    def lower(self) -> Fraction:
        return self.mid - self.rad

    @property
    def upper(self) -> Fraction:
        return self.mid + self.rad

    def contains(self, x) -> bool:
        return abs(Fraction(x) - self.mid) <= self.rad

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def is_positive(self) -> bool:
        return self.mid > self.rad

    def is_negative(self) -> bool:
        return -self.mid > self.rad

    def sign(self) -> int:
        """Certified sign; raises IndeterminateSign if the ball meets zero."""
        if self.is_positive():
            return 1
        if self.is_negative():
            return -1
        raise IndeterminateSign(f"ball {float(self.mid)} +/- {float(self.rad)} contains zero")

    def __float__(self) -> float:
        return float(self.mid)


@dataclass(frozen=True)
class ComplexBall:
    """Rectangular complex ball: independent real and imaginary balls."""

    re: RealBall
    im: RealBall

    @classmethod
    def exact(cls, re, im=0, prec: int = 64) -> "ComplexBall":
        return cls(RealBall.exact(re, prec), RealBall.exact(im, prec))

    @property
    def re_mid(self) -> Fraction:
        return self.re.mid

    @property
    def re_rad(self) -> Fraction:
        return self.re.rad

    @property
    def im_mid(self) -> Fraction:
        return self.im.mid

    @property
    def im_rad(self) -> Fraction:
        return self.im.rad

    @property
    def prec(self) -> int:
        return max(self.re.prec, self.im.prec)

    def _coerce(self, other) -> "ComplexBall":
        if isinstance(other, ComplexBall):
            return other
        if isinstance(other, RealBall):
            return ComplexBall(other, RealBall.exact(0, other.prec))
        if isinstance(other, complex):
            return ComplexBall.exact(Fraction(other.real), Fraction(other.imag), self.prec)
        return ComplexBall.exact(other, 0, self.prec)

    def __add__(self, other) -> "ComplexBall":
        other = self._coerce(other)
        return ComplexBall(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexBall":
        return ComplexBall(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexBall":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ComplexBall":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ComplexBall":
        other = self._coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexBall(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def contains(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def intersects(self, other: "ComplexBall") -> bool:
        return (
            abs(self.re.mid - other.re.mid) <= self.re.rad + other.re.rad
            and abs(self.im.mid - other.im.mid) <= self.im.rad + other.im.rad
        )

    def __complex__(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))


def ball_det(matrix: list[list[RealBall]]) -> RealBall:
    """Determinant of a square ball matrix by elimination with pivot search.

    Pivots are chosen among entries certified nonzero, largest midpoint first.
    When no column entry excludes zero the determinant is returned as a
    product expansion along that column so the result is still an enclosure.
    """
    n = len(matrix)
    if n == 0:
        return RealBall.exact(1)
    if n == 1:
        return matrix[0][0]
    rows = [list(r) for r in matrix]
    candidates = [i for i in range(n) if not rows[i][0].contains_zero()]
    if not candidates:
        total = None
        for i in range(n):
            minor = [r[1:] for k, r in enumerate(rows) if k != i]
            term = rows[i][0] * ball_det(minor)
            if i % 2:
                term = -term
            total = term if total is None else total + term
        return total
    p = max(candidates, key=lambda i: abs(rows[i][0].mid))
    sign = 1
    if p != 0:
        rows[0], rows[p] = rows[p], rows[0]
        sign = -1
    piv = rows[0][0]
    inv = piv.inverse()
    reduced = []
    for i in range(1, n):
        f = rows[i][0] * inv
        reduced.append([rows[i][j] - f * rows[0][j] for j in range(1, n)])
    det = piv * ball_det(reduced)
    return det if sign == 1 else -det
