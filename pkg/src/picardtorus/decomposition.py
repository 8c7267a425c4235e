"""Arithmetic bound checkers on user-supplied isogeny decompositions.

A descriptor lists factors (dimension n, multiplicity k, cm).  Nothing here
computes a decomposition; these are the inequalities that a decomposition
must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InvalidDescriptor


@dataclass(frozen=True)
class Factor:
    dim: int
    mult: int
    cm: bool = False


@dataclass(frozen=True)
class DecompositionDescriptor:
    factors: tuple[Factor, ...]

    @classmethod
    def of(cls, *factors) -> "DecompositionDescriptor":
        return cls(tuple(f if isinstance(f, Factor) else Factor(*f) for f in factors))

    @property
    def g(self) -> int:
        return sum(f.dim * f.mult for f in self.factors)

    def validate(self, g: int | None = None) -> None:
        if not self.factors:
            raise InvalidDescriptor("descriptor has no factors")
        for f in self.factors:
            if f.dim < 1 or f.mult < 1:
                raise InvalidDescriptor(f"dimension and multiplicity must be positive: {f}")
            if f.cm and f.dim != 1:
                raise InvalidDescriptor(f"the cm flag only applies to elliptic factors: {f}")
        if g is not None and self.g != g:
            raise InvalidDescriptor(f"factors describe dimension {self.g}, expected {g}")


@dataclass(frozen=True)
class DecompositionReport:
    """Bounds for one descriptor.

    ``square_sum`` is 2 * sum(n k^2) over factors of dimension >= 2 plus
    sum(k^2) over elliptic factors; it never exceeds g^2, with equality
    exactly for a single factor of dimension 1 or 2.  ``rho_upper_bound`` is
    (g(g+1) + sum over CM elliptic factors of k(k-1)) / 2.
    """

    g: int
    square_sum: int
    square_sum_holds: bool
    square_sum_equality: bool
    square_sum_equality_predicted: bool
    rho_upper_bound: Fraction
    caps: tuple[Fraction, ...]
    additive_bound: Fraction
    chain_holds: bool

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "square_sum": self.square_sum,
            "square_sum_holds": self.square_sum_holds,
            "square_sum_equality": self.square_sum_equality,
            "square_sum_equality_predicted": self.square_sum_equality_predicted,
            "rho_upper_bound": str(self.rho_upper_bound),
            "caps": [str(c) for c in self.caps],
            "additive_bound": str(self.additive_bound),
            "chain_holds": self.chain_holds,
        }


def self_product_cap(dim: int, mult: int) -> Fraction:
    """Upper bound rho(A^k) <= n k (2k + 1) / 2 for a simple A of dimension n."""
    return Fraction(dim * mult * (2 * mult + 1), 2)


def decomposition_bounds(d: DecompositionDescriptor, g: int | None = None) -> DecompositionReport:
    d.validate(g)
    g = d.g
    big = [f for f in d.factors if f.dim >= 2]
    ell = [f for f in d.factors if f.dim == 1]
    lhs = 2 * sum(f.dim * f.mult**2 for f in big) + sum(f.mult**2 for f in ell)
    predicted = len(d.factors) == 1 and d.factors[0].dim in (1, 2)
    upper = Fraction(g * (g + 1) + sum(f.mult * (f.mult - 1) for f in ell if f.cm), 2)
    caps = tuple(self_product_cap(f.dim, f.mult) for f in d.factors)
    additive = Fraction(0)
    for f, cap in zip(d.factors, caps):
        if f.dim >= 2:
            additive += cap
        elif f.cm:
            additive += f.mult**2
        else:
            additive += Fraction(f.mult * (f.mult + 1), 2)
    return DecompositionReport(
        g=g,
        square_sum=lhs,
        square_sum_holds=lhs <= g * g,
        square_sum_equality=lhs == g * g,
        square_sum_equality_predicted=predicted,
        rho_upper_bound=upper,
        caps=caps,
        additive_bound=additive,
        chain_holds=additive <= upper,
    )


def all_descriptors(g: int, with_cm: bool = True) -> Iterator[DecompositionDescriptor]:
    """Every multiset of factors (n, k, cm) with sum n*k = g."""
    kinds = []
    for n in range(1, g + 1):
        for k in range(1, g // n + 1):
            if n == 1 and with_cm:
                kinds += [Factor(1, k, False), Factor(1, k, True)]
            else:
                kinds.append(Factor(n, k, False))

    def rec(start: int, remaining: int, acc: list[Factor]):
        if remaining == 0:
            yield DecompositionDescriptor(tuple(acc))
            return
        for idx in range(start, len(kinds)):
            f = kinds[idx]
            size = f.dim * f.mult
            if size <= remaining:
                acc.append(f)
                yield from rec(idx, remaining - size, acc)
                acc.pop()

    yield from rec(0, g, [])
