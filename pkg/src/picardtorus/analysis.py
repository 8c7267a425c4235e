"""Picard number, extension degree, NS generators, bounds and consistency verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, WrongDimension
from .linalg import kernel_basis, rank_bareiss
from .numberfield import generated_subfield_dimension, span_dimension
from .torus import NSClass, PeriodMatrix, assemble_ns_class, build_hom_system, build_T, pairs


def picard_number(P: PeriodMatrix) -> tuple[int, int]:
    """(rho, rank_Q T) with rho = 2g^2 - g - rank_Q T."""
    g = P.g
    rank = rank_bareiss(build_T(P).rationalize())
    return 2 * g * g - g - rank, rank


def picard_g2_oracle(P: PeriodMatrix) -> int:
    """6 - dim_Q <1, tau_11, tau_12, tau_21, tau_22, det tau>, only for g = 2."""
    if P.g != 2:
        raise WrongDimension("the closed g=2 formula needs g = 2")
    t = P.tau
    det = t[0][0] * t[1][1] - t[0][1] * t[1][0]
    return 6 - span_dimension([P.field.one(), t[0][0], t[0][1], t[1][0], t[1][1], det])


def ns_basis(P: PeriodMatrix) -> list[NSClass]:
    """Integral generators of NS_Q(X); each one is checked against W = 0 exactly."""
    classes = [assemble_ns_class(P.g, v) for v in kernel_basis(build_T(P).rationalize())]
    for c in classes:
        if not c.satisfies(P):
            raise ConsistencyError("kernel vector of T does not satisfy W = 0")
    return classes


def extension_degree(P: PeriodMatrix) -> int:
    return generated_subfield_dimension(P.entries(), P.field)


def dij_values(P: PeriodMatrix) -> dict[tuple[int, int], int]:
    g, K, t = P.g, P.field, P.tau
    out = {}
    for i, j in pairs(g):
        gens = [K.one()]
        for k in range(g):
            gens += [t[k][i], t[k][j]]
        for l in range(g):
            for k in range(g):
                gens.append(t[l][i] * t[k][j] - t[k][i] * t[l][j])
        out[(i, j)] = span_dimension(gens)
    return out


def dij_bounds(P: PeriodMatrix, degree: int | None = None):
    """(d_ij map, 2g^2 - g - sum d_ij, g^2 - g(g-1)(d/2 - 1)); both lower-bound rho."""
    g = P.g
    if g < 2:
        raise WrongDimension("d_ij bounds need g >= 2")
    d = extension_degree(P) if degree is None else degree
    dij = dij_values(P)
    bound_dij = 2 * g * g - g - sum(dij.values())
    bound_degree = g * g - g * (g - 1) * (Fraction(d, 2) - 1)
    return dij, bound_dij, bound_degree


def hom_rank(P: PeriodMatrix, Q: PeriodMatrix) -> int:
    """rank_Z Hom(X_P, X_Q) as the rational kernel dimension of the Hom system."""
    M = build_hom_system(P, Q).rationalize()
    return M.cols - rank_bareiss(M)


def end_rank(P: PeriodMatrix) -> int:
    return hom_rank(P, P)


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class AnalysisReport:
    g: int
    rho: int
    degree_d: int
    rank_T: int
    ns_basis: list[NSClass]
    end_rank: int
    dij: dict[tuple[int, int], int]
    bound_dij: int | None
    bound_degree: Fraction | None
    rho_maximal: bool
    consistency: list[Verdict] = field(default_factory=list)
    polarization: NSClass | None = None

    @property
    def failed(self) -> list[Verdict]:
        return [v for v in self.consistency if not v.passed]

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "rho": self.rho,
            "degree_d": self.degree_d,
            "rank_T": self.rank_T,
            "end_rank": self.end_rank,
            "dij": {f"{i + 1},{j + 1}": v for (i, j), v in sorted(self.dij.items())},
            "bound_dij": self.bound_dij,
            "bound_degree": None if self.bound_degree is None else str(self.bound_degree),
            "rho_maximal": self.rho_maximal,
            "ns_basis": [c.to_json() for c in self.ns_basis],
            "consistency": [v.to_json() for v in self.consistency],
            "polarization": "unknown" if self.polarization is None else self.polarization.to_json(),
        }


def verdicts(
    g: int,
    rho: int,
    d: int,
    end: int,
    bound_dij: int | None,
    bound_degree: Fraction | None,
    polarized: bool,
) -> list[Verdict]:
    """Consistency checks.  The degree/rho statements need g >= 2."""
    out = [
        Verdict("rho_range", 0 <= rho <= g * g, f"0 <= {rho} <= {g * g}"),
        Verdict("end_rank_cap", end <= 2 * g * g, f"{end} <= {2 * g * g}"),
    ]
    if g < 2:
        return out
    half = g * (g + 1) // 2
    out.append(Verdict("degree2_iff_rho_maximal", (d == 2) == (rho == g * g), f"d={d}, rho={rho}"))
    if d == 3:
        out.append(Verdict("degree3_band", half <= rho < g * g, f"{half} <= {rho} < {g * g}"))
    if d == 4:
        out.append(Verdict("degree4_band", g <= rho < g * g, f"{g} <= {rho} < {g * g}"))
    rhs = 2 * (1 + Fraction(g * g - rho, g * (g - 1)))
    out.append(Verdict("degree_lower_bound", d >= rhs, f"{d} >= {rhs}"))
    if d % 2 == 1 and polarized:
        out.append(Verdict("odd_degree_abelian_cap", rho <= half, f"{rho} <= {half}"))
    out.append(
        Verdict("end_rank_max_iff_rho_maximal", (end == 2 * g * g) == (rho == g * g), f"end={end}, rho={rho}")
    )
    if bound_dij is not None:
        out.append(Verdict("rho_ge_dij_bound", bound_dij <= rho, f"{bound_dij} <= {rho}"))
        out.append(Verdict("dij_bound_ge_degree_bound", bound_degree <= bound_dij, f"{bound_degree} <= {bound_dij}"))
    return out


def classify(P: PeriodMatrix, polarization_search=None, strict: bool = True) -> AnalysisReport:
    """Full report.  A failed verdict raises ConsistencyError when ``strict``."""
    from .polarization import PolarizationSearch, find_polarization

    g = P.g
    rho, rank = picard_number(P)
    d = extension_degree(P)
    basis = ns_basis(P)
    end = end_rank(P)
    if g >= 2:
        dij, bdij, bdeg = dij_bounds(P, d)
    else:
        dij, bdij, bdeg = {}, None, None
    search = polarization_search or PolarizationSearch()
    pol = find_polarization(P, search, basis=basis) if rho >= 1 else None
    report = AnalysisReport(
        g=g,
        rho=rho,
        degree_d=d,
        rank_T=rank,
        ns_basis=basis,
        end_rank=end,
        dij=dij,
        bound_dij=bdij,
        bound_degree=bdeg,
        rho_maximal=rho == g * g,
        polarization=pol,
    )
    report.consistency = verdicts(g, rho, d, end, bdij, bdeg, pol is not None)
    if strict and report.failed:
        names = ", ".join(f"{v.name} ({v.detail})" for v in report.failed)
        raise ConsistencyError(f"consistency verdicts failed: {names}")
    return report
