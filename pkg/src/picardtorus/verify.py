"""Named verification suites over built-in families and seeded random instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator

from . import families
from .analysis import (
    classify,
    dij_bounds,
    end_rank,
    extension_degree,
    picard_g2_oracle,
    picard_number,
)
from .decomposition import DecompositionDescriptor, Factor, all_descriptors, decomposition_bounds
from .polarization import find_polarization
from .torus import PeriodMatrix, direct_sum, dual

G2_FIELDS = ["gaussian", "eisenstein", "sqrt-2", "cubic", "cbrt2", "zeta8", "zeta5", "i-fourth-root-2"]


@dataclass
class CheckResult:
    suite: str
    check: str
    instance: str
    expected: Any
    got: Any
    passed: bool

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "instance": self.instance,
            "expected": self.expected,
            "got": self.got,
            "pass": self.passed,
        }


def _check(suite, check, instance, expected, got, passed=None) -> CheckResult:
    return CheckResult(suite, check, instance, expected, got, expected == got if passed is None else passed)


def invariance_instances() -> list[tuple[str, PeriodMatrix]]:
    out = [
        ("cm_power(-1,2)", families.cm_power(-1, 2)),
        ("cm_power(-2,2)", families.cm_power(-2, 2)),
        ("cm_power(-3,3)", families.cm_power(-3, 3)),
        ("noncm_cubic_power(2)", families.noncm_cubic_power(2)),
        ("noncm_cubic_power(3)", families.noncm_cubic_power(3)),
        ("cm_pair", families.cm_pair()),
        ("rho_zero", families.rho_zero()),
    ]
    for name, seed in (("gaussian", 11), ("cubic", 12), ("zeta8", 13)):
        out.append((f"random({name},g=2,seed={seed})", families.random_period_matrix(families.preset_field(name), 2, seed)))
    return out


def suite_oracle_g2(count: int = 200, seed: int = 0) -> Iterator[CheckResult]:
    for k in range(count):
        name = G2_FIELDS[k % len(G2_FIELDS)]
        P = families.random_period_matrix(families.preset_field(name), 2, seed + k)
        rho, rank = picard_number(P)
        label = f"random({name},g=2,seed={seed + k})"
        yield _check("oracle-g2", "picard_equals_g2_formula", label, picard_g2_oracle(P), rho)
        yield _check("oracle-g2", "rank_nullity", label, 6, rho + rank)


def suite_invariance(transforms: int = 20) -> Iterator[CheckResult]:
    for label, P in invariance_instances():
        base = (picard_number(P)[0], extension_degree(P), end_rank(P))
        for s in range(transforms):
            Q, _ = families.transformed(P, seed=s)
            got = (picard_number(Q)[0], extension_degree(Q), end_rank(Q))
            yield _check("invariance", f"unimodular_seed_{s}", label, list(base), list(got))
        D = dual(P)
        yield _check("invariance", "dual", label, list(base[:2]), [picard_number(D)[0], extension_degree(D)])


def _bound_checks(suite: str, label: str, P: PeriodMatrix, tight: bool = False) -> Iterator[CheckResult]:
    rho, _ = picard_number(P)
    _, bdij, bdeg = dij_bounds(P)
    yield _check(suite, "dij_bound_le_rho", label, f"<= {rho}", bdij, bdij <= rho)
    yield _check(suite, "degree_bound_le_rho", label, f"<= {rho}", str(bdeg), bdeg <= rho)
    if tight:
        yield _check(suite, "dij_bound_tight", label, rho, bdij)
        yield _check(suite, "degree_bound_tight", label, rho, int(bdeg) if bdeg.denominator == 1 else str(bdeg))


def suite_bounds(random_count: int = 40) -> Iterator[CheckResult]:
    for g in range(2, 5):
        yield from _bound_checks("bounds", f"cm_power(-1,{g})", families.cm_power(-1, g), tight=True)
        yield from _bound_checks("bounds", f"noncm_cubic_power({g})", families.noncm_cubic_power(g), tight=True)
    yield from _bound_checks("bounds", "cm_pair", families.cm_pair())
    yield from _bound_checks("bounds", "rho_zero", families.rho_zero())
    for k in range(random_count):
        name = G2_FIELDS[k % len(G2_FIELDS)]
        g = 2 + k % 2
        P = families.random_period_matrix(families.preset_field(name), g, 1000 + k)
        yield from _bound_checks("bounds", f"random({name},g={g},seed={1000 + k})", P)


def suite_theorems(band_count: int = 50) -> Iterator[CheckResult]:
    s = "theorems"
    for g in range(1, 5):
        P = families.cm_power(-1, g)
        label = f"cm_power(-1,{g})"
        yield _check(s, "rho_equals_g2", label, g * g, picard_number(P)[0])
        yield _check(s, "degree_is_2", label, 2, extension_degree(P))
        yield _check(s, "end_rank_2g2", label, 2 * g * g, end_rank(P))
        yield _check(s, "polarization_found", label, True, find_polarization(P) is not None)
    for g in range(2, 5):
        P = families.noncm_cubic_power(g)
        label = f"noncm_cubic_power({g})"
        yield _check(s, "rho_equals_g(g+1)/2", label, g * (g + 1) // 2, picard_number(P)[0])
        yield _check(s, "degree_is_3", label, 3, extension_degree(P))
        yield _check(s, "end_rank_g2", label, g * g, end_rank(P))
    P = families.cm_pair()
    yield _check(s, "rho", "cm_pair", 2, picard_number(P)[0])
    yield _check(s, "degree_is_4", "cm_pair", 4, extension_degree(P))
    yield _check(s, "end_rank", "cm_pair", 4, end_rank(P))
    K = P.field
    E1 = families.diagonal(K, [P.tau[0][0]])
    E2 = families.diagonal(K, [P.tau[1][1]])
    yield _check(s, "additivity", "cm_pair", picard_number(E1)[0] + picard_number(E2)[0], picard_number(direct_sum(E1, E2))[0])
    P = families.rho_zero()
    yield _check(s, "rho_zero", "rho_zero", 0, picard_number(P)[0])
    yield _check(s, "degree_16", "rho_zero", 16, extension_degree(P))
    K = families.preset_field("cubic")
    for k in range(band_count):
        g = 2 + k % 2
        P = families.random_period_matrix(K, g, 5000 + k)
        rho = picard_number(P)[0]
        lo, hi = g * (g + 1) // 2, g * g
        yield _check(s, "degree3_band", f"random(cubic,g={g},seed={5000 + k})", f"[{lo}, {hi})", rho, lo <= rho < hi)
    for label, P in [
        ("cm_power(-1,2)", families.cm_power(-1, 2)),
        ("cm_power(-7,3)", families.cm_power(-7, 3)),
        ("noncm_cubic_power(3)", families.noncm_cubic_power(3)),
        ("cm_pair", families.cm_pair()),
        ("rho_zero", families.rho_zero()),
    ]:
        report = classify(P, strict=False)
        yield _check(s, "classify_verdicts", label, [], [v.name for v in report.failed])


def family_descriptors() -> list[tuple[str, DecompositionDescriptor, Callable[[], PeriodMatrix]]]:
    out = []
    for g in range(2, 5):
        out.append((f"cm_power(-1,{g})", DecompositionDescriptor.of(Factor(1, g, True)), lambda g=g: families.cm_power(-1, g)))
        out.append(
            (f"noncm_cubic_power({g})", DecompositionDescriptor.of(Factor(1, g, False)), lambda g=g: families.noncm_cubic_power(g))
        )
    return out


def suite_decomposition(max_g: int = 8) -> Iterator[CheckResult]:
    s = "decomposition"
    for g in range(1, max_g + 1):
        bad_sum, bad_eq, bad_chain, total = 0, 0, 0, 0
        for d in all_descriptors(g):
            r = decomposition_bounds(d)
            total += 1
            bad_sum += not r.square_sum_holds
            bad_eq += r.square_sum_equality != r.square_sum_equality_predicted
            bad_chain += not r.chain_holds
        label = f"all descriptors g={g} ({total})"
        yield _check(s, "square_sum_violations", label, 0, bad_sum)
        yield _check(s, "square_sum_equality_mismatches", label, 0, bad_eq)
        yield _check(s, "additive_chain_violations", label, 0, bad_chain)
    for label, d, build in family_descriptors():
        rho = picard_number(build())[0]
        r = decomposition_bounds(d)
        yield _check(s, "rho_upper_bound_tight", label, rho, int(r.rho_upper_bound))
        yield _check(s, "self_product_cap_holds", label, f">= {rho}", str(r.caps[0]), r.caps[0] >= rho)


SUITES: dict[str, Callable[[], Iterator[CheckResult]]] = {
    "oracle-g2": suite_oracle_g2,
    "invariance": suite_invariance,
    "bounds": suite_bounds,
    "theorems": suite_theorems,
    "decomposition": suite_decomposition,
}


def run_verify_suite(name: str) -> tuple[bool, list[CheckResult]]:
    results = list(SUITES[name]())
    return all(r.passed for r in results), results
