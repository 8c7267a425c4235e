from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from picardtorus import families
from picardtorus.analysis import (
    classify,
    dij_bounds,
    dij_values,
    end_rank,
    extension_degree,
    hom_rank,
    ns_basis,
    picard_g2_oracle,
    picard_number,
)
from picardtorus.linalg import rank_naive_oracle
from picardtorus.torus import direct_sum, elliptic

FIELDS = ["gaussian", "eisenstein", "sqrt-2", "cubic", "zeta8", "zeta5"]


def diag_i(g):
    return families.cm_power(-1, g)


def diag_beta(g):
    return families.noncm_cubic_power(g)


def test_genus_one_always_has_picard_number_one(gaussian, cubic):
    for P in (elliptic(gaussian, gaussian.gen()), elliptic(cubic, cubic.gen() * 2 + 1)):
        assert picard_number(P) == (1, 0)
    (cls,) = ns_basis(elliptic(gaussian, gaussian.gen()))
    assert cls.B == ((1,),) and cls.A == ((0,),) and cls.C == ((0,),)


def test_picard_numbers_of_the_families():
    assert picard_number(diag_i(2))[0] == 4
    assert picard_number(diag_beta(2))[0] == 3
    assert picard_number(families.cm_pair())[0] == 2


def test_rho_zero_instance(rho_zero_instance):
    P = rho_zero_instance
    assert P.field.degree == 16
    assert picard_number(P) == (0, 6)
    assert picard_g2_oracle(P) == 0
    assert ns_basis(P) == []


def test_rho_zero_span_by_hand():
    # coordinates over the monomials i^a r2^b r3^c r5^d of Q(i, r2, r3, r5);
    # the six numbers are 1, i, i r2, i r3, i r5 and det = r6 - r5
    mono = lambda a, b, c, d: 8 * a + 4 * b + 2 * c + d  # noqa: E731
    vecs = []
    for terms in ([(1, (0, 0, 0, 0))], [(1, (1, 0, 0, 0))], [(1, (1, 1, 0, 0))], [(1, (1, 0, 1, 0))],
                  [(1, (1, 0, 0, 1))], [(1, (0, 1, 1, 0)), (-1, (0, 0, 0, 1))]):
        v = [0] * 16
        for c, m in terms:
            v[mono(*m)] += c
        vecs.append(v)
    assert 6 - rank_naive_oracle(vecs) == 0


def test_ns_basis_of_diag_i():
    P = diag_i(2)
    basis = ns_basis(P)
    assert len(basis) == 4
    assert all(c.satisfies(P) for c in basis)


def test_extension_degrees(rho_zero_instance):
    assert extension_degree(diag_i(2)) == 2
    assert extension_degree(diag_beta(2)) == 3
    assert extension_degree(families.cm_pair()) == 4
    assert extension_degree(rho_zero_instance) == 16


def test_dij_bounds_on_families():
    assert dij_values(diag_beta(2)) == {(0, 1): 3}
    assert dij_bounds(diag_beta(2))[1:] == (3, Fraction(3))
    assert dij_bounds(diag_i(2))[1:] == (4, Fraction(4))
    dij, bd, bdeg = dij_bounds(families.cm_pair())
    assert dij == {(0, 1): 4} and bd == 2 and bdeg == 2


def test_end_ranks(cubic):
    assert end_rank(diag_i(2)) == 8
    assert end_rank(diag_beta(2)) == 4
    assert end_rank(elliptic(cubic, cubic.gen())) == 1


def test_classify_reports():
    r = classify(diag_i(2))
    assert r.rho_maximal and not r.failed and r.polarization is not None
    r = classify(diag_beta(3))
    assert (r.rho, r.degree_d) == (6, 3) and not r.failed
    assert len(r.ns_basis) == 6


def test_classify_rho_zero_is_vacuous(rho_zero_instance):
    r = classify(rho_zero_instance)
    assert r.rho == 0 and r.degree_d >= 5 and r.polarization is None and not r.failed


def test_report_json_is_stable():
    a = classify(families.cm_pair()).to_json()
    b = classify(families.cm_pair()).to_json()
    assert a == b
    assert a["dij"] == {"1,2": 4}


@settings(max_examples=40)
@given(st.sampled_from(FIELDS), st.integers(2, 3), st.integers(0, 10**6))
def test_random_instances_satisfy_all_verdicts(name, g, seed):
    P = families.random_period_matrix(families.preset_field(name), g, seed)
    r = classify(P, strict=False)
    assert not r.failed, [v.to_json() for v in r.failed]
    assert r.rho + r.rank_T == 2 * g * g - g
    assert r.end_rank <= 2 * g * g


@settings(max_examples=60)
@given(st.sampled_from(FIELDS), st.integers(0, 10**6))
def test_g2_formula_agrees(name, seed):
    P = families.random_period_matrix(families.preset_field(name), 2, seed)
    assert picard_number(P)[0] == picard_g2_oracle(P)


@settings(max_examples=30)
@given(st.sampled_from(FIELDS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 2))
def test_product_formula_links_ns_and_hom(name, s1, s2, g2):
    # rho(A x B) = rho(A) + rho(B) + rank Hom(A, B)
    K = families.preset_field(name)
    A = families.random_period_matrix(K, 1, s1)
    B = families.random_period_matrix(K, g2, s2)
    lhs = picard_number(direct_sum(A, B))[0]
    assert lhs == picard_number(A)[0] + picard_number(B)[0] + hom_rank(A, B)


@settings(max_examples=20)
@given(st.sampled_from(FIELDS), st.integers(0, 10**6))
def test_hom_rank_symmetric_for_curves(name, seed):
    K = families.preset_field(name)
    A = families.random_period_matrix(K, 1, seed)
    B = families.random_period_matrix(K, 1, seed + 1)
    assert hom_rank(A, B) == hom_rank(B, A)


def test_isogenous_cm_curves_have_rank_two_hom(gaussian):
    i = gaussian.gen()
    assert hom_rank(elliptic(gaussian, i), elliptic(gaussian, i * 2)) == 2


@pytest.mark.parametrize("seed", range(5))
def test_invariance_under_transforms(seed):
    P = families.cm_pair()
    Q, _ = families.transformed(P, seed)
    assert (picard_number(Q)[0], extension_degree(Q), end_rank(Q)) == (2, 4, 4)
