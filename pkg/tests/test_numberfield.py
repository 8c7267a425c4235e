from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import BETA_DIGITS, BETA_IM, BETA_RE
from picardtorus import families
from picardtorus.errors import AmbiguousRoot, FieldMismatch, NoRootNearHint, ReduciblePolynomial
from picardtorus.numberfield import (
    coordinates,
    elem_arith,
    embed,
    field_new,
    generated_subfield_dimension,
    is_irreducible,
    span_dimension,
)

coords = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_gaussian_field(gaussian):
    assert gaussian.degree == 2
    assert embed(gaussian.gen(), 64).contains(0, 1)


def test_cubic_root_is_upper_half_plane_root(cubic):
    assert cubic.degree == 3
    b = embed(cubic.gen(), 128)
    slack = Fraction(1, 10**BETA_DIGITS)
    assert abs(b.re_mid - Fraction(BETA_RE)) <= b.re_rad + slack
    assert abs(b.im_mid - Fraction(BETA_IM)) <= b.im_rad + slack
    assert b.re_rad < Fraction(1, 2**100) and b.im_rad < Fraction(1, 2**100)


def test_real_roots_only_rejects_imaginary_hint():
    with pytest.raises(NoRootNearHint):
        field_new([-2, 0, 1], ("0", "1"))


def test_reducible_polynomial_rejected():
    with pytest.raises(ReduciblePolynomial):
        field_new([-1, 0, 1], ("1", "0"))
    assert not is_irreducible([0, 0, 1])
    assert is_irreducible([1, 1, 1, 1, 1])


def test_hint_between_two_roots_is_ambiguous():
    # 100x^2 + 1 has roots +-i/10, both inside a unit disk around 0
    with pytest.raises(AmbiguousRoot):
        field_new([1, 0, 100], ("0", "0"), hint_tolerance=Fraction(1))


def test_nonmonic_input_round_trips_coordinates():
    K = field_new([1, 0, 4], ("0", "0.5"))  # 4x^2 + 1, root i/2
    x = K.from_input_coords([0, 1])
    assert abs(complex(x) - 0.5j) < 1e-12
    assert K.to_input_coords(x) == (0, 1)
    assert (x * x).is_rational() and coordinates(x * x)[0] == Fraction(-1, 4)


def test_gaussian_arithmetic(gaussian):
    i = gaussian.gen()
    assert coordinates(i * i) == (-1, 0)
    inv = (gaussian.one() + i).inverse()
    assert coordinates(inv) == (Fraction(1, 2), Fraction(-1, 2))
    assert coordinates(gaussian.scalar(Fraction(3, 2))) == (Fraction(3, 2), 0)


def test_cubic_reduction(cubic):
    b = cubic.gen()
    assert coordinates(b * b**2) == (1, 1, 0)
    assert coordinates(b + 1) == (1, 1, 0)
    assert coordinates(elem_arith(b, b**2, "mul")) == (1, 1, 0)


def test_embed_rational_is_exact(gaussian):
    b = embed(gaussian.one(), 512)
    assert b.re_rad == 0 and b.im_rad == 0 and b.contains(1, 0)


def test_mixing_fields_raises(gaussian, cubic):
    with pytest.raises(FieldMismatch):
        gaussian.gen() + cubic.gen()
    with pytest.raises(FieldMismatch):
        span_dimension([gaussian.gen(), cubic.gen()])


def test_generated_subfield_dimension(gaussian, zeta8):
    assert generated_subfield_dimension([gaussian.zero()]) == 1
    assert generated_subfield_dimension([gaussian.gen()]) == 2
    z = zeta8.gen()
    assert generated_subfield_dimension([z * z]) == 2
    assert generated_subfield_dimension([z * z, z + z**3]) == 4


def test_sqrt2_inside_zeta8(zeta8):
    z = zeta8.gen()
    r = z + z**7  # zeta + zeta^-1 = sqrt 2
    assert coordinates(r * r) == (2, 0, 0, 0)
    assert generated_subfield_dimension([r]) == 2


@given(st.lists(coords, min_size=3, max_size=3), st.lists(coords, min_size=3, max_size=3), st.lists(coords, min_size=3, max_size=3))
def test_ring_axioms(u, v, w):
    K = families.preset_field("cubic")
    a, b, c = K.element(u), K.element(v), K.element(w)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(st.lists(coords, min_size=4, max_size=4).filter(any))
def test_inverse(u):
    K = families.preset_field("zeta8")
    a = K.element(u)
    assert a * a.inverse() == K.one()


@given(st.lists(coords, min_size=3, max_size=3), st.lists(coords, min_size=3, max_size=3))
def test_embedding_is_a_ring_homomorphism(u, v):
    K = families.preset_field("cubic")
    a, b = K.element(u), K.element(v)
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-6 * (1 + abs(complex(a) * complex(b)))
    assert embed(a + b, 128).intersects(embed(a, 128) + embed(b, 128))
