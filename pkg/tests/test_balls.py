from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from picardtorus.balls import ComplexBall, IndeterminateSign, RealBall, ball_det, sqrt_lower, sqrt_upper

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
precs = st.sampled_from([8, 16, 53, 128])


@given(rationals, rationals, precs)
def test_add_mul_enclose_exact_result(a, b, prec):
    x, y = RealBall.exact(a, prec), RealBall.exact(b, prec)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)


@given(rationals, rationals.filter(lambda q: abs(q) > Fraction(1, 100)), precs)
def test_division_encloses(a, b, prec):
    assert (RealBall.exact(a, prec) / RealBall.exact(b, prec)).contains(a / b)


@given(st.lists(rationals, min_size=4, max_size=4), precs)
def test_complex_product_encloses(v, prec):
    a, b, c, d = v
    z = ComplexBall.exact(a, b, prec) * ComplexBall.exact(c, d, prec)
    assert z.contains(a * c - b * d, a * d + b * c)


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=1000))
def test_sqrt_brackets(q):
    lo, hi = sqrt_lower(q), sqrt_upper(q)
    assert lo * lo <= q <= hi * hi
    assert lo <= hi


def test_sign_of_straddling_ball_is_indeterminate():
    b = RealBall(Fraction(0), Fraction(1, 8), 64)
    assert b.contains_zero()
    with pytest.raises(IndeterminateSign):
        b.sign()
    assert RealBall.exact(Fraction(1, 3)).sign() == 1


def test_inverse_of_ball_containing_zero_raises():
    with pytest.raises(IndeterminateSign):
        RealBall(Fraction(1, 16), Fraction(1, 8), 64).inverse()


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_ball_det_encloses_integer_determinant(rows):
    from picardtorus.linalg import integer_determinant

    d = ball_det([[RealBall.exact(x) for x in r] for r in rows])
    assert d.contains(integer_determinant(rows))
