from fractions import Fraction
import math

from hypothesis import given, strategies as st

from eternalbar import surd


def test_rational_roots_stay_rational():
    assert surd.sqrt(Fraction(25, 4)) == Fraction(5, 2)
    assert isinstance(surd.sqrt(9), Fraction)


def test_irrational_roots():
    r = surd.sqrt(8)
    assert isinstance(r, surd.Surd)
    assert str(r) == "2*sqrt(2)"
    assert r * r == 8
    assert abs(float(r) - math.sqrt(8)) < 1e-12


def test_ordering_against_rationals_and_infinity():
    r5 = surd.sqrt(5)
    assert 2 < r5 < Fraction(9, 4)
    assert r5 < float("inf") and r5 > float("-inf")
    assert math.ceil(r5) == 3 and math.floor(r5) == 2
    # sqrt(2) + sqrt(3) = 3.146..., sqrt(10) = 3.162...
    assert surd.sqrt(2) + surd.sqrt(3) < surd.sqrt(10)
    assert surd.sqrt(2) + surd.sqrt(3) > surd.sqrt(10) - Fraction(1, 50)


@given(st.fractions(0, 50, max_denominator=9), st.fractions(0, 50, max_denominator=9),
       st.fractions(-5, 5, max_denominator=3))
def test_sign_agrees_with_floats(a, b, c):
    x = surd.sqrt(a) - surd.sqrt(b) + c
    f = math.sqrt(a) - math.sqrt(b) + float(c)
    if abs(f) > 1e-9:
        assert (x > 0) == (f > 0)
