from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hahnfield.errors import NegativeEvenRoot, NoRootInInterval, NotIsolating
from hahnfield.realalg import ONE, ZERO, RealAlgNum, sqrt


def frac(a, b=1):
    return RealAlgNum.from_fraction(Fraction(a, b))


def test_sqrt2_basics():
    r = sqrt(2)
    assert not r.is_rational
    assert (r * r - 2).sign() == 0
    assert r.floor() == 1
    assert frac(1) < r < frac(3, 2)


def test_rational_detection_through_arithmetic():
    r = sqrt(2)
    prod = r * r
    assert prod.is_rational
    assert prod.as_fraction() == 2


def test_sum_of_conjugate_roots():
    r = sqrt(2)
    s = sqrt(3)
    x = r + s
    assert (x * x - (5 + 2 * r * s)).sign() == 0
    lo, hi = x.interval()
    assert lo < hi


def test_division_and_inverse():
    r = sqrt(2)
    assert (r / r - 1).sign() == 0
    assert ((1 / r) * r - 1).sign() == 0


def test_nth_root():
    x = frac(8).nth_root(3)
    assert x.is_rational and x.as_fraction() == 2
    y = frac(2).nth_root(2)
    assert (y * y - 2).sign() == 0
    with pytest.raises(NegativeEvenRoot):
        frac(-4).nth_root(2)


def test_from_root_endpoint_collapses_to_rational():
    x = RealAlgNum.from_root((-4, 0, 1), Fraction(2), Fraction(3))
    assert x.is_rational and x.as_fraction() == 2


def test_from_root_rejects_bad_intervals():
    with pytest.raises(NoRootInInterval):
        RealAlgNum.from_root((-2, 0, 1), Fraction(3), Fraction(4))
    with pytest.raises(NotIsolating):
        RealAlgNum.from_root((-2, 0, 1), Fraction(-2), Fraction(2))


def test_floor_of_negative_irrational():
    assert (-sqrt(2)).floor() == -2


def test_total_order():
    vals = [ZERO, ONE, sqrt(2), frac(3, 2), -sqrt(2), frac(-1)]
    s = sorted(vals)
    signs = [(a - b).sign() for a, b in zip(s, s[1:])]
    assert all(x <= 0 for x in signs)


@settings(max_examples=50, deadline=None)
@given(
    st.fractions(min_value=-5, max_value=5),
    st.fractions(min_value=-5, max_value=5),
)
def test_field_laws_on_rationals_mixed_with_sqrt2(a, b):
    r = sqrt(2)
    x = r + a
    y = r * 1 + b
    assert ((x + y) - (y + x)).sign() == 0
    assert ((x * y) - (y * x)).sign() == 0
    assert ((x + a) - a - x).sign() == 0
