from fractions import Fraction

import pytest

from hahnfield.errors import (
    DivisionByZero,
    NotPositive,
    TruncationNotSupported,
    ZeroDenominator,
    ZeroPolynomial,
)
from hahnfield.hahn import (
    GenPoly,
    HahnElem,
    decompose,
    expand,
    nth_root_trunc,
    sturm_count,
)
from hahnfield.realalg import sqrt

t = HahnElem.var(0, 1)
one = HahnElem.one(1)


def const(q):
    return HahnElem.constant(Fraction(q) if not hasattr(q, "sign") else q, 1)


def test_t_is_a_positive_infinitesimal():
    assert t.sign() > 0
    assert (one - t).sign() > 0
    assert (t ** -1).sign() > 0
    assert (t ** -1 - 10**9).sign() > 0


def test_valuation_and_ordering():
    assert t.valuation() == (Fraction(1),)
    assert (t ** Fraction(1, 2)).valuation() == (Fraction(1, 2),)
    assert t ** Fraction(1, 2) > t
    x = t ** -1 + 1
    assert x.valuation() == (Fraction(-1),)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        HahnElem.make(one.num, GenPoly.zero(1))
    with pytest.raises(DivisionByZero):
        one / HahnElem.zero(1)


def test_normalization_makes_equality_structural():
    a = (one + t) / (one - t)
    b = ((one + t) * 2) / ((one - t) * 2)
    assert (a - b).is_zero
    assert a.num == b.num and a.den == b.den


def test_geometric_expansion():
    x = one / (one - t)
    tr = expand(x, 3)
    assert not tr.exact
    got = tr.as_elem()
    assert (got - (one + t + t * t + t ** 3)).is_zero


def test_expansion_exact_for_polynomials():
    x = one + t * 5
    tr = expand(x, 2)
    assert tr.exact
    assert (tr.as_elem() - x).is_zero


def test_decompose():
    x = t ** -1 + 2 + t * 3
    sigma, c, tail = decompose(x)
    assert (sigma - t ** -1).is_zero
    assert c.as_fraction() == 2
    assert tail == 1
    _, c2, tail2 = decompose(const(7) - t)
    assert c2.as_fraction() == 7 and tail2 == -1


def test_rank2_truncation_restriction():
    t1 = HahnElem.var(0, 2)
    t2 = HahnElem.var(1, 2)
    # denominator 1 - t2 has unit part with first exponent coordinate 0
    with pytest.raises(TruncationNotSupported):
        decompose(HahnElem.one(2) / (HahnElem.one(2) - t2))
    # but 1 - t1*t2^-1 is fine
    x = HahnElem.one(2) / (HahnElem.one(2) - t1 * t2 ** -1)
    sigma, c, tail = decompose(x)
    assert c.as_fraction() == 1


def test_nth_root_trunc():
    tr = nth_root_trunc(t * t, 2, 5)
    assert tr.exact
    assert (tr.as_elem() - t).is_zero
    with pytest.raises(NotPositive):
        nth_root_trunc(-t, 2, 5)
    sq = nth_root_trunc(one + t, 2, 3)
    assert not sq.exact
    y = sq.as_elem()
    diff = y * y - (one + t)
    assert diff.is_zero or diff.valuation()[0] > Fraction(3)


def test_algebraic_coefficients():
    r = sqrt(2)
    x = t * r
    assert (x * x - t * t * 2).is_zero
    assert (const(r) * const(r) - 2).is_zero


def test_sturm_count_over_real_closure():
    # X^2 - t has a root t^(1/2) in (0, 1)
    p = [-t, HahnElem.zero(1), one]
    assert sturm_count(p, HahnElem.zero(1), one) == 1
    assert sturm_count(p, None, None) == 2
    q = [one, HahnElem.zero(1), one]
    assert sturm_count(q, None, None) == 0
    with pytest.raises(ZeroPolynomial):
        sturm_count([HahnElem.zero(1)], None, None)


def test_fractional_power_only_on_monomials():
    assert (t ** Fraction(1, 2)).valuation() == (Fraction(1, 2),)
    with pytest.raises(ValueError):
        (one + t) ** Fraction(1, 2)
