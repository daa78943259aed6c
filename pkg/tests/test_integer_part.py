from fractions import Fraction

import pytest

from hahnfield.errors import RamificationTooSmall
from hahnfield.hahn import HahnElem
from hahnfield.integer_part import (
    floor,
    floor_via_dense,
    is_member,
    verify_integer_part,
)
from hahnfield.realalg import sqrt

t = HahnElem.var(0, 1)
one = HahnElem.one(1)


def test_membership():
    assert is_member(t ** -1 + 3)
    assert is_member(HahnElem.constant(-7, 1))
    assert not is_member(one / 2)
    assert not is_member(t)
    assert not is_member(t ** -1 + one / 2)


def test_floor_examples():
    f = floor(t ** -1 + one / 2)
    assert (f.floor - t ** -1).is_zero
    assert (f.remainder - one / 2).is_zero

    f = floor(HahnElem.constant(3, 1) - t)
    assert (f.floor - 2).is_zero

    f = floor(HahnElem.constant(sqrt(2), 1))
    assert (f.floor - 1).is_zero


def test_floor_contract_on_edges():
    for x in (t, -t, t ** -1, -(t ** -1), HahnElem.zero(1), one * 5):
        f = floor(x)
        assert is_member(f.floor)
        assert f.remainder.sign() >= 0
        assert (f.remainder - 1).sign() < 0
        assert (f.floor + f.remainder - x).is_zero


def test_floor_via_dense_agrees():
    cases = [
        t ** -1 + t ** Fraction(1, 2) + one / 2,
        HahnElem.constant(3, 1) - t,
        t ** Fraction(-3, 2) + 1,
    ]
    for x in cases:
        m = 2
        assert (floor_via_dense(x, m).floor - floor(x).floor).is_zero


def test_floor_via_dense_rejects_small_ramification():
    with pytest.raises(RamificationTooSmall):
        floor_via_dense(t ** Fraction(-1, 2), 1)


def test_verify_integer_part():
    samples = [t ** -1 + one / 2, one * 5, t]
    ring = [
        (t ** -1 + 3, HahnElem.constant(2, 1)),
        (t ** -2, t ** -1 + 3),
    ]
    assert all(c.ok for c in verify_integer_part(samples, ring))
    # the plain integers fail rounding against infinite elements
    candidate = [HahnElem.constant(k, 1) for k in range(-3, 4)]
    checks = verify_integer_part(samples, ring, candidate_members=candidate)
    assert not all(c.ok for c in checks)
