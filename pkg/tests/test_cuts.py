from fractions import Fraction

import pytest

from hahnfield.cuts import (
    EscapeWitness,
    InvarianceReport,
    PolyFamilySpec,
    apply_automorphism,
    bounded_type_eq,
    default_escape_probes,
    discrete_unbounded_check,
    eps_witness,
    escape_demo,
    moebius_descriptor,
    scaling_descriptor,
)
from hahnfield.errors import (
    DegenerateAtRoot,
    NonIntegralExponent,
    UnknownPredicate,
)
from hahnfield.hahn import HahnElem
from hahnfield.integer_part import is_member
from hahnfield.realalg import sqrt
from hahnfield.sections import build_section

t = HahnElem.var(0, 1)
one = HahnElem.one(1)
tinv = t ** -1


def test_type_eq_constant_family_cannot_separate_infinites():
    spec = PolyFamilySpec(1, (), 5)
    assert bounded_type_eq(spec, tinv, tinv * tinv).equal


def test_type_eq_generator_family_distinguishes():
    spec = PolyFamilySpec(1, (t,), 1)
    res = bounded_type_eq(spec, tinv, tinv * tinv)
    assert not res.equal
    assert res.sign_x == 0 and res.sign_y == 1
    # first distinguisher is t*X - 1
    assert res.distinguisher == "(-1) + (1*g1)*X^1"


def test_type_eq_reflexive():
    spec = PolyFamilySpec(2, (), 2)
    x = HahnElem.constant(sqrt(2), 1) + t
    assert bounded_type_eq(spec, x, x).equal


def test_eps_witness_exact_half_min_distance():
    spec = PolyFamilySpec(2, (), 2)
    eps = eps_witness(spec, HahnElem.constant(3, 1))
    # nearest family root is 1 + sqrt(3), from X^2 - 2X - 2
    expected = HahnElem.constant((sqrt(3) + 1 - 3) * Fraction(-1, 2), 1)
    assert (eps - expected).is_zero


def test_eps_witness_infinite_point():
    spec = PolyFamilySpec(3, (), 10)
    assert (eps_witness(spec, tinv) - one).is_zero


def test_eps_witness_degenerate():
    spec = PolyFamilySpec(2, (), 2)
    with pytest.raises(DegenerateAtRoot):
        eps_witness(spec, HahnElem.constant(sqrt(2), 1))


def test_eps_witness_infinitesimal_distance():
    spec = PolyFamilySpec(2, (), 2)
    eps = eps_witness(spec, one + t)
    assert (eps - t / 2).is_zero


def test_moebius_application_and_inverse():
    phi = moebius_descriptor((1, 1, 1))
    assert (apply_automorphism(phi, tinv) - (tinv + 1)).is_zero
    x = tinv * 3 + 2 + t * 5
    y = apply_automorphism(phi.inverse(), apply_automorphism(phi, x))
    assert (y - x).is_zero
    c = HahnElem.constant(sqrt(2), 1)
    assert (apply_automorphism(phi, c) - c).is_zero


def test_moebius_rejects_fractional_exponents():
    phi = moebius_descriptor((1, 1, 1))
    with pytest.raises(NonIntegralExponent):
        apply_automorphism(phi, t ** Fraction(1, 2))


def test_scaling():
    phi = scaling_descriptor(2)
    assert (apply_automorphism(phi, t ** Fraction(1, 2)) - t).is_zero
    assert (apply_automorphism(phi, tinv) - t ** -2).is_zero
    assert (apply_automorphism(phi.inverse(), apply_automorphism(phi, tinv)) - tinv).is_zero


def test_escape_demo():
    probes = default_escape_probes(1)
    out = escape_demo(moebius_descriptor((1, 1, 1)), probes)
    assert isinstance(out, EscapeWitness)
    assert (out.probe - tinv * Fraction(1, 2)).is_zero
    assert is_member(out.probe) and not is_member(out.image)
    assert (out.remainder - one / 2).is_zero

    out = escape_demo(scaling_descriptor(2), probes)
    assert isinstance(out, InvarianceReport)
    assert out.probes_checked == len(probes)


def test_escape_demo_rejects_outside_probes():
    with pytest.raises(ValueError):
        escape_demo(moebius_descriptor((1, 1, 1)), [one / 2])


def test_discrete_unbounded():
    checks = discrete_unbounded_check(
        "canonical_I", [tinv + one / 2, HahnElem.constant(5, 1)]
    )
    assert all(c.ok for c in checks)

    checks = discrete_unbounded_check("constants", [tinv])
    by_law = {c.law: c for c in checks}
    assert not by_law["unbounded"].ok

    section = build_section([one, t])
    checks = discrete_unbounded_check("section_powers", [tinv], section=section)
    assert all(c.ok for c in checks)

    with pytest.raises(UnknownPredicate):
        discrete_unbounded_check("bogus", [])
