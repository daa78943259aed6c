from fractions import Fraction

import pytest

from hahnfield.errors import NotFinite, NotInSpan, NotPositive
from hahnfield.hahn import HahnElem
from hahnfield.realalg import sqrt
from hahnfield.sections import (
    FormalProduct,
    ValueGroupSection,
    arch_equiv,
    build_section,
    prop41_witnesses,
    representative,
    residue,
    verify_residue_section,
    verify_section,
)

t = HahnElem.var(0, 1)
one = HahnElem.one(1)


def test_build_skips_dependent_values():
    enum = [one, HahnElem.constant(5, 1), t, t ** Fraction(1, 2), t ** -3 + 1]
    section = build_section(enum)
    assert len(section.generators) == 1
    assert (section.generators[0] - t).is_zero


def test_representative_formal_product():
    section = build_section([one, t])
    rep = representative(section, t ** Fraction(1, 2))
    assert rep.exponents == (Fraction(1, 2),)
    assert not rep.materializable
    rep2 = representative(section, t ** -2 * 7)
    assert rep2.exponents == (Fraction(-2),)
    assert rep2.materializable
    assert (rep2.materialize(1) - t ** -2).is_zero


def test_representative_outside_span():
    empty = ValueGroupSection((), ())
    with pytest.raises(NotInSpan):
        representative(empty, t)
    with pytest.raises(NotPositive):
        representative(empty, HahnElem.zero(1))


def test_verify_section_passes_on_built_section():
    section = build_section([one, t, t ** -3 + 1])
    pairs = [
        (
            FormalProduct(section, (Fraction(1),)),
            FormalProduct(section, (Fraction(-2),)),
        )
    ]
    assert all(c.ok for c in verify_section(section, pairs, rank=1))


def test_verify_section_flags_doctored_values():
    doctored = ValueGroupSection((t, t * 2), ((Fraction(1),), (Fraction(1),)))
    checks = verify_section(doctored, [], rank=1)
    assert not all(c.ok for c in checks)


def test_arch_equiv():
    eq, n = arch_equiv(t ** -1, t ** -1 * 5 + 3)
    assert eq and n == 6
    eq2, _ = arch_equiv(t ** -1, t ** -2)
    assert not eq2
    # strict inequalities: 2 < 2n first holds at n = 2
    eq3, n3 = arch_equiv(one * 2, one * 2)
    assert eq3 and n3 == 2
    with pytest.raises(NotPositive):
        arch_equiv(-t, t)


def test_prop41_witnesses():
    section = build_section([one, t])
    samples = [
        FormalProduct(section, (Fraction(k),)) for k in range(-3, 4)
    ]
    above, eps = prop41_witnesses(
        section, t ** -1, FormalProduct(section, (Fraction(-1),)), samples
    )
    assert above.exponents == (Fraction(-2),)
    assert (eps - t ** -1 / 2).is_zero
    above2, _ = prop41_witnesses(
        section, HahnElem.constant(5, 1), FormalProduct(section, (Fraction(-1),)), samples
    )
    assert above2.materialize(1) > HahnElem.constant(5, 1)


def test_residue():
    assert residue(HahnElem.constant(3, 1) - t).as_fraction() == 3
    r = sqrt(2)
    assert (residue(HahnElem.constant(r, 1) + t) - r).sign() == 0
    with pytest.raises(NotFinite):
        residue(t ** -1)


def test_verify_residue_section():
    samples = [one + t, HahnElem.constant(Fraction(5, 2), 1), t * 4]
    checks = verify_residue_section(samples, pair_samples=[(samples[0], samples[2])])
    assert all(c.ok for c in checks)
    doctored = [one, one + t]
    checks = verify_residue_section(samples, candidate=doctored)
    bad = [c for c in checks if c.law == "candidate_class_uniqueness"]
    assert bad and not bad[0].ok
