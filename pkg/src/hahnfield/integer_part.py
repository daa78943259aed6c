"""The canonical integer part of K and its two floor algorithms.

The canonical integer part I consists of the purely infinite elements plus
an integer constant: the unique choice compatible with the constant residue
section.  Next to the direct floor there is the rounding-transfer floor
through a dense subfield with restricted exponent denominators; the two are
reconciled so both always return the j with j <= x < j + 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import RamificationTooSmall
from .hahn import GenPoly, HahnElem, decompose, ev_zero, expand
from .sections import LawCheck


@dataclass(frozen=True)
class FloorResult:
    floor: HahnElem
    remainder: HahnElem


def is_member(x):
    """Membership in the canonical integer part: purely infinite + integer."""
    _, c, tail_sign = decompose(x)
    return tail_sign == 0 and c.is_integer


def floor(x):
    """The unique i in I with i <= x < i + 1."""
    sigma, c, tail_sign = decompose(x)
    if c.is_integer:
        base = c.as_fraction() if tail_sign >= 0 else c.as_fraction() - 1
    else:
        base = Fraction(c.floor())
    f = sigma + HahnElem.constant(base, x.rank)
    rem = x - f
    assert is_member(f) and rem.sign() >= 0 and (rem - 1).sign() < 0
    return FloorResult(f, rem)


def _exponent_denominators(x, bound):
    trunc = expand(x, bound)
    dens = [1]
    for e, _ in trunc.terms:
        for q in e:
            dens.append(q.denominator)
    return lcm(*dens)


def floor_via_dense(x, ramification):
    """Rounding transfer through the dense subfield D with exponents in
    (1/m) * Z^n.

    x is approximated within distance 1 by its truncation x' at exponent
    zero, x' is floored inside D, and the three candidate unit intervals
    above floor(x') - 1 are decided by exact sign tests.
    """
    m = int(ramification)
    if m <= 0:
        raise ValueError("ramification must be positive")
    zero_vec = ev_zero(x.rank)
    needed = _exponent_denominators(x, zero_vec)
    if needed > 1 and m % needed:
        raise RamificationTooSmall(
            f"ramification {m} misses exponent denominators (need multiple of {needed})"
        )
    trunc = expand(x, zero_vec)
    x_prime = HahnElem.from_genpoly(GenPoly(x.rank, trunc.terms))
    assert (abs(x - x_prime) - 1).sign() < 0
    i = floor(x_prime).floor - 1
    for k in (0, 1, 2):
        j = i + k
        if (x - j).sign() >= 0 and (x - j - 1).sign() < 0:
            return FloorResult(j, x - j)
    raise AssertionError("transfer cases missed the rounding interval")


def verify_integer_part(samples, ring_samples, candidate_members=None):
    """Check the integer-part axioms on sampled data.

    Closure of sums and products, minimality of 1 among positive members,
    discreteness, and the rounding clause.  When candidate_members is
    given, those elements replace the ring samples in the minimality and
    discreteness checks so that broken candidates produce failures.
    """
    checks = []

    fail = None
    for a, b in ring_samples:
        if not (is_member(a) and is_member(b)):
            fail = "ring sample outside the integer part"
            break
        if not is_member(a + b) or not is_member(a * b):
            fail = "sum or product left the integer part"
            break
    checks.append(LawCheck("subring_closure", "fail" if fail else "pass", fail))

    members = (
        list(candidate_members)
        if candidate_members is not None
        else [a for pair in ring_samples for a in pair]
    )
    fail = None
    for a in members:
        if a.sign() > 0 and (a - 1).sign() < 0:
            fail = "positive member below 1"
            break
    checks.append(LawCheck("one_is_minimal_positive", "fail" if fail else "pass", fail))

    fail = None
    for idx_a, a in enumerate(members):
        for idx_b, b in enumerate(members):
            if idx_a != idx_b:
                d = a - b
                if d.sign() != 0 and (abs(d) - 1).sign() < 0:
                    fail = "two members closer than 1"
                    break
        if fail:
            break
    checks.append(LawCheck("discreteness", "fail" if fail else "pass", fail))

    fail = None
    for x in samples:
        if candidate_members is not None:
            if not any(
                (x - i).sign() >= 0 and (x - i - 1).sign() < 0
                for i in candidate_members
            ):
                fail = "no candidate member rounds the sample down"
                break
        else:
            r = floor(x)
            if r.remainder.sign() < 0 or (r.remainder - 1).sign() >= 0:
                fail = "remainder outside [0, 1)"
                break
    checks.append(LawCheck("rounding", "fail" if fail else "pass", fail))
    return checks
