"""Seeded random element generators for the property suites.

Everything draws from a caller-provided random.Random so that reports are
reproducible. Denominators are always generated as 1 minus a term whose
exponent has positive first coordinate; that keeps every element inside
the domain of the expansion and decomposition routines at any rank.
"""

from fractions import Fraction

from .hahn import GenPoly, HahnElem, ev_zero
from .realalg import RealAlgNum, sqrt


def rand_fraction(rng, bound=9, allow_zero=True):
    num = rng.randint(-bound, bound)
    if not allow_zero:
        while num == 0:
            num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def rand_constant(rng, coeff_field="alg", bound=9):
    """A nonzero constant, quadratic-irrational half the time for alg."""
    q = rand_fraction(rng, bound, allow_zero=False)
    if coeff_field == "alg" and rng.random() < 0.5:
        d = rng.choice((2, 3, 5))
        c = sqrt(d) * q + rand_fraction(rng, bound)
        if c.sign() != 0:
            return c
    return RealAlgNum.from_fraction(q)


def rand_exponent(rng, rank, denom_choices=(1, 1, 2, 3), span=3):
    return tuple(
        Fraction(rng.randint(-span, span), rng.choice(denom_choices))
        for _ in range(rank)
    )


def _rand_genpoly(rng, rank, coeff_field, n_terms, expo_gen):
    terms = []
    for _ in range(n_terms):
        terms.append((expo_gen(rng, rank), rand_constant(rng, coeff_field)))
    return GenPoly.from_terms(rank, terms)


def _rand_den(rng, rank):
    """1 minus a small term with rational coefficient and positive integer
    leading exponent; expansion through such a denominator stays cheap."""
    if rng.random() < 0.5:
        return GenPoly.one(rank)

    def pos_int_expo(r, k):
        e = rand_exponent(r, k, denom_choices=(1,))
        first = Fraction(abs(e[0].numerator) or 1)
        return (first,) + e[1:]

    return GenPoly.one(rank) + _rand_genpoly(
        rng, rank, "rat", rng.randint(1, 2), pos_int_expo
    ).scale(rand_fraction(rng, 3, allow_zero=False))


def rand_elem(rng, rank=1, coeff_field="alg", allow_zero=False):
    """A random element: a small generalized polynomial over a rational
    geometric unit denominator, occasionally inverted."""
    if rank == 1 and rng.random() < 0.25:
        # an inverted rational-coefficient element, possibly shifted by an
        # algebraic constant afterwards
        num = _rand_genpoly(rng, rank, "rat", rng.randint(1, 3), rand_exponent)
        x = HahnElem.make(num, _rand_den(rng, rank))
        if not x.is_zero:
            x = 1 / x
            if rng.random() < 0.5:
                x = x + rand_constant(rng, coeff_field)
    else:
        num = _rand_genpoly(
            rng, rank, coeff_field, rng.randint(1, 3), rand_exponent
        )
        x = HahnElem.make(num, _rand_den(rng, rank))
    if x.is_zero and not allow_zero:
        return rand_elem(rng, rank, coeff_field, allow_zero)
    return x


def rand_positive(rng, rank=1, coeff_field="alg"):
    x = abs(rand_elem(rng, rank, coeff_field))
    while x.is_zero:
        x = abs(rand_elem(rng, rank, coeff_field))
    return x


def rand_finite(rng, rank=1, coeff_field="alg"):
    """A random element of nonnegative valuation (a finite element)."""
    def nonneg_expo(r, k):
        e = rand_exponent(r, k)
        return tuple(abs(q) for q in e)

    num = _rand_genpoly(rng, rank, coeff_field, rng.randint(1, 3), nonneg_expo)
    x = HahnElem.from_genpoly(num)
    if not x.is_zero and x.valuation() < ev_zero(rank):
        return rand_finite(rng, rank, coeff_field)
    return x


def rand_integer_part_member(rng, rank=1):
    """sigma + z: a purely infinite element plus an integer."""
    terms = []
    for _ in range(rng.randint(0, 2)):
        e = rand_exponent(rng, rank)
        first = -(abs(e[0].numerator) or 1)
        terms.append(
            (
                (Fraction(first, e[0].denominator),) + e[1:],
                RealAlgNum.from_fraction(rand_fraction(rng, allow_zero=False)),
            )
        )
    sigma = HahnElem.from_genpoly(GenPoly.from_terms(rank, terms))
    return sigma + rng.randint(-9, 9)


def rand_int_poly(rng, max_degree=4, height=9):
    """Nonzero integer polynomial coefficients, constant term first."""
    deg = rng.randint(1, max_degree)
    coeffs = [rng.randint(-height, height) for _ in range(deg + 1)]
    while not any(coeffs):
        coeffs = [rng.randint(-height, height) for _ in range(deg + 1)]
    while coeffs[-1] == 0:
        coeffs[-1] = rng.randint(-height, height)
    return tuple(coeffs)
