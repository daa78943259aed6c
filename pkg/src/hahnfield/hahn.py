"""The working field K: fractions of finite-support generalized polynomials.

Monomials are c * t^g with g a rank-n vector of rationals ordered
lexicographically; t^g with g > 0 is a positive infinitesimal, so a larger
exponent means a smaller magnitude and t1 is infinitesimal relative to t2.
Elements are normalized fractions: the denominator has valuation zero and
leading coefficient one.  Nothing is ever expanded implicitly; truncated
expansions are explicit, bounded, and labeled exact or not.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    NotPositive,
    RankMismatch,
    TruncationNotSupported,
    ZeroDenominator,
    ZeroPolynomial,
)
from .realalg import ONE, ZERO, RealAlgNum


class _Infinity:
    """Sentinel valuation of zero; larger than every exponent vector."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def ev_zero(rank):
    return (Fraction(0),) * rank


def ev_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def ev_neg(a):
    return tuple(-x for x in a)


def ev_scale(a, s):
    return tuple(x * s for x in a)


def _coeff(c):
    if isinstance(c, RealAlgNum):
        return c
    return RealAlgNum.from_fraction(c)


class GenPoly:
    """Finite-support generalized polynomial; terms strictly increasing in
    exponent, no zero coefficients."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms):
        self.rank = rank
        self.terms = terms

    @classmethod
    def from_terms(cls, rank, items):
        acc = {}
        for expo, coeff in items:
            expo = tuple(Fraction(e) for e in expo)
            if len(expo) != rank:
                raise RankMismatch(f"exponent {expo} has rank != {rank}")
            coeff = _coeff(coeff)
            if expo in acc:
                acc[expo] = acc[expo] + coeff
            else:
                acc[expo] = coeff
        terms = tuple(
            (e, c) for e, c in sorted(acc.items()) if c.sign() != 0
        )
        return cls(rank, terms)

    @classmethod
    def zero(cls, rank):
        return cls(rank, ())

    @classmethod
    def one(cls, rank):
        return cls(rank, ((ev_zero(rank), ONE),))

    @property
    def is_zero(self):
        return not self.terms

    def leading(self):
        """Minimum-exponent term (the dominant one)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def valuation(self):
        return INFINITY if self.is_zero else self.terms[0][0]

    def __add__(self, other):
        return GenPoly.from_terms(
            self.rank, list(self.terms) + list(other.terms)
        )

    def __neg__(self):
        return GenPoly(self.rank, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = ev_add(e1, e2)
                prod = c1 * c2
                if e in acc:
                    acc[e] = acc[e] + prod
                else:
                    acc[e] = prod
        return GenPoly(
            self.rank,
            tuple((e, c) for e, c in sorted(acc.items()) if c.sign() != 0),
        )

    def scale(self, s):
        s = _coeff(s)
        if s.sign() == 0:
            return GenPoly.zero(self.rank)
        return GenPoly(self.rank, tuple((e, c * s) for e, c in self.terms))

    def shift(self, offset):
        """Multiply by t^offset."""
        return GenPoly(
            self.rank, tuple((ev_add(e, offset), c) for e, c in self.terms)
        )

    def __eq__(self, other):
        return (self - other).is_zero

    __hash__ = None

    def __repr__(self):
        return f"GenPoly({self.terms!r})"


class HahnElem:
    """Normalized fraction of two generalized polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den, _checked=False):
        if not _checked:
            raise TypeError("use HahnElem.make")
        self.num = num
        self.den = den

    @property
    def rank(self):
        return self.num.rank

    @classmethod
    def make(cls, num, den):
        if den.is_zero:
            raise ZeroDenominator("denominator is zero")
        if num.rank != den.rank:
            raise RankMismatch("numerator and denominator rank differ")
        if num.is_zero:
            return cls(num, GenPoly.one(num.rank), _checked=True)
        shift = ev_neg(den.valuation())
        if any(shift):
            num = num.shift(shift)
            den = den.shift(shift)
        lc = den.leading()[1]
        if lc.is_rational and lc.as_fraction() == 1:
            pass
        else:
            inv = lc.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        return cls(num, den, _checked=True)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_genpoly(cls, p):
        return cls.make(p, GenPoly.one(p.rank))

    @classmethod
    def constant(cls, value, rank):
        c = _coeff(value)
        if c.sign() == 0:
            return cls.zero(rank)
        return cls.from_genpoly(
            GenPoly(rank, ((ev_zero(rank), c),))
        )

    @classmethod
    def monomial(cls, coeff, expo):
        return cls.from_genpoly(
            GenPoly.from_terms(len(tuple(expo)), [(tuple(expo), coeff)])
        )

    @classmethod
    def var(cls, index, rank):
        """The infinitesimal t_<index+1>."""
        expo = tuple(
            Fraction(1 if i == index else 0) for i in range(rank)
        )
        return cls.monomial(1, expo)

    @classmethod
    def zero(cls, rank):
        return cls(GenPoly.zero(rank), GenPoly.one(rank), _checked=True)

    @classmethod
    def one(cls, rank):
        return cls.constant(1, rank)

    # ------------------------------------------------------------------
    # queries

    @property
    def is_zero(self):
        return self.num.is_zero

    def sign(self):
        """Sign of the element: sign of the dominant numerator coefficient."""
        if self.num.is_zero:
            return 0
        return self.num.leading()[1].sign()

    def valuation(self):
        """Minimum exponent of the numerator; INFINITY for zero."""
        return self.num.valuation()

    def is_polynomial(self):
        return self.den == GenPoly.one(self.rank)

    def as_constant(self):
        """The RealAlgNum value, when the element is a constant."""
        if self.is_zero:
            return ZERO
        if self.is_polynomial() and len(self.num.terms) == 1:
            e, c = self.num.terms[0]
            if not any(e):
                return c
        raise ValueError("not a constant element")

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other):
        if isinstance(other, HahnElem):
            if other.rank != self.rank:
                raise RankMismatch("mixed ranks")
            return other
        if isinstance(other, (int, Fraction, RealAlgNum)):
            return HahnElem.constant(other, self.rank)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HahnElem.make(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return HahnElem(-self.num, self.den, _checked=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return HahnElem.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("division by zero element")
        return HahnElem.make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if self.is_zero:
            raise DivisionByZero("division by zero element")
        return self._coerce(other) / self

    def __pow__(self, n):
        if isinstance(n, Fraction):
            if n.denominator != 1:
                if (
                    self.is_polynomial()
                    and len(self.num.terms) == 1
                    and self.num.terms[0][1].is_rational
                    and self.num.terms[0][1].as_fraction() == 1
                ):
                    # rational powers exist in K only for plain monomials t^g
                    return HahnElem.monomial(
                        1, ev_scale(self.num.terms[0][0], n)
                    )
                raise ValueError("fractional powers only on monomials t^g")
            n = int(n)
        n = int(n)
        if n == 0:
            return HahnElem.one(self.rank)
        base = self if n > 0 else 1 / self
        acc = base
        for _ in range(abs(n) - 1):
            acc = acc * base
        return acc

    # ------------------------------------------------------------------
    # comparisons

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() == 0

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    __hash__ = None

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        from .grammar import format_elem

        return f"HahnElem({format_elem(self)})"

    def __str__(self):
        from .grammar import format_elem

        return format_elem(self)


def cmp(x, y):
    return (x - y).sign()


@dataclass(frozen=True)
class TruncatedExpansion:
    """Finite truncation of a series expansion up to an exponent bound."""

    terms: tuple
    order_bound: tuple
    exact: bool
    # valuation of the omitted tail, when inexact and known
    tail_valuation: tuple = None

    def rank(self):
        return len(self.order_bound)

    def as_elem(self):
        return HahnElem.from_genpoly(
            GenPoly(len(self.order_bound), self.terms)
        )


def _unit_part(x):
    """m with den = 1 - m; raises unless the expansion terminates.

    All terms of m have positive first exponent coordinate exactly when
    v(m) does (lexicographic minimum), which bounds the number of powers of
    m contributing at or below any exponent bound.
    """
    one = GenPoly.one(x.rank)
    m = one - x.den
    if not m.is_zero and m.valuation()[0] <= 0:
        raise TruncationNotSupported(
            "denominator unit part has non-positive first exponent coordinate"
        )
    return m


def expand(x, order_bound):
    """All series terms of x with exponent <= order_bound, exactly.

    A scalar bound broadcasts to every coordinate."""
    if isinstance(order_bound, (int, Fraction)):
        order_bound = (Fraction(order_bound),) * x.rank
    else:
        order_bound = tuple(Fraction(e) for e in order_bound)
    if len(order_bound) != x.rank:
        raise RankMismatch("order bound rank mismatch")
    m = _unit_part(x)
    acc = {}
    cur = x.num
    while not cur.is_zero:
        for e, c in cur.terms:
            if e <= order_bound:
                acc[e] = acc[e] + c if e in acc else c
        if m.is_zero:
            break
        if cur.valuation()[0] > order_bound[0]:
            break
        cur = cur * m
    terms = tuple((e, c) for e, c in sorted(acc.items()) if c.sign() != 0)
    total = HahnElem.from_genpoly(GenPoly(x.rank, terms))
    diff = x - total
    if diff.is_zero:
        return TruncatedExpansion(terms, order_bound, True)
    return TruncatedExpansion(terms, order_bound, False, diff.valuation())


def decompose(x):
    """Split x = sigma + c + tail: purely infinite + constant + infinitesimal.

    sigma is returned as an exact element of K, c as the residue-field
    coefficient, and the tail as its exact sign.
    """
    zero_vec = ev_zero(x.rank)
    trunc = expand(x, zero_vec)
    sigma_terms = tuple((e, c) for e, c in trunc.terms if e < zero_vec)
    c = ZERO
    for e, coeff in trunc.terms:
        if e == zero_vec:
            c = coeff
    sigma = HahnElem.from_genpoly(GenPoly(x.rank, sigma_terms))
    tail = x - sigma - HahnElem.constant(c, x.rank)
    return sigma, c, tail.sign()


def _binomial_series_coeff(n, k):
    """Coefficient of u^k in (1+u)^(1/n)."""
    acc = Fraction(1)
    a = Fraction(1, n)
    for i in range(k):
        acc = acc * (a - i) / (i + 1)
    return acc


def nth_root_trunc(x, n, order_bound):
    """Truncated positive n-th root of a positive element.

    Leading part is the exact root of the dominant monomial; the rest comes
    from the binomial series of (1 + u)^(1/n) with v(u) > 0.
    """
    n = int(n)
    if n <= 0:
        raise ValueError("root index must be positive")
    if x.sign() <= 0:
        raise NotPositive("n-th root requires a positive element")
    if isinstance(order_bound, (int, Fraction)):
        order_bound = (Fraction(order_bound),) * x.rank
    order_bound = tuple(Fraction(e) for e in order_bound)
    if n == 1:
        return expand(x, order_bound)
    g = x.valuation()
    c = x.num.leading()[1]
    lead = HahnElem.monomial(c.nth_root(n), ev_scale(g, Fraction(1, n)))
    u = x / HahnElem.monomial(c, g) - 1
    if u.is_zero:
        return expand(lead, order_bound)
    vu1 = u.valuation()[0]
    if vu1 <= 0:
        raise TruncationNotSupported(
            "root tail has non-positive first exponent coordinate"
        )
    # Powers of u beyond k_max contribute only above the bound.
    rem = order_bound[0] - g[0] / n
    k = 0
    k_max_num = rem / vu1
    series = HahnElem.one(x.rank)
    upow = HahnElem.one(x.rank)
    while k < k_max_num:
        k += 1
        upow = upow * u
        series = series + upow * Fraction(_binomial_series_coeff(n, k))
    trunc = expand(lead * series, order_bound)
    residual = trunc.as_elem() ** n - x
    if residual.is_zero:
        return TruncatedExpansion(trunc.terms, trunc.order_bound, True)
    # v(root - s) = v(x - s^n) - (n-1) v(x)/n, since x - s^n ~ n s^(n-1) (root - s)
    tail_val = tuple(
        vr - (n - 1) * Fraction(vx, n)
        for vr, vx in zip(residual.valuation(), g)
    )
    return TruncatedExpansion(trunc.terms, trunc.order_bound, False, tail_val)


# ----------------------------------------------------------------------
# polynomials over K and Sturm counting in the real closure


def kp_trim(coeffs):
    c = list(coeffs)
    while c and c[-1].is_zero:
        c.pop()
    return c


def kp_degree(coeffs):
    return len(coeffs) - 1


def kp_eval(coeffs, x):
    acc = HahnElem.zero(x.rank)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def kp_derivative(coeffs):
    return kp_trim([c * i for i, c in enumerate(coeffs) if i > 0])


def kp_divmod(a, b):
    a = list(a)
    lead_inv = 1 / b[-1]
    q = [HahnElem.zero(b[-1].rank)] * max(len(a) - len(b) + 1, 1)
    while len(kp_trim(a)) >= len(b):
        a = kp_trim(a)
        k = len(a) - len(b)
        f = a[-1] * lead_inv
        q[k] = f
        for i, cb in enumerate(b):
            a[k + i] = a[k + i] - f * cb
        a.pop()
    return kp_trim(q), kp_trim(a)


def kp_gcd(a, b):
    a, b = kp_trim(a), kp_trim(b)
    while b:
        a, b = b, kp_divmod(a, b)[1]
        if b:
            b = [c / b[-1] for c in b]  # monic to tame growth
    return a


def _kp_squarefree(coeffs):
    g = kp_gcd(coeffs, kp_derivative(coeffs))
    if len(g) > 1:
        coeffs = kp_divmod(coeffs, g)[0]
    return coeffs


def _sign_at_bound(chain, point, positive_inf):
    signs = []
    for p in chain:
        if point is None:
            s = p[-1].sign()
            if not positive_inf and (len(p) - 1) % 2 == 1:
                s = -s
        else:
            s = kp_eval(p, point).sign()
        signs.append(s)
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(coeffs, lo=None, hi=None):
    """Distinct roots of a K-coefficient polynomial in (lo, hi].

    Roots are counted in the real closure of K; lo=None means -infinity,
    hi=None means +infinity.
    """
    coeffs = kp_trim([c for c in coeffs])
    if not coeffs:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    rank = coeffs[0].rank
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("need lo < hi")
    p = _kp_squarefree(coeffs)
    if len(p) < 2:
        return 0
    if lo is not None:
        while len(p) > 1 and kp_eval(p, lo).is_zero:
            p = kp_divmod(p, [-lo, HahnElem.one(rank)])[0]
        if len(p) < 2:
            return 0
    extra = 0
    if hi is not None and kp_eval(p, hi).is_zero:
        extra = 1
        p = kp_divmod(p, [-hi, HahnElem.one(rank)])[0]
        if len(p) < 2:
            return extra
    chain = [p, kp_derivative(p)]
    while chain[-1]:
        r = kp_divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    chain = [c for c in chain if c]
    v_lo = _sign_at_bound(chain, lo, False)
    v_hi = _sign_at_bound(chain, hi, True)
    return v_lo - v_hi + extra
