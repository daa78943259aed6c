"""Exact real algebraic numbers: the coefficient and residue field.

A number is carried as a square-free primitive integer polynomial together
with an open isolating interval with rational endpoints, neither endpoint a
root.  Rationals are the degenerate case lo == hi; arithmetic fast-paths
them.  Defining polynomials are never factored: equality and ordering go
through exact sign determination, and representation degree is kept in
check by square-free reduction plus opportunistic rational-root stripping.
"""

from fractions import Fraction

from . import polyq
from .errors import DivisionByZero, NegativeEvenRoot, NoRootInInterval, NotIsolating


def _sign(q):
    return (q > 0) - (q < 0)


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_mul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(prods), max(prods))


class RealAlgNum:
    """Immutable exact real algebraic number."""

    __slots__ = ("_poly", "_lo", "_hi")

    def __init__(self, poly, lo, hi, _checked=False):
        if not _checked:
            raise TypeError("use RealAlgNum.from_fraction or RealAlgNum.from_root")
        self._poly = poly
        self._lo = lo
        self._hi = hi

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        poly = (-q.numerator, q.denominator)
        return cls(poly, q, q, _checked=True)

    @classmethod
    def _from_iso(cls, poly, lo, hi):
        return cls(poly, Fraction(lo), Fraction(hi), _checked=True)

    @classmethod
    def from_root(cls, poly, lo, hi):
        """The unique root of poly in the closed interval [lo, hi]."""
        poly = tuple(int(c) for c in poly)
        if not any(poly):
            raise NoRootInInterval("zero polynomial")
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise NoRootInInterval("empty interval")
        p = polyq.squarefree_primitive(poly)
        if polyq.degree(p) < 1:
            raise NoRootInInterval("constant polynomial has no roots")
        pq = polyq.from_ints(p)
        selected = []
        for r in polyq.isolate_roots(p):
            if r[0] == "rat":
                if lo <= r[1] <= hi:
                    selected.append(("rat", r[1]))
                continue
            l, h = r[1], r[2]
            if h <= lo or l >= hi:
                continue
            # The interval's unique root equals an endpoint of [lo, hi]
            # exactly when that endpoint is a root lying inside it.
            if l < lo < h and polyq.evaluate(pq, lo) == 0:
                selected.append(("rat", lo))
                continue
            if l < hi < h and polyq.evaluate(pq, hi) == 0:
                selected.append(("rat", hi))
                continue
            a, b = max(l, lo), min(h, hi)
            if polyq.count_roots(p, a, b):
                selected.append(("iso", a, b))
        if not selected:
            raise NoRootInInterval(f"no root of {poly} in [{lo}, {hi}]")
        if len(selected) > 1:
            raise NotIsolating(f"{len(selected)} roots of {poly} in [{lo}, {hi}]")
        r = selected[0]
        if r[0] == "rat":
            return cls.from_fraction(r[1])
        return cls._from_iso(p, r[1], r[2])

    # ------------------------------------------------------------------
    # basic queries

    @property
    def poly(self):
        return self._poly

    @property
    def is_rational(self):
        return self._lo == self._hi

    @property
    def is_integer(self):
        return self.is_rational and self._lo.denominator == 1

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError("not a rational value")
        return self._lo

    def interval(self):
        """A rational enclosure (lo, hi); a point for rationals."""
        return (self._lo, self._hi)

    # ------------------------------------------------------------------
    # refinement

    def refine_step(self):
        """One bisection step; returns a new value (or self if rational)."""
        if self.is_rational:
            return self
        mid = (self._lo + self._hi) / 2
        pq = polyq.from_ints(self._poly)
        vm = polyq.evaluate(pq, mid)
        if vm == 0:
            return RealAlgNum.from_fraction(mid)
        if _sign(polyq.evaluate(pq, self._lo)) != _sign(vm):
            return RealAlgNum._from_iso(self._poly, self._lo, mid)
        return RealAlgNum._from_iso(self._poly, mid, self._hi)

    def refined(self, width):
        """Refine until the enclosure is narrower than width."""
        cur = self
        while not cur.is_rational and cur._hi - cur._lo >= width:
            cur = cur.refine_step()
        return cur

    def cmp_fraction(self, q):
        """Exact sign of self - q for a rational q."""
        if self.is_rational:
            return _sign(self._lo - q)
        q = Fraction(q)
        if self._lo < q < self._hi and polyq.evaluate(polyq.from_ints(self._poly), q) == 0:
            return 0
        cur = self
        while cur._lo < q < cur._hi:
            cur = cur.refine_step()
            if cur.is_rational:
                return _sign(cur._lo - q)
        return 1 if cur._lo >= q else -1

    # ------------------------------------------------------------------
    # sign, floor

    def sign(self):
        return self.cmp_fraction(Fraction(0))

    def floor(self):
        """The unique integer z with z <= self < z + 1."""
        if self.is_rational:
            return self._lo.numerator // self._lo.denominator
        cur = self.refined(Fraction(1, 2))
        while True:
            flo = cur._lo.numerator // cur._lo.denominator
            fhi = cur._hi.numerator // cur._hi.denominator
            if flo == fhi:
                return flo
            k = Fraction(fhi)
            side = cur.cmp_fraction(k)
            if side == 0:
                return fhi
            cur = cur.refine_step()

    # ------------------------------------------------------------------
    # arithmetic

    def __neg__(self):
        if self.is_rational:
            return RealAlgNum.from_fraction(-self._lo)
        p = polyq.to_primitive_int(polyq.compose_linear(self._poly, -1, 0))
        return RealAlgNum._from_iso(p, -self._hi, -self._lo)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _strip_zero_root(self):
        """Drop x-factors of the defining polynomial; value must be nonzero."""
        p = self._poly
        while p[0] == 0:
            p = p[1:]
        if p is self._poly:
            return self
        return RealAlgNum._from_iso(p, self._lo, self._hi)

    def inverse(self):
        s = self.sign()
        if s == 0:
            raise DivisionByZero("inverse of zero")
        if self.is_rational:
            return RealAlgNum.from_fraction(1 / self._lo)
        cur = self._strip_zero_root()
        while _sign(cur._lo) != _sign(cur._hi):
            cur = cur.refine_step()
        if cur.is_rational:
            return RealAlgNum.from_fraction(1 / cur._lo)
        p = polyq.to_primitive_int(polyq.from_ints(polyq.reverse(cur._poly)))
        return RealAlgNum._from_iso(p, 1 / cur._hi, 1 / cur._lo)

    def _shift_rational(self, r):
        """self + r for rational r."""
        if r == 0:
            return self
        if self.is_rational:
            return RealAlgNum.from_fraction(self._lo + r)
        p = polyq.to_primitive_int(polyq.compose_linear(self._poly, 1, -r))
        return RealAlgNum._from_iso(p, self._lo + r, self._hi + r)

    def _scale_rational(self, r):
        """self * r for rational r."""
        if r == 0:
            return RealAlgNum.from_fraction(0)
        if r == 1:
            return self
        if self.is_rational:
            return RealAlgNum.from_fraction(self._lo * r)
        p = polyq.to_primitive_int(polyq.compose_linear(self._poly, 1 / r, 0))
        lo, hi = self._lo * r, self._hi * r
        if r < 0:
            lo, hi = hi, lo
        return RealAlgNum._from_iso(p, lo, hi)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational:
            return self._shift_rational(other._lo)
        if self.is_rational:
            return other._shift_rational(self._lo)
        r = polyq.resultant_sum(self._poly, other._poly)
        return _resolve(r, self, other, _iv_add)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational:
            return self._scale_rational(other._lo)
        if self.is_rational:
            return other._scale_rational(self._lo)
        if self.sign() == 0 or other.sign() == 0:
            return RealAlgNum.from_fraction(0)
        b = other._strip_zero_root()
        r = polyq.resultant_product(self._poly, b._poly)
        return _resolve(r, self, b, _iv_mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n == 0:
            return RealAlgNum.from_fraction(1)
        base = self if n > 0 else self.inverse()
        acc = base
        for _ in range(abs(n) - 1):
            acc = acc * base
        return acc

    # ------------------------------------------------------------------
    # roots

    def nth_root(self, n):
        """The real n-th root; n must be a positive integer."""
        n = int(n)
        if n <= 0:
            raise ValueError("root index must be positive")
        if n == 1:
            return self
        s = self.sign()
        if s == 0:
            return RealAlgNum.from_fraction(0)
        if s < 0:
            if n % 2 == 0:
                raise NegativeEvenRoot(f"even root of negative value")
            return -((-self).nth_root(n))
        q = polyq.squarefree_primitive(
            polyq.to_primitive_int(polyq.compose_power(polyq.from_ints(self._poly), n))
        )
        cur = self
        while cur._lo <= 0 and not cur.is_rational:
            cur = cur.refine_step()
        lo_a, hi_a = cur.interval()
        u = Fraction(0)
        v = max(Fraction(1), hi_a)
        while True:
            cnt = polyq.count_roots(q, u, v) + (
                1 if polyq.evaluate(polyq.from_ints(q), u) == 0 else 0
            )
            if cnt == 1:
                return _pin(q, u, v)
            mid = (u + v) / 2
            side = cur.cmp_fraction(mid**n)
            if side == 0:
                return RealAlgNum.from_fraction(mid)
            if side > 0:
                u = mid
            else:
                v = mid

    # ------------------------------------------------------------------
    # comparisons

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() == 0

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    __hash__ = None

    def __repr__(self):
        if self.is_rational:
            return f"RealAlgNum({self._lo})"
        return f"RealAlgNum({self._poly}, ({self._lo}, {self._hi}))"


def _coerce(x):
    if isinstance(x, RealAlgNum):
        return x
    if isinstance(x, (int, Fraction)):
        return RealAlgNum.from_fraction(x)
    return NotImplemented


def _rational_root_in(p, lo, hi):
    """A rational root of p in (lo, hi), if one is cheaply findable.

    Denominators are searched among divisors of the leading coefficient up
    to 1000; missing an exotic rational root only costs canonical form.
    """
    lead = abs(p[-1])
    pq = polyq.from_ints(p)
    for d in range(1, 1001):
        if lead % d:
            continue
        c_lo = (lo * d).numerator // (lo * d).denominator + 1
        c_hi = -((-hi * d).numerator // (-hi * d).denominator) - 1
        if c_hi - c_lo > 4:
            continue
        for c in range(c_lo, c_hi + 1):
            cand = Fraction(c, d)
            if lo < cand < hi and polyq.evaluate(pq, cand) == 0:
                return cand
    return None


def _pin(p, lo, hi):
    """Build the value from a closed interval holding exactly one root of p."""
    pq = polyq.from_ints(p)
    if polyq.evaluate(pq, lo) == 0:
        return RealAlgNum.from_fraction(lo)
    if polyq.evaluate(pq, hi) == 0:
        return RealAlgNum.from_fraction(hi)
    # Narrow, then try to recognize a rational root for canonical output.
    while hi - lo > Fraction(1, 4096):
        mid = (lo + hi) / 2
        vm = polyq.evaluate(pq, mid)
        if vm == 0:
            return RealAlgNum.from_fraction(mid)
        if _sign(polyq.evaluate(pq, lo)) != _sign(vm):
            hi = mid
        else:
            lo = mid
    r = _rational_root_in(p, lo, hi)
    if r is not None:
        return RealAlgNum.from_fraction(r)
    return RealAlgNum._from_iso(p, lo, hi)


def _resolve(raw_poly, a, b, iv_fn):
    """Isolate op(a, b) among the roots of its resultant polynomial."""
    p = polyq.squarefree_primitive(raw_poly)
    pq = polyq.from_ints(p)
    while True:
        lo, hi = iv_fn(a.interval(), b.interval())
        cnt = polyq.count_roots(p, lo, hi) + (
            1 if polyq.evaluate(pq, lo) == 0 else 0
        )
        if cnt == 1:
            return _pin(p, lo, hi)
        a = a.refine_step()
        b = b.refine_step()


def poly_sign_at(coeffs, value):
    """Exact sign of a rational-coefficient polynomial at a RealAlgNum.

    Cheaper than building the image value: a gcd test settles the zero
    case, interval Horner settles the rest.
    """
    p = polyq.trim(tuple(Fraction(c) for c in coeffs))
    if not p:
        return 0
    if value.is_rational:
        return _sign(polyq.evaluate(p, value.as_fraction()))
    g = polyq.gcd_q(p, polyq.from_ints(value.poly))
    if polyq.degree(g) > 0:
        lo, hi = value.interval()
        gi = polyq.to_primitive_int(g)
        if polyq.count_roots(gi, lo, hi) or polyq.evaluate(polyq.from_ints(gi), lo) == 0:
            return 0
    cur = value
    while True:
        iv = (Fraction(0), Fraction(0))
        for c in reversed(p):
            iv = _iv_add(_iv_mul(iv, cur.interval()), (c, c))
        if iv[0] > 0:
            return 1
        if iv[1] < 0:
            return -1
        cur = cur.refine_step()
        if cur.is_rational:
            return _sign(polyq.evaluate(p, cur.as_fraction()))


def sqrt(value):
    return _coerce(value).nth_root(2)


ZERO = RealAlgNum.from_fraction(0)
ONE = RealAlgNum.from_fraction(1)
