"""Univariate polynomial arithmetic over the rationals and the integers.

Polynomials are coefficient tuples, constant term first, with no trailing
zeros.  Everything here is exact: Fraction coefficients throughout, integer
coefficients for the normalized (primitive) forms.
"""

from fractions import Fraction
from math import gcd, lcm


ZERO = ()


def trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p):
    return len(p) - 1


def from_ints(p):
    return tuple(Fraction(c) for c in p)


def add(a, b):
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(out)


def scale(a, s):
    if s == 0:
        return ZERO
    return tuple(c * s for c in a)


def divmod_q(a, b):
    """Quotient and remainder of a by b over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(c for c in a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, cb in enumerate(b):
            a[k + i] -= f * cb
        a.pop()
    return trim(q), trim(a)


def gcd_q(a, b):
    """Monic gcd over the rationals."""
    while b:
        a, b = b, divmod_q(a, b)[1]
    if not a:
        return ZERO
    return tuple(c / a[-1] for c in a)


def derivative(a):
    return trim(i * c for i, c in enumerate(a) if i > 0)


def evaluate(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def to_primitive_int(a):
    """Clear denominators and divide out the content; leading coeff > 0."""
    if not a:
        return ()
    den = lcm(*(c.denominator for c in a)) if len(a) > 1 else a[0].denominator
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def squarefree_primitive(p_int):
    """Square-free primitive part of an integer polynomial."""
    p = from_ints(p_int)
    g = gcd_q(p, derivative(p))
    if degree(g) > 0:
        p = divmod_q(p, g)[0]
    return to_primitive_int(p)


def compose_linear(p, a, b):
    """p(a*x + b) as a Fraction polynomial."""
    lin = trim((Fraction(b), Fraction(a)))
    acc = ZERO
    for c in reversed(p):
        acc = add(mul(acc, lin), (Fraction(c),))
    return acc


def compose_power(p, n):
    """p(x**n)."""
    out = [Fraction(0)] * ((len(p) - 1) * n + 1) if p else []
    for i, c in enumerate(p):
        out[i * n] = Fraction(c)
    return trim(out)


def reverse(p):
    """x**deg * p(1/x); requires a nonzero constant term."""
    assert p and p[0] != 0
    return tuple(reversed(p))


def sturm_chain(p):
    chain = [p, derivative(p)]
    while chain[-1]:
        r = divmod_q(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(neg(r))
    return [c for c in chain if c]


def _sign_at(p, x):
    """Sign of p at x, where x may be -inf/+inf (None with a side flag)."""
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def _sign_at_inf(p, positive):
    if not p:
        return 0
    s = (p[-1] > 0) - (p[-1] < 0)
    if not positive and degree(p) % 2 == 1:
        s = -s
    return s


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo, hi):
    """Number of distinct real roots of p in (lo, hi].

    lo=None means -infinity, hi=None means +infinity.  p is given over the
    rationals (or integers) and need not be square-free.
    """
    p = from_ints(squarefree_primitive(tuple(Fraction(c) for c in p)))
    if degree(p) < 1:
        return 0
    while lo is not None and evaluate(p, lo) == 0:
        p = divmod_q(p, (-Fraction(lo), Fraction(1)))[0]
        if degree(p) < 1:
            return 0
    extra = 0
    if hi is not None and evaluate(p, hi) == 0:
        extra = 1
        p = divmod_q(p, (-Fraction(hi), Fraction(1)))[0]
    if degree(p) < 1:
        return extra
    chain = sturm_chain(p)
    lo_signs = [
        _sign_at_inf(q, False) if lo is None else _sign_at(q, lo) for q in chain
    ]
    hi_signs = [
        _sign_at_inf(q, True) if hi is None else _sign_at(q, hi) for q in chain
    ]
    return _variations(lo_signs) - _variations(hi_signs) + extra


def root_bound(p):
    """Rational B such that all real roots lie in [-B, B]."""
    p = trim(tuple(Fraction(c) for c in p))
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return Fraction(1) + max(abs(c) for c in p) / lead


def isolate_roots(p_int, lo=None, hi=None):
    """Isolate the real roots of a square-free integer polynomial.

    Returns a list of entries, in increasing order: ("rat", r) for an exact
    rational root r, or ("iso", l, h) for an open interval (l, h) containing
    exactly one root with neither endpoint a root.  lo/hi restrict the search
    to (lo, hi] when given.
    """
    p = from_ints(p_int)
    if degree(p) < 1:
        return []
    bound = root_bound(p)
    a = lo if lo is not None else -bound - 1
    b = hi if hi is not None else bound + 1
    found = []

    def recurse(a, b):
        n = count_roots(p, a, b)
        if n == 0:
            return
        if n == 1:
            if evaluate(p, b) == 0:
                found.append(("rat", Fraction(b)))
                return
            # Nudge a left endpoint that happens to be a root of p (it is
            # never the isolated root itself, which lies in the open interval).
            a, b = Fraction(a), Fraction(b)
            while evaluate(p, a) == 0:
                mid = (a + b) / 2
                if evaluate(p, mid) == 0:
                    found.append(("rat", mid))
                    return
                if count_roots(p, mid, b) == 1:
                    a = mid
                else:
                    b = mid
            found.append(("iso", a, b))
            return
        mid = (Fraction(a) + Fraction(b)) / 2
        recurse(a, mid)
        recurse(mid, b)

    recurse(Fraction(a), Fraction(b))
    found.sort(key=lambda e: e[1])
    return found


def resultant(f, g):
    """Resultant of two Fraction polynomials, by the Euclidean recursion."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return Fraction(0)
    m, n = degree(f), degree(g)
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    if m < n:
        sign = -1 if (m * n) % 2 else 1
        return sign * resultant(g, f)
    r = divmod_q(f, g)[1]
    if not r:
        return Fraction(0)
    return g[-1] ** (m - degree(r)) * resultant(g, r)


def _lagrange(points, values):
    acc = ZERO
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = (Fraction(1),)
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = mul(basis, (Fraction(-xj), Fraction(1)))
            denom *= xi - xj
        acc = add(acc, scale(basis, yi / denom))
    return acc


def resultant_sum(p_int, q_int):
    """Integer polynomial vanishing on {a+b : p(a)=0, q(b)=0}.

    Res_y(p(y), q(x - y)) computed by interpolation on deg(p)*deg(q)+1
    sample points; the y-leading coefficients are constant in x, so every
    specialization is clean.
    """
    p = from_ints(p_int)
    q = from_ints(q_int)
    n_pts = degree(p) * degree(q) + 1
    points = [Fraction(k) for k in range(n_pts)]
    values = [resultant(p, compose_linear(q, -1, x0)) for x0 in points]
    return to_primitive_int(_lagrange(points, values))


def resultant_product(p_int, q_int):
    """Integer polynomial vanishing on {a*b}; q must have q(0) != 0."""
    p = from_ints(p_int)
    q = from_ints(q_int)
    assert q[0] != 0
    n = degree(q)
    n_pts = degree(p) * n + 1
    points = [Fraction(k) for k in range(n_pts)]
    values = []
    for x0 in points:
        g = trim(tuple(q[n - j] * x0 ** (n - j) for j in range(n + 1)))
        values.append(resultant(p, g))
    return to_primitive_int(_lagrange(points, values))
