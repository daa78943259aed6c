"""Expression grammar for elements of K, plus the canonical printer.

    expr   := '-'? term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' rational)?
    base   := rational | 'alg(...)' | 'sqrt(' expr ')' | 't'<idx> | '(' expr ')'

'^' takes rational literals only; fractional exponents are allowed on the
variables t1..tn, integer exponents on anything parenthesized.  Printing
canonicalizes to the normalized fraction with ascending exponents, so that
parse(print(x)) == x.
"""

import re
from fractions import Fraction

from .errors import ExprSyntaxError, UnknownVariable, UnsupportedExponent
from .hahn import GenPoly, HahnElem
from .realalg import RealAlgNum

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[-+*/^(),]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ExprSyntaxError(
                    f"unexpected character {text[pos]!r}", position=pos
                )
            break
        if m.group("num"):
            tokens.append(("num", int(m.group("num")), m.start("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, rank, coeff_field="alg"):
        self.text = text
        self.rank = rank
        self.coeff_field = coeff_field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise ExprSyntaxError(f"expected {sym!r}", position=pos)

    def fail(self, message):
        raise ExprSyntaxError(message, position=self.peek()[2])

    # ----- element grammar -------------------------------------------

    def parse(self):
        x = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", position=pos)
        return x

    def expr(self):
        negate = False
        if self.peek()[:2] == ("sym", "-"):
            self.next()
            negate = True
        x = self.term()
        if negate:
            x = -x
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.next()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self):
        x = self.factor()
        while self.peek()[:2] in (("sym", "*"), ("sym", "/")):
            op = self.next()[1]
            y = self.factor()
            x = x * y if op == "*" else x / y
        return x

    def factor(self):
        kind, val, pos = self.peek()
        var_index = None
        if kind == "name" and self._variable_index(val) is not None:
            var_index = self._variable_index(val)
            self.next()
            base = HahnElem.var(var_index, self.rank)
        else:
            base = self.base()
        if self.peek()[:2] != ("sym", "^"):
            return base
        self.next()
        expo = self.exponent_literal()
        if var_index is not None:
            return HahnElem.monomial(
                1,
                tuple(
                    expo if i == var_index else Fraction(0)
                    for i in range(self.rank)
                ),
            )
        if expo.denominator != 1:
            raise UnsupportedExponent(
                "fractional exponents are allowed only on variables",
                position=pos,
            )
        return base ** int(expo)

    def exponent_literal(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.next()
            return Fraction(val)
        if (kind, val) == ("sym", "-"):
            self.next()
            return -self.exponent_literal()
        if (kind, val) == ("sym", "("):
            self.next()
            q = self.signed_rational()
            self.expect_sym(")")
            return q
        raise UnsupportedExponent(
            "exponent must be a rational literal", position=pos
        )

    def signed_rational(self):
        sign = 1
        while self.peek()[:2] == ("sym", "-"):
            self.next()
            sign = -sign
        kind, val, pos = self.next()
        if kind != "num":
            raise ExprSyntaxError("expected a number", position=pos)
        q = Fraction(val)
        if self.peek()[:2] == ("sym", "/"):
            self.next()
            kind, val, pos = self.next()
            if kind != "num" or val == 0:
                raise ExprSyntaxError("expected a nonzero denominator", position=pos)
            q /= val
        return sign * q

    def _variable_index(self, name):
        if name == "t" and self.rank == 1:
            return 0
        m = re.fullmatch(r"t(\d+)", name)
        if m:
            idx = int(m.group(1)) - 1
            if 0 <= idx < self.rank:
                return idx
        return None

    def base(self):
        kind, val, pos = self.next()
        if kind == "num":
            return HahnElem.constant(val, self.rank)
        if (kind, val) == ("sym", "("):
            x = self.expr()
            self.expect_sym(")")
            return x
        if kind == "name":
            if val == "alg":
                return self.alg_literal(pos)
            if val == "sqrt":
                return self.sqrt_call(pos)
            if re.fullmatch(r"t\d*", val):
                raise UnknownVariable(
                    f"variable {val!r} not available at rank {self.rank}",
                    position=pos,
                )
            raise ExprSyntaxError(f"unknown name {val!r}", position=pos)
        raise ExprSyntaxError(f"unexpected token {val!r}", position=pos)

    def _require_alg_coeffs(self, what, pos):
        if self.coeff_field != "alg":
            raise ExprSyntaxError(
                f"{what} requires algebraic coefficients (--coeff alg)",
                position=pos,
            )

    def alg_literal(self, pos):
        self._require_alg_coeffs("alg(...)", pos)
        self.expect_sym("(")
        poly = self.poly_in_x()
        self.expect_sym(",")
        lo = self.signed_rational()
        self.expect_sym(",")
        hi = self.signed_rational()
        self.expect_sym(")")
        if any(c.denominator != 1 for c in poly):
            raise ExprSyntaxError("alg() needs integer coefficients", position=pos)
        coeffs = tuple(int(c) for c in poly)
        return HahnElem.constant(
            RealAlgNum.from_root(coeffs, lo, hi), self.rank
        )

    def sqrt_call(self, pos):
        self._require_alg_coeffs("sqrt()", pos)
        self.expect_sym("(")
        arg = self.expr()
        self.expect_sym(")")
        try:
            c = arg.as_constant()
        except ValueError:
            raise ExprSyntaxError(
                "sqrt() accepts constant arguments only", position=pos
            ) from None
        return HahnElem.constant(c.nth_root(2), self.rank)

    # ----- integer polynomials in x (alg literals) --------------------

    def poly_in_x(self):
        negate = False
        if self.peek()[:2] == ("sym", "-"):
            self.next()
            negate = True
        p = self.poly_term()
        if negate:
            p = tuple(-c for c in p)
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.next()[1]
            q = self.poly_term()
            if op == "-":
                q = tuple(-c for c in q)
            n = max(len(p), len(q))
            p = tuple(
                (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                for i in range(n)
            )
        return p

    def poly_term(self):
        p = self.poly_factor()
        while self.peek()[:2] == ("sym", "*"):
            self.next()
            q = self.poly_factor()
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, a in enumerate(p):
                for j, b in enumerate(q):
                    out[i + j] += a * b
            p = tuple(out)
        return p

    def poly_factor(self):
        kind, val, pos = self.next()
        if kind == "num":
            p = (Fraction(val),)
        elif (kind, val) == ("name", "x"):
            p = (Fraction(0), Fraction(1))
        elif (kind, val) == ("sym", "("):
            p = self.poly_in_x()
            self.expect_sym(")")
        else:
            raise ExprSyntaxError(f"unexpected token in alg()", position=pos)
        if self.peek()[:2] == ("sym", "^"):
            self.next()
            kind, val, pos = self.next()
            if kind != "num":
                raise ExprSyntaxError("integer exponent expected", position=pos)
            out = (Fraction(1),)
            for _ in range(val):
                new = [Fraction(0)] * (len(out) + len(p) - 1)
                for i, a in enumerate(out):
                    for j, b in enumerate(p):
                        new[i + j] += a * b
                out = tuple(new)
            p = out
        return p


def parse_expr(text, rank=1, coeff_field="alg"):
    """Parse an expression into an exact element of K."""
    return _Parser(text, rank, coeff_field).parse()


# ----------------------------------------------------------------------
# printing


def format_fraction(q):
    return str(q)


def format_poly_x(coeffs):
    """Integer polynomial in x, highest degree first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            body = xpart if abs(c) == 1 else f"{abs(c)}*{xpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def format_coeff(c):
    """A RealAlgNum as parser input: p/q or alg(poly, lo, hi)."""
    if c.is_rational:
        return format_fraction(c.as_fraction())
    lo, hi = c.interval()
    return f"alg({format_poly_x(c.poly)}, {lo}, {hi})"


def _format_expo(q):
    if q.denominator == 1 and q >= 0:
        return str(q)
    return f"({q})"


def _format_term_body(expo, coeff_abs_str, has_coeff):
    tparts = [
        f"t{i + 1}" if e == 1 else f"t{i + 1}^{_format_expo(e)}"
        for i, e in enumerate(expo)
        if e != 0
    ]
    if not tparts:
        return coeff_abs_str
    if not has_coeff:
        return "*".join(tparts)
    return coeff_abs_str + "*" + "*".join(tparts)


def format_genpoly(p):
    if p.is_zero:
        return "0"
    parts = []
    for expo, coeff in p.terms:
        s = coeff.sign()
        mag = coeff if s > 0 else -coeff
        is_one = mag.is_rational and mag.as_fraction() == 1
        body = _format_term_body(expo, format_coeff(mag), not is_one)
        if not parts:
            parts.append(body if s > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if s > 0 else f"- {body}")
    return " ".join(parts)


def format_elem(x):
    """Canonical printable form; parse_expr inverts this exactly."""
    num = format_genpoly(x.num)
    if x.is_polynomial():
        return num
    return f"({num}) / ({format_genpoly(x.den)})"


def format_expansion(t):
    """Truncated expansion with an O(...) tail marker when inexact."""
    body = format_genpoly(GenPoly(len(t.order_bound), t.terms))
    if t.exact:
        return body
    marker_expo = t.tail_valuation or t.order_bound
    tail = _format_term_body(marker_expo, "", False) or "1"
    return f"{body} + O({tail})"
