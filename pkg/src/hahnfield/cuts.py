"""Bounded sign-condition types, stability radii, and order-automorphisms.

First-order types are replaced by finite families of sign conditions: all
polynomials of bounded degree whose coefficients are bounded integer
combinations of products of the chosen generators.  Every claim made here
is a finite conjunction of exact sign tests.  Two automorphism kinds are
available - exponent scaling and per-variable Moebius substitution - both
exactly computable on fractions and both fixing every constant.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import polyq
from .errors import (
    DegenerateAtRoot,
    NonIntegralExponent,
    NotInSpan,
    UnknownPredicate,
)
from .hahn import (
    GenPoly,
    HahnElem,
    decompose,
    ev_zero,
    kp_derivative,
    kp_eval,
    sturm_count,
)
from .integer_part import floor as ip_floor
from .integer_part import is_member
from .realalg import RealAlgNum, poly_sign_at
from .sections import LawCheck, representative


# ----------------------------------------------------------------------
# bounded polynomial families


@dataclass(frozen=True)
class PolyFamilySpec:
    """All polynomials of degree <= degree_bound whose coefficients are
    integer combinations, bounded by height_bound, of products of distinct
    coeff_generators."""

    degree_bound: int
    coeff_generators: tuple = ()
    height_bound: int = 1

    def __post_init__(self):
        if self.degree_bound < 1 or self.height_bound < 1:
            raise ValueError("degree and height bounds must be positive")

    @property
    def is_constant(self):
        return not self.coeff_generators

    def monomials(self, rank):
        """Products of distinct generators, the empty product first."""
        gens = self.coeff_generators
        out = []
        for r in range(len(gens) + 1):
            for combo in itertools.combinations(range(len(gens)), r):
                m = HahnElem.one(rank)
                for i in combo:
                    m = m * gens[i]
                out.append(m)
        return out

    def coeff_vectors(self):
        """Integer weight tuples for one coefficient; simpler vectors first
        so distinguishers come out small."""
        n_mono = 2 ** len(self.coeff_generators)
        h = self.height_bound
        vecs = itertools.product(range(-h, h + 1), repeat=n_mono)
        return sorted(vecs, key=lambda v: (sum(abs(c) for c in v), v))

    def members(self):
        """Weight matrices (one weight tuple per coefficient, constant term
        first); the zero polynomial is skipped."""
        choices = self.coeff_vectors()
        for mat in itertools.product(choices, repeat=self.degree_bound + 1):
            if any(any(row) for row in mat):
                yield mat


def _member_label(mat):
    parts = []
    for k, row in enumerate(mat):
        if not any(row):
            continue
        coeff = "+".join(f"{c}*g{i}" if i else str(c) for i, c in enumerate(row) if c)
        parts.append(f"({coeff})*X^{k}" if k else f"({coeff})")
    return " + ".join(parts)


def _member_coeffs(mat, monomials, rank):
    coeffs = []
    for row in mat:
        acc = HahnElem.zero(rank)
        for c, m in zip(row, monomials):
            if c:
                acc = acc + m * c
        coeffs.append(acc)
    return coeffs


def _int_coeffs(mat):
    return tuple(row[0] for row in mat)


@dataclass
class _Profile:
    """Decomposition data of one element, reused across a whole family."""

    infinite: bool
    sign: int
    residue: RealAlgNum = None
    tail_sign: int = 0
    rat: tuple = None

    def poly_sign(self, coeffs):
        if not self.infinite and self.rat is not None:
            return _int_sign_rat(coeffs, self.rat, self.tail_sign)
        return _int_poly_sign(coeffs, self)


def _profile(x):
    if not x.is_zero and x.valuation() < ev_zero(x.rank):
        return _Profile(True, x.sign())
    _, c, ts = decompose(x)
    rat = None
    if c.is_rational:
        f = c.as_fraction()
        rat = (f.numerator, f.denominator)
    return _Profile(False, x.sign(), c, ts, rat)


def _int_sign_rat(coeffs, rat, ts):
    """Integer-only sign of an integer polynomial at a/b plus a signed
    infinitesimal tail."""
    a, b = rat
    p = list(coeffs)
    while p and not p[-1]:
        p.pop()
    j = 0
    while p:
        n = len(p) - 1
        v = sum(c * a**k * b ** (n - k) for k, c in enumerate(p))
        if v:
            s = 1 if v > 0 else -1
            return s if j == 0 else s * ts**j
        if ts == 0:
            return 0
        p = [k * c for k, c in enumerate(p)][1:]
        while p and not p[-1]:
            p.pop()
        j += 1
    return 0


def _int_poly_sign(coeffs, prof):
    """Sign of an integer polynomial at an element given its profile."""
    coeffs = polyq.trim(tuple(Fraction(c) for c in coeffs))
    if not coeffs:
        return 0
    deg = len(coeffs) - 1
    if prof.infinite:
        s = (coeffs[-1] > 0) - (coeffs[-1] < 0)
        if prof.sign < 0 and deg % 2 == 1:
            s = -s
        return s
    p = coeffs
    factorial_skip = 0
    for j in range(deg + 1):
        sj = poly_sign_at(p, prof.residue)
        if sj != 0:
            if j == 0:
                return sj
            return sj * (prof.tail_sign**j)
        if prof.tail_sign == 0:
            return 0
        p = polyq.derivative(p)
        if not p:
            return 0
    return 0


@dataclass(frozen=True)
class TypeCompareResult:
    equal: bool
    spec: PolyFamilySpec
    distinguisher: str | None = None
    sign_x: int | None = None
    sign_y: int | None = None


def bounded_type_eq(spec, x, y):
    """Compare the sign conditions of x and y over the whole family."""
    rank = x.rank
    if spec.is_constant:
        px, py = _profile(x), _profile(y)
        # the sign of an integer polynomial at an element depends only on
        # its profile, so identical profiles need no enumeration
        if px.infinite and py.infinite and px.sign == py.sign:
            return TypeCompareResult(True, spec)
        if (
            not px.infinite
            and not py.infinite
            and px.tail_sign == py.tail_sign
            and (px.residue - py.residue).sign() == 0
        ):
            return TypeCompareResult(True, spec)
        for mat in spec.members():
            coeffs = _int_coeffs(mat)
            sx = px.poly_sign(coeffs)
            sy = py.poly_sign(coeffs)
            if sx != sy:
                return TypeCompareResult(False, spec, _member_label(mat), sx, sy)
        return TypeCompareResult(True, spec)
    monomials = spec.monomials(rank)
    xs = [HahnElem.one(rank)]
    ys = [HahnElem.one(rank)]
    for _ in range(spec.degree_bound):
        xs.append(xs[-1] * x)
        ys.append(ys[-1] * y)
    for mat in spec.members():
        coeffs = _member_coeffs(mat, monomials, rank)
        vx = HahnElem.zero(rank)
        vy = HahnElem.zero(rank)
        for k, c in enumerate(coeffs):
            if not c.is_zero:
                vx = vx + c * xs[k]
                vy = vy + c * ys[k]
        sx, sy = vx.sign(), vy.sign()
        if sx != sy:
            return TypeCompareResult(False, spec, _member_label(mat), sx, sy)
    return TypeCompareResult(True, spec)


# ----------------------------------------------------------------------
# stability radii (eps witnesses)

_root_cache = {}


def _family_roots(spec):
    """Sorted roots of every constant-coefficient family member, cached.

    Polynomials are deduped up to positive scaling (signs and roots are
    invariant); isolating intervals are pre-refined for candidate search.
    """
    key = (spec.degree_bound, spec.height_bound)
    if key in _root_cache:
        return _root_cache[key]
    seen = set()
    roots = []
    width = Fraction(1, 4096)
    for mat in spec.members():
        coeffs = _int_coeffs(mat)
        p = polyq.trim(tuple(Fraction(c) for c in coeffs))
        if len(p) < 2:
            continue
        norm = polyq.squarefree_primitive(tuple(coeffs))
        if norm in seen:
            continue
        seen.add(norm)
        for r in polyq.isolate_roots(norm):
            if r[0] == "rat":
                roots.append(RealAlgNum.from_fraction(r[1]))
            else:
                roots.append(
                    RealAlgNum._from_iso(norm, r[1], r[2]).refined(width)
                )
    roots.sort(key=lambda a: sum(a.interval(), Fraction(0)) / 2)
    _root_cache[key] = roots
    return roots


def _check_degenerate(spec, x):
    if spec.is_constant:
        prof = _profile(x)
        for mat in spec.members():
            if prof.poly_sign(_int_coeffs(mat)) == 0:
                raise DegenerateAtRoot(_member_label(mat))
        return prof
    rank = x.rank
    monomials = spec.monomials(rank)
    for mat in spec.members():
        coeffs = _member_coeffs(mat, monomials, rank)
        if len(coeffs) > 0 and kp_eval(coeffs, x).sign() == 0:
            raise DegenerateAtRoot(_member_label(mat))
    return None


def eps_witness(spec, x, verify_members=200):
    """A radius eps > 0 whose interval around x contains no family root.

    Constant families: exactly half the minimum distance from x to any
    family root, capped at 1 (infinite distances collapse to the cap).
    General families: an exact coefficient lower bound on the distance from
    x to the nearest root of each member; rational halving cannot cross
    infinitesimal scales, the bound can.
    """
    rank = x.rank
    one = HahnElem.one(rank)
    prof = _check_degenerate(spec, x)

    if spec.is_constant:
        n_members = len(spec.coeff_vectors()) ** (spec.degree_bound + 1)
        if prof.infinite:
            # every family root is below the Cauchy bound, x is not
            eps = one
        elif n_members <= 200:
            roots = _family_roots(spec)
            if not roots:
                eps = one
            else:
                c = prof.residue.refined(Fraction(1, 1024))
                c_mid = sum(c.interval(), Fraction(0)) / 2
                dists = [
                    abs(sum(r.interval(), Fraction(0)) / 2 - c_mid)
                    for r in roots
                ]
                best = min(dists)
                cand = [
                    r
                    for r, d in zip(roots, dists)
                    if d <= best + Fraction(1, 512)
                ]
                min_dist = None
                for r in cand:
                    d = abs(x - HahnElem.constant(r, rank))
                    if min_dist is None or d < min_dist:
                        min_dist = d
                eps = min_dist / 2
                if not eps < one:
                    eps = one
        elif prof.residue.is_rational and prof.tail_sign == 0:
            eps = HahnElem.constant(
                _rational_radius(spec, prof.residue.as_fraction()), rank
            )
        else:
            eps = _constant_radius_at(spec, x, prof)
    else:
        monomials = spec.monomials(rank)
        eps = _bound_over_members(
            (_member_coeffs(mat, monomials, rank) for mat in spec.members()),
            x,
        )
    # cross-check root absence with the Sturm counter on modest families;
    # constant families are counted over Q inside a rational subinterval
    if spec.is_constant:
        if prof is not None and not prof.infinite:
            e_const = decompose(eps)[1]
            if e_const.sign() > 0:
                w = Fraction(1, 4096)
                c_lo, c_hi = prof.residue.refined(w).interval()
                e_lo, _ = e_const.refined(w).interval()
                lo, hi = c_hi - e_lo, c_lo + e_lo
                n_checked = 0
                for mat in spec.members():
                    if n_checked >= verify_members or not lo < hi:
                        break
                    n_checked += 1
                    p = polyq.trim(
                        tuple(Fraction(c) for c in _int_coeffs(mat))
                    )
                    if len(p) < 2:
                        continue
                    assert polyq.count_roots(p, lo, hi) == 0
    else:
        monomials = spec.monomials(rank)
        n_checked = 0
        for mat in spec.members():
            if n_checked >= verify_members:
                break
            n_checked += 1
            coeffs = _member_coeffs(mat, monomials, rank)
            while coeffs and coeffs[-1].is_zero:
                coeffs.pop()
            if len(coeffs) < 2:
                continue
            assert sturm_count(coeffs, x - eps, x + eps) == 0
    return eps


def _rational_radius(spec, r):
    """Sound root-free radius around a rational point, entirely over Q:
    each member's distance to its nearest root is bounded below through the
    coefficients of its Taylor shift."""
    eps = Fraction(1)
    for mat in spec.members():
        p = polyq.trim(tuple(Fraction(c) for c in _int_coeffs(mat)))
        if len(p) < 2:
            continue
        q0 = abs(polyq.evaluate(p, r))
        tail = Fraction(0)
        deriv = polyq.derivative(p)
        fact = 1
        k = 1
        while deriv:
            fact *= k
            tail += abs(polyq.evaluate(deriv, r)) / fact
            deriv = polyq.derivative(deriv)
            k += 1
        bound = q0 / (q0 + tail)
        if bound < eps:
            eps = bound
    return eps / 2


def _constant_radius_at(spec, x, prof):
    rank = x.rank
    return _bound_over_members(
        (
            [HahnElem.constant(c, rank) for c in _int_coeffs(mat)]
            for mat in spec.members()
        ),
        x,
    )


def _bound_over_members(member_coeffs, x):
    """Minimum, over the given members, of an exact coefficient lower bound
    on the distance from x to the member's nearest root."""
    rank = x.rank
    eps = HahnElem.one(rank)
    for coeffs in member_coeffs:
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        if len(coeffs) < 2:
            continue
        # Taylor coefficients of the member at x
        q = []
        deriv = coeffs
        fact = 1
        j = 0
        while deriv:
            q.append(kp_eval(deriv, x) / fact)
            deriv = kp_derivative(deriv)
            j += 1
            fact *= j
        tail = HahnElem.zero(rank)
        for qq in q[1:]:
            tail = tail + abs(qq)
        if tail.is_zero:
            continue
        bound = abs(q[0]) / (abs(q[0]) + tail)
        if bound < eps:
            eps = bound
    return eps


# ----------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class AutoDescriptor:
    """An order-automorphism of K: per-variable exponent scaling by positive
    rationals, or per-variable Moebius substitution t -> a*t/(c*t + d)."""

    kind: str
    scaling: tuple = ()
    moebius: tuple = ()

    def __post_init__(self):
        if self.kind == "exponent_scaling":
            if not self.scaling or any(q <= 0 for q in self.scaling):
                raise ValueError("scaling factors must be positive rationals")
        elif self.kind == "moebius":
            if not self.moebius:
                raise ValueError("need one (a, c, d) triple per variable")
            for a, c, d in self.moebius:
                if a.sign() <= 0 or d.sign() <= 0:
                    raise ValueError("moebius triples need a > 0 and d > 0")
        else:
            raise ValueError(f"unknown automorphism kind {self.kind!r}")

    @property
    def rank(self):
        return len(self.scaling) if self.kind == "exponent_scaling" else len(self.moebius)

    def inverse(self):
        if self.kind == "exponent_scaling":
            return AutoDescriptor(
                "exponent_scaling", tuple(1 / q for q in self.scaling)
            )
        return AutoDescriptor(
            "moebius", moebius=tuple((d, -c, a) for a, c, d in self.moebius)
        )


def scaling_descriptor(*factors):
    return AutoDescriptor(
        "exponent_scaling", tuple(Fraction(q) for q in factors)
    )


def moebius_descriptor(*triples):
    def conv(v):
        return v if isinstance(v, RealAlgNum) else RealAlgNum.from_fraction(v)

    return AutoDescriptor(
        "moebius", moebius=tuple((conv(a), conv(c), conv(d)) for a, c, d in triples)
    )


def _moebius_identity(triple):
    a, c, d = triple
    return c.sign() == 0 and (a - d).sign() == 0


def apply_automorphism(phi, x):
    """Apply a descriptor to an element, exactly."""
    rank = x.rank
    if phi.rank != rank:
        raise ValueError("descriptor rank does not match the element")
    if phi.kind == "exponent_scaling":
        def map_poly(p):
            return GenPoly(
                rank,
                tuple(
                    (tuple(q * e for q, e in zip(phi.scaling, expo)), c)
                    for expo, c in p.terms
                ),
            )

        return HahnElem.make(map_poly(x.num), map_poly(x.den))

    active = [i for i, tr in enumerate(phi.moebius) if not _moebius_identity(tr)]
    for p in (x.num, x.den):
        for expo, _ in p.terms:
            for i in active:
                if expo[i].denominator != 1:
                    raise NonIntegralExponent(
                        f"t{i + 1} carries exponent {expo[i]}"
                    )
    images = []
    for i, (a, c, d) in enumerate(phi.moebius):
        ti = HahnElem.var(i, rank)
        images.append((ti * a) / (ti * c + d))

    def image_poly(p):
        acc = HahnElem.zero(rank)
        for expo, coeff in p.terms:
            term = HahnElem.constant(coeff, rank)
            for i, e in enumerate(expo):
                if e:
                    if i in active:
                        term = term * images[i] ** int(e)
                    else:
                        term = term * HahnElem.monomial(
                            1,
                            tuple(
                                e if j == i else Fraction(0)
                                for j in range(rank)
                            ),
                        )
            acc = acc + term
        return acc

    return image_poly(x.num) / image_poly(x.den)


# ----------------------------------------------------------------------
# escape demonstration


@dataclass(frozen=True)
class EscapeWitness:
    probe: HahnElem
    image: HahnElem
    remainder: HahnElem


@dataclass(frozen=True)
class InvarianceReport:
    probes_checked: int


def escape_demo(phi, probes):
    """Search the probes for an integer-part element whose image escapes.

    Probes must lie in the canonical integer part; the first probe whose
    image leaves it yields the witness, otherwise every image stayed put.
    """
    for x in probes:
        if not is_member(x):
            raise ValueError("probe outside the canonical integer part")
    for x in probes:
        y = apply_automorphism(phi, x)
        if not is_member(y):
            return EscapeWitness(x, y, ip_floor(y).remainder)
    return InvarianceReport(len(probes))


def default_escape_probes(rank=1):
    """Integer-coefficient probes first, halved coefficients afterwards."""
    t_inv = HahnElem.var(0, rank) ** -1
    return (
        t_inv,
        t_inv + 1,
        t_inv * Fraction(1, 2),
        t_inv * Fraction(3, 2) + 2,
    )


# ----------------------------------------------------------------------
# discreteness / unboundedness reports


def discrete_unbounded_check(membership, samples, section=None):
    """Named-set discreteness and unboundedness witnesses on samples.

    membership is one of canonical_I, constants, section_powers; the check
    produces an explicit exceeding member per sample and an isolating
    interval per produced member.
    """
    if membership not in ("canonical_I", "constants", "section_powers"):
        raise UnknownPredicate(membership)
    checks = []
    witnesses = []
    fail = None
    for x in samples:
        rank = x.rank
        if membership == "canonical_I":
            witnesses.append(ip_floor(x).floor + 1)
        elif membership == "constants":
            if not x.is_zero and x.valuation() < ev_zero(rank):
                fail = "sample exceeds every constant"
                break
            _, c, _ = decompose(x)
            witnesses.append(HahnElem.constant(c.floor() + 1, rank))
        else:
            if section is None or not section.generators:
                raise UnknownPredicate("section_powers needs a built section")
            if x.sign() <= 0:
                x = abs(x) + 1
            v = x.valuation()
            if v < ev_zero(rank):
                rep = representative(section, x)
                fp_expos = tuple(2 * q for q in rep.exponents)
            else:
                idx = next(i for i, val in enumerate(section.values) if any(val))
                fp_expos = tuple(
                    Fraction(-1 if i == idx else 0)
                    for i in range(len(section.values))
                )
            from .sections import FormalProduct

            w = FormalProduct(section, fp_expos)
            if not w.materializable:
                fail = "witness requires a fractional generator power"
                break
            witnesses.append(w.materialize(rank))
        if not witnesses[-1] > x:
            fail = "produced member does not exceed the sample"
            break
    checks.append(LawCheck("unbounded", "fail" if fail else "pass", fail))

    members = [x for x in samples if _in_named_set(membership, x, section)]
    members.extend(witnesses)
    fail = None
    for i, w in enumerate(members):
        if membership == "section_powers":
            radius = w / 2
        else:
            radius = HahnElem.constant(Fraction(1, 2), w.rank)
        for j, other in enumerate(members):
            if i != j and (other - w).sign() != 0:
                if w - radius < other < w + radius:
                    fail = "another member intrudes on the isolating interval"
                    break
        if fail:
            break
    checks.append(LawCheck("discrete", "fail" if fail else "pass", fail))
    return checks


def _in_named_set(membership, x, section):
    if membership == "canonical_I":
        return is_member(x)
    if membership == "constants":
        if not x.is_zero and x.valuation() < ev_zero(x.rank):
            return False
        sigma, c, ts = decompose(x)
        return sigma.is_zero and ts == 0
    if section is None or x.sign() <= 0:
        return False
    try:
        rep = representative(section, x)
    except NotInSpan:
        return False
    return rep.materializable and rep.materialize(x.rank) == x
