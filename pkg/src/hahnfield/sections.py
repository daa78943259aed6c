"""Archimedean equivalence, value group sections, residue field sections.

The section builder replays the greedy divisible-subgroup recursion on a
finite enumeration: an element is skipped exactly when its valuation lies
in the rational span of the values already chosen, which is the membership
test on the divisible hull.  Rational powers of generators stay formal;
only the exponent side is ever materialized.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFinite, NotInSpan, NotPositive
from .hahn import HahnElem, decompose, ev_add, ev_zero
from .realalg import RealAlgNum


@dataclass(frozen=True)
class LawCheck:
    """One verified law: status 'pass' or 'fail' plus a counterexample."""

    law: str
    status: str
    counterexample: str | None = None

    @property
    def ok(self):
        return self.status == "pass"

    def to_dict(self):
        d = {"law": self.law, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def _solve_in_span(values, target):
    """Exact rational solution q with sum(q_i * values_i) == target, or None."""
    n_vecs = len(values)
    if n_vecs == 0:
        return () if not any(target) else None
    width = len(target)
    # Columns are the value vectors; eliminate on the augmented matrix.
    rows = [
        [values[j][i] for j in range(n_vecs)] + [target[i]] for i in range(width)
    ]
    pivots = []
    r = 0
    for col in range(n_vecs):
        pivot = next((k for k in range(r, width) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for k in range(width):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    sol = [Fraction(0)] * n_vecs
    for k, col in enumerate(pivots):
        sol[col] = rows[k][-1]
    for k in range(r, width):
        if rows[k][-1] != 0:
            return None
    # Free columns stay zero; verify (values need not be independent here).
    acc = tuple(
        sum((sol[j] * values[j][i] for j in range(n_vecs)), Fraction(0))
        for i in range(width)
    )
    return tuple(sol) if acc == tuple(target) else None


@dataclass(frozen=True)
class ValueGroupSection:
    """Chosen generators with rationally independent valuation vectors."""

    generators: tuple
    values: tuple

    @property
    def rank(self):
        return len(self.generators)

    def solve(self, target):
        return _solve_in_span(self.values, tuple(target))

    def values_independent(self):
        for j in range(len(self.values)):
            others = self.values[:j] + self.values[j + 1 :]
            if _solve_in_span(others, self.values[j]) is not None:
                return False
        return True


@dataclass(frozen=True)
class FormalProduct:
    """Rational powers of the section generators, kept formal."""

    section: ValueGroupSection
    exponents: tuple

    def value(self):
        width = (
            len(self.section.values[0])
            if self.section.values
            else None
        )
        if width is None:
            raise ValueError("empty section products need an ambient rank")
        acc = ev_zero(width)
        for q, v in zip(self.exponents, self.section.values):
            acc = ev_add(acc, tuple(q * c for c in v))
        return acc

    @property
    def materializable(self):
        return all(q.denominator == 1 for q in self.exponents)

    def materialize(self, rank):
        if not self.materializable:
            raise ValueError("fractional generator powers are not elements of K")
        acc = HahnElem.one(rank)
        for q, g in zip(self.exponents, self.section.generators):
            acc = acc * g ** int(q)
        return acc


def arch_equiv(x, y):
    """Archimedean equivalence of two positive elements.

    Returns (equivalent, witness): when equivalent, witness is the least n
    with x < n*y and y < n*x, settled by exact sign tests.
    """
    if x.sign() <= 0 or y.sign() <= 0:
        raise NotPositive("archimedean comparison needs positive elements")
    if x.valuation() != y.valuation():
        return False, None

    def least_multiplier(a, b):
        # least n with a < n*b, by doubling then bisecting; only sign
        # tests of a - n*b, never a division
        hi = 1
        while (a - b * hi).sign() >= 0:
            hi *= 2
        lo = hi // 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if (a - b * mid).sign() >= 0:
                lo = mid
            else:
                hi = mid
        return hi

    n = max(least_multiplier(x, y), least_multiplier(y, x))
    return True, n


def build_section(enumeration):
    """Greedy section construction over a finite enumeration, in order.

    Zeros are skipped and negatives replaced by their absolute value; an
    element contributes a generator iff its valuation is outside the
    rational span of the values chosen so far.
    """
    generators = []
    values = []
    for x in enumeration:
        if x.sign() == 0:
            continue
        x = abs(x)
        v = x.valuation()
        if _solve_in_span(tuple(values), v) is None:
            generators.append(x)
            values.append(v)
    return ValueGroupSection(tuple(generators), tuple(values))


def representative(section, x):
    """The unique formal generator product archimedean-equivalent to |x|."""
    if x.sign() == 0:
        raise NotPositive("zero has no archimedean class representative")
    v = abs(x).valuation()
    sol = section.solve(v)
    if sol is None:
        raise NotInSpan(f"valuation {v} outside the section span")
    return FormalProduct(section, sol)


def verify_section(section, sample_pairs, rank=None):
    """Check the section laws on sampled formal-product pairs.

    Laws: values independent (the uniqueness engine), the homomorphism law
    on values, injectivity of the value map, and uniqueness of archimedean
    representatives; doctored inputs violating independence fail here.
    """
    checks = []
    indep = section.values_independent()
    checks.append(
        LawCheck(
            "values_rationally_independent",
            "pass" if indep else "fail",
            None if indep else f"values {section.values} are dependent",
        )
    )

    def fp_value(fp):
        acc = ev_zero(len(section.values[0])) if section.values else ()
        for q, v in zip(fp.exponents, section.values):
            acc = ev_add(acc, tuple(q * c for c in v))
        return acc

    hom_fail = None
    inj_fail = None
    uniq_fail = None
    for a, b in sample_pairs:
        prod = FormalProduct(
            section, tuple(p + q for p, q in zip(a.exponents, b.exponents))
        )
        if fp_value(prod) != ev_add(fp_value(a), fp_value(b)):
            hom_fail = f"{a.exponents} * {b.exponents}"
        if a.exponents != b.exponents and fp_value(a) == fp_value(b):
            inj_fail = f"{a.exponents} vs {b.exponents}"
            if (
                rank is not None
                and a.materializable
                and b.materializable
            ):
                xa, xb = a.materialize(rank), b.materialize(rank)
                if arch_equiv(xa, xb)[0]:
                    uniq_fail = (
                        f"distinct products {a.exponents}, {b.exponents} are "
                        "archimedean equivalent"
                    )
    checks.append(
        LawCheck(
            "value_homomorphism",
            "fail" if hom_fail else "pass",
            hom_fail,
        )
    )
    checks.append(
        LawCheck(
            "value_injectivity",
            "fail" if inj_fail or not indep else "pass",
            inj_fail,
        )
    )
    checks.append(
        LawCheck(
            "unique_class_representative",
            "fail" if uniq_fail or not indep else "pass",
            uniq_fail,
        )
    )
    return checks


def prop41_witnesses(section, x, y, test_products=()):
    """Unboundedness and discreteness witnesses for a built section.

    above: a section product exceeding x (the class of x**2 for infinite x,
    any infinite section element for finite x), verified by a sign test
    when materializable.  eps: y/2, verified to isolate y among the
    materializable test products.
    """
    if x.sign() <= 0:
        raise NotPositive("x must be positive")
    rank = x.rank
    v = x.valuation()
    if v < ev_zero(rank):
        rep = representative(section, x)
        above = FormalProduct(
            section, tuple(2 * q for q in rep.exponents)
        )
    else:
        above = None
        for i, val in enumerate(section.values):
            if any(val):
                expo = [Fraction(0)] * len(section.values)
                # choose the power making the generator infinite
                expo[i] = Fraction(-1) if val > ev_zero(rank) else Fraction(1)
                above = FormalProduct(section, tuple(expo))
                break
        if above is None:
            raise NotInSpan("section has no infinite element above a finite x")
    if above.materializable and not above.materialize(rank) > x:
        raise AssertionError("witness failed its defining sign test")

    y_elem = y.materialize(rank)
    if y_elem.sign() <= 0:
        raise NotPositive("y must be positive")
    eps = y_elem / 2
    for fp in test_products:
        if fp.exponents == y.exponents or not fp.materializable:
            continue
        z = fp.materialize(rank)
        if y_elem - eps < z < y_elem + eps:
            raise AssertionError(
                f"section product {fp.exponents} lies inside the eps interval"
            )
    return above, eps


def residue(x):
    """The residue-field representative of a finite element."""
    rank = x.rank
    if not x.is_zero and x.valuation() < ev_zero(rank):
        raise NotFinite("infinite element has no residue")
    _, c, _ = decompose(x)
    return c


def _mu_equivalent(x, y):
    d = x - y
    return d.is_zero or d.valuation() > ev_zero(x.rank)


def verify_residue_section(samples, candidate=None, pair_samples=()):
    """Check the canonical residue section (constant embeddings).

    Each finite sample must be infinitesimally close to the embedding of
    its residue, the embedding must respect + and * on sampled pairs, and
    distinct constants must never be mu-equivalent.  A candidate set is
    additionally screened for two members in one class.
    """
    checks = []
    fail = None
    residues = []
    for x in samples:
        c = residue(x)
        residues.append(c)
        if not _mu_equivalent(x, HahnElem.constant(c, x.rank)):
            fail = f"sample not equivalent to its residue embedding"
            break
    checks.append(LawCheck("residue_representative", "fail" if fail else "pass", fail))

    fail = None
    for x, y in pair_samples:
        if residue(x + y) != residue(x) + residue(y):
            fail = "additivity of the residue map failed"
            break
        if residue(x * y) != residue(x) * residue(y):
            fail = "multiplicativity of the residue map failed"
            break
    checks.append(LawCheck("residue_ring_homomorphism", "fail" if fail else "pass", fail))

    fail = None
    for i in range(len(residues)):
        for j in range(i + 1, len(residues)):
            ci, cj = residues[i], residues[j]
            if ci != cj:
                rank = samples[0].rank
                if _mu_equivalent(
                    HahnElem.constant(ci, rank), HahnElem.constant(cj, rank)
                ):
                    fail = "distinct constants are mu-equivalent"
    checks.append(LawCheck("distinct_constants_separated", "fail" if fail else "pass", fail))

    if candidate is not None:
        fail = None
        for i in range(len(candidate)):
            for j in range(i + 1, len(candidate)):
                if _mu_equivalent(candidate[i], candidate[j]):
                    fail = (
                        f"candidate members {i} and {j} lie in one "
                        "mu-equivalence class"
                    )
                    break
            if fail:
                break
        checks.append(
            LawCheck("candidate_class_uniqueness", "fail" if fail else "pass", fail)
        )
    return checks
