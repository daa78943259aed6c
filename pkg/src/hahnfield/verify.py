"""Seeded property suites behind the `verify` command.

Each suite draws its inputs from random.Random(seed), so a report is a
pure function of (suite, seed). Reports serialize to JSON lines: one line
per case plus a trailing summary line.
"""

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import cuts, polyq, rand, sections
from .errors import DegenerateAtRoot
from .hahn import HahnElem, decompose, ev_zero, expand, sturm_count
from .integer_part import floor as ip_floor
from .integer_part import floor_via_dense, is_member
from .realalg import RealAlgNum, sqrt


@dataclass
class Report:
    suite: str
    seed: int
    cases: list = field(default_factory=list)

    def add(self, label, got, ok, expected=None):
        case = {"input": label, "got": got, "status": "pass" if ok else "fail"}
        if expected is not None:
            case["expected"] = expected
        self.cases.append(case)

    @property
    def summary(self):
        n_pass = sum(1 for c in self.cases if c["status"] == "pass")
        return {"pass": n_pass, "fail": len(self.cases) - n_pass}

    @property
    def ok(self):
        return self.summary["fail"] == 0

    def to_lines(self):
        lines = []
        for case in self.cases:
            lines.append(
                json.dumps({"suite": self.suite, **case}, sort_keys=True)
            )
        lines.append(
            json.dumps(
                {"suite": self.suite, "seed": self.seed, "summary": self.summary},
                sort_keys=True,
            )
        )
        return lines


# ----------------------------------------------------------------------
# individual suites


def suite_floor(seed, n=500):
    rep = Report("floor", seed)
    rng = random.Random(seed)
    for _ in range(n):
        x = rand.rand_elem(rng, 1, "alg")
        f = ip_floor(x)
        ok = (
            is_member(f.floor)
            and f.remainder.sign() >= 0
            and (f.remainder - 1).sign() < 0
        )
        rep.add(str(x), f"floor={f.floor}", ok, "floor in I, remainder in [0,1)")
    return rep


def suite_transfer(seed, n=200):
    rep = Report("transfer", seed)
    rng = random.Random(seed)
    for _ in range(n):
        x = rand.rand_elem(rng, 1, "alg")
        m = 1
        for p in (x.num, x.den):
            for expo, _ in p.terms:
                for q in expo:
                    m = math.lcm(m, q.denominator)
        direct = ip_floor(x).floor
        dense = floor_via_dense(x, m)
        ok = (dense.floor - direct).sign() == 0
        rep.add(f"{x} (m={m})", str(dense.floor), ok, str(direct))
    return rep


def suite_vgs(seed, n=50):
    rep = Report("vgs", seed)
    rng = random.Random(seed)
    for i in range(n):
        rk = 1 + i % 3
        size = rng.randint(3, 50)
        enum = [rand.rand_elem(rng, rk, "alg", allow_zero=True) for _ in range(size)]
        section = sections.build_section(enum)

        def rand_fp():
            return sections.FormalProduct(
                section,
                tuple(
                    Fraction(rng.randint(-2, 2)) for _ in section.values
                ),
            )

        pairs = (
            [(rand_fp(), rand_fp()) for _ in range(10)]
            if section.generators
            else []
        )
        checks = sections.verify_section(section, pairs, rank=rk)
        ok = all(c.ok for c in checks)
        detail = ";".join(f"{c.law}={c.status}" for c in checks)
        for x in enum:
            if x.is_zero or not ok:
                continue
            r = sections.representative(section, x)
            if r.value() != x.valuation():
                ok = False
                detail = f"representative of {x} not equivalent"
        rep.add(f"rank {rk} size {size}", detail, ok, "all laws pass")
    return rep


def suite_prop41(seed, n=100):
    rep = Report("prop41", seed)
    rng = random.Random(seed)
    t = HahnElem.var(0, 1)
    enum = [HahnElem.one(1), t] + [
        rand.rand_elem(rng, 1, "alg", allow_zero=True) for _ in range(10)
    ]
    section = sections.build_section(enum)
    samples = []
    for k in range(-3, 4):
        fp = sections.FormalProduct(
            section, (Fraction(k),) + (Fraction(0),) * (len(section.values) - 1)
        )
        if fp.materializable:
            samples.append(fp)
    for _ in range(n):
        x = rand.rand_positive(rng, 1, "alg")
        y = rng.choice(samples)
        try:
            above, eps = sections.prop41_witnesses(section, x, y, samples)
            got = f"above={above.exponents}, eps={eps}"
            ok = True
        except AssertionError as exc:
            got, ok = str(exc), False
        rep.add(str(x), got, ok, "exceeding element and isolating eps")
    return rep


def _arch_oracle(x, y, cap):
    """Definitional witness search: least n with n|x| > |y| and n|y| > |x|."""
    ax, ay = abs(x), abs(y)
    for n in range(1, cap + 1):
        if (ax * n - ay).sign() > 0 and (ay * n - ax).sign() > 0:
            return n
    return None


def suite_arch(seed, n=500):
    rep = Report("arch", seed)
    rng = random.Random(seed)
    for i in range(n):
        x = rand.rand_positive(rng, 1, "alg")
        if i % 2:
            y = abs(x * rand.rand_fraction(rng, allow_zero=False)) + (i % 5)
        else:
            y = rand.rand_positive(rng, 1, "alg")
        eq, wit = sections.arch_equiv(x, y)
        if eq:
            found = _arch_oracle(x, y, wit + 1)
            ok = found == wit
            rep.add(f"({x}, {y})", f"equiv, n={wit}", ok, f"minimal n={found}")
        else:
            found = _arch_oracle(x, y, 20)
            ok = found is None and x.valuation() != y.valuation()
            rep.add(f"({x}, {y})", "not equivalent", ok, "no witness up to 20")
    return rep


def suite_rfs(seed, n=300):
    rep = Report("rfs", seed)
    rng = random.Random(seed)
    samples = [rand.rand_finite(rng, 1, "alg") for _ in range(n)]
    pairs = [(rng.choice(samples), rng.choice(samples)) for _ in range(40)]
    for check in sections.verify_residue_section(samples, pair_samples=pairs):
        rep.add(check.law, check.status, check.ok, "pass")
    one = HahnElem.one(1)
    doctored = [one, one + HahnElem.var(0, 1)]
    checks = sections.verify_residue_section(
        samples[:20], candidate=doctored, pair_samples=()
    )
    uniq = [c for c in checks if c.law == "candidate_class_uniqueness"]
    ok = bool(uniq) and not uniq[0].ok
    rep.add("doctored {1, 1+t}", uniq[0].status if uniq else "missing", ok, "fail")
    return rep


def suite_ip_escape(seed):
    rep = Report("ip-escape", seed)
    probes = cuts.default_escape_probes(1)
    moeb = cuts.moebius_descriptor((1, 1, 1))
    out = cuts.escape_demo(moeb, probes)
    ok = (
        isinstance(out, cuts.EscapeWitness)
        and is_member(out.probe)
        and not is_member(out.image)
        and (out.probe - HahnElem.var(0, 1) ** -1 * Fraction(1, 2)).sign() == 0
    )
    rep.add("moebius (1,1,1)", f"witness {out.probe} -> {out.image}", ok,
            "escape witness (1/2)t^-1")
    out = cuts.escape_demo(cuts.scaling_descriptor(2), probes)
    ok = isinstance(out, cuts.InvarianceReport) and out.probes_checked == len(probes)
    rep.add("scaling q=2", f"invariant on {len(probes)} probes", ok, "invariance")
    return rep


def _rand_descriptor(rng, kind):
    if kind == "exponent_scaling":
        return cuts.scaling_descriptor(
            Fraction(rng.randint(1, 5), rng.randint(1, 5))
        )
    a = Fraction(rng.randint(1, 4), rng.randint(1, 3))
    d = Fraction(rng.randint(1, 4), rng.randint(1, 3))
    c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return cuts.moebius_descriptor((a, c, d))


def _rand_for(rng, kind):
    # rational coefficients keep the law arithmetic exact and cheap;
    # constant fixing covers the algebraic layer separately
    if kind == "exponent_scaling":
        return rand.rand_elem(rng, 1, "rat")
    # moebius needs integral exponents
    num = rand._rand_genpoly(
        rng, 1, "rat", rng.randint(1, 2),
        lambda r, k: rand.rand_exponent(r, k, denom_choices=(1,)),
    )
    return HahnElem.make(num, rand._rand_den(rng, 1))


def suite_auto_laws(seed, n_pairs=200, n_inverse=100):
    rep = Report("auto-laws", seed)
    rng = random.Random(seed)
    for kind in ("exponent_scaling", "moebius"):
        bad = None
        for _ in range(n_pairs):
            phi = _rand_descriptor(rng, kind)
            x, y = _rand_for(rng, kind), _rand_for(rng, kind)
            fx, fy = cuts.apply_automorphism(phi, x), cuts.apply_automorphism(phi, y)
            if (cuts.apply_automorphism(phi, x + y) - (fx + fy)).sign() != 0:
                bad = f"additivity at ({x}, {y})"
            elif (cuts.apply_automorphism(phi, x * y) - fx * fy).sign() != 0:
                bad = f"multiplicativity at ({x}, {y})"
            elif (x - y).sign() != (fx - fy).sign():
                bad = f"order at ({x}, {y})"
            else:
                c = HahnElem.constant(rand.rand_constant(rng, "alg"), 1)
                if (cuts.apply_automorphism(phi, c) - c).sign() != 0:
                    bad = f"constant {c} moved"
            if bad:
                break
        rep.add(f"{kind} laws ({n_pairs} pairs)", bad or "all laws hold",
                bad is None, "additive, multiplicative, monotone, fixes constants")
    bad = None
    for _ in range(n_inverse):
        phi = _rand_descriptor(rng, "moebius")
        x = _rand_for(rng, "moebius")
        y = cuts.apply_automorphism(phi.inverse(), cuts.apply_automorphism(phi, x))
        if (y - x).sign() != 0:
            bad = f"roundtrip moved {x}"
            break
    rep.add(f"moebius inverse ({n_inverse} elements)", bad or "identity",
            bad is None, "phi^-1 . phi = id")
    return rep


def dyadic_step(eps):
    """A sampling step no larger than eps whose constant part is rational.

    Offsets step*f with |f| < 1 then stay inside (x-eps, x+eps) while
    keeping the sample's residue arithmetic cheap.
    """
    c = decompose(eps)[1]
    if c.sign() <= 0 or c.is_rational:
        return eps
    width = Fraction(1, 1024)
    lo, _ = c.refined(width).interval()
    while lo <= 0:
        width /= 16
        lo, _ = c.refined(width).interval()
    return HahnElem.constant(lo, eps.rank) / 2


def _epsilon_instance(rng, i):
    t = HahnElem.var(0, 1)
    if i % 10 == 9:
        spec = cuts.PolyFamilySpec(1, (t,), 1)
        x = rand.rand_elem(rng, 1, "rat")
        return spec, x
    if i % 10 in (7, 8):
        spec = cuts.PolyFamilySpec(rng.randint(1, 2), (), rng.randint(1, 2))
        c = rand.rand_constant(rng, "alg")
        x = HahnElem.constant(c, 1)
        if rng.random() < 0.5:
            x = x + t * rand.rand_fraction(rng, allow_zero=False)
        return spec, x
    spec = cuts.PolyFamilySpec(rng.randint(1, 3), (), rng.randint(1, 5))
    x = HahnElem.constant(rand.rand_fraction(rng), 1)
    if i % 10 == 6:
        x = x + HahnElem.var(0, 1) ** -1 * rng.randint(1, 3)
    return spec, x


def suite_epsilon(seed, n=50, n_dyadic=50):
    rep = Report("epsilon", seed)
    rng = random.Random(seed)
    for i in range(n):
        spec, x = _epsilon_instance(rng, i)
        eps = None
        for attempt in range(12):
            try:
                eps = cuts.eps_witness(spec, x)
                break
            except DegenerateAtRoot:
                x = x + Fraction(1, 7 + attempt)
        if eps is None:
            rep.add(str(x), "always degenerate", False, "nondegenerate point")
            continue
        step = dyadic_step(eps)
        bad = None
        for k in range(n_dyadic):
            f = Fraction(2 * k - (n_dyadic - 1), 2 * n_dyadic)
            y = x + step * f
            if not cuts.bounded_type_eq(spec, x, y).equal:
                bad = f"type changed at offset {f}*eps"
                break
        label = f"d={spec.degree_bound} h={spec.height_bound} x={x}"
        rep.add(label, bad or f"eps={eps}", bad is None,
                f"type stable on {n_dyadic} dyadic samples")
    return rep


def _iv_op(op, a, b):
    ax, ay = a
    bx, by = b
    if op == "+":
        return (ax + bx, ay + by)
    if op == "-":
        return (ax - by, ay - bx)
    prods = (ax * bx, ax * by, ay * bx, ay * by)
    return (min(prods), max(prods))


def suite_oracles(seed):
    rep = Report("oracles", seed)
    rng = random.Random(seed)
    width = Fraction(1, 2**16)
    bad = None
    for i in range(1000):
        a = rand.rand_constant(rng, "alg")
        b = rand.rand_constant(rng, "alg")
        op = "+-*"[i % 3]
        c = a + b if op == "+" else a - b if op == "-" else a * b
        env = _iv_op(op, a.refined(width).interval(), b.refined(width).interval())
        lo, hi = c.refined(width).interval()
        if hi < env[0] or lo > env[1]:
            bad = f"{a} {op} {b}"
            break
    rep.add("realalg arithmetic vs interval oracle (1000)", bad or "consistent",
            bad is None, "result interval meets operand envelope")

    bad = None
    for _ in range(100):
        n_roots = rng.randint(1, 4)
        roots = sorted(
            Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(n_roots)
        )
        p = (Fraction(1),)
        for r in roots:
            p = polyq.mul(p, (-r, Fraction(1)))
        if len(p) <= 4 and rng.random() < 0.4:
            p = polyq.mul(p, (Fraction(1), Fraction(0), Fraction(1)))
        lo = Fraction(rng.randint(-10, 0), rng.randint(1, 3))
        hi = lo + Fraction(rng.randint(1, 20), rng.randint(1, 3))
        truth = sum(1 for r in set(roots) if lo < r <= hi)
        got = polyq.count_roots(p, lo, hi)
        k_got = sturm_count(
            [HahnElem.constant(c, 1) for c in p],
            HahnElem.constant(lo, 1),
            HahnElem.constant(hi, 1),
        )
        if got != truth or k_got != truth:
            bad = f"roots {roots} on ({lo}, {hi}]: got {got}/{k_got}, truth {truth}"
            break
    rep.add("sturm count vs constructed roots (100)", bad or "all agree",
            bad is None, "exact agreement")

    bad = None
    for i in range(200):
        # low bounds for algebraic coefficients keep the residual exact
        # arithmetic shallow
        if i % 4 == 0:
            x = rand.rand_elem(rng, 1, "alg")
            bound = Fraction(rng.randint(1, 2))
        else:
            x = rand.rand_elem(rng, 1, "rat")
            bound = Fraction(rng.randint(1, 6))
        tr = expand(x, bound)
        delta = x - tr.as_elem()
        if tr.exact:
            ok = delta.is_zero
        else:
            ok = delta.is_zero or delta.valuation()[0] >= bound
        if not ok:
            bad = f"expand({x}, {bound})"
            break
    rep.add("expansion re-multiplication (200)", bad or "consistent",
            bad is None, "residual valuation at or past the bound")
    return rep


SUITES = {
    "floor": suite_floor,
    "transfer": suite_transfer,
    "vgs": suite_vgs,
    "prop41": suite_prop41,
    "arch": suite_arch,
    "rfs": suite_rfs,
    "ip-escape": suite_ip_escape,
    "auto-laws": suite_auto_laws,
    "epsilon": suite_epsilon,
    "oracles": suite_oracles,
}


def run_suite(name, seed):
    return SUITES[name](seed)


def run_all(seed, names=None):
    return [run_suite(name, seed) for name in (names or SUITES)]
