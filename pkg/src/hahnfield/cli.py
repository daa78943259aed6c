"""Command-line entry point: expression evaluation, batch checks, a small
REPL, and the verification-suite driver."""

import json
import random
import shlex
import sys
from fractions import Fraction

import click

from . import cuts, grammar, integer_part, rand, sections, verify
from .errors import ExprSyntaxError, HahnfieldError
from .hahn import HahnElem, expand, nth_root_trunc, sturm_count
from .realalg import RealAlgNum


def _parse(text, rank, coeff):
    try:
        return grammar.parse_expr(text, rank=rank, coeff_field=coeff)
    except ExprSyntaxError as exc:
        raise click.UsageError(f"in {text!r}: {exc}")


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"not a rational: {text!r}")


def parse_descriptor(text):
    """`scale:q1,...,qn` or `moebius:a,c,d[;a,c,d...]`."""
    kind, sep, body = text.partition(":")
    if not sep:
        raise click.UsageError(f"bad descriptor {text!r}")
    if kind == "scale":
        return cuts.scaling_descriptor(*[_rational(q) for q in body.split(",")])
    if kind == "moebius":
        triples = []
        for part in body.split(";"):
            vals = [_rational(v) for v in part.split(",")]
            if len(vals) != 3:
                raise click.UsageError(f"moebius triple needs a,c,d: {part!r}")
            triples.append(tuple(vals))
        return cuts.moebius_descriptor(*triples)
    raise click.UsageError(f"unknown descriptor kind {kind!r}")


def read_batch(path, rank, coeff):
    """One expression per line; blank lines and `#` comments skipped."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(_parse(line, rank, coeff))
    return out


def _emit(payload, as_json):
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for key, value in payload.items():
            click.echo(f"{key} = {value}")


def _check_exit(checks, as_json):
    if as_json:
        for c in checks:
            click.echo(json.dumps(c.to_dict(), sort_keys=True))
    else:
        for c in checks:
            line = f"{c.law}: {c.status}"
            if c.counterexample:
                line += f" ({c.counterexample})"
            click.echo(line)
    if not all(c.ok for c in checks):
        sys.exit(1)


def common_options(f):
    f = click.option("--rank", default=1, show_default=True, help="number of variables t1..tn")(f)
    f = click.option("--coeff", default="alg", type=click.Choice(["rat", "alg"]), show_default=True)(f)
    f = click.option("--json", "as_json", is_flag=True, help="JSON output")(f)
    return f


@click.group(invoke_without_command=True)
@click.pass_context
def main(ctx):
    """Exact computations in a Hahn series field over the real algebraics."""
    if ctx.invoked_subcommand is None:
        repl()


@main.command("eval")
@click.argument("expr")
@common_options
def eval_cmd(expr, rank, coeff, as_json):
    x = _parse(expr, rank, coeff)
    _emit({"value": str(x)}, as_json)


@main.command("cmp")
@click.argument("left")
@click.argument("right")
@common_options
def cmp_cmd(left, right, rank, coeff, as_json):
    a = _parse(left, rank, coeff)
    b = _parse(right, rank, coeff)
    s = (a - b).sign()
    _emit({"relation": {-1: "<", 0: "=", 1: ">"}[s]}, as_json)


@main.command("floor")
@click.argument("expr")
@common_options
def floor_cmd(expr, rank, coeff, as_json):
    f = integer_part.floor(_parse(expr, rank, coeff))
    _emit({"floor": str(f.floor), "remainder": str(f.remainder)}, as_json)


@main.command("floor-dense")
@click.argument("expr")
@click.option("--m", default=1, show_default=True, help="ramification index")
@common_options
def floor_dense_cmd(expr, m, rank, coeff, as_json):
    f = integer_part.floor_via_dense(_parse(expr, rank, coeff), m)
    _emit({"floor": str(f.floor), "remainder": str(f.remainder)}, as_json)


@main.command("val")
@click.argument("expr")
@common_options
def val_cmd(expr, rank, coeff, as_json):
    x = _parse(expr, rank, coeff)
    if x.is_zero:
        _emit({"valuation": "INF"}, as_json)
    else:
        v = ",".join(str(q) for q in x.valuation())
        _emit({"valuation": v}, as_json)


@main.command("expand")
@click.argument("expr")
@click.option("--order", default="10", show_default=True, help="exponent bound")
@common_options
def expand_cmd(expr, order, rank, coeff, as_json):
    tr = expand(_parse(expr, rank, coeff), _rational(order))
    _emit({"expansion": grammar.format_expansion(tr), "exact": tr.exact}, as_json)


@main.command("root")
@click.argument("expr")
@click.argument("n", type=int)
@click.option("--order", default="10", show_default=True, help="exponent bound")
@common_options
def root_cmd(expr, n, order, rank, coeff, as_json):
    tr = nth_root_trunc(_parse(expr, rank, coeff), n, _rational(order))
    _emit({"root": grammar.format_expansion(tr), "exact": tr.exact}, as_json)


@main.command("sturm")
@click.argument("coeffs")
@click.option("--lo", default="-inf", show_default=True)
@click.option("--hi", default="inf", show_default=True)
@common_options
def sturm_cmd(coeffs, lo, hi, rank, coeff, as_json):
    """Root count of a polynomial in (lo, hi]; COEFFS is `c0; c1; ...`
    with the constant term first."""
    p = [_parse(c, rank, coeff) for c in coeffs.split(";")]
    lo_e = None if lo in ("-inf", "-INF") else _parse(lo, rank, coeff)
    hi_e = None if hi in ("inf", "+inf", "INF") else _parse(hi, rank, coeff)
    _emit({"roots": sturm_count(p, lo_e, hi_e)}, as_json)


@main.command("vgs-build")
@click.argument("path", type=click.Path(exists=True))
@common_options
def vgs_build_cmd(path, rank, coeff, as_json):
    section = sections.build_section(read_batch(path, rank, coeff))
    if as_json:
        click.echo(json.dumps({"generators": [str(g) for g in section.generators]}))
    else:
        for g in section.generators:
            click.echo(str(g))


@main.command("vgs-check")
@click.argument("path", type=click.Path(exists=True))
@click.option("--seed", default=0, show_default=True)
@common_options
def vgs_check_cmd(path, seed, rank, coeff, as_json):
    section = sections.build_section(read_batch(path, rank, coeff))
    rng = random.Random(seed)
    pairs = [
        (
            sections.FormalProduct(
                section, tuple(Fraction(rng.randint(-2, 2)) for _ in section.values)
            ),
            sections.FormalProduct(
                section, tuple(Fraction(rng.randint(-2, 2)) for _ in section.values)
            ),
        )
        for _ in range(10)
    ]
    _check_exit(sections.verify_section(section, pairs, rank=rank), as_json)


@main.command("rfs-check")
@click.option("--file", "path", type=click.Path(exists=True), help="sample batch file")
@click.option("--n", default=50, show_default=True, help="seeded sample count")
@click.option("--seed", default=0, show_default=True)
@common_options
def rfs_check_cmd(path, n, seed, rank, coeff, as_json):
    if path:
        samples = read_batch(path, rank, coeff)
    else:
        rng = random.Random(seed)
        samples = [rand.rand_finite(rng, rank, coeff) for _ in range(n)]
    pairs = list(zip(samples, samples[1:]))[:20]
    _check_exit(sections.verify_residue_section(samples, pair_samples=pairs), as_json)


@main.command("ipcheck")
@click.option("--file", "path", type=click.Path(exists=True), help="sample batch file")
@click.option("--n", default=50, show_default=True, help="seeded sample count")
@click.option("--seed", default=0, show_default=True)
@common_options
def ipcheck_cmd(path, n, seed, rank, coeff, as_json):
    rng = random.Random(seed)
    if path:
        samples = read_batch(path, rank, coeff)
    else:
        samples = [rand.rand_elem(rng, rank, coeff) for _ in range(n)]
    ring = [rand.rand_integer_part_member(rng, rank) for _ in range(n)]
    _check_exit(integer_part.verify_integer_part(samples, ring), as_json)


def _family_spec(degree, height, gens, rank, coeff):
    parsed = tuple(
        _parse(g, rank, coeff) for g in gens.split(";") if g.strip()
    ) if gens else ()
    return cuts.PolyFamilySpec(degree, parsed, height)


@main.command("typecmp")
@click.argument("left")
@click.argument("right")
@click.option("--degree", default=2, show_default=True)
@click.option("--height", default=2, show_default=True)
@click.option("--gens", default="", help="coefficient generators, `;`-separated")
@common_options
def typecmp_cmd(left, right, degree, height, gens, rank, coeff, as_json):
    spec = _family_spec(degree, height, gens, rank, coeff)
    res = cuts.bounded_type_eq(
        spec, _parse(left, rank, coeff), _parse(right, rank, coeff)
    )
    if res.equal:
        _emit({"result": "EQUAL"}, as_json)
    else:
        _emit(
            {
                "result": "DISTINGUISHED",
                "distinguisher": res.distinguisher,
                "sign_left": res.sign_x,
                "sign_right": res.sign_y,
            },
            as_json,
        )


@main.command("epsilon")
@click.argument("expr")
@click.option("--degree", default=2, show_default=True)
@click.option("--height", default=2, show_default=True)
@click.option("--gens", default="", help="coefficient generators, `;`-separated")
@common_options
def epsilon_cmd(expr, degree, height, gens, rank, coeff, as_json):
    spec = _family_spec(degree, height, gens, rank, coeff)
    eps = cuts.eps_witness(spec, _parse(expr, rank, coeff))
    _emit({"eps": str(eps)}, as_json)


@main.command("auto")
@click.option("--desc", required=True, help="scale:... or moebius:...")
@click.option("--apply", "expr", required=True, help="element expression")
@common_options
def auto_cmd(desc, expr, rank, coeff, as_json):
    phi = parse_descriptor(desc)
    y = cuts.apply_automorphism(phi, _parse(expr, rank, coeff))
    _emit({"image": str(y)}, as_json)


@main.command("demo")
@click.argument("name", type=click.Choice(["ip-escape"]))
@click.option("--desc", default="moebius:1,1,1", show_default=True)
@common_options
def demo_cmd(name, desc, rank, coeff, as_json):
    phi = parse_descriptor(desc)
    out = cuts.escape_demo(phi, cuts.default_escape_probes(rank))
    if isinstance(out, cuts.EscapeWitness):
        _emit(
            {
                "outcome": "escape",
                "probe": str(out.probe),
                "image": str(out.image),
                "remainder": str(out.remainder),
            },
            as_json,
        )
    else:
        _emit(
            {"outcome": "invariant", "probes_checked": out.probes_checked},
            as_json,
        )


@main.command("verify")
@click.argument("suites", nargs=-1)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", type=click.Path(), help="write the JSON-lines report here")
@click.option("--figures", is_flag=True, help="render a summary chart next to the report")
@common_options
def verify_cmd(suites, seed, out, figures, rank, coeff, as_json):
    """Run verification suites (default: all). Known suites:

    floor transfer vgs prop41 arch rfs ip-escape auto-laws epsilon oracles
    """
    names = list(suites) or list(verify.SUITES)
    for name in names:
        if name == "all":
            names = list(verify.SUITES)
            break
        if name not in verify.SUITES:
            raise click.UsageError(f"unknown suite {name!r}")
    reports = verify.run_all(seed, names)
    lines = [line for rep in reports for line in rep.to_lines()]
    if out:
        with open(out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    if out or not as_json:
        for rep in reports:
            s = rep.summary
            click.echo(f"{rep.suite}: {s['pass']} passed, {s['fail']} failed")
    else:
        for line in lines:
            click.echo(line)
    if figures:
        from .figures import render_report_figure

        target = (out or "verify_report") + ".png"
        render_report_figure(reports, target)
        click.echo(f"figure written to {target}")
    if not all(rep.ok for rep in reports):
        sys.exit(1)


def repl():
    """Line-oriented REPL over the same verbs."""
    click.echo("hahnfield repl; `quit` to exit, `help` for commands")
    while True:
        try:
            line = input("> ").strip()
        except EOFError:
            break
        if not line:
            continue
        if line in ("quit", "exit"):
            break
        if line == "help":
            click.echo(" ".join(sorted(main.commands)))
            continue
        try:
            main(args=shlex.split(line), standalone_mode=False)
        except SystemExit:
            pass
        except click.ClickException as exc:
            click.echo(f"error: {exc.format_message()}")
        except HahnfieldError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}")


def entry():
    try:
        main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        sys.exit(2)
    except click.ClickException as exc:
        exc.show()
        sys.exit(2)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except HahnfieldError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    entry()
