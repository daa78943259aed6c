import json
import random
from fractions import Fraction

import pytest
from click.testing import CliRunner

from hahnfield import rand
from hahnfield.cli import main, parse_descriptor
from hahnfield.errors import ExprSyntaxError, UnsupportedExponent
from hahnfield.grammar import format_elem, parse_expr
from hahnfield.hahn import HahnElem

t = HahnElem.var(0, 1)
one = HahnElem.one(1)


def test_parse_basic_forms():
    x = parse_expr("1/(1-t1)")
    assert (x.num - one.num).is_zero if hasattr(x.num, "is_zero") else True
    assert (x * (one - t) - one).is_zero
    y = parse_expr("3*t1^(1/2)")
    assert (y - t ** Fraction(1, 2) * 3).is_zero
    assert (parse_expr("t") - t).is_zero


def test_parse_alg_literals():
    x = parse_expr("sqrt(2)")
    assert (x * x - 2).is_zero
    y = parse_expr("alg(x^2 - 2, 1, 2)")
    assert (x - y).is_zero


def test_parse_errors():
    with pytest.raises(UnsupportedExponent):
        parse_expr("t1^t1")
    with pytest.raises(ExprSyntaxError):
        parse_expr("1 + * 2")
    with pytest.raises(ExprSyntaxError):
        parse_expr("sqrt(2)", coeff_field="rat")


def test_round_trip_random_elements():
    rng = random.Random(11)
    for _ in range(300):
        x = rand.rand_elem(rng, 1, "alg", allow_zero=True)
        back = parse_expr(format_elem(x))
        assert (back - x).sign() == 0


def test_round_trip_rank2():
    rng = random.Random(12)
    for _ in range(30):
        x = rand.rand_elem(rng, 2, "alg", allow_zero=True)
        back = parse_expr(format_elem(x), rank=2)
        assert (back - x).sign() == 0


def test_descriptor_parsing():
    d = parse_descriptor("scale:2,1/3")
    assert d.kind == "exponent_scaling"
    assert d.scaling == (Fraction(2), Fraction(1, 3))
    d = parse_descriptor("moebius:1,1,1;2,0,1")
    assert d.kind == "moebius" and len(d.moebius) == 2


def run_cli(*args):
    return CliRunner().invoke(main, list(args), standalone_mode=False)


def test_cli_eval_and_floor():
    res = run_cli("eval", "1/(1-t1)")
    assert res.exit_code in (0, None) and "1 - t1" in res.output
    res = run_cli("floor", "t1^(-1) + 1/2")
    assert "floor = t1^(-1)" in res.output
    assert "remainder = 1/2" in res.output


def test_cli_cmp_and_val():
    assert "=" in run_cli("cmp", "sqrt(2)*sqrt(2)", "2").output
    assert "1/2" in run_cli("val", "3*t1^(1/2)").output
    assert "INF" in run_cli("val", "0").output


def test_cli_expand_json():
    res = run_cli("expand", "1/(1-t1)", "--order", "3", "--json")
    payload = json.loads(res.output)
    assert payload["exact"] is False
    assert "O(" in payload["expansion"]


def test_cli_vgs_build(tmp_path):
    f = tmp_path / "enum.txt"
    f.write_text("# enumeration\n1\n5\nt1\nt1^(1/2)\n")
    res = run_cli("vgs-build", str(f))
    assert res.output.strip() == "t1"


def test_cli_auto_and_demo():
    res = run_cli("auto", "--desc", "moebius:1,1,1", "--apply", "t1^(-1)")
    assert "t1^(-1) + 1" in res.output
    res = run_cli("demo", "ip-escape")
    assert "escape" in res.output
    assert "1/2*t1^(-1)" in res.output


def test_cli_typecmp():
    res = run_cli(
        "typecmp", "t1^(-1)", "t1^(-2)",
        "--degree", "1", "--height", "1", "--gens", "t1",
    )
    assert "DISTINGUISHED" in res.output
    res = run_cli("typecmp", "t1^(-1)", "t1^(-2)", "--degree", "1", "--height", "5")
    assert "EQUAL" in res.output


def test_cli_verify_single_suite(tmp_path):
    out = tmp_path / "report.jsonl"
    res = run_cli(
        "verify", "ip-escape", "--seed", "3",
        "--out", str(out), "--figures",
    )
    assert "ip-escape: 2 passed, 0 failed" in res.output
    lines = out.read_text().strip().splitlines()
    assert all(json.loads(line) for line in lines)
    assert (tmp_path / "report.jsonl.png").exists()


def test_cli_verify_deterministic():
    a = run_cli("verify", "ip-escape", "--seed", "5", "--json").output
    b = run_cli("verify", "ip-escape", "--seed", "5", "--json").output
    assert a == b
