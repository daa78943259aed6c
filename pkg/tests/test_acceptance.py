"""Acceptance gate: one seeded verification suite per criterion.

Each test prints a single ``criterion N: PASS``/``FAIL`` line directly to
the terminal and fails if its suite reported any failing case.  Suites are
run once and cached so the timing budget covers a single full pass.
"""

import time

from hahnfield import verify

SEED = 7

_reports = {}
_durations = {}


def _suite(name):
    if name not in _reports:
        start = time.perf_counter()
        _reports[name] = verify.run_suite(name, SEED)
        _durations[name] = time.perf_counter() - start
    return _reports[name]


def _gate(capsys, n, ok):
    with capsys.disabled():
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}", flush=True)
    assert ok


def test_criterion_1_floor_contract(capsys):
    rep = _suite("floor")
    ok = rep.ok and len(rep.cases) >= 500 and _durations["floor"] < 60
    _gate(capsys, 1, ok)


def test_criterion_2_dense_transfer(capsys):
    rep = _suite("transfer")
    _gate(capsys, 2, rep.ok and len(rep.cases) >= 200)


def test_criterion_3_value_group_sections(capsys):
    rep = _suite("vgs")
    _gate(capsys, 3, rep.ok and len(rep.cases) >= 50)


def test_criterion_4_half_witness_isolation(capsys):
    rep = _suite("prop41")
    _gate(capsys, 4, rep.ok and len(rep.cases) >= 100)


def test_criterion_5_archimedean_agreement(capsys):
    rep = _suite("arch")
    _gate(capsys, 5, rep.ok and len(rep.cases) >= 500)


def test_criterion_6_residue_section(capsys):
    rep = _suite("rfs")
    _gate(capsys, 6, rep.ok)


def test_criterion_7_escape_demo(capsys):
    rep = _suite("ip-escape")
    _gate(capsys, 7, rep.ok)


def test_criterion_8_automorphism_laws(capsys):
    rep = _suite("auto-laws")
    _gate(capsys, 8, rep.ok)


def test_criterion_9_epsilon_stability(capsys):
    rep = _suite("epsilon")
    _gate(capsys, 9, rep.ok and len(rep.cases) >= 50)


def test_criterion_10_oracle_cross_checks(capsys):
    rep = _suite("oracles")
    for name in verify.SUITES:
        _suite(name)
    total = sum(_durations.values())
    _gate(capsys, 10, rep.ok and total < 300)
