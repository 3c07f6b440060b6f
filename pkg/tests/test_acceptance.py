"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines; the same checks back the `nhmorse verify` CLI subcommand.
"""

import time

import pytest

from nhmorse import checks


def _run(name, runtime_limit=None):
    start = time.monotonic()
    rep = checks.CHECKS[name]()
    elapsed = time.monotonic() - start
    print(rep.line())
    if runtime_limit is not None:
        assert elapsed < runtime_limit, f"{name} took {elapsed:.1f}s (limit {runtime_limit}s)"
    return rep


def test_criterion_01_kummer_oracle():
    rep = _run("kummer-oracle", runtime_limit=5.0)
    assert rep.passed and rep.tolerance == 1e-10


def test_criterion_02_residual_derived():
    rep = _run("residual-derived", runtime_limit=5.0)
    assert rep.passed and rep.tolerance == 1e-8


def test_criterion_03_residual_printed_report():
    # report-only: the printed index map is measured, not required to pass;
    # large residuals here are the documented finding, not a failure
    rep = _run("residual-printed-report")
    assert rep.passed
    assert rep.max_rel_residual > 0.0
    assert "documented finding" in rep.note


def test_criterion_04_integration_cross_check():
    rep = _run("integration-cross-check")
    assert rep.passed and rep.tolerance == 1e-6


def test_criterion_05_intertwining():
    rep = _run("intertwining")
    assert rep.passed and rep.tolerance == 1e-8


def test_criterion_06_riccati_closure():
    rep = _run("riccati-closure")
    assert rep.passed and rep.tolerance == 1e-12


def test_criterion_07_expansion_identity():
    rep = _run("expansion-identity")
    assert rep.passed and rep.tolerance == 1e-12


def test_criterion_08_laguerre_identity():
    rep = _run("laguerre-identity")
    assert rep.passed and rep.tolerance == 1e-10


def test_criterion_09_reality_at_k_zero():
    rep = _run("reality-k0")
    assert rep.passed and rep.tolerance == 1e-12


def test_criterion_10_wronskian():
    rep = _run("wronskian")
    assert rep.passed and rep.tolerance == 1e-8


def test_criterion_11_grid_determinism_and_shape():
    rep = _run("grid-shape")
    assert rep.passed
    assert rep.grid_size == 61 * 41


def test_criterion_12_rk4_order():
    rep = _run("rk4-order")
    assert rep.passed
    # tolerance 0.25 on |ratio/16 - 1| is exactly the window [12, 20]
    assert rep.tolerance == 0.25
