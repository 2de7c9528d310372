"""Acceptance gate: the top-level checks this package must satisfy.

Each test covers one numbered acceptance check, computes its verdict, prints
one ``ACCEPTANCE <nn> <name>: PASS|FAIL`` line, and only then asserts, so a
plain ``pytest -v`` run shows exactly one pass/fail line per check.  Checks
with an explicit time budget measure wall-clock time with ``time.monotonic``
and assert the budget too.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from runyon.exactalg import from_w_basis
from runyon.polys import (
    GPoly,
    carlitz_A,
    g_lagrange,
    g_recurrence,
    riordan_A,
)
from runyon.series import (
    SeriesFraction,
    TruncSeries,
    lagrange_coeff,
    rational_ring,
    series_compose,
    series_inverse,
    series_revert,
    series_sqrt,
    solve_functional,
)
from runyon.verify import VerifyConfig, c_compare, run_suite, verify_kernel


def _stamp(number: int, name: str, ok: bool, elapsed: float | None = None) -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    print(f"ACCEPTANCE {number:02d} {name}: {verdict}{suffix}")


def _random_series(rng, order, unit_constant=False, valuation_one=False):
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order + 1)]
    if unit_constant:
        coeffs[0] = Fraction(rng.choice([1, -1, 2, 3]), rng.randint(1, 3))
    if valuation_one:
        coeffs[0] = Fraction(0)
        coeffs[1] = Fraction(rng.choice([1, -1, 2]), rng.randint(1, 3))
    return TruncSeries(rational_ring, "t", coeffs)


def test_a01_cross_method_identity():
    started = time.monotonic()
    ok = True
    for n in range(13):
        rec = g_recurrence(n)
        lag = g_lagrange(n)
        rio = GPoly(n, tuple(riordan_A(k, n) for k in range(n)))
        same_basis = rec == lag == rio
        same_ratfunc = (
            rec.as_ratfunc() == lag.as_ratfunc() == from_w_basis(list(rio.w_basis))
        )
        ok = ok and same_basis and same_ratfunc
    elapsed = time.monotonic() - started
    within_budget = elapsed <= 60.0
    _stamp(1, "cross-method-identity", ok and within_budget, elapsed)
    assert ok
    assert within_budget


def test_a02_carlitz_equals_riordan():
    ok = all(
        carlitz_A(r, n) == riordan_A(r, n)
        for n in range(2, 13)
        for r in range(1, n)
    )
    _stamp(2, "carlitz-equals-riordan", ok)
    assert ok


def test_a03_kernel_numerator_identity():
    report = verify_kernel(order=30)
    ok = report.passed and report.summary["total"] == 30
    _stamp(3, "kernel-numerator-identity", ok)
    assert ok


def test_a04_reversion_closed_form():
    report = run_suite("reversion", VerifyConfig())
    ok = report.passed and report.config["order"] == 20
    _stamp(4, "reversion-closed-form", ok)
    assert ok


def test_a05_generating_function_match():
    report = run_suite("gf-match", VerifyConfig())
    symbolic = [c for c in report.cases if c.id.startswith("symbolic")]
    points = [c for c in report.cases if c.id.startswith("point")]
    ok = (
        report.passed
        and report.config["symbolic_order"] == 12
        and report.config["numeric_order"] == 40
        and len(symbolic) >= 1
        and len(points) == 20
    )
    _stamp(5, "generating-function-match", ok)
    assert ok


def test_a06_y_chain():
    report = run_suite("y", VerifyConfig())
    ids = [c.id for c in report.cases]
    ok = (
        report.passed
        and report.config["order"] == 12
        and any("fixed-point" in i for i in ids)
        and any("generates-family" in i for i in ids)
        and any("scaling" in i for i in ids)
    )
    _stamp(6, "y-chain", ok)
    assert ok


def test_a07_narayana_catalan():
    report = run_suite("narayana", VerifyConfig())
    ok = report.passed and report.summary["total"] == 40
    _stamp(7, "narayana-catalan", ok)
    assert ok


def test_a08_morrison_at_points():
    report = run_suite("morrison", VerifyConfig())
    hand = [c for c in report.cases if c.id == "hand-n-2"]
    point_count = len({c.id.split("-n-")[0] for c in report.cases})
    ok = (
        report.passed
        and len(hand) == 1
        and hand[0].status == "pass"
        and point_count >= 21
    )
    _stamp(8, "morrison-at-points", ok)
    assert ok


def test_a09_inner_sum_identity():
    report = run_suite("inner-sum", VerifyConfig())
    ok = report.passed and report.summary["total"] == 210
    _stamp(9, "inner-sum-identity", ok)
    assert ok


def test_a10_c_translation_report():
    started = time.monotonic()
    first = c_compare(8, 8)
    elapsed = time.monotonic() - started
    second = c_compare(8, 8)
    surfaced = [
        c for c in first.cases if c.id == "r-2-n-3" and c.status == "mismatch"
    ]
    ok = (
        first.passed
        and first.summary["total"] == 64
        and first.to_json_dict() == second.to_json_dict()
        and len(surfaced) == 1
        and elapsed <= 10.0
    )
    _stamp(10, "c-translation-report", ok, elapsed)
    assert ok


def test_a11_series_property_suite():
    started = time.monotonic()
    ok = True

    rng = random.Random(111)
    one = TruncSeries.one(rational_ring, "t", 12)
    for _ in range(50):
        s = _random_series(rng, 12, unit_constant=True)
        ok = ok and s * series_inverse(s) == one

    rng = random.Random(222)
    for _ in range(50):
        r = _random_series(rng, 10, unit_constant=True)
        s = r * r
        root = series_sqrt(s, r.coefficient(0))
        ok = ok and root * root == s

    rng = random.Random(333)
    ident = TruncSeries.identity(rational_ring, "t", 10)
    for _ in range(50):
        f1 = _random_series(rng, 10)
        f2 = _random_series(rng, 10)
        inner = _random_series(rng, 10, valuation_one=True)
        ok = ok and series_compose(f1, ident) == f1
        lhs = series_compose(f1 * f2, inner)
        rhs = series_compose(f1, inner) * series_compose(f2, inner)
        ok = ok and lhs == rhs

    rng = random.Random(444)
    for _ in range(50):
        s = _random_series(rng, 10, valuation_one=True)
        r = series_revert(s)
        ok = ok and series_compose(s, r) == ident
        ok = ok and series_compose(r, s) == ident

    rng = random.Random(555)
    geometric = SeriesFraction((1,), (1, -1))
    for _ in range(50):
        num = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
        den = (Fraction(rng.choice([1, -1, 2])),) + tuple(
            Fraction(rng.randint(-3, 3)) for _ in range(2)
        )
        phi = SeriesFraction(num, den)
        y = solve_functional(phi, rational_ring, "t", 8)
        target = geometric.at_series(y)
        for n in range(1, 9):
            ok = ok and lagrange_coeff(F=geometric, phi=phi, n=n, ring=rational_ring) == target.coefficient(n)

    elapsed = time.monotonic() - started
    within_budget = elapsed <= 30.0
    _stamp(11, "series-property-suite", ok and within_budget, elapsed)
    assert ok
    assert within_budget
