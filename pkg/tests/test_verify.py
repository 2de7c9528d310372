"""Tests for the verification harness: reports, suites, determinism, mutation."""

from fractions import Fraction

import pytest

from runyon.exactalg import PointAssignment
from runyon.verify import (
    SUITE_NAMES,
    SUITES,
    CaseRecord,
    VerificationReport,
    VerifyConfig,
    c_compare,
    inner_sum_check,
    run_all,
    run_suite,
    sample_points,
    verify_kernel,
    verify_y,
)

SMALL = {
    "recurrence-vs-lagrange": VerifyConfig(max_n=4),
    "carlitz-vs-riordan": VerifyConfig(max_n=5),
    "kernel": VerifyConfig(order=6, trials=2),
    "reversion": VerifyConfig(order=6, trials=2),
    "gf-match": VerifyConfig(order=5, trials=2),
    "morrison": VerifyConfig(max_n=3, trials=2),
    "inner-sum": VerifyConfig(max_n=5),
    "narayana": VerifyConfig(max_n=5),
    "y": VerifyConfig(order=5, trials=2, mode="symbolic"),
    "c-compare": VerifyConfig(max_n=4),
}


class TestSamplePoints:
    def test_deterministic(self):
        assert sample_points(7, 10) == sample_points(7, 10)
        assert sample_points(7, 10) != sample_points(8, 10)

    def test_rejection_rules(self):
        for pt in sample_points(0, 50):
            assert pt.x != 0 and pt.alpha != 0 and pt.beta != 0
            assert pt.alpha != pt.beta
            assert pt.x != pt.alpha and pt.x != pt.beta
            for value in (pt.x, pt.alpha, pt.beta):
                assert 1 <= value.denominator <= 8
                assert abs(value.numerator) <= 9 * 8

    def test_count(self):
        assert len(sample_points(3, 17)) == 17


class TestReportType:
    def _report(self, statuses, assertive=True):
        cases = [
            CaseRecord(f"c-{i}", {"i": i}, s, None if s == "pass" else "w")
            for i, s in enumerate(statuses)
        ]
        return VerificationReport("demo", {"order": 2}, cases, ["a note"], assertive)

    def test_summary_counts(self):
        report = self._report(["pass", "mismatch", "fail", "pass"])
        assert report.summary == {"total": 4, "pass": 2, "mismatch": 1, "fail": 1}

    def test_passed_flag(self):
        assert self._report(["pass", "pass"]).passed
        assert not self._report(["pass", "mismatch"]).passed
        assert not self._report(["fail"]).passed
        assert self._report(["mismatch"], assertive=False).passed

    def test_json_shape(self):
        data = self._report(["pass", "fail"]).to_json_dict()
        assert set(data) == {"suite", "config", "assertive", "cases", "summary", "notes"}
        assert data["cases"][0] == {
            "id": "c-0",
            "params": {"i": "0"},
            "status": "pass",
            "witness": None,
        }
        assert data["summary"]["fail"] == 1

    def test_text_lists_non_pass_and_notes(self):
        text = self._report(["pass", "mismatch"]).to_text()
        assert "suite demo" in text
        assert "FAIL" in text
        assert "[mismatch] c-1" in text
        assert "note: a note" in text
        assert "c-0" not in text


class TestCoreOperations:
    def test_kernel_symbolic_small(self):
        report = verify_kernel(6)
        assert report.passed
        assert [c.id for c in report.cases] == [f"order-{m}" for m in range(1, 7)]

    def test_kernel_at_point(self):
        pt = PointAssignment(x=Fraction(5), alpha=Fraction(3), beta=Fraction(1, 2))
        report = verify_kernel(10, at=pt)
        assert report.passed
        assert report.config["point"] == "x=5 alpha=3 beta=1/2"

    def test_y_small(self):
        report = verify_y(6)
        assert report.passed
        assert [c.id for c in report.cases] == ["fixed-point", "generates-family", "scaling"]

    def test_y_at_point(self):
        pt = PointAssignment(x=Fraction(3), alpha=Fraction(2), beta=Fraction(1))
        assert verify_y(8, at=pt).passed

    def test_inner_sum_single(self):
        report = inner_sum_check(6)
        assert report.passed
        assert report.summary["total"] == 6

    def test_inner_sum_j_equals_n(self):
        # the left side is an empty weighted sum there; both sides zero
        report = inner_sum_check(1)
        assert report.passed


class TestCCompare:
    def test_surfaces_2_3(self):
        report = c_compare(3, 4)
        case = next(c for c in report.cases if c.id == "r-2-n-3")
        assert case.status == "mismatch"
        assert "beta^2" in case.witness

    def test_report_only(self):
        report = c_compare(3, 3)
        assert report.summary["mismatch"] > 0
        assert not report.assertive
        assert report.passed

    def test_notes_document_lowered_variant(self):
        report = c_compare(8, 8)
        assert any("reproduces the defining sum" in note for note in report.notes)

    def test_deterministic(self):
        assert c_compare(4, 4).to_json_dict() == c_compare(4, 4).to_json_dict()

    def test_case_grid_complete(self):
        report = c_compare(4, 5)
        assert report.summary["total"] == 20
        assert report.summary["fail"] == 0


class TestSuites:
    def test_registry_matches_names(self):
        assert tuple(SUITES) == SUITE_NAMES

    @pytest.mark.parametrize("name", SUITE_NAMES)
    def test_suite_passes_small(self, name):
        report = run_suite(name, SMALL[name])
        assert report.suite == name
        assert report.passed, report.to_text()
        assert report.summary["fail"] == 0

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("fourier")

    def test_determinism(self):
        a = run_suite("gf-match", SMALL["gf-match"]).to_json_dict()
        b = run_suite("gf-match", SMALL["gf-match"]).to_json_dict()
        assert a == b

    def test_run_all_small(self):
        config = VerifyConfig(max_n=3, order=4, trials=1)
        reports = run_all(config)
        assert [r.suite for r in reports] == list(SUITE_NAMES)
        assert all(r.passed for r in reports)

    def test_numeric_mode_only(self):
        config = VerifyConfig(order=5, trials=2, mode="numeric")
        report = run_suite("kernel", config)
        assert report.passed
        assert all(c.id.startswith("point-") for c in report.cases)

    def test_symbolic_mode_only(self):
        config = VerifyConfig(order=5, mode="symbolic")
        report = run_suite("reversion", config)
        assert report.passed
        assert all(c.id.startswith("symbolic-") for c in report.cases)

    def test_morrison_includes_hand_case(self):
        report = run_suite("morrison", SMALL["morrison"])
        assert any(c.id == "hand-n-2" for c in report.cases)

    def test_inner_sum_case_count(self):
        report = run_suite("inner-sum", VerifyConfig(max_n=6))
        assert report.summary["total"] == 21


ASSERTIVE_SUITES = tuple(n for n in SUITE_NAMES if n != "c-compare")


class TestMutationHook:
    @pytest.mark.parametrize("name", ASSERTIVE_SUITES)
    def test_mutation_flips_suite(self, name, monkeypatch):
        monkeypatch.setenv("RUNYON_MUTATE", name)
        report = run_suite(name, SMALL[name])
        assert not report.passed
        assert report.summary["mismatch"] >= 1

    def test_mutation_targets_only_named_suite(self, monkeypatch):
        monkeypatch.setenv("RUNYON_MUTATE", "kernel")
        assert run_suite("narayana", SMALL["narayana"]).passed

    def test_no_mutation_by_default(self, monkeypatch):
        monkeypatch.delenv("RUNYON_MUTATE", raising=False)
        assert run_suite("kernel", SMALL["kernel"]).passed


class TestFailureStatus:
    def test_exception_becomes_fail_case(self, monkeypatch):
        import runyon.verify as verify_module

        def boom(n, pt):
            raise RuntimeError("simulated breakage")

        monkeypatch.setattr(verify_module, "morrison_g", boom)
        report = run_suite("morrison", SMALL["morrison"])
        assert not report.passed
        assert report.summary["fail"] == report.summary["total"]
        assert "simulated breakage" in report.cases[0].witness
