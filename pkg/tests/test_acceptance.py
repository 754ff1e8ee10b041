"""Acceptance suite: one test per criterion, each at exact (zero) tolerance.

Every test records a one-line PASS/FAIL summary; tests/conftest.py prints them
at the end of the run. Running this file directly prints the same lines.
"""

from __future__ import annotations

import time

import pytest

from qcert import suites
from qcert.expected import FAMILIES

LINES: list[str] = []


def _run(tasks):
    out = []
    for t in tasks:
        out.extend(suites.run_task(t))
    return out


def _record(number: int, title: str, reports, t0: float):
    bad = [r for r in reports if r.verdict != "pass"]
    status = "PASS" if reports and not bad else "FAIL"
    LINES.append(f"criterion {number}: {status}  {title}  "
                 f"[{len(reports) - len(bad)}/{len(reports)} reports, {time.perf_counter() - t0:.0f} s]")
    detail = "; ".join(f"{r.check_id} {r.params}: {r.actual}" for r in bad[:5])
    assert reports and not bad, detail


@pytest.fixture(scope="module")
def linearized_run():
    """The n <= 60 grid is shared by criteria 4 and 5; returns (reports, start time)."""
    t0 = time.perf_counter()
    return _run(suites.linearized_suite((2, 4, 6), range(8, 61), cross_order=True)), t0


def test_criterion_1_q4_thresholds():
    t0 = time.perf_counter()
    reps = _run(suites.q_suite(4, FAMILIES, range(8, 49)))
    reps = [r for r in reps if r.check_id == "q4.definiteness"]
    # every recorded window must actually be exercised
    checked = {(r.params["family"], r.params["n"], r.params["s"]) for r in reps}
    assert ("D", 40, 2) in checked and ("W", 44, 1) in checked and ("H", 48, 2) in checked
    _record(1, "order-4 matrices: PD windows and failure windows", reps, t0)


def test_criterion_2_q6_thresholds():
    t0 = time.perf_counter()
    reps = _run(suites.q_suite(6, FAMILIES, range(10, 49)))
    checked = {(r.params["family"], r.params["n"], r.params["s"]) for r in reps}
    assert ("D", 40, 2) in checked and ("W", 44, 1) in checked and ("H", 48, 2) in checked
    _record(2, "order-6 matrices: PD windows and failure windows", reps, t0)


def test_criterion_3_pinned_entry():
    t0 = time.perf_counter()
    _record(3, "order-4 D matrix at n=8, s=2 equals [32*10^10]", _run([("q4_pinned", ())]), t0)


def test_criterion_4_linearized(linearized_run):
    linearized_reports, t0 = linearized_run
    reps = [r for r in linearized_reports
            if r.check_id in ("linearized.cancellation", "linearized.cross_order")]
    reps += _run([("pinned_gamma", ())])
    _record(4, "linearized systems n<=60: zero residuals, relations, cross-order, pinned Gamma", reps, t0)


def test_criterion_5_radial_oracles(linearized_run):
    linearized_reports, _ = linearized_run
    t0 = time.perf_counter()
    reps = [r for r in linearized_reports if r.check_id == "linearized.newbasis_columns"]
    reps += _run(suites.radial_suite())
    _record(5, "radial kernel reproduces system columns, c1..c6 and moment recurrences", reps, t0)


def test_criterion_6_noncompact():
    t0 = time.perf_counter()
    reps = _run(suites.noncompact_suite(range(27, 121)))
    _record(6, "n in [27,120]: scaling and Hessian signs, k+m identities, n52 flip", reps, t0)


def test_criterion_7_definiteness_engine():
    t0 = time.perf_counter()
    _record(7, "1000 random matrices: Sturm vs Sylvester, invariances, float check",
            _run(suites.definiteness_suite(1000)), t0)


def test_criterion_8_fault_injection():
    t0 = time.perf_counter()
    _record(8, "single +1 perturbations of b, c_i and matrix entries are detected",
            _run(suites.fault_suite()), t0)


def test_optional_transcribed_tables():
    reps = _run([("noncompact", (n, True)) for n in (27, 52, 120)])
    assert all(r.passed for r in reps if r.check_id == "noncompact.tables")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
