"""Shared driver for the Pohozaev matrix scans."""

from __future__ import annotations

from .definiteness import classify
from .expected import expected_pd
from .report import FAIL, PASS, VerificationReport, run_check


def _describe(pd):
    return {True: "positive_definite", False: "not positive_definite", None: "no recorded outcome"}[pd]


def certify_matrix(check_id: str, order: int, spec, build) -> VerificationReport:
    """Classify build(spec) and compare with the expectation table."""
    params = {"order": order, "family": spec.family, "n": spec.n, "s": spec.s}

    def go():
        M = build(spec)
        v = classify(M)
        want = expected_pd(order, spec.family, spec.n, spec.s)
        ok = want is None or want == v.is_pd
        witness = dict(v.witness or {})
        witness["eigen_sign_counts"] = list(v.eigen_sign_counts)
        witness["dim"] = M.dim
        return VerificationReport(
            check_id, params, PASS if ok else FAIL,
            expected=_describe(want), actual=v.classification, witness=witness,
        )

    return run_check(check_id, params, go)
