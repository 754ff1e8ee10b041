"""Verification report records and their JSON / Markdown rendering."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .exactnum import QuadExtNumber, ScaledRational

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class VerificationReport:
    check_id: str
    params: dict
    verdict: str
    expected: str = ""
    actual: str = ""
    witness: Optional[dict] = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, ERROR):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            self.witness = {"note": "no witness supplied"}

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": to_jsonable(self.params),
            "verdict": self.verdict,
            "expected": self.expected,
            "actual": self.actual,
            "witness": to_jsonable(self.witness),
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def to_jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, ScaledRational):
        return {"rational": to_jsonable(x.coeff), "h": x.pi_half_power}
    if isinstance(x, QuadExtNumber):
        return {"a": to_jsonable(x.a), "b": to_jsonable(x.b), "D": to_jsonable(x.D)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return str(x)


def run_check(check_id: str, params: dict, fn: Callable[[], VerificationReport]) -> VerificationReport:
    """Run fn, timing it; exceptions become error reports."""
    t0 = time.perf_counter()
    try:
        rep = fn()
    except Exception as exc:  # reported, not raised
        rep = VerificationReport(
            check_id, params, ERROR, actual=f"{type(exc).__name__}: {exc}",
            witness={"exception": type(exc).__name__, "message": str(exc)},
        )
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def markdown_summary(reports: list[VerificationReport]) -> str:
    lines = [
        "| check | params | verdict | expected | actual |",
        "|---|---|---|---|---|",
    ]
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items())
        lines.append(f"| {r.check_id} | {params} | {r.verdict} | {r.expected} | {r.actual} |")
    n_pass = sum(r.passed for r in reports)
    lines.append("")
    lines.append(f"{n_pass}/{len(reports)} checks passed.")
    return "\n".join(lines) + "\n"
