"""Expected definiteness outcomes for the Pohozaev matrix scans.

Kept as plain data so that a mismatch against the recorded outcome shows up as
a failed report rather than being baked into code. For each order and family:
``pd`` is the inclusive n-window where every admissible s must be positive
definite, and ``fail`` is the window where the single shift ``fail_s`` must not be.
"""

from __future__ import annotations

from typing import Optional

EXPECTED = {
    4: {
        "D": {"pd": (8, 24), "fail": (25, 40), "fail_s": 2},
        "W": {"pd": (10, 28), "fail": (29, 44), "fail_s": 1},
        "H": {"pd": (12, 32), "fail": (33, 48), "fail_s": 2},
    },
    6: {
        "D": {"pd": (10, 26), "fail": (27, 40), "fail_s": 2},
        "W": {"pd": (12, 29), "fail": (30, 44), "fail_s": 1},
        "H": {"pd": (14, 33), "fail": (34, 48), "fail_s": 2},
    },
}

FAMILIES = ("D", "W", "H")


def expected_pd(order: int, family: str, n: int, s: int) -> Optional[bool]:
    """True / False when an outcome is recorded, None otherwise."""
    row = EXPECTED[order][family]
    lo, hi = row["pd"]
    if lo <= n <= hi:
        return True
    lo, hi = row["fail"]
    if lo <= n <= hi and s == row["fail_s"]:
        return False
    return None


def default_window(order: int, family: str):
    row = EXPECTED[order][family]
    return range(row["pd"][0], row["fail"][1] + 1)
