"""Linearized bubble systems A Gamma = b for orders 2, 4 and 6.

Columns are indexed by j = 1..s+3 and rows by i = 1..rows, both 1-based as
in the formulas; the lists returned here are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .exactnum import DegeneracyError, DomainError, binom
from .report import FAIL, PASS, VerificationReport

N0 = 10**10


@dataclass(frozen=True)
class ProblemIndex:
    order: int
    n: int
    k: int
    s: int

    @property
    def b(self) -> int:
        """Degree of the harmonic polynomial factor."""
        return self.k - 2 * self.s

    @property
    def rows(self) -> int:
        return self.s + {2: 3, 4: 4, 6: 5}[self.order]

    @property
    def cols(self) -> int:
        return self.s + 3

    @property
    def extra_rows(self) -> int:
        return self.rows - self.cols


def is_admissible(idx: ProblemIndex) -> bool:
    if idx.order not in (2, 4, 6):
        return False
    n, k, s = idx.n, idx.k, idx.s
    if idx.order == 6:
        kmax, nmin = n - 10, 12
    else:
        kmax, nmin = n - 8, 10
    return n >= nmin and 2 <= k <= kmax and 0 <= s <= (k - 2) // 2


def check_admissible(idx: ProblemIndex) -> None:
    if not is_admissible(idx):
        raise DomainError(f"inadmissible index {idx}")


def admissible_grid(order: int, n: int):
    for k in range(2, n + 1):
        for s in range(0, (k - 2) // 2 + 1):
            idx = ProblemIndex(order, n, k, s)
            if is_admissible(idx):
                yield idx


@dataclass(frozen=True)
class RhsVector:
    index: ProblemIndex
    variant: str
    entries: Tuple[Fraction, ...]


@dataclass(frozen=True)
class SystemMatrix:
    index: ProblemIndex
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class GammaSolution:
    index: ProblemIndex
    gamma: Tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.gamma[j - 1]


def ctilde4(n: int) -> int:
    return (n - 2) * n * (n + 2) * (n + 4)


def ctilde6(n: int) -> int:
    return (n - 4) * (n - 2) * n * (n + 2) * (n + 4) * (n + 6)


def _sign(p: int) -> int:
    return -1 if p % 2 else 1


def q6_rhs_constants(n: int, k: int, s: int) -> Tuple[int, int, int, int, int]:
    """The five integers c1..c5 of the order-6 right-hand side."""
    u = 2 * s * (2 * k - 2 * s + n - 2)
    c1 = u * (2 * s - 2) * (2 * k - 2 * s + n - 4)
    c2 = -u * (4 * (n - 8) * k + 3 * n * n - 18 * n + 8)
    c3 = (4 * (n - 8) * (n - 6) * k * k + 2 * (n - 6) * (3 * n * n - 12 * n - 40) * k
          + u * (3 * n * n - 26 * n + 72) + 3 * n**4 - 12 * n**3 - 44 * n * n + 176 * n + 192)
    c4 = -2 * (n - 4) * ((3 * n * n - 28 * n + 60) * k + 3 * (n**3 - 2 * n * n - 4 * n + 40))
    c5 = (n - 4) * n * (3 * n * n - 12 * n + 44)
    return c1, c2, c3, c4, c5


def _rhs_raw(idx: ProblemIndex, primed: bool) -> List[int]:
    n, k, s = idx.n, idx.k, idx.s
    out = []
    for i in range(1, idx.rows + 1):
        if idx.order == 2:
            v = _sign(s + 3 - i) * binom(s, i - 3)
        elif idx.order == 4:
            u = s * (2 * k - 2 * s + n - 2)
            if primed:
                x = 2 * n * (n * n - 4 * n + 8)
                y = 2 * (n - 4) * u
                z = 2 * (k * (n - 6) * (n - 2) - 8 * (n - 1))
            else:
                x = 2 * (n * n - 4 * n + 8)
                y = 2 * u
                z = 2 * (k + 2) * (n - 6)
            v = _sign(s + 4 - i) * (x * binom(s, i - 3) + y * binom(s - 1, i - 5) - z * binom(s, i - 4))
        else:
            c1, c2, c3, c4, c5 = q6_rhs_constants(n, k, s)
            if primed:
                c1, c2, c3, c4, c5 = ((n - 6) * c1, (n - 4) * c2, (n - 2) * c3, n * c4, (n + 2) * c5)
            v = _sign(s + 5 - i) * (
                binom(s + 2, i - 3) * c5 + binom(s + 1, i - 4) * c4 + binom(s, i - 5) * c3
                + binom(s - 1, i - 6) * c2 + binom(s - 2, i - 7) * c1
            )
        out.append(v)
    return out


def rhs_vector(idx: ProblemIndex, variant: str = "plain") -> RhsVector:
    check_admissible(idx)
    if variant not in ("plain", "primed"):
        raise DomainError(f"unknown variant {variant!r}")
    if variant == "primed" and idx.order == 2:
        raise DomainError("the order-2 system has no primed right-hand side")
    raw = _rhs_raw(idx, variant == "primed")
    return RhsVector(idx, variant, tuple(Fraction(v) for v in raw))


def matrix_entry(idx: ProblemIndex, i: int, j: int) -> int:
    """a_{i,j} from the closed forms; zero off the band."""
    n, b = idx.n, idx.b
    if idx.order == 2:
        if i == j - 1:
            return n * (n + 2) - (n + 2 - 2 * j) * (n + 4 - 2 * j)
        if i == j:
            return -2 * (n + 2 - 2 * j) * (b + j - 2)
        return 0
    if idx.order == 4:
        if i == j - 1:
            return -8 * (j - 1) * (n + 2 - j) * (n * n - 2 * (j - 2) * n + 2 * j * (j - 3))
        if i == j:
            return 4 * (n - 2 * j) * (n + 2 - 2 * j) * (n + 4 - 2 * j) * (b + j - 2)
        if i == j + 1:
            return 4 * (n - 2 * j) * (n + 2 - 2 * j) * (b + j - 1) * (b + j - 2)
        return 0
    f = [n - 2 * j - 2 + 2 * m for m in range(6)]  # n-2j-2, n-2j, ..., n-2j+8
    if i == j - 1:
        return ctilde6(n) - f[0] * f[1] * f[2] * f[3] * f[4] * f[5]
    if i == j:
        return -6 * f[0] * f[1] * f[2] * f[3] * f[4] * (b + j - 2)
    if i == j + 1:
        return -12 * f[0] * f[1] * f[2] * f[3] * (b + j - 1) * (b + j - 2)
    if i == j + 2:
        return -8 * f[0] * f[1] * f[2] * (b + j) * (b + j - 1) * (b + j - 2)
    return 0


def system_matrix(idx: ProblemIndex) -> SystemMatrix:
    check_admissible(idx)
    rows = tuple(
        tuple(Fraction(matrix_entry(idx, i, j)) for j in range(1, idx.cols + 1))
        for i in range(1, idx.rows + 1)
    )
    return SystemMatrix(idx, rows)


def back_substitute(A: SystemMatrix, rhs, extra_rows: int) -> List[Fraction]:
    """Solve column j from row j + extra_rows, starting at the last column."""
    cols = len(A.entries[0])
    g = [Fraction(0)] * (cols + 1)
    for j in range(cols, 0, -1):
        i = j + extra_rows
        piv = A[i, j]
        if piv == 0:
            raise DegeneracyError(f"zero pivot a[{i},{j}] for {A.index}", (i, j))
        acc = Fraction(rhs[i - 1])
        for jj in range(j + 1, min(cols, i + 1) + 1):
            acc -= A[i, jj] * g[jj]
        g[j] = acc / piv
    return g[1:]


def solve_gamma(idx: ProblemIndex) -> GammaSolution:
    A = system_matrix(idx)
    b = rhs_vector(idx).entries
    return GammaSolution(idx, tuple(back_substitute(A, b, idx.extra_rows)))


def residuals(A: SystemMatrix, gamma, rhs) -> List[Fraction]:
    out = []
    for i, row in enumerate(A.entries):
        out.append(sum((a * g for a, g in zip(row, gamma)), Fraction(0)) - rhs[i])
    return out


def recurrence_residuals(sol: GammaSolution) -> List[Fraction]:
    """Residuals of the four recurrence families satisfied by Gamma."""
    n, k, s = sol.index.n, sol.index.k, sol.index.s
    G = sol.gamma
    out = [
        (k - 2 * s - 1) * G[0] - 2 * G[1],
        (k - 2 * s) * G[1] - Fraction(4 * (n - 1), n - 2) * G[2],
    ]
    for j in range(3, s + 3):
        rhs = (Fraction(2 * j * (n - j + 1), n - 2 * j + 2) * G[j]
               - Fraction(_sign(s + 3 - j) * binom(s, j - 3), 2 * (n - 2 * j + 2)))
        out.append((k - 2 * s + j - 2) * G[j - 1] - rhs)
    out.append((k - s + 1) * G[s + 2] + Fraction(1, 2 * (n - 2 * s - 4)))
    return out


def certify_cancellation(idx: ProblemIndex, rhs=None) -> VerificationReport:
    """Solve and report all residuals; rhs may be overridden for fault injection."""
    params = {"order": idx.order, "n": idx.n, "k": idx.k, "s": idx.s}
    A = system_matrix(idx)
    b = list(rhs) if rhs is not None else list(rhs_vector(idx).entries)
    g = back_substitute(A, b, idx.extra_rows)
    res = residuals(A, g, b)
    rec = recurrence_residuals(GammaSolution(idx, tuple(g)))
    bad_rows = [i + 1 for i, r in enumerate(res) if r]
    bad_rec = [i + 1 for i, r in enumerate(rec) if r]
    ok = not bad_rows and not bad_rec
    return VerificationReport(
        "linearized.cancellation", params, PASS if ok else FAIL,
        expected="all residuals zero",
        actual="all residuals zero" if ok else f"nonzero rows {bad_rows}, relations {bad_rec}",
        witness=None if ok else {"residuals": res, "relation_residuals": rec, "gamma": g},
    )


def check_cross_order(n: int, k: int, s: int) -> bool:
    sols = []
    for order in (2, 4, 6):
        idx = ProblemIndex(order, n, k, s)
        check_admissible(idx)
        sols.append(solve_gamma(idx).gamma)
    return sols[0] == sols[1] == sols[2]


def column_exponent(idx: ProblemIndex, j: int) -> Fraction:
    """Column j multiplies t^(-a_j) p_b with a_j = (n - 2j - order + 4)/2."""
    return Fraction(idx.n - 2 * j - idx.order + 4, 2)


def oracle_column(idx: ProblemIndex, j: int) -> List[Fraction]:
    """Column j rebuilt from the radial kernel: Lap_b^p t^(-a_j), plus the potential term."""
    p = idx.order // 2
    a = column_exponent(idx, j)
    coeffs = dict(_expansion(a, idx.b, idx.n, p))
    ctilde = {1: idx.n * (idx.n + 2), 2: ctilde4(idx.n), 3: ctilde6(idx.n)}[p]
    coeffs[a + 2 * p] = coeffs.get(a + 2 * p, 0) + (-1) ** (p + 1) * ctilde
    out = [Fraction(coeffs.pop(a + 2 * p - (i - j + 1), 0)) for i in range(1, idx.rows + 1)]
    if any(coeffs.values()):
        raise DegeneracyError(f"column {j} of {idx} has terms outside the row range", (None, j))
    return out


@lru_cache(maxsize=4096)
def _expansion(a: Fraction, b: int, n: int, p: int) -> tuple:
    from .radial import RadialExpr, laplacian_power, t_basis_exponents

    return tuple(t_basis_exponents(laplacian_power(RadialExpr.t_power(a), n, b, p)).items())


def check_columns(idx: ProblemIndex) -> bool:
    """Every column of the closed-form matrix equals its radial-kernel expansion."""
    check_admissible(idx)
    for j in range(1, idx.cols + 1):
        col = oracle_column(idx, j)
        if any(col[i - 1] != matrix_entry(idx, i, j) for i in range(1, idx.rows + 1)):
            return False
    return True
