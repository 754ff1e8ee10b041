"""Fourth-order Pohozaev quadratic-form matrices for the D, W and H families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .exactnum import ONE, DomainError, ScaledRational, SymMatrix, ZERO, scaled_sum
from .linsys import N0, ProblemIndex, rhs_vector, solve_gamma
from .radial import radial_integral

F = Fraction


@dataclass(frozen=True)
class FamilySpec4:
    family: str
    n: int
    s: int

    @property
    def d(self) -> int:
        return (self.n - 4) // 2

    def s_range(self) -> range:
        d = self.d
        return {"D": range(2, d + 1), "W": range(1, d - 1), "H": range(2, d - 1)}[self.family]

    def q_range(self) -> range:
        top = (self.d - self.s) // 2
        return range(0 if self.family == "D" else 1, top + 1)


def check_spec(spec, n_min: int) -> None:
    if spec.family not in ("D", "W", "H"):
        raise DomainError(f"unknown family {spec.family!r}")
    if spec.n < n_min or spec.s not in spec.s_range() or len(spec.q_range()) == 0:
        raise DomainError(f"inadmissible {spec}")


def c1(n: int, k: int, m: int) -> int:
    S = k + m
    return S * (n**3 - (S + 2) * n * n + (6 * S - 4) * n - 4 * S + 8)


def c2(n: int, k: int, m: int) -> int:
    S = k + m
    return 2 * (n - 1) * S * (n + S - 2) * k * m


def c3(n: int, k: int, m: int) -> Fraction:
    S = k + m
    return F(8 * (n - 3) * (n - 1) * S, (n - 2) * (n + S - 4))


def c4(n: int, k: int, m: int) -> Fraction:
    S = k + m
    return F((n - 3) * (n**3 - 4 * n * n + 16 * n - 16) * S, 2 * (n - 2) * (n - 1) * (n + S - 4))


def lam(family: str, n: int, s: int, q: int) -> Fraction:
    if family == "D":
        return F(-q * (n + 2 * q + 2 * s - 2))
    if family == "W":
        return F(-(n + s + 2 * q - 2) * (s + 2 * q), 2)
    return (s - 1) * (2 - F(n - 2, n - 1) * (n + s - 1)) - (q + 1) * (n + 2 * q + 2 * s - 4)


def kappa(n: int, s: int) -> Fraction:
    return F(n - 2, n - 1) * s * (s - 1) * (n + s - 1) * (n + s - 2)


def theta(n: int, k: int, m: int) -> bool:
    return k + m == n - 4


def prefactor(n: int, k: int, m: int) -> ScaledRational:
    """(n-4)^2 / (8(n-3)(n-2)(n-1)) * I(n+k+m-3, n-3)^(1-theta)."""
    P = F((n - 4) ** 2, 8 * (n - 3) * (n - 2) * (n - 1))
    if theta(n, k, m):
        return ONE * P
    return radial_integral(n + k + m - 3, n - 3) * P


def _common(n, k, m, l1, l2) -> Fraction:
    S = k + m
    return F(c1(n, k, m), 8) * (2 * (l1 + l2) + (n + S - 2) * S) - c2(n, k, m)


def entry_d(n: int, s: int, q: int, qq: int) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    l1, l2 = lam("D", n, s, q), lam("D", n, s, qq)
    br = c3(n, k, m) * l1 * l2 + _common(n, k, m, l1, l2)
    return _scale(prefactor(n, k, m) * br, n, k, m)


def entry_w(n: int, s: int, q: int, qq: int) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    S = k + m
    l1, l2 = lam("W", n, s, q), lam("W", n, s, qq)
    g = F(4 * (n - 3) * (n - 1) * S, (n - 2) * (n + S - 4))
    br = g * (4 * s * (n + s) * l1 * l2 + k * m * s * s * (n + s) ** 2) \
        + 2 * s * (n + s) * _common(n, k, m, l1, l2)
    return _scale(prefactor(n, k, m) * br, n, k, m)


def entry_h1(n: int, s: int, q: int, qq: int) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    S = k + m
    l1, l2 = lam("H", n, s, q), lam("H", n, s, qq)
    ks = kappa(n, s)
    br = (c3(n, k, m) * l1 * l2
          + F(4 * (n - 3) * S * (s - 1) * (n + s - 1) * k * m, n + S - 4)
          - F((n - 4) * (n - 3) * n * n * S, 2 * (n - 2) * (n - 1) * (n + S - 4)) * ks
          + _common(n, k, m, l1, l2))
    return _scale(prefactor(n, k, m) * ks * br, n, k, m)


def _scale(x: ScaledRational, n, k, m) -> ScaledRational:
    return x * N0 if theta(n, k, m) else x


def _h_data(n: int, s: int, q: int, qq: int):
    """Gamma(n, k-2, q-1) and b, b'(n, m-2, q'-1) from the order-4 system."""
    k, m = 2 * q + s, 2 * qq + s
    G = solve_gamma(ProblemIndex(4, n, k - 2, q - 1)).gamma
    idx_b = ProblemIndex(4, n, m - 2, qq - 1)
    b = rhs_vector(idx_b, "plain").entries
    bp = rhs_vector(idx_b, "primed").entries
    return G, b, bp


def entry_h2_raw(n: int, s: int, q: int, qq: int, data=None) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    if theta(n, k, m):
        return ZERO
    G, b, _ = data or _h_data(n, s, q, qq)
    Fk = (F(n - 4, 4 * (n - 1)) * kappa(n, s)) ** 2
    terms = []
    for i in range(1, qq + 4):
        for j in range(1, q + 3):
            c = b[i - 1] * G[j - 1]
            if not c:
                continue
            e = n + 3 - i - j
            w = F((n - 2 * s - 2 * i - 2 * j + 6) * (n - 2 * j), e) - (n + 4 - 4 * j - 2 * s)
            terms.append(radial_integral(n - 1 + 2 * s, e) * (c * w))
    return scaled_sum(terms) * (-Fk / 2)


def entry_h3_raw(n: int, s: int, q: int, qq: int, data=None) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    G, b, bp = data or _h_data(n, s, q, qq)
    Fk = (F(n - 4, 4 * (n - 1)) * kappa(n, s)) ** 2
    if theta(n, k, m):
        return ONE * (F(n - 4, 2) * Fk * G[q + 1] * b[qq + 2])
    terms = []
    for i in range(1, qq + 4):
        for j in range(1, q + 3):
            e = n + 3 - i - j
            c = G[j - 1] * (F(n - 2 * s - 2 * i - 2 * j + 6, e) * bp[i - 1] - (n - 4) * b[i - 1])
            if c:
                terms.append(radial_integral(n - 1 + 2 * s, e) * c)
    return scaled_sum(terms) * (-Fk / 2)


def h_parts(n: int, s: int) -> Dict[str, List[List[ScaledRational]]]:
    """Unsymmetrized H-family pieces m1 (scaled), m2', m3'."""
    qs = FamilySpec4("H", n, s).q_range()
    m1, m2, m3 = [], [], []
    for q in qs:
        r1, r2, r3 = [], [], []
        for qq in qs:
            data = _h_data(n, s, q, qq)
            r1.append(entry_h1(n, s, q, qq))
            r2.append(entry_h2_raw(n, s, q, qq, data))
            r3.append(entry_h3_raw(n, s, q, qq, data))
        m1.append(r1)
        m2.append(r2)
        m3.append(r3)
    return {"m1": m1, "m2": m2, "m3": m3}


def matrix_q4(spec: FamilySpec4) -> SymMatrix:
    check_spec(spec, 8)
    n, s = spec.n, spec.s
    qs = list(spec.q_range())
    if spec.family == "D":
        rows = [[entry_d(n, s, q, qq) for qq in qs] for q in qs]
    elif spec.family == "W":
        rows = [[entry_w(n, s, q, qq) for qq in qs] for q in qs]
    else:
        parts = h_parts(n, s)
        rows = []
        for a, q in enumerate(qs):
            row = []
            for c, qq in enumerate(qs):
                k, m = 2 * q + s, 2 * qq + s
                x = (parts["m2"][a][c] + parts["m2"][c][a] + parts["m3"][a][c] + parts["m3"][c][a]) * F(1, 2)
                row.append(parts["m1"][a][c] + _scale(x, n, k, m))
            rows.append(row)
    return SymMatrix(rows)


def family_specs(family: str, n: int):
    """All admissible specs of one family at dimension n."""
    probe = FamilySpec4(family, n, 0)
    for s in probe.s_range():
        spec = FamilySpec4(family, n, s)
        if len(spec.q_range()):
            yield spec


def scan_q4(n_range, families=("D", "W", "H")):
    """One report per admissible (family, n, s), compared against the expectation table."""
    from .scan import certify_matrix

    return [certify_matrix("q4.definiteness", 4, spec, matrix_q4)
            for family in families for n in n_range for spec in family_specs(family, n)]
