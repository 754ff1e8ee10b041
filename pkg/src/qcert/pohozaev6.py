"""Sixth-order Pohozaev matrices: radial constants c1..c6, the derived
coefficients cbar1..cbar10 and cbar'1..cbar'8, and the D, W, H matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .exactnum import ONE, DomainError, ScaledRational, SymMatrix, ZERO, scaled_sum
from .linsys import N0, ProblemIndex, rhs_vector, solve_gamma
from .pohozaev4 import check_spec, kappa, lam
from .radial import RadialExpr, bubble, bubble_z, integrate_moment, radial_integral

F = Fraction


@dataclass(frozen=True)
class FamilySpec6:
    family: str
    n: int
    s: int

    @property
    def d(self) -> int:
        return (self.n - 6) // 2

    def s_range(self) -> range:
        d = self.d
        return {"D": range(2, d + 1), "W": range(1, d - 1), "H": range(2, d - 1)}[self.family]

    def q_range(self) -> range:
        top = (self.d - self.s) // 2
        return range(0 if self.family == "D" else 1, top + 1)


@dataclass(frozen=True)
class CoeffSet6:
    c: tuple
    cbar: tuple
    cbarp: tuple


def theta(n: int, k: int, m: int) -> bool:
    return k + m == n - 6


def _bracket(terms, log_branch: bool) -> ScaledRational:
    """Sum of coeff * I(i, j); replaced by 1 on the logarithmic branch."""
    if log_branch:
        return ONE
    return scaled_sum(radial_integral(i, j) * c for c, i, j in terms)


def radial_constants(n: int, S: int, log_branch: bool | None = None) -> List[ScaledRational]:
    """c1..c6 as functions of n and S = k + m."""
    if log_branch is None:
        log_branch = S == n - 6
    N = n + S
    c1 = _bracket([(F(-(n * n - 4), 4 * (n - 4)), N - 1, n), (F(-n, n - 4), N + 1, n),
                   (F(n * n - 20, 4 * (n - 4)), N + 3, n), (F(1), N + 5, n)], log_branch)
    c1 = c1 * (4 * (n - 6) ** 2 * (n - 4) ** 2)
    c2 = _bracket([(F(-n * n * (n - 2), 16 * (n - 6)), N - 3, n - 1),
                   (F(n * n * (n - 10), 16 * (n - 6)), N - 1, n - 1),
                   (F(n * n - 6 * n - 4, 2 * (n - 6)), N + 1, n - 1), (F(1), N + 3, n - 1)], log_branch)
    c2 = c2 * (-8 * (n - 6) ** 3)
    c3 = _bracket([(F(-(n * n - 2 * n - 4), 4 * (n - 5)), N - 3, n - 2),
                   (F(n * (n - 6), 4 * (n - 5)), N - 1, n - 2), (F(1), N + 1, n - 2)], log_branch)
    c3 = c3 * (-4 * (n - 6) ** 2 * (n - 5))
    c4 = _bracket([(F(-1), N - 3, n - 3), (F(1), N - 1, n - 3)], log_branch)
    c4 = c4 * F(-(n - 6) ** 2 * (n - 4), 2)
    c5 = _bracket([(F(-1), N - 5, n - 4), (F(1), N - 3, n - 4)], log_branch)
    c5 = c5 * F((n - 6) ** 2, 2)
    c6 = _bracket([(F(-1), N - 7, n - 5), (F(1), N - 5, n - 5)], log_branch)
    c6 = c6 * F(-(n - 6), 2)
    return [c1, c2, c3, c4, c5, c6]


def radial_integrands(n: int, Z: RadialExpr | None = None):
    """The six integrands (with their extra r power offset from n + k + m) defining c1..c6.

    Passing Z = w gives the w-moment integrands instead.
    """
    w = bubble(n, 6)
    if Z is None:
        Z = bubble_z(n, 6)
    lap = lambda f: shifted(f, n)  # noqa: E731
    dw_r = w.deriv().div_r()
    return [
        (lap(Z) * dw_r.deriv() + Z * lap(w).deriv().div_r().deriv(), -2),
        (lap(Z) * lap(w), -3),
        (lap(Z) * w.deriv() + Z * lap(w).deriv(), -4),
        (Z * dw_r.deriv(), -4),
        (Z * w.deriv(), -6),
        (Z * w, -7),
    ]


def shifted(f: RadialExpr, n: int) -> RadialExpr:
    from .radial import shifted_laplacian

    return shifted_laplacian(f, n, 0)


def radial_constants_by_integration(n: int, S: int) -> List[ScaledRational]:
    return [integrate_moment(f, n + S + off) for f, off in radial_integrands(n)]


def cbar(n: int, k: int, m: int, c: Sequence[ScaledRational]) -> List[ScaledRational]:
    c1, c2, c3, c4, c5, c6 = c
    S = k + m
    km = k * m
    out = [None] * 11
    out[1] = (c6 * (F((S - 4) * (n + S - 6) * (S - 2) * (n + S - 4) * (n - 6), 4 * (n - 1)))
              + c3 * F(n * n - 2 * n - 8 + (n - 10) * (S - 2), 2 * (n - 1))
              - c2 * F(n - 2, 4 * (n - 1))
              + c1 * F(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1))
              + c5 * F((S - 2) * (n + S - 4) ** 2 * (n - 6), 2 * (n - 1))
              + c4 * F((S - 2) * (n + S - 4) * ((n - 6) * (n - 4) * (n - 2) + 16),
                       2 * (n - 4) * (n - 2) * (n - 1))
              + c4 * F(8 * (n - 2) * S * S - 8 * (n - 6) * S + 16 * (n - 4),
                       (n - 4) * (n - 2) * (n - 1)))
    out[2] = (c6 * F((S - 4) * (n + S - 6) * 2 * (n - 6), (n - 2) ** 2)
              + c5 * F(4 * (n - 6) * S + 4 * (n * n - 8 * n + 20), (n - 2) ** 2)
              + c4 * F(4 * (n - 4) ** 2 + 16, (n - 4) * (n - 2) ** 2))
    out[3] = c1 * F(2 * km, n - 2) + c4 * F(S * (n + S - 2) * 4 * km, (n - 4) * (n - 2))
    out[4] = -c3 * F(2, n - 2) + c4 * F(8, (n - 4) * (n - 2))
    out[5] = -c5 * F(4, (n - 4) * (n - 2))
    out[6] = c6 * F(4 * (n - 6), (n - 4) * (n - 2) ** 2)
    out[7] = c4 * F(8, (n - 4) * (n - 2))
    out[8] = (-c5 * F(8 * (n + S - 4) * km, (n - 2) ** 2)
              - c4 * (F(8 * km, (n - 4) * (n - 2)) + F(8 * km, (n - 2) ** 2)))
    A = F(2 * (3 * n - 4), (n - 4) * (n - 2) * (n - 1) ** 2) + F(3 * n - 2, 8 * (n - 1) ** 2)
    out[9] = (-c6 * (F(n - 6, 4) * A * (n + S - 6) * (S - 4))
              - c6 * (F(n - 6, 2) * F((n - 6) * (n + S - 6) * (n * S - 4), (n - 4) * (n - 2) * (n - 1) ** 2))
              - c5 * (F(3 * n**3 - 12 * n * n - 36 * n + 64, 16 * (n - 1) ** 2) - F(2 * S, (n - 4) * (n - 1)))
              - c5 * (F((3 * n * n - 28 * n + 28) * (S - 4), 16 * (n - 1) ** 2)
                      + F((n - 4) * (n * S - 4), (n - 2) * (n - 1) ** 2)
                      + F(8 * (n + S - 4), (n - 2) ** 2 * (n - 1) ** 2))
              - c5 * F((3 * n - 4) * ((n - 6) * S + (n * n - 8 * n + 20)), (n - 2) ** 2 * (n - 1) ** 2)
              - c4 * F((3 * n - 4) * (n * n - 8 * n + 20), (n - 4) * (n - 2) ** 2 * (n - 1) ** 2)
              - c4 * (F(3 * n * n - 12 * n + 28, 16 * (n - 1) ** 2) + F(8, (n - 4) * (n - 2) * (n - 1) ** 2)
                      + F(8, (n - 2) ** 2 * (n - 1) ** 2)))
    out[10] = (c6 * (F(n - 6, 2) * A)
               - c6 * (F(n - 6, 2) * (F(2 * (3 * n - 4), (n - 2) ** 2 * (n - 1) ** 2)
                                      + F((n - 6) * (n + 4), 4 * (n - 4) * (n - 1) ** 2))))
    return out[1:]


def cbar_prime(n: int, k: int, m: int, cb: Sequence[ScaledRational]) -> List[ScaledRational]:
    b1, b2, b3, b4, b5, b6, b7, b8, b9, b10 = cb
    S = k + m
    km = k * m
    inner = ((n + S - 6) * km) * b5 - b1 * F(1, 4) + (b4 - b5 * (2 * (n - 4))) * k \
        + (b7 - b5 * (n + S - 2)) * (k * k)
    p1 = b3 - b1 * F(S * (n + S - 2), 8) - inner * F((m - k) * (n + S - 2), 2)
    p2 = ((b5 * (km * (n + S - 6)) - b1 * F(1, 4)) * 2 + (b4 - b5 * (2 * (n - 4))) * S
          + (b7 - b5 * (n + S - 2)) * (k * k + m * m))
    p3 = b2 - b6 * (4 * (n + S - 4)) - b5 * (2 * S)
    p4 = b6 * (-2)
    p5 = (b8 + b2 * F(km, 2) + b5 * (km * (2 * n + S - 8))
          + b6 * (F(km, 2) * (n + S - 4) * (S - 2) - km * (n + k - 2) * (n + m - 2) + km * (2 * n + S - 4)))
    p6 = b6 * (-km)
    br7 = (F((n - 3) ** 2, 2 * (n - 1) ** 2) * (S - 4) * (n + S - 6) + S + F(2 * (S - 2), n - 1)
           - F((n - 3) * (n - 2), (n - 1) ** 2) * (k * k + m * m - 5 * S + 12)
           - F((n - 3) * n, n - 1) * (S - 2)
           + F(S - 4, n - 1) * (n + S - 6)
           - F(n - 3, 2 * (n - 1)) * (k * k + m * m + S * (n - 4)))
    p7 = b9 + b2 * F(1, n - 1) + b5 * F((n - 3) * S, n - 1) + b6 * br7
    p8 = b10 - b6 * F(n * n - 4 * n + 7, (n - 1) ** 2)
    return [p1, p2, p3, p4, p5, p6, p7, p8]


def coeff_pipeline_q6(n: int, k: int, m: int, c: Sequence[ScaledRational] | None = None) -> CoeffSet6:
    if k < 2 or m < 2 or (k + m) % 2:
        raise DomainError(f"need k, m >= 2 with k + m even, got ({k}, {m})")
    if c is None:
        c = radial_constants(n, k + m)
    cb = cbar(n, k, m, c)
    return CoeffSet6(tuple(c), tuple(cb), tuple(cbar_prime(n, k, m, cb)))


def _base(cp, l1, l2) -> ScaledRational:
    return cp[0] + cp[1] * l1 + cp[2] * (l1 * l2) + cp[3] * (l1 * l2 * (l1 + l2))


def _scale(x: ScaledRational, n, k, m) -> ScaledRational:
    return x * N0 if theta(n, k, m) else x


def entry_d_raw(n: int, s: int, q: int, qq: int, cp=None) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    cp = cp or coeff_pipeline_q6(n, k, m).cbarp
    return _base(cp, lam("D", n, s, q), lam("D", n, s, qq))


def entry_w_raw(n: int, s: int, q: int, qq: int) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    cp = coeff_pipeline_q6(n, k, m).cbarp
    g = s * s * (n + s) ** 2
    br = 4 * (q - 1) * (qq - 1) + 2 * (s + 1) * (q + qq - 2) + (s + 1) * (n + 2 * s)
    return (_base(cp, lam("W", n, s, q), lam("W", n, s, qq)) * (2 * s * (n + s))
            + cp[4] * g + cp[5] * (g * br))


def entry_h1_raw(n: int, s: int, q: int, qq: int) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    cp = coeff_pipeline_q6(n, k, m).cbarp
    ks = kappa(n, s)
    k2 = ks * ks
    br6 = (s * (s - 1) * (n + 2 * s - 2) * (n + 2 * s - 4)
           + s * (n + 2 * s - 2) * (4 * q * qq - 2 * (q + qq) - s * s + 2 * s * (q + qq + 1))
           + s * s * (2 * s * (1 - (q + qq)) - 4 * q * qq + 2 * (q + qq) + n - 4))
    br8 = 4 * (q - 1) * (qq - 1) + 2 * s * (q + qq - 2) + s * (n + 2 * s - 2)
    return (_base(cp, lam("H", n, s, q), lam("H", n, s, qq)) * ks
            + cp[4] * (k2 / (s * (n + s - 2)))
            + cp[5] * (k2 / (s * s * (n + s - 2) ** 2) * br6)
            + cp[6] * k2
            + cp[7] * (k2 * br8))


def _h_data(n: int, s: int, q: int, qq: int):
    k, m = 2 * q + s, 2 * qq + s
    G = solve_gamma(ProblemIndex(6, n, k - 2, q - 1)).gamma
    idx_b = ProblemIndex(6, n, m - 2, qq - 1)
    return G, rhs_vector(idx_b, "plain").entries, rhs_vector(idx_b, "primed").entries


def entry_h2_raw(n: int, s: int, q: int, qq: int, data=None) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    if theta(n, k, m):
        return ZERO
    G, b, _ = data or _h_data(n, s, q, qq)
    Fk = (F(n - 6, 4 * (n - 1)) * kappa(n, s)) ** 2
    terms = []
    for i in range(1, qq + 5):
        for j in range(1, q + 3):
            c = b[i - 1] * G[j - 1]
            if not c:
                continue
            e = n + 3 - i - j
            w = F((n - 2 * s - 2 * i - 2 * j + 6) * (n - 2 - 2 * j), e) - (n + 2 - 4 * j - 2 * s)
            terms.append(radial_integral(n - 1 + 2 * s, e) * (c * w))
    return scaled_sum(terms) * (Fk / 2)


def entry_h3_raw(n: int, s: int, q: int, qq: int, data=None) -> ScaledRational:
    k, m = 2 * q + s, 2 * qq + s
    G, b, bp = data or _h_data(n, s, q, qq)
    Fk = (F(n - 6, 4 * (n - 1)) * kappa(n, s)) ** 2
    if theta(n, k, m):
        return ONE * (F(-(n - 6), 2) * Fk * G[q + 1] * b[qq + 3])
    terms = []
    for i in range(1, qq + 5):
        for j in range(1, q + 3):
            e = n + 3 - i - j
            c = G[j - 1] * (F(n - 2 * s - 2 * i - 2 * j + 6, e) * bp[i - 1] - (n - 6) * b[i - 1])
            if c:
                terms.append(radial_integral(n - 1 + 2 * s, e) * c)
    return scaled_sum(terms) * (Fk / 2)


def raw_parts(spec: FamilySpec6) -> dict:
    """Unscaled, unsymmetrized entries: {'m1': ...} and for H also 'm2', 'm3'."""
    n, s = spec.n, spec.s
    qs = list(spec.q_range())
    fn = {"D": entry_d_raw, "W": entry_w_raw, "H": entry_h1_raw}[spec.family]
    parts = {"m1": [[fn(n, s, q, qq) for qq in qs] for q in qs]}
    if spec.family == "H":
        m2, m3 = [], []
        for q in qs:
            r2, r3 = [], []
            for qq in qs:
                data = _h_data(n, s, q, qq)
                r2.append(entry_h2_raw(n, s, q, qq, data))
                r3.append(entry_h3_raw(n, s, q, qq, data))
            m2.append(r2)
            m3.append(r3)
        parts["m2"], parts["m3"] = m2, m3
    return parts


def matrix_q6(spec: FamilySpec6, n0_scaling: bool = True) -> SymMatrix:
    check_spec(spec, 10)
    n, s = spec.n, spec.s
    qs = list(spec.q_range())
    parts = raw_parts(spec)
    rows = []
    for a, q in enumerate(qs):
        row = []
        for c, qq in enumerate(qs):
            k, m = 2 * q + s, 2 * qq + s
            x = parts["m1"][a][c]
            if spec.family == "H":
                x = x + (parts["m2"][a][c] + parts["m2"][c][a]
                         + parts["m3"][a][c] + parts["m3"][c][a]) * F(1, 2)
            row.append(_scale(x, n, k, m) if n0_scaling else x)
        rows.append(row)
    return SymMatrix(rows)


def family_specs(family: str, n: int):
    probe = FamilySpec6(family, n, 0)
    for s in probe.s_range():
        spec = FamilySpec6(family, n, s)
        if len(spec.q_range()):
            yield spec


def scan_q6(n_range, families=("D", "W", "H")):
    """One report per admissible (family, n, s), compared against the expectation table."""
    from .scan import certify_matrix

    return [certify_matrix("q6.definiteness", 6, spec, matrix_q6)
            for family in families for n in n_range for spec in family_specs(family, n)]
