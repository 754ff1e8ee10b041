"""Non-compactness certificates for n >= 27: the scaling-direction polynomial
P(delta) and the root a0, the translation-direction Hessian sums, the w-moment
relation between cbar' coefficient sets, and the two-term discriminant."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from .exactnum import (
    DegeneracyError,
    DomainError,
    HomogeneityError,
    QuadExtNumber,
    ScaledRational,
    ZERO,
    quadext_sign,
    scaled_sum,
)
from .pohozaev6 import cbar, coeff_pipeline_q6, entry_d_raw, radial_integrands, shifted, theta
from .radial import RadialExpr, bubble, integrate_moment, radial_integral
from .report import FAIL, PASS, VerificationReport

F = Fraction
I = radial_integral  # noqa: E741

N_MIN = 27
A_TAIL = (-3634, 803, -62, 1)
QS = range(5)


def check_dimension(n: int) -> None:
    if n < N_MIN:
        raise DomainError(f"non-compactness checks need n >= {N_MIN}, got {n}")


def lam(n: int, q: int) -> Fraction:
    return F(-q * (n + 2 * q + 2))


@dataclass(frozen=True)
class Quadratic:
    """alpha x^2 + beta x + gamma, with a pi^(h/2) factor stripped off."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    h: int = 0

    @property
    def disc(self) -> Fraction:
        return self.beta * self.beta - 4 * self.alpha * self.gamma

    def at(self, x):
        return (x * x) * self.alpha + x * self.beta + self.gamma

    def coefficients(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


def _common_h(values: Sequence[ScaledRational]) -> int:
    hs = {v.h for v in values if not v.is_zero()}
    if len(hs) > 1:
        raise HomogeneityError(f"mixed pi powers {sorted(hs)}")
    return hs.pop() if hs else 0


def quadratic_in_a0(M: Sequence[Sequence[ScaledRational]], tail: Sequence[int] = A_TAIL) -> Quadratic:
    """sum_{q,q'} M[q][q'] a_q a_q' with a = [a0, *tail], as a quadratic in a0."""
    a = [None] + [F(x) for x in tail]
    size = len(a)
    alpha = M[0][0]
    beta = scaled_sum((M[0][j] + M[j][0]) * a[j] for j in range(1, size))
    gamma = scaled_sum(M[i][j] * (a[i] * a[j]) for i in range(1, size) for j in range(1, size))
    h = _common_h([alpha, beta, gamma])
    return Quadratic(alpha.coeff, beta.coeff, gamma.coeff, h)


# ---------------------------------------------------------------- scaling direction

def d2_matrix(n: int) -> List[List[ScaledRational]]:
    """m^{D,2} restricted to q, q' = 0..4, without the log-branch scaling."""
    check_dimension(n)
    rows = []
    for q in QS:
        row = []
        for qq in QS:
            if theta(n, 2 * q + 2, 2 * qq + 2):
                raise DegeneracyError("log branch reached", where=(n, q, qq))
            row.append(entry_d_raw(n, 2, q, qq))
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ScalingQuadratics:
    n: int
    P1: Quadratic
    Pp1: Quadratic
    Ppp1: Quadratic


def scaling_quadratics(n: int, M=None) -> ScalingQuadratics:
    """P(1), P'(1), P''(1) as quadratics in a0."""
    M = M or d2_matrix(n)

    def weighted(wt):
        return [[M[q][qq] * wt(2 * q + 2 + 2 * qq + 2) for qq in QS] for q in QS]

    return ScalingQuadratics(
        n,
        quadratic_in_a0(weighted(lambda S: F(-1, S))),
        quadratic_in_a0(weighted(lambda S: -1)),
        quadratic_in_a0(weighted(lambda S: -(S - 1))),
    )


def larger_root(Q: Quadratic) -> QuadExtNumber:
    if Q.alpha == 0:
        raise DegeneracyError("leading coefficient vanishes")
    if Q.disc <= 0:
        raise DegeneracyError(f"nonpositive discriminant {Q.disc}")
    return QuadExtNumber(-Q.beta / (2 * Q.alpha), F(1) / (2 * abs(Q.alpha)), Q.disc)


def compute_a0(n: int, sq: ScalingQuadratics | None = None) -> QuadExtNumber:
    sq = sq or scaling_quadratics(n)
    return larger_root(sq.Pp1)


def verify_delta_direction(n: int) -> VerificationReport:
    check_dimension(n)
    sq = scaling_quadratics(n)
    params = {"n": n}
    disc = sq.Pp1.disc
    if disc <= 0:
        return VerificationReport(
            "noncompact.delta_direction", params, FAIL,
            expected="disc > 0", actual=f"disc = {disc}", witness={"disc": disc},
        )
    a0 = larger_root(sq.Pp1)
    signs = tuple(quadext_sign(Q.at(a0)) for Q in (sq.P1, sq.Pp1, sq.Ppp1))
    ok = signs == (-1, 0, 1)
    return VerificationReport(
        "noncompact.delta_direction", params, PASS if ok else FAIL,
        expected="signs of P(1), P'(1), P''(1) = (-, 0, +)",
        actual=f"signs {signs}",
        witness={"a0": a0, "signs": list(signs), "P1": sq.P1.coefficients(),
                 "Pp1": sq.Pp1.coefficients(), "Ppp1": sq.Ppp1.coefficients()},
    )


def n52_quadratic(n: int, M=None) -> Quadratic:
    """-1/2 sum_{q,q'=0}^{1} m^{D,2} a_q a_q' with a = [a0, 1]."""
    M = M or d2_matrix(n)
    half = [[M[q][qq] * F(-1, 2) for qq in range(2)] for q in range(2)]
    return quadratic_in_a0(half, tail=(1,))


def verify_n52_remark(n: int) -> VerificationReport:
    check_dimension(n)
    disc = n52_quadratic(n).disc
    sign = (disc > 0) - (disc < 0)
    want_positive = n >= 52
    ok = (sign > 0) == want_positive
    return VerificationReport(
        "noncompact.n52", {"n": n}, PASS if ok else FAIL,
        expected="disc > 0" if want_positive else "disc <= 0",
        actual=f"sign {sign}", witness={"disc": disc, "sign": sign},
    )


# ---------------------------------------------------------------- w-moment relation

def w_moment_constants(n: int, S: int) -> List[ScaledRational]:
    """c_{w,1..6}: the c1..c6 integrands with Z replaced by w."""
    w = bubble(n, 6)
    return [integrate_moment(f, n + S + off) for f, off in radial_integrands(n, Z=w)]


def verify_k_plus_m_relation(n: int, k: int, m: int) -> VerificationReport:
    check_dimension(n)
    params = {"n": n, "k": k, "m": m}
    S = k + m
    cs = coeff_pipeline_q6(n, k, m)
    cw = coeff_pipeline_q6(n, k, m, w_moment_constants(n, S))
    factor = F(-S, 2)
    bad = [i + 1 for i in range(8) if cs.cbarp[i] != cw.cbarp[i] * factor]
    c1_differs = cs.c[0] != cw.c[0] * factor
    # entry level: 1/2 base(cbar'_w) = -m^{D,2}/(k+m)
    q, qq = (k - 2) // 2, (m - 2) // 2
    lhs = entry_d_raw(n, 2, q, qq, cp=cw.cbarp) * F(1, 2)
    rhs = entry_d_raw(n, 2, q, qq, cp=cs.cbarp) * F(-1, S)
    entry_ok = lhs == rhs
    ok = not bad and c1_differs and entry_ok
    return VerificationReport(
        "noncompact.k_plus_m", params, PASS if ok else FAIL,
        expected="cbar'_i = -(k+m)/2 cbar'_w,i for i=1..8; c_1 relation fails; entry relation holds",
        actual=f"mismatched {bad}; c_1 differs: {c1_differs}; entry: {entry_ok}",
        witness=None if ok else {"mismatched": bad, "c1_differs": c1_differs,
                                 "entry_lhs": lhs, "entry_rhs": rhs},
    )


# ---------------------------------------------------------------- Hessian constants

def c_one(n: int, S: int) -> List[ScaledRational]:
    N = n + S
    return [
        (I(N - 1, n - 1) * (n * n - 8) + I(N + 1, n - 1) * (4 * (n - 3))) * (2 * (n - 6) ** 2 * (n - 4)),
        (I(N - 3, n - 1) * (n * (n + 2)) + I(N - 1, n - 1) * (8 * (n + 1)) + I(N + 1, n - 1) * 16)
        * (-(n - 6) ** 2 * (n - 4)),
        (I(N - 3, n - 2) * (n + 2) + I(N - 1, n - 2) * 4) * (-2 * (n - 6) ** 2 * (n - 4)),
        I(N - 3, n - 3) * (-(n - 6) ** 2 * (n - 4)),
        I(N - 5, n - 4) * ((n - 6) ** 2),
        I(N - 7, n - 5) * (-(n - 6)),
    ]


def c_two(n: int, S: int) -> List[ScaledRational]:
    N = n + S
    return [
        (I(N + 1, n) * (n + 4) + I(N + 3, n) * 4) * (-2 * (n - 6) ** 2 * (n - 4) ** 2 * (n - 2)),
        (I(N - 1, n) * (n * (n + 4)) + I(N + 1, n) * (8 * (n + 2)) + I(N + 3, n) * 16)
        * ((n - 6) ** 2 * (n - 4) * (n - 2)),
        (I(N - 1, n - 1) * (n * n - 8) + I(N + 1, n - 1) * (4 * (n - 3))) * (2 * (n - 6) ** 2 * (n - 4)),
        I(N - 1, n - 2) * ((n - 6) ** 2 * (n - 4) ** 2),
        I(N - 3, n - 3) * (-(n - 6) ** 2 * (n - 4)),
        I(N - 5, n - 4) * ((n - 6) * (n - 4)),
    ]


def c_three(n: int, S: int) -> List[ScaledRational]:
    N = n + S
    two = c_two(n, S)
    return [
        (I(N + 1, n) * (n + 4) + I(N + 3, n) * 4) * (-(n - 6) ** 2 * (n - 4) ** 2 * (n - 2)),
        (I(N - 1, n) * ((n + 2) ** 2) + I(N + 1, n) * (8 * (n + 2)) + I(N + 3, n) * 16)
        * ((n - 6) ** 2 * (n - 4) ** 2),
        two[2],
        two[3],
        two[4],
        I(N - 5, n - 4) * ((n - 6) ** 2),
        (I(N - 3, n - 2) * (n + 2) + I(N - 1, n - 2) * 4) * (-2 * (n - 6) ** 2 * (n - 4)),
        I(N - 5, n - 4) * ((n - 6) ** 2),
    ]


def m_four_bracket(n: int, S: int) -> ScaledRational:
    """(n-6)^2 (n-4)/2 [...]: half the radial integral of 2 (Lap^2 w)' w' + ((Lap w)')^2."""
    N = n + S
    br = (I(N - 1, n) * (3 * n ** 3 + 8 * n * n - 20 * n - 48) + I(N + 1, n) * (16 * (n * n - 8))
          + I(N + 3, n) * (32 * (n - 3)))
    return br * F((n - 6) ** 2 * (n - 4), 2)


def _hess(f: RadialExpr) -> RadialExpr:
    """u'' - u'/r."""
    d = f.deriv()
    return d.deriv() - d.div_r()


def hessian_integrands(n: int) -> Dict[str, list]:
    """Integrand definitions (expr, r-power offset from n + k + m) for every constant family."""
    w = bubble(n, 6)
    L = shifted(w, n)
    dw, dL = w.deriv(), L.deriv()
    pw, pL = _hess(w), _hess(L)
    dw_r = dw.div_r().deriv()
    dL_r = dL.div_r().deriv()
    return {
        "I": [(dL * dw_r + dw * dL_r, -3), (dL * L, -4), (dL * dw * 2, -5),
              (dw * dw_r, -5), (dw * dw, -7), (dw * w, -8)],
        "II": [(pL * dw_r + pw * dL_r, -2), (pL * L, -3), (pL * dw + pw * dL, -4),
               (pw * dw_r, -4), (pw * dw, -6), (pw * w, -7)],
        "III": [(pL * pw, -3), (dL * dL, -3), (pL * dw + pw * dL, -4), (pw * pw, -5),
                (pw * dw, -6), (dw * dw, -7), (dL * dw * 2, -5), (dw * dw, -7)],
        "IV": [((shifted(L, n).deriv() * dw * 2 + dL * dL) * F(1, 2), -3)],
    }


def constants_by_integration(n: int, S: int) -> Dict[str, List[ScaledRational]]:
    return {name: [integrate_moment(f, n + S + off) for f, off in items]
            for name, items in hessian_integrands(n).items()}


def constants_closed_form(n: int, S: int) -> Dict[str, List[ScaledRational]]:
    return {"I": c_one(n, S), "II": c_two(n, S), "III": c_three(n, S), "IV": [m_four_bracket(n, S)]}


def cross_ties_hold(n: int, S: int) -> bool:
    two, three = c_two(n, S), c_three(n, S)
    return (three[0] == two[0] * F(1, 2) and three[2] == two[2]
            and three[3] == two[3] and three[4] == two[4])


def cbar_one(n: int, k: int, m: int, c=None) -> Dict[int, ScaledRational]:
    c = c or c_one(n, k + m)
    return {i + 1: -v for i, v in enumerate(cbar(n, k, m, c)[:7])}


def cbar_two(n: int, k: int, m: int, c=None) -> Dict[int, ScaledRational]:
    c1, c2, c3, c4, c5, c6 = c or c_two(n, k + m)
    S, km = k + m, k * m
    g = (n - 6) * (n - 4) * (n - 2) + 16
    return {
        1: (-c6 * F((S - 6) * (n + S - 4) * (S - 4) * (n + S - 2) * (n - 6), 4 * (n - 1))
            - c3 * F(n * n - 2 * n - 8 + (n - 10) * (S - 2), 2 * (n - 1))
            + c2 * F(n - 2, 4 * (n - 1))
            - c1 * F(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1))
            - c5 * F((S - 4) * (n + S - 2) * (n + S - 4) * (n - 6), 2 * (n - 1))
            - c4 * F((S - 4) * (n + S - 2) * g, 2 * (n - 4) * (n - 2) * (n - 1))
            - c4 * F(8 * (n - 2) * S * S - 8 * (n - 6) * S + 16 * (n - 4), (n - 4) * (n - 2) * (n - 1))),
        2: (-c6 * F((S - 6) * (n + S - 4) * 2 * (n - 6), (n - 2) ** 2)
            - c5 * F(4 * (n - 6) * S + 4 * (n * n - 8 * n + 20), (n - 2) ** 2)
            - c4 * F(4 * (n * n - 8 * n + 20), (n - 4) * (n - 2) ** 2)),
        3: -c1 * F(2 * km, n - 2) - c4 * F((S - 2) * (n + S) * 4 * km, (n - 4) * (n - 2)),
        4: c3 * F(2, n - 2) - c4 * F(8, (n - 4) * (n - 2)),
        5: c5 * F(4, (n - 4) * (n - 2)),
        6: -c6 * F(4 * (n - 6), (n - 4) * (n - 2) ** 2),
        7: -c4 * F(8, (n - 4) * (n - 2)),
        8: (-c6 * F((S - 4) * (n + S - 4) * (n - 6), n - 1)
            - c4 * F(g, (n - 4) * (n - 2) * (n - 1))
            - c5 * F((n + S - 4) * (n - 6), n - 1)),
        9: -c6 * F(4 * (n - 6), (n - 2) ** 2),
        10: -c4 * F(8 * km, (n - 4) * (n - 2)),
    }


def cbar_three(n: int, k: int, m: int, c=None) -> Dict[int, ScaledRational]:
    c1, c2, c3, c4, c5, c6, c7, c8 = c or c_three(n, k + m)
    S, km = k + m, k * m
    g = (n - 6) * (n - 4) * (n - 2) + 16
    e = (n - 4) * (n - 2)
    return {
        1: (-c6 * F((S - 6) * (n + S - 4) * (S - 4) * (n + S - 2) * (n - 6), 4 * (n - 1))
            + c3 * F(n * n - 4 * n + 12, (n - 2) * (n - 1))
            + c2 * F(n - 2, 4 * (n - 1))
            + c1 * F(n * n - 4 * n + 12, (n - 2) * (n - 1))
            + c5 * F((S - 4) * (n + S - 2) * (n - 6), n - 1)
            + c5 * F((S - 2) * (n + S - 2) * 16, e * (n - 1))
            + c5 * F((S - 1) * (n + S - 2) * 8, (n - 4) * (n - 1))
            + c4 * F((S - 4) * (n + S - 2) * g, 2 * e * (n - 1))
            + c4 * F(8 * (n - 2) * S * S - 8 * (n - 6) * S + 16 * (n - 4), e * (n - 1))
            + c8 * F((n + S - 4) * (n + S - 2) * 8, (n - 4) * (n - 1))),
        2: (-c6 * F((S - 6) * (n + S - 4) * 2 * (n - 6), (n - 2) ** 2)
            + c5 * F(8 * (n * n - 8 * n + 20), (n - 4) * (n - 2) ** 2)
            + c4 * F(4 * (n * n - 8 * n + 20), (n - 4) * (n - 2) ** 2)),
        3: c1 * F(4 * km, n - 2) + c4 * F((S - 2) * (n + S) * 4 * km, e),
        4: c4 * F(8, e),
        5: ZERO,
        6: -c6 * F(4 * (n - 6), (n - 4) * (n - 2) ** 2),
        7: c4 * F(8, e),
        8: (-c6 * F((S - 4) * (n + S - 4) * (n - 6), n - 1)
            + c4 * F(g, e * (n - 1))
            + c5 * F(2 * (n - 6), n - 1)
            - c5 * F((S - 1) * 8, (n - 4) * (n - 1))
            + c7 * F(n * n - 4 * n + 12, 2 * (n - 2) * (n - 1))
            - c8 * F((n + S - 4) * 8, (n - 4) * (n - 1))
            + c8 * F((S - 2) * (n + S - 4) * g, 2 * e * (n - 1))),
        9: -c6 * F(4 * (n - 6), (n - 2) ** 2) + c8 * (F(4 * (n - 4), (n - 2) ** 2)
                                                     + F(16, (n - 4) * (n - 2) ** 2)),
        10: c4 * F(8 * km, e),
        11: c3 * F(2, n - 2) + c5 * F((S - 2) * (n + S - 2) * 4, e),
        12: c5 * F(16, e),
        13: -c7 * F(4, n - 2) - c8 * F((S - 2) * (n + S - 4) * 8, e),
        14: c8 * F((n + S - 4) * 8, e),
        15: c8 * (F(-48, (n - 2) ** 2) + F(16, (n - 2) ** 2) + F(32, e)),
        16: c7 * F(2, n - 2) + c8 * F((S - 2) * (n + S - 4) * 4, e),
        17: c8 * F(8, e),
    }


# ---------------------------------------------------------------- Hessian matrices

def _bracket(cb, n, q, qq, k, m) -> ScaledRational:
    l1, l2 = lam(n, q), lam(n, qq)
    p1, p2 = lam(n, q - 1), lam(n, qq - 1)
    return (cb[2] * (l1 * l2) + cb[3] + cb[4] * (k * l2 + m * l1)
            - cb[5] * (2 * (k * p2 * l2 + m * p1 * l1))
            - cb[6] * (2 * (p2 + p1) * l2 * l1)
            + cb[7] * (k * k * l2 + m * m * l1))


@dataclass(frozen=True)
class HessianCoeffs:
    n: int
    mats: Dict[str, List[List[ScaledRational]]]

    def __getitem__(self, name):
        return self.mats[name]


MATRIX_NAMES = ("I", "II,1", "II,2", "III,1", "III,2", "IV")


def hessian_entries(n: int, q: int, qq: int) -> Dict[str, ScaledRational]:
    k, m = 2 * q + 2, 2 * qq + 2
    S = k + m
    c1 = cbar_one(n, k, m)
    c2 = cbar_two(n, k, m)
    c3 = cbar_three(n, k, m)
    l1, l2 = lam(n, q), lam(n, qq)
    Q = q + qq + q * qq
    a = n * (n + 2)
    b = a * (n + 4)
    out = {}
    out["I"] = _bracket(c1, n, q, qq, k, m) * F(1, 2 * a) - c1[1] * (F(Q, 2 * a) + F(1, 4 * n))
    B2 = _bracket(c2, n, q, qq, k, m)
    out["II,1"] = B2 * F(2, b) - c2[1] * (F(2 * Q, b) + F(1, 2 * a))
    out["II,2"] = (B2 * F(1, 2 * b) - c2[1] * (F(Q, 2 * b) + F(1, 4 * a))
                   - c2[8] * (F(Q, 2 * a) + F(1, 4 * n))
                   + (c2[9] * (l1 * l2) + c2[10]) * F(1, 2 * a))
    B3 = _bracket(c3, n, q, qq, k, m)
    y_k = c3[11] * m + c3[12] * (k * l2) + c3[16] * F(n + S - 2, 2)
    y_m = c3[11] * k + c3[12] * (m * l1) + c3[16] * F(n + S - 2, 2)
    d_k = c3[17] * l2 - c3[16] * F(1, 2)
    d_m = c3[17] * l1 - c3[16] * F(1, 2)
    pl = (c3[13] * (l1 + l2) + c3[14] * (m * l1 + k * l2) + c3[15] * (l1 * l2)) * F(1, 2 * a)
    out["III,1"] = (B3 * F(2, b) - c3[1] * (F(2 * Q, b) + F(1, 2 * a)) + pl
                    + y_k * F(n + 4 + 4 * q, b) + y_m * F(n + 4 + 4 * qq, b)
                    + d_k * (F(8 * q * (q - 1), b) + F(4 * q, a))
                    + d_m * (F(8 * qq * (qq - 1), b) + F(4 * qq, a)))
    out["III,2"] = (B3 * F(1, 2 * b) - c3[1] * (F(Q, 2 * b) + F(1, 4 * a))
                    - c3[8] * (F(Q, 2 * a) + F(1, 4 * n))
                    + (c3[9] * (l1 * l2) + c3[10]) * F(1, 2 * a)
                    + y_k * F(q, b) + y_m * F(qq, b)
                    + d_k * (F(2 * q * (q - 1), b) + F(q, a))
                    + d_m * (F(2 * qq * (qq - 1), b) + F(qq, a)))
    out["IV"] = m_four_bracket(n, S) * F(1, 2 * a)
    return out


def hessian_coeffs(n: int) -> HessianCoeffs:
    check_dimension(n)
    mats = {name: [[None] * 5 for _ in QS] for name in MATRIX_NAMES}
    for q in QS:
        for qq in QS:
            for name, v in hessian_entries(n, q, qq).items():
                mats[name][q][qq] = v
    return HessianCoeffs(n, mats)


def combined_matrices(H: HessianCoeffs):
    m1 = [[-H["II,1"][q][qq] - H["III,1"][q][qq] + H["IV"][q][qq] for qq in QS] for q in QS]
    m2 = [[-H["I"][q][qq] - H["II,2"][q][qq] - H["III,2"][q][qq] for qq in QS] for q in QS]
    return m1, m2


@dataclass(frozen=True)
class HessianSums:
    n: int
    a0: QuadExtNumber
    total: Quadratic
    m2: Quadratic
    sum_total: QuadExtNumber
    sum_m2: QuadExtNumber


def hessian_sums(n: int, a0: QuadExtNumber | None = None) -> HessianSums:
    """sum (m1 + m2) a a' and sum m2 a a' at delta = 1, pi powers stripped."""
    check_dimension(n)
    a0 = a0 if a0 is not None else compute_a0(n)
    m1, m2 = combined_matrices(hessian_coeffs(n))
    tot = [[m1[q][qq] + m2[q][qq] for qq in QS] for q in QS]
    Qt, Q2 = quadratic_in_a0(tot), quadratic_in_a0(m2)
    if Qt.h != Q2.h and Qt.alpha and Q2.beta:
        raise HomogeneityError("Hessian sums carry different pi powers")
    return HessianSums(n, a0, Qt, Q2, Qt.at(a0), Q2.at(a0))


def verify_hessian(n: int) -> VerificationReport:
    hs = hessian_sums(n)
    signs = (quadext_sign(hs.sum_total), quadext_sign(hs.sum_m2))
    ok = signs == (1, 1)
    return VerificationReport(
        "noncompact.hessian", {"n": n}, PASS if ok else FAIL,
        expected="both sums > 0", actual=f"signs {signs}",
        witness={"signs": list(signs), "total": hs.total.coefficients(),
                 "m2": hs.m2.coefficients(), "h": hs.total.h},
    )


def verify_constants(n: int, S: int) -> VerificationReport:
    """Closed forms vs. radial integration, plus the II/III cross-ties."""
    closed = constants_closed_form(n, S)
    integ = constants_by_integration(n, S)
    bad = [f"{name}{i + 1}" for name in closed
           for i, (x, y) in enumerate(zip(closed[name], integ[name])) if x != y]
    ties = cross_ties_hold(n, S)
    ok = not bad and ties
    return VerificationReport(
        "noncompact.hessian_constants", {"n": n, "S": S}, PASS if ok else FAIL,
        expected="closed forms equal integrals; cross-ties hold",
        actual=f"mismatches {bad}; cross-ties {ties}",
        witness=None if ok else {"mismatches": bad, "cross_ties": ties},
    )


def verify_tables(n: int) -> VerificationReport:
    """Optional cross-check against the transcribed closed-form polynomials."""
    from .exactnum import quadext_equal
    from .tables import a0_from_tables, hessian_sum_tables

    check_dimension(n)
    a0 = compute_a0(n)
    a0_ok = quadext_equal(a0, a0_from_tables(n))
    hs = hessian_sums(n, a0)
    want_t, want_m = hessian_sum_tables(n)
    got_t = tuple(ScaledRational(c, hs.total.h) for c in hs.total.coefficients())
    got_m = tuple(ScaledRational(c, hs.m2.h) for c in hs.m2.coefficients())
    ok = a0_ok and got_t == want_t and got_m == want_m
    return VerificationReport(
        "noncompact.tables", {"n": n}, PASS if ok else FAIL,
        expected="pipeline equals transcribed polynomials",
        actual=f"a0 {a0_ok}, total {got_t == want_t}, m2 {got_m == want_m}",
        witness=None if ok else {"a0": a0, "a0_table": a0_from_tables(n),
                                 "total": got_t, "total_table": want_t,
                                 "m2": got_m, "m2_table": want_m},
    )
