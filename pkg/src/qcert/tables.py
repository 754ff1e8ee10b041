"""Transcribed closed-form polynomials for a0 and the two Hessian sums.

These are an optional cross-check: the primary path derives everything from
the coefficient pipeline in ``noncompact``. Polynomials are stored as
coefficient lists, highest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .exactnum import QuadExtNumber, ScaledRational, gamma_value

F = Fraction

A1_POLY = [11991, -852294, 24029888, -334408272, 2238186992, -4359884256,
           -20759728000, 78857215488, 8339503104, -124262055936]
A2_POLY = [
    10989225, -2987756460, 378031055952, -29507030164560,
    1587504902043088, -62286471762681984, 1838499343113943552,
    -41499228022465995264, 720749814386841727744, -9608374930260373355520,
    97259447027246828171264, -732525312300365433016320,
    3980505368562305038315520, -15065834669595927057334272,
    40459950924707392220168192, -103397876171264024797249536,
    339819087637723673505300480, -740098364899745956009869312,
    -394627146196739293779591168, 4735360453239104195348398080,
    -3600382007256808416243351552, -13598394732655532252847931392,
    27513309069085642550126051328, -15449764981452555902999592960,
]
A3_POLY = [3, -24, -4, 208, 384]

TOTAL_A1 = [16575, -1195250, 34609680, -498405392, 3446826416, -6825460384,
            -32854222976, 140880911360, -106071106560, 18351046656]
TOTAL_A0 = [
    -62587200, 9336113958, -606097935636, 22249394723672, -498762775048144,
    6750998185878816, -47179375607237312, 11091250449666688,
    2371218672260016384, -14692080003168780288, 16691759536983257088,
    91210104770428968960, -251248956860387328000, 196206255022978105344,
    -29818376183737221120,
]
M2_A1 = [3315, -210762, 5346128, -67844560, 431303152, -1014186016,
         -2114580096, 14491618304, -18999469056, 4521295872]
M2_A0 = [
    -9586980, 1357155654, -82964460564, 2837453335768, -58221379164240,
    692018215328032, -3505745916586176, -18173061039999360,
    375084465957971200, -1981203034836353024, 2356795745930203136,
    11804945493335236608, -35984415983967043584, 27690912838249611264,
    -1017973919522488320,
]


def horner(coeffs, x):
    return reduce(lambda acc, c: acc * x + c, coeffs, 0)


def _prod(n, roots):
    return reduce(lambda acc, r: acc * (n - r), roots, 1)


def a0_from_tables(n: int) -> QuadExtNumber:
    """(A1 + sqrt(A2)) / A3."""
    head = _prod(n, (26, 24, 22, 20)) * (n + 4)
    A1 = head * horner(A1_POLY, n)
    A2 = head * horner(A2_POLY, n)
    A3 = _prod(n, (26, 24, 22, 20, 18, 16, 14, 12, 4, 2)) * horner(A3_POLY, n)
    return QuadExtNumber(F(A1, A3), F(1, A3), F(A2))


def gamma_factor(n: int) -> ScaledRational:
    """Gamma(n/2 - 12) Gamma(n/2 + 3) / Gamma(n + 1)."""
    return gamma_value(F(n, 2) - 12) * gamma_value(F(n, 2) + 3) / gamma_value(n + 1)


def hessian_sum_tables(n: int):
    """Coefficients (alpha, beta, gamma) in a0 of the total and m2 sums, as ScaledRationals."""
    pre = gamma_factor(n) * F((n - 6) ** 2, 1024 * (n - 2) * (n + 2) * (n + 4))
    even = _prod(n, (24, 22, 20, 18))
    total = (
        96 * even * _prod(n, (16, 14, 12, 10, 3)) * (n - 2) ** 2,
        even * (n - 2) * horner(TOTAL_A1, n),
        horner(TOTAL_A0, n),
    )
    m2 = (0, even * (n - 2) * horner(M2_A1, n), horner(M2_A0, n))
    return tuple(pre * c for c in total), tuple(pre * c for c in m2)
