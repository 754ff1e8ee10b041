"""Exact inertia of symmetric rational matrices.

Primary path: characteristic polynomial (Faddeev-LeVerrier), square-free
decomposition, Sturm counts. Second path: leading principal minors. The two
must agree on the positive-definite question or EngineDisagreement is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from .exactnum import InputError, SymMatrix

Poly = List[Fraction]  # coefficients, lowest degree first

PD = "positive_definite"
PSD_SINGULAR = "positive_semidefinite_singular"
ND = "negative_definite"
NSD_SINGULAR = "negative_semidefinite_singular"
INDEFINITE = "indefinite"


class EngineDisagreement(RuntimeError):
    """Sturm counts and Sylvester minors gave different answers."""


@dataclass(frozen=True)
class DefinitenessVerdict:
    classification: str
    eigen_sign_counts: Tuple[int, int, int]  # (negative, zero, positive)
    witness: Optional[dict] = None

    @property
    def is_pd(self) -> bool:
        return self.classification == PD


# -- polynomial helpers ---------------------------------------------------

def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deriv(p: Poly) -> Poly:
    return [p[i] * i for i in range(1, len(p))]


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
    return _trim(q), _trim(a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_decomposition(p: Poly) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: p = const * prod f_i^i with f_i square-free and coprime."""
    p = _trim(list(p))
    if len(p) <= 1:
        return []
    out = []
    dp = poly_deriv(p)
    a = poly_gcd(p, dp)
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = _trim([ci - bi for ci, bi in _zip_pad(c, poly_deriv(b))])
    i = 1
    while len(b) > 1:
        g = poly_gcd(b, d) if d else list(b)
        b = poly_divmod(b, g)[0]
        if len(g) > 1:
            out.append((g, i))
        c = poly_divmod(d, g)[0] if d else []
        d = _trim([ci - bi for ci, bi in _zip_pad(c, poly_deriv(b))])
        i += 1
    return out


def _zip_pad(a: Poly, b: Poly):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def sturm_sequence(p: Poly) -> List[Poly]:
    """Sturm chain, each member rescaled by a positive factor to primitive integer coefficients."""
    seq = [_trim(list(p)), poly_deriv(p)]
    while True:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        scale = abs(r[-1])
        seq.append([-c / scale for c in r])
    return [_primitive(q) for q in seq]


def _primitive(p: Poly) -> List[int]:
    L = 1
    for c in p:
        L = lcm(L, Fraction(c).denominator)
    ints = [int(c * L) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _sign_at(q: List[int], x: Fraction) -> int:
    """Sign of q(x) using integers only: den^deg * q(num/den)."""
    num, den = x.numerator, x.denominator
    acc, pw = 0, 1
    for c in reversed(q):
        acc = acc * num + c * pw
        pw *= den
    return _sgn(acc)


def _changes(signs: Sequence[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def _signs_at(seq: List[Poly], x) -> List[int]:
    if x == "-inf":
        return [_sgn(q[-1]) * (-1 if (len(q) - 1) % 2 else 1) for q in seq]
    if x == "+inf":
        return [_sgn(q[-1]) for q in seq]
    return [_sign_at(q, Fraction(x)) for q in seq]


def sturm_count(seq: List[Poly], lo, hi) -> int:
    """Distinct roots in (lo, hi]; lo, hi are Fractions or '-inf' / '+inf'."""
    return _changes(_signs_at(seq, lo)) - _changes(_signs_at(seq, hi))


# -- matrices --------------------------------------------------------------

def _as_rational_rows(M) -> List[List[Fraction]]:
    if isinstance(M, SymMatrix):
        return M.rational_part()
    rows = [[Fraction(x) for x in r] for r in M]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InputError("matrix must be square and nonempty")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise InputError(f"matrix not symmetric at ({i}, {j})")
    return rows


def _integerize(rows: List[List[Fraction]]) -> List[List[int]]:
    """Multiply by the positive lcm of denominators (inertia is unchanged)."""
    L = 1
    for r in rows:
        for x in r:
            L = lcm(L, x.denominator)
    return [[int(x * L) for x in r] for r in rows]


def charpoly(rows) -> Poly:
    """det(x I - A) by Faddeev-LeVerrier, lowest degree first."""
    n = len(rows)
    A = [[Fraction(x) for x in r] for r in rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        M = [[sum((A[i][l] * M[l][j] for l in range(n)), Fraction(0)) + (c_prev if i == j else 0)
              for j in range(n)] for i in range(n)]
        tr = sum((sum((A[i][l] * M[l][i] for l in range(n)), Fraction(0)) for i in range(n)),
                 Fraction(0))
        coeffs[n - k] = -tr / k
    return coeffs


def leading_minors(rows) -> List[Fraction]:
    """All leading principal minors, each an independent determinant."""
    n = len(rows)
    out: List[Fraction] = []
    for k in range(1, n + 1):
        out.append(det([r[:k] for r in rows[:k]]))
    return out


def det(rows) -> Fraction:
    """Determinant by Bareiss elimination with row pivoting."""
    A = [list(r) for r in rows]
    integral = all(isinstance(x, int) for r in A for x in r)
    if not integral:
        A = [[Fraction(x) for x in r] for r in A]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num // prev if integral else num / prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1])


def sign_counts(p: Poly) -> Tuple[int, int, int]:
    """(negative, zero, positive) root counts with multiplicity for a real-rooted p."""
    p = _trim(list(p))
    zero = 0
    while zero < len(p) and p[zero] == 0:
        zero += 1
    q = p[zero:]
    neg = pos = 0
    for f, mult in squarefree_decomposition(q):
        seq = sturm_sequence(f)
        neg += mult * sturm_count(seq, "-inf", Fraction(0))
        pos += mult * sturm_count(seq, Fraction(0), "+inf")
    return neg, zero, pos


def isolate_negative_root(p: Poly, max_steps: int = 400) -> Optional[Tuple[Fraction, Fraction]]:
    """An interval (lo, hi], hi < 0, holding exactly one root of the square-free part."""
    p = _trim(list(p))
    while p and p[0] == 0:
        p = p[1:]
    if len(p) <= 1:
        return None
    f = poly_divmod(p, poly_gcd(p, poly_deriv(p)))[0]
    seq = sturm_sequence(f)
    if sturm_count(seq, "-inf", Fraction(0)) == 0:
        return None
    # bracket the most negative root between consecutive powers of two, then bisect
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1])
    e_hi = max(1, int(bound).bit_length())
    inv_bound = 1 + max(abs(c / f[0]) for c in f[1:])
    e_lo = -int(inv_bound).bit_length() - 1
    while e_hi - e_lo > 1:
        e = (e_hi + e_lo) // 2
        if sturm_count(seq, "-inf", -Fraction(2) ** e) >= 1:
            e_lo = e
        else:
            e_hi = e
    lo, hi = -Fraction(2) ** e_hi, -Fraction(2) ** e_lo
    for _ in range(max_steps):
        if sturm_count(seq, lo, hi) == 1:
            return lo, hi
        mid = (lo + hi) / 2
        if sturm_count(seq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def classify(M) -> DefinitenessVerdict:
    rows = _integerize(_as_rational_rows(M))
    n = len(rows)
    p = charpoly(rows)
    neg, zero, pos = sign_counts(p)
    if neg + zero + pos != n:
        raise EngineDisagreement(f"root counts {neg, zero, pos} do not sum to {n}")
    if neg == 0 and zero == 0:
        cls = PD
    elif neg == 0:
        cls = PSD_SINGULAR
    elif pos == 0 and zero == 0:
        cls = ND
    elif pos == 0:
        cls = NSD_SINGULAR
    else:
        cls = INDEFINITE

    minors = leading_minors(rows)
    first_bad = next((k for k, m in enumerate(minors) if m <= 0), None)
    if (first_bad is None) != (cls == PD):
        raise EngineDisagreement(
            f"Sturm says {cls} but leading minors are {'all positive' if first_bad is None else 'not all positive'}"
        )
    witness = None
    if cls != PD:
        # minors of the integerized matrix have the sign of the original minors
        witness = {"minor_index": first_bad + 1, "minor_sign": _sgn(minors[first_bad]),
                   "minor_value": _original_minor(M, first_bad + 1)}
        if neg:
            iv = isolate_negative_root(p)
            if iv is not None:
                # the roots of p belong to the integerized matrix; record its scale
                witness["negative_root_interval"] = [iv[0], iv[1]]
                witness["interval_scale"] = _scale(_as_rational_rows(M))
    return DefinitenessVerdict(cls, (neg, zero, pos), witness)


def _scale(rows) -> int:
    L = 1
    for r in rows:
        for x in r:
            L = lcm(L, x.denominator)
    return L


def _original_minor(M, k: int) -> Fraction:
    rows = _as_rational_rows(M)
    return det([r[:k] for r in rows[:k]])


def float_sanity(M, tol: float = 1e-6) -> Optional[bool]:
    """Compare classify() with a floating eigensolve.

    Returns None (abstain) when the scaled matrix has an eigenvalue within tol
    of zero or cannot be converted to floats; never overrides the exact path.
    """
    import numpy as np

    rows = _as_rational_rows(M)
    big = max(abs(x) for r in rows for x in r)
    if big == 0:
        return None
    try:
        arr = np.array([[float(x / big) for x in r] for r in rows], dtype=float)
    except OverflowError:
        return None
    eig = np.linalg.eigvalsh(arr)
    if np.any(np.abs(eig) < tol) or not np.all(np.isfinite(eig)):
        return None
    counts = (int(np.sum(eig < 0)), 0, int(np.sum(eig > 0)))
    return counts == classify(rows).eigen_sign_counts
