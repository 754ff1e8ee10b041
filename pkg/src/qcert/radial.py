"""Radial functions sum c * r**i * (1+r^2)**(-A/2) and their moment integrals.

Throughout, t = 1 + r^2 and I(i, j) = int_0^inf r^i / t^j dr.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .exactnum import (
    ConvergenceError,
    DomainError,
    ScaledRational,
    ZERO,
    binom,
    gamma_value,
    scaled_add,
)

Key = Tuple[int, int]  # (r power i, half-exponent A) for r^i * t^(-A/2)


class RadialExpr:
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Key, Fraction] | None = None):
        clean: Dict[Key, Fraction] = {}
        for (i, a), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if i < 0:
                    raise DomainError(f"negative r power {i}")
                clean[(i, a)] = clean.get((i, a), Fraction(0)) + c
                if not clean[(i, a)]:
                    del clean[(i, a)]
        self.terms = clean

    @classmethod
    def term(cls, coeff, r_power: int = 0, half_exp: int = 0) -> "RadialExpr":
        return cls({(r_power, half_exp): Fraction(coeff)})

    @classmethod
    def t_power(cls, a, coeff=1) -> "RadialExpr":
        """coeff * t**(-a) with a an integer or half-integer."""
        A = Fraction(a) * 2
        if A.denominator != 1:
            raise DomainError(f"exponent {a} is not a half-integer")
        return cls.term(coeff, 0, int(A))

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.to_t_basis()

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialExpr.term(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return RadialExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return RadialExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RadialExpr({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, RadialExpr):
            return NotImplemented
        out: Dict[Key, Fraction] = {}
        for (i1, a1), c1 in self.terms.items():
            for (i2, a2), c2 in other.terms.items():
                k = (i1 + i2, a1 + a2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return RadialExpr(out)

    __rmul__ = __mul__

    def mul_r(self, p: int = 1) -> "RadialExpr":
        return RadialExpr({(i + p, a): c for (i, a), c in self.terms.items()})

    def div_r(self) -> "RadialExpr":
        if any(i == 0 for i, _ in self.terms):
            raise DomainError("division by r of a term with no r factor")
        return RadialExpr({(i - 1, a): c for (i, a), c in self.terms.items()})

    def deriv(self) -> "RadialExpr":
        # d/dr r^i t^(-A/2) = i r^(i-1) t^(-A/2) - A r^(i+1) t^(-(A+2)/2)
        out: Dict[Key, Fraction] = {}
        for (i, a), c in self.terms.items():
            if i:
                k = (i - 1, a)
                out[k] = out.get(k, Fraction(0)) + c * i
            if a:
                k = (i + 1, a + 2)
                out[k] = out.get(k, Fraction(0)) - c * a
        return RadialExpr(out)

    def to_t_basis(self) -> Dict[Key, Fraction]:
        """Rewrite with r^2 = t - 1 so every r power is 0 or 1."""
        out: Dict[Key, Fraction] = {}
        for (i, a), c in self.terms.items():
            p, e = divmod(i, 2)
            for m in range(p + 1):
                k = (e, a - 2 * m)
                coef = c * binom(p, m) * (-1 if (p - m) % 2 else 1)
                out[k] = out.get(k, Fraction(0)) + coef
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialExpr.term(other)
        if not isinstance(other, RadialExpr):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.to_t_basis().items())))

    def __repr__(self):
        parts = [f"{c}*r^{i}*t^(-{a}/2)" for (i, a), c in self]
        return "RadialExpr(" + " + ".join(parts or ["0"]) + ")"


def radial_integral(i: int, j) -> ScaledRational:
    """I(i, j) = int_0^inf r^i (1+r^2)^(-j) dr = B((i+1)/2, j-(i+1)/2) / 2."""
    j = Fraction(j)
    if i < 0 or (2 * j).denominator != 1:
        raise DomainError(f"bad moment index ({i}, {j})")
    if i - 2 * j >= -1:
        raise ConvergenceError(f"I({i}, {j}) diverges")
    x = Fraction(i + 1, 2)
    return gamma_value(x) * gamma_value(j - x) / gamma_value(j) * Fraction(1, 2)


def integrate_moment(f: RadialExpr, extra_r_power: int = 0) -> ScaledRational:
    """int_0^inf r^extra * f(r) dr, each term required to converge on its own."""
    total = ZERO
    for (i, a), c in f:
        if a % 2:
            raise DomainError(f"odd half-exponent {a}: t power is not an integer")
        total = scaled_add(total, radial_integral(i + extra_r_power, a // 2) * c)
    return total


def shifted_laplacian(f: RadialExpr, n: int, b: int = 0) -> RadialExpr:
    """f'' + (n - 1 + 2b) f'/r: the Laplacian on R^n of f(r) p(x), p harmonic of degree b."""
    d = f.deriv()
    return d.deriv() + d.div_r() * (n - 1 + 2 * b)


def laplacian_power(f: RadialExpr, n: int, b: int, p: int) -> RadialExpr:
    for _ in range(p):
        f = shifted_laplacian(f, n, b)
    return f


def _falling(a: Fraction, count: int) -> Fraction:
    out = Fraction(1)
    for m in range(count):
        out *= 2 * a + 2 * m
    return out


def newbasis_coefficients(a, b: int, n: int, p: int) -> Dict[Fraction, Fraction]:
    """Closed form of Delta^p (t^(-a) p_b) as {e: coeff of t^(-e)}, for p = 1, 2, 3."""
    a = Fraction(a)
    g = lambda c: n - 2 * a + 2 * b - c  # noqa: E731
    if p == 1:
        out = {a + 2: -_falling(a, 2), a + 1: -2 * a * g(2)}
    elif p == 2:
        out = {
            a + 4: _falling(a, 4),
            a + 3: _falling(a, 3) * 2 * g(4),
            a + 2: _falling(a, 2) * g(2) * g(4),
        }
    elif p == 3:
        out = {
            a + 6: -_falling(a, 6),
            a + 5: -_falling(a, 5) * 3 * g(6),
            a + 4: -_falling(a, 4) * g(4) * 3 * g(6),
            a + 3: -_falling(a, 3) * g(2) * g(4) * g(6),
        }
    else:
        raise DomainError("only p = 1, 2, 3 have closed forms")
    return {e: c for e, c in out.items() if c}


def t_basis_exponents(f: RadialExpr) -> Dict[Fraction, Fraction]:
    """Coefficients of t^(-e) for an expression with only even r powers."""
    out = {}
    for (e, A), c in f.to_t_basis().items():
        if e:
            raise DomainError("expression has odd r powers")
        out[Fraction(A, 2)] = c
    return out


def check_newbasis(a, b: int, n: int, p: int) -> bool:
    f = laplacian_power(RadialExpr.t_power(a), n, b, p)
    return t_basis_exponents(f) == newbasis_coefficients(a, b, n, p)


def _I(l: int, n) -> ScaledRational:
    return radial_integral(l, n)


def check_moment_recurrences(n: int, l: int) -> bool:
    """Check the I(l, n) recurrences in n and in l; every member must converge."""
    base = _I(l, n)
    ok = base == _I(l, n - 1) * Fraction(2 * n - l - 3, 2 * n - 2)
    ok &= base == _I(l + 2, n) * Fraction(2 * n - l - 3, l + 1)
    if l >= 2:
        ok &= base == _I(l - 2, n) * Fraction(l - 1, 2 * n - l - 1)
        ok &= base == _I(l - 2, n - 1) * Fraction(l - 1, 2 * n - 2)
    one_minus_r2 = RadialExpr.term(1, 0, 2 * n) - RadialExpr.term(1, 2, 2 * n)
    ok &= integrate_moment(one_minus_r2, l) == base * Fraction(2 * n - 2 * l - 4, 2 * n - l - 3)
    return bool(ok)


def bubble(n: int, order: int) -> RadialExpr:
    """w = t^(-(n - order)/2), order = 2, 4 or 6."""
    return RadialExpr.term(1, 0, n - order)


def bubble_z(n: int, order: int) -> RadialExpr:
    """Z = r w' + (n - order)/2 w."""
    w = bubble(n, order)
    return w.deriv().mul_r() + w * Fraction(n - order, 2)
