"""Exact scalars: rationals times powers of sqrt(pi), Gamma at half-integers,
and numbers a + b*sqrt(D) with exact sign decisions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class HomogeneityError(ArithmeticError):
    """Two nonzero quantities with different powers of pi were added."""


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class ConvergenceError(ArithmeticError):
    """A moment integral diverges."""


class DegeneracyError(ArithmeticError):
    """A zero pivot showed up where a nonzero one was required."""

    def __init__(self, msg: str, where=None):
        super().__init__(msg)
        self.where = where


class InputError(ValueError):
    """Malformed input, e.g. a matrix that is not exactly symmetric."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ScaledRational:
    """coeff * pi**(pi_half_power/2)."""

    coeff: Fraction
    pi_half_power: int = 0

    def __post_init__(self):
        c = _frac(self.coeff)
        if self.pi_half_power < 0:
            raise DomainError("pi_half_power must be nonnegative")
        object.__setattr__(self, "coeff", c)
        if c == 0:
            object.__setattr__(self, "pi_half_power", 0)

    @property
    def h(self) -> int:
        return self.pi_half_power

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ScaledRational(other)
        if not isinstance(other, ScaledRational):
            return NotImplemented
        return scaled_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return ScaledRational(-self.coeff, self.pi_half_power)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ScaledRational(other)
        if not isinstance(other, ScaledRational):
            return NotImplemented
        return scaled_add(self, -other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ScaledRational(self.coeff * other, self.pi_half_power)
        if not isinstance(other, ScaledRational):
            return NotImplemented
        return scaled_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ScaledRational(self.coeff / other, self.pi_half_power)
        if not isinstance(other, ScaledRational):
            return NotImplemented
        if other.coeff == 0:
            raise ZeroDivisionError("division by zero")
        if self.coeff == 0:
            return self
        h = self.pi_half_power - other.pi_half_power
        if h < 0:
            raise DomainError("quotient would carry a negative power of pi")
        return ScaledRational(self.coeff / other.coeff, h)

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def __float__(self):
        import math

        return float(self.coeff) * math.pi ** (self.pi_half_power / 2)

    def __str__(self):
        if self.pi_half_power == 0:
            return str(self.coeff)
        return f"{self.coeff}*pi^({self.pi_half_power}/2)"


ZERO = ScaledRational(Fraction(0))
ONE = ScaledRational(Fraction(1))


def scaled_add(x: ScaledRational, y: ScaledRational) -> ScaledRational:
    if x.coeff == 0:
        return y
    if y.coeff == 0:
        return x
    if x.pi_half_power != y.pi_half_power:
        raise HomogeneityError(
            f"cannot add pi^({x.pi_half_power}/2) and pi^({y.pi_half_power}/2) terms"
        )
    return ScaledRational(x.coeff + y.coeff, x.pi_half_power)


def scaled_mul(x: ScaledRational, y: ScaledRational) -> ScaledRational:
    if x.coeff == 0 or y.coeff == 0:
        return ZERO
    return ScaledRational(x.coeff * y.coeff, x.pi_half_power + y.pi_half_power)


def scaled_sum(items: Iterable[ScaledRational]) -> ScaledRational:
    total = ZERO
    for it in items:
        total = scaled_add(total, it)
    return total


def gamma_value(x) -> ScaledRational:
    """Exact Gamma(x) for positive integers and half-integers."""
    if not isinstance(x, (int, Fraction)):
        raise DomainError("gamma_value needs an exact integer or half-integer")
    x = _frac(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise DomainError(f"Gamma({x}) is outside the supported domain")
    if x.denominator == 1:
        return ScaledRational(Fraction(factorial(int(x) - 1)))
    k = int(x - Fraction(1, 2))
    return ScaledRational(Fraction(factorial(2 * k), 4**k * factorial(k)), 1)


def binom(m: int, r: int) -> int:
    """Binomial coefficient with C(m, r) = 0 whenever r < 0 or r > m."""
    if r < 0 or m < 0 or r > m:
        return 0
    from math import comb

    return comb(m, r)


def is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    p, d = q.numerator, q.denominator
    return isqrt(p) ** 2 == p and isqrt(d) ** 2 == d


def rational_sqrt(q: Fraction) -> Fraction:
    if not is_rational_square(q):
        raise DomainError(f"{q} is not a rational square")
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


@dataclass(frozen=True)
class QuadExtNumber:
    """a + b*sqrt(D) with a fixed radicand D > 0."""

    a: Fraction
    b: Fraction
    D: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        object.__setattr__(self, "D", _frac(self.D))
        if self.D <= 0:
            raise DomainError("radicand must be positive")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExtNumber(_frac(other), Fraction(0), self.D)
        if isinstance(other, QuadExtNumber):
            if other.D != self.D:
                raise DomainError(f"radicand mismatch: {self.D} vs {other.D}")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtNumber(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtNumber(
            self.a * o.a + self.b * o.b * self.D, self.a * o.b + self.b * o.a, self.D
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtNumber":
        return QuadExtNumber(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        nrm = o.norm()
        if nrm == 0:
            if o.a == 0 and o.b == 0:
                raise ZeroDivisionError("division by zero")
            raise DomainError("divisor is a zero divisor (D is a rational square)")
        return (self * o.conjugate()) * QuadExtNumber(1 / nrm, Fraction(0), self.D)

    def sign(self) -> int:
        return quadext_sign(self)

    def is_zero(self) -> bool:
        return quadext_sign(self) == 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.D) ** 0.5

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.D})"


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def quadext_sign(v: QuadExtNumber) -> int:
    """Sign of a + b*sqrt(D) using only rational comparisons."""
    if v.D <= 0:
        raise DomainError("radicand must be positive")
    sa, sb = _sgn(v.a), _sgn(v.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 D
    d = v.a * v.a - v.b * v.b * v.D
    return sa * _sgn(d)


def quadext_equal(x: QuadExtNumber, y: QuadExtNumber) -> bool:
    """Exact equality between numbers that may use different radicands."""
    if x.D == y.D:
        return x.a == y.a and x.b == y.b
    ratio = x.D / y.D
    if is_rational_square(ratio):
        # sqrt(x.D) = t * sqrt(y.D)
        t = rational_sqrt(ratio)
        return x.a == y.a and x.b * t == y.b
    # sqrt(x.D), sqrt(y.D) independent over Q unless a rational square is involved
    xr = x.b == 0 or is_rational_square(x.D)
    yr = y.b == 0 or is_rational_square(y.D)
    if xr and yr:
        vx = x.a + (x.b * rational_sqrt(x.D) if x.b else 0)
        vy = y.a + (y.b * rational_sqrt(y.D) if y.b else 0)
        return vx == vy
    return False


class SymMatrix:
    """Exactly symmetric matrix of ScaledRational entries sharing one power of pi."""

    __slots__ = ("entries", "h")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[e if isinstance(e, ScaledRational) else ScaledRational(_frac(e)) for e in row]
                for row in entries]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("matrix must be square and nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise InputError(f"matrix not symmetric at ({i}, {j})")
        hs = {e.pi_half_power for r in rows for e in r if e.coeff != 0}
        if len(hs) > 1:
            raise HomogeneityError(f"matrix mixes pi powers {sorted(hs)}")
        self.entries = tuple(tuple(r) for r in rows)
        self.h = hs.pop() if hs else 0

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rational_part(self) -> list[list[Fraction]]:
        return [[e.coeff for e in row] for row in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"SymMatrix(dim={self.dim}, h={self.h})"

    @classmethod
    def from_rationals(cls, rows, h: int = 0) -> "SymMatrix":
        return cls([[ScaledRational(_frac(x), h) for x in r] for r in rows])
