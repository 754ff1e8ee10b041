from fractions import Fraction as F
from math import pi, gamma

import pytest
from hypothesis import given, strategies as st

from qcert.exactnum import (
    DomainError, HomogeneityError, InputError, QuadExtNumber, ScaledRational, SymMatrix,
    gamma_value, quadext_equal, quadext_sign, scaled_add,
)

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


def test_gamma_integer_and_half_integer():
    assert gamma_value(5) == ScaledRational(F(24))
    assert gamma_value(F(1, 2)) == ScaledRational(F(1), 1)
    assert gamma_value(F(7, 2)) == ScaledRational(F(15, 8), 1)


@pytest.mark.parametrize("x", [0, -1, F(1, 3), F(-1, 2)])
def test_gamma_domain(x):
    with pytest.raises(DomainError):
        gamma_value(x)


@given(st.integers(min_value=1, max_value=60))
def test_gamma_matches_float(k):
    x = F(k, 2)
    assert float(gamma_value(x)) == pytest.approx(gamma(k / 2), rel=1e-12)


def test_scaled_add_rejects_mixed_powers():
    with pytest.raises(HomogeneityError):
        scaled_add(ScaledRational(F(1), 2), ScaledRational(F(1), 0))


def test_zero_is_canonical():
    assert ScaledRational(F(0), 4) == ScaledRational(F(0))
    # zero absorbs any power on addition
    assert ScaledRational(F(0)) + ScaledRational(F(3), 2) == ScaledRational(F(3), 2)


@given(fracs, fracs, st.integers(0, 6))
def test_scaled_add_commutes(a, b, h):
    x, y = ScaledRational(a, h), ScaledRational(b, h)
    assert x + y == y + x
    assert (x + y).coeff == a + b


@given(fracs, fracs, st.integers(0, 4), st.integers(0, 4))
def test_scaled_mul_adds_powers(a, b, h1, h2):
    p = ScaledRational(a, h1) * ScaledRational(b, h2)
    assert p.coeff == a * b
    assert p.pi_half_power == (h1 + h2 if a * b else 0)


def test_quadext_sign_examples():
    assert quadext_sign(QuadExtNumber(F(-1), F(1), F(2))) == 1
    assert quadext_sign(QuadExtNumber(F(3), F(-2), F(2))) == 1
    assert quadext_sign(QuadExtNumber(F(2), F(-1), F(4))) == 0
    assert quadext_sign(QuadExtNumber(F(-2), F(-1), F(7))) == -1


@given(fracs, fracs, st.integers(1, 500).filter(lambda d: int(d**0.5) ** 2 != d))
def test_quadext_sign_matches_float(a, b, D):
    v = QuadExtNumber(a, b, F(D))
    x = float(a) + float(b) * D**0.5
    if abs(x) > 1e-9:
        assert quadext_sign(v) == (1 if x > 0 else -1)
    else:
        assert quadext_sign(v) == 0 or abs(x) < 1e-9


@given(fracs, fracs, fracs, fracs, st.integers(2, 50))
def test_quadext_field_ops(a, b, c, d, D):
    x, y = QuadExtNumber(a, b, F(D)), QuadExtNumber(c, d, F(D))
    assert (x * y).norm() == x.norm() * y.norm()
    if y.norm() != 0:
        assert quadext_equal((x / y) * y, x)


def test_quadext_equal_across_radicands():
    # sqrt(8) = 2 sqrt(2)
    assert quadext_equal(QuadExtNumber(F(1), F(1), F(8)), QuadExtNumber(F(1), F(2), F(2)))
    assert not quadext_equal(QuadExtNumber(F(1), F(1), F(3)), QuadExtNumber(F(1), F(1), F(2)))


def test_symmatrix_checks():
    with pytest.raises(InputError):
        SymMatrix([[1, 2], [3, 1]])
    with pytest.raises(HomogeneityError):
        SymMatrix([[ScaledRational(F(1), 2), 0], [0, ScaledRational(F(1), 0)]])
    M = SymMatrix([[ScaledRational(F(1), 2), 0], [0, ScaledRational(F(5), 2)]])
    assert M.h == 2 and M.dim == 2


def test_float_value_of_pi_power():
    assert float(ScaledRational(F(1, 2), 2)) == pytest.approx(pi / 2)
