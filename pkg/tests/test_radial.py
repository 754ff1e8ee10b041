from fractions import Fraction as F
from math import gamma

import pytest
from hypothesis import given, settings, strategies as st

from qcert.exactnum import ConvergenceError, ScaledRational
from qcert.radial import (
    RadialExpr, bubble, check_moment_recurrences, check_newbasis, integrate_moment,
    laplacian_power, radial_integral, shifted_laplacian, t_basis_exponents,
)


def test_integral_examples():
    assert radial_integral(1, 2) == ScaledRational(F(1, 2))
    assert radial_integral(0, 1) == ScaledRational(F(1, 2), 2)
    assert radial_integral(3, 3) == ScaledRational(F(1, 4))


def test_divergent_index():
    with pytest.raises(ConvergenceError):
        radial_integral(1, 1)
    with pytest.raises(ConvergenceError):
        check_moment_recurrences(2, 1)


@given(st.integers(0, 30), st.integers(1, 30))
def test_integral_against_beta(i, j):
    if i - 2 * j >= -1:
        return
    x = (i + 1) / 2
    ref = gamma(x) * gamma(j - x) / gamma(j) / 2
    assert float(radial_integral(i, j)) == pytest.approx(ref, rel=1e-10)


def test_moment_recurrence_examples():
    assert check_moment_recurrences(3, 1)
    assert check_moment_recurrences(4, 2)


def test_laplacian_of_polynomials():
    assert shifted_laplacian(RadialExpr.term(1), 5).is_zero()
    assert t_basis_exponents(shifted_laplacian(RadialExpr.term(1, 2, 0), 3)) == {F(0): F(6)}


@settings(max_examples=60)
@given(st.integers(1, 24), st.integers(0, 8), st.integers(8, 30), st.integers(1, 3))
def test_newbasis_matches_kernel(a2, b, n, p):
    assert check_newbasis(F(a2, 2), b, n, p)


@given(st.integers(3, 20), st.integers(1, 12))
def test_integral_of_derivative_vanishes(j, m):
    a = 2 * j
    if m >= a - 1:
        return
    f = RadialExpr.term(1, m, a)
    assert integrate_moment(f.deriv(), 0) == ScaledRational(F(0))


def test_integrate_moment_single_term():
    w = bubble(12, 6)
    assert integrate_moment(w * w, 5) == radial_integral(5, 6)
    assert integrate_moment(RadialExpr(), 3) == ScaledRational(F(0))


def test_w_dw_moment():
    n = 12
    w = bubble(n, 6)
    # w w' = -(n-6) r t^(-(n-5))
    assert integrate_moment(w * w.deriv(), n - 6) == radial_integral(n - 5, n - 5) * (-(n - 6))


def test_laplacian_power_composes():
    f = RadialExpr.t_power(F(5, 2))
    assert (laplacian_power(f, 10, 2, 3).to_t_basis()
            == shifted_laplacian(laplacian_power(f, 10, 2, 2), 10, 2).to_t_basis())
