from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcert import noncompact as nc
from qcert.exactnum import DomainError, quadext_sign


def test_dimension_guard():
    with pytest.raises(DomainError):
        nc.compute_a0(26)


@pytest.mark.parametrize("n", [27, 120])
def test_scaling_signs(n):
    sq = nc.scaling_quadratics(n)
    assert sq.Pp1.disc > 0
    a0 = nc.compute_a0(n, sq)
    assert quadext_sign(sq.Pp1.at(a0)) == 0
    assert quadext_sign(sq.P1.at(a0)) == -1
    assert quadext_sign(sq.Ppp1.at(a0)) == 1


def test_a0_is_larger_root():
    sq = nc.scaling_quadratics(40)
    a0 = nc.compute_a0(40, sq)
    other = nc.larger_root(sq.Pp1).conjugate()
    assert quadext_sign(a0 - other) == 1


@pytest.mark.parametrize("n", [27, 40])
def test_hessian_sums_positive(n):
    hs = nc.hessian_sums(n)
    assert quadext_sign(hs.sum_total) == 1 and quadext_sign(hs.sum_m2) == 1
    assert nc.verify_hessian(n).passed


def test_n52_flip():
    assert nc.n52_quadratic(51).disc <= 0
    assert nc.n52_quadratic(52).disc > 0
    assert nc.n52_quadratic(100).disc > 0


def test_k_plus_m_example():
    rep = nc.verify_k_plus_m_relation(27, 2, 2)
    assert rep.passed
    assert "c_1 differs: True" in rep.actual
    assert nc.verify_k_plus_m_relation(30, 4, 6).passed


@settings(max_examples=15, deadline=None)
@given(st.integers(27, 120), st.sampled_from([4, 8, 12, 16, 20]))
def test_hessian_constants(n, S):
    assert nc.verify_constants(n, S).passed


@settings(max_examples=10, deadline=None)
@given(st.integers(27, 120))
def test_delta_direction_report(n):
    assert nc.verify_delta_direction(n).passed


@pytest.mark.parametrize("n", [27, 53, 120])
def test_transcribed_tables(n):
    assert nc.verify_tables(n).passed


def test_quadratic_in_a0_small():
    from qcert.exactnum import ScaledRational as SR

    M = [[SR(F(1)), SR(F(2))], [SR(F(2)), SR(F(3))]]
    Q = nc.quadratic_in_a0(M, tail=(1,))
    # a0^2 + 4 a0 + 3
    assert Q.coefficients() == (1, 4, 3) and Q.disc == 4
