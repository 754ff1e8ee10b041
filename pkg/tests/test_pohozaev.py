from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcert.definiteness import classify
from qcert.exactnum import DomainError, ScaledRational
from qcert.linsys import N0
from qcert.pohozaev4 import FamilySpec4, c1, c2, family_specs as specs4, matrix_q4, scan_q4
from qcert.pohozaev6 import (
    FamilySpec6, coeff_pipeline_q6, family_specs as specs6, matrix_q6, radial_constants,
    radial_constants_by_integration, radial_integrands, raw_parts, scan_q6,
)
from qcert.radial import integrate_moment, radial_integral


def test_q4_pinned_entry():
    assert c1(8, 2, 2) == 1120 and c2(8, 2, 2) == 2240
    M = matrix_q4(FamilySpec4("D", 8, 2))
    assert M.dim == 1
    assert M[0, 0] == ScaledRational(F(32 * N0))


def test_q4_h_smallest_case():
    M = matrix_q4(FamilySpec4("H", 12, 2))
    assert M.dim == 1 and M[0, 0].sign() == 1


@pytest.mark.parametrize("family,s,last_pd", [("D", 2, 24), ("W", 1, 28), ("H", 2, 32)])
def test_q4_threshold_flip(family, s, last_pd):
    assert classify(matrix_q4(FamilySpec4(family, last_pd, s))).is_pd
    assert not classify(matrix_q4(FamilySpec4(family, last_pd + 1, s))).is_pd


@pytest.mark.parametrize("family,s,last_pd", [("D", 2, 26), ("W", 1, 29), ("H", 2, 33)])
def test_q6_threshold_flip(family, s, last_pd):
    assert classify(matrix_q6(FamilySpec6(family, last_pd, s))).is_pd
    assert not classify(matrix_q6(FamilySpec6(family, last_pd + 1, s))).is_pd


def test_inadmissible_specs():
    with pytest.raises(DomainError):
        matrix_q4(FamilySpec4("D", 8, 3))
    with pytest.raises(DomainError):
        matrix_q6(FamilySpec6("X", 20, 2))


def test_scan_reports():
    reps = scan_q4(range(24, 26), ("D",))
    assert all(r.passed for r in reps)
    at25 = [r for r in reps if r.params["n"] == 25 and r.params["s"] == 2]
    assert at25[0].actual != "positive_definite"
    reps = scan_q6(range(10, 11), ("D",))
    assert reps and all(r.passed for r in reps)


def test_c6_closed_form():
    n, S = 16, 6
    c6 = radial_constants(n, S)[5]
    want = (radial_integral(n + S - 7, n - 5) * -1 + radial_integral(n + S - 5, n - 5)) * F(-(n - 6), 2)
    assert c6 == want


def test_c1_against_integrand():
    n, S = 12, 4
    f, off = radial_integrands(n)[0]
    assert radial_constants(n, S)[0] == integrate_moment(f, n + S + off)


def test_log_branch_bracket_is_one():
    n = 20
    logc = radial_constants(n, n - 6)
    assert logc[5] == ScaledRational(F(-(n - 6), 2))


def test_odd_sum_rejected():
    with pytest.raises(DomainError):
        coeff_pipeline_q6(20, 2, 3)


@settings(max_examples=20, deadline=None)
@given(st.integers(10, 26).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, max(2, n - 8)))))
def test_constants_match_integration(nS):
    n, S = nS
    S += S % 2
    if S >= n - 6:
        return
    assert radial_constants(n, S) == radial_constants_by_integration(n, S)


@settings(max_examples=20, deadline=None)
@given(st.integers(12, 30), st.sampled_from([(2, 2), (2, 4), (4, 6), (6, 6)]))
def test_pipeline_is_linear(n, km):
    k, m = km
    if k + m >= n - 6:
        return
    c = radial_constants(n, k + m)
    doubled = coeff_pipeline_q6(n, k, m, [x * 2 for x in c])
    base = coeff_pipeline_q6(n, k, m, c)
    assert list(doubled.cbarp) == [x * 2 for x in base.cbarp]


def _specs(order):
    out = []
    for n in range(8 if order == 4 else 10, 41):
        for fam in "DWH":
            out += list((specs4 if order == 4 else specs6)(fam, n))
    return out


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_specs(4)))
def test_q4_symmetric_and_homogeneous(spec):
    M = matrix_q4(spec)  # SymMatrix rejects asymmetry and mixed pi powers
    assert M.dim == len(spec.q_range())


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_specs(6)))
def test_q6_raw_parts_symmetric(spec):
    parts = raw_parts(spec)
    m1 = parts["m1"]
    assert all(m1[i][j] == m1[j][i] for i in range(len(m1)) for j in range(len(m1)))
    M = matrix_q6(spec)
    assert M.dim == len(spec.q_range())
