from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcert.exactnum import DomainError
from qcert.linsys import (
    ProblemIndex, admissible_grid, certify_cancellation, check_columns, check_cross_order,
    is_admissible, oracle_column, rhs_vector, solve_gamma, system_matrix,
)


def test_pinned_gamma():
    assert solve_gamma(ProblemIndex(4, 10, 2, 0)).gamma == (F(-1, 8), F(-1, 16), F(-1, 36))


def test_shapes():
    idx = ProblemIndex(6, 20, 8, 2)
    A = system_matrix(idx)
    assert len(A.entries) == idx.rows == 7
    assert len(A.entries[0]) == idx.cols == 5
    assert len(rhs_vector(idx).entries) == 7


def test_order_two_has_no_primed_rhs():
    with pytest.raises(DomainError):
        rhs_vector(ProblemIndex(2, 12, 4, 1), "primed")


@pytest.mark.parametrize("idx", [ProblemIndex(4, 9, 2, 0), ProblemIndex(6, 20, 11, 0),
                                 ProblemIndex(4, 12, 6, 3), ProblemIndex(3, 12, 2, 0)])
def test_inadmissible(idx):
    assert not is_admissible(idx)
    with pytest.raises(DomainError):
        solve_gamma(idx)


def test_order6_example_zero_residuals():
    rep = certify_cancellation(ProblemIndex(6, 12, 2, 0))
    assert rep.passed and rep.witness is None


def test_perturbed_rhs_fails():
    idx = ProblemIndex(4, 16, 6, 2)
    b = list(rhs_vector(idx).entries)
    b[-1] += 1
    rep = certify_cancellation(idx, b)
    assert rep.verdict == "fail"
    assert any(rep.witness["residuals"])


def _grid(order):
    return [i for n in range(8, 31) for i in admissible_grid(order, n)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_grid(2) + _grid(4) + _grid(6)))
def test_cancellation_and_columns(idx):
    assert certify_cancellation(idx).passed
    assert check_columns(idx)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_grid(6)))
def test_cross_order(idx):
    assert check_cross_order(idx.n, idx.k, idx.s)


def test_oracle_column_matches_band():
    idx = ProblemIndex(6, 18, 6, 2)
    A = system_matrix(idx)
    for j in range(1, idx.cols + 1):
        assert oracle_column(idx, j) == [A[i, j] for i in range(1, idx.rows + 1)]
