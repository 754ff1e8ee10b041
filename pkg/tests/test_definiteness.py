import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qcert.definiteness import (
    INDEFINITE, PD, PSD_SINGULAR, charpoly, classify, det, float_sanity, leading_minors,
    sign_counts,
)
from qcert.exactnum import InputError, ScaledRational, SymMatrix
from qcert.suites import _check_one, _random_matrix


def test_examples():
    v = classify([[2, 0], [0, 3]])
    assert v.classification == PD and v.eigen_sign_counts == (0, 0, 2)
    v = classify([[1, 2], [2, 1]])
    assert v.classification == INDEFINITE and v.eigen_sign_counts == (1, 0, 1)
    assert v.witness["minor_index"] == 2 and v.witness["minor_value"] == -3
    lo, hi = v.witness["negative_root_interval"]
    assert lo < -1 <= hi
    v = classify([[0]])
    assert v.classification == PSD_SINGULAR and v.eigen_sign_counts == (0, 1, 0)


def test_asymmetric_input():
    with pytest.raises(InputError):
        classify([[1, 2], [0, 1]])


def test_pi_power_is_ignored():
    M = SymMatrix([[ScaledRational(F(2), 2), ScaledRational(F(1), 2)],
                   [ScaledRational(F(1), 2), ScaledRational(F(2), 2)]])
    assert classify(M).is_pd


def test_charpoly_and_det():
    A = [[F(2), F(1)], [F(1), F(3)]]
    assert charpoly(A) == [5, -5, 1]
    assert det(A) == 5
    assert leading_minors(A) == [2, 5]


def test_float_sanity_contract():
    assert float_sanity([[32 * 10**10]]) is True
    assert float_sanity([[1, 1], [1, 1]]) is None  # singular: abstain


sym = st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.fractions(-20, 20, max_denominator=6), min_size=n, max_size=n), min_size=n, max_size=n))


def _symmetrize(A):
    return [[A[i][j] + A[j][i] for j in range(len(A))] for i in range(len(A))]


@settings(max_examples=80, deadline=None)
@given(sym, st.randoms(use_true_random=False))
def test_engine_properties(A, rng):
    M = _symmetrize(A)
    problems, _ = _check_one(M, rng)
    assert problems == []
    neg, zero, pos = classify(M).eigen_sign_counts
    assert neg + zero + pos == len(M)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_gram_matrices_never_indefinite(seed):
    rng = random.Random(seed)
    M = _random_matrix(rng, "gram", rng.randint(1, 7))
    assert classify(M).classification in (PD, PSD_SINGULAR)


@settings(max_examples=40, deadline=None)
@given(sym)
def test_negative_root_interval_contains_root(A):
    M = _symmetrize(A)
    v = classify(M)
    if not v.eigen_sign_counts[0]:
        return
    lo, hi = v.witness["negative_root_interval"]
    # interval refers to the integer-scaled matrix
    scale = v.witness["interval_scale"]
    p = charpoly([[x * scale for x in r] for r in M])
    assert hi < 0
    assert _count_in(p, lo, hi) >= 1


def _count_in(p, lo, hi):
    from qcert.definiteness import squarefree_decomposition, sturm_count, sturm_sequence

    return sum(sturm_count(sturm_sequence(f), lo, hi) for f, _ in squarefree_decomposition(p))


def test_sign_counts_with_multiplicity():
    # (x - 1)^2 (x + 2) x
    p = [F(c) for c in [0, 2, -3, 0, 1]]
    assert sign_counts(p) == (1, 1, 2)
