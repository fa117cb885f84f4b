import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcag import INFINITY, ConstraintError, CurveError, make_curve, make_field, rank, rr_basis
from qcag.rrspace import evaluate_basis, evaluation_matrix, gaps


def semigroup_count(m, d, t):
    """#{0 <= s <= t : s = i m + j d}, by direct enumeration of the numerical semigroup."""
    reach = {i * m + j * d for i in range(t // m + 1) for j in range(t // d + 1)}
    return sum(1 for s in reach if s <= t)


@pytest.mark.parametrize("m,d,p", [(2, 5, 31), (3, 8, 127), (4, 3, 13), (5, 4, 11), (2, 9, 73), (3, 4, 7)])
def test_dimension_matches_semigroup(m, d, p):
    F = make_field(p)
    curve = make_curve(F, m, [1] + [0] * (d - 1) + [1])  # y^d + 1, separable since p does not divide d
    g = curve.genus
    for t in range(0, 2 * g + 20):
        basis = rr_basis(curve, t)
        assert basis.dim == semigroup_count(m, d, t)
        if t > 2 * g - 2:
            assert basis.dim == t + 1 - g
    assert len(gaps(curve)) == g


def test_pole_orders_distinct_and_sorted():
    curve = make_curve(make_field(127), 3, [0, -1, 0, 0, 0, 0, 0, 0, 1])
    basis = rr_basis(curve, 40)
    w = basis.pole_orders()
    assert w == sorted(w) and len(set(w)) == len(w) and max(w) <= 40
    assert all(a <= curve.m - 1 for a, _ in basis.monomials)


def test_evaluation_matrix_matches_pointwise(f31):
    basis = rr_basis(f31.curve, 7)
    pts = list(f31.points)[:9]
    M = evaluation_matrix(basis, pts)
    F = f31.field
    for j, P in enumerate(pts):
        assert M[:, j].tolist() == [v.code for v in evaluate_basis(basis, P)]
        for i, (a, b) in enumerate(basis.monomials):
            assert M[i, j] == F.mul(F.pow(P.x.code, a), F.pow(P.y.code, b))


def test_errors(f31):
    with pytest.raises(ConstraintError):
        rr_basis(f31.curve, -1)
    with pytest.raises(CurveError):
        evaluate_basis(rr_basis(f31.curve, 3), INFINITY)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(2, 6), d=st.integers(2, 9), t=st.integers(0, 40))
def test_dimension_property(m, d, t):
    if math.gcd(m, d) != 1 or max(m, d) < 3 or (m - 1) * (d - 1) // 2 > 12:
        return
    p = next(p for p in (101, 103, 107) if m % p)
    curve = make_curve(make_field(p), m, [1] + [0] * (d - 1) + [1])
    assert rr_basis(curve, t).dim == semigroup_count(m, d, t)


def test_evaluation_rank_equals_dimension(f41):
    pts = list(f41.points)
    for t in (3, 8, 20):
        M = evaluation_matrix(rr_basis(f41.curve, t), pts)
        assert rank(f41.field, M) == t - 1
        assert M.dtype == np.int64
