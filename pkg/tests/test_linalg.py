import itertools

import numpy as np
import pytest

from qcag import make_field, nullspace, rank, rref
from qcag.linalg import in_row_space, matmul


def brute_rank(F, M):
    """log_Q of the number of distinct row combinations."""
    k = M.shape[0]
    span = set()
    for coeffs in itertools.product(range(F.order), repeat=k):
        v = np.zeros(M.shape[1], dtype=np.int64)
        for c, row in zip(coeffs, M):
            v = F.vadd(v, F.vmul(c, row))
        span.add(tuple(v.tolist()))
    r = 0
    while F.order**r < len(span):
        r += 1
    return r


@pytest.mark.parametrize("q,shape,seed", [((3, 1, 1), (3, 5), 0), ((2, 1, 2), (3, 4), 1), ((5, 1, 1), (4, 4), 2), ((2, 1, 1), (4, 6), 3)])
def test_rank_matches_span_size(q, shape, seed):
    F = make_field(*q)
    rng = np.random.default_rng(seed)
    for _ in range(5):
        M = rng.integers(0, F.order, size=shape)
        M[-1] = F.vadd(M[0], M[1])  # force some dependency
        assert rank(F, M) == brute_rank(F, M)


def test_rref_shape_and_pivots():
    F = make_field(7)
    M = np.array([[1, 2, 3, 4], [2, 4, 6, 1], [3, 6, 2, 5]])
    R, piv = rref(F, M)
    assert R.shape[0] == len(piv) == rank(F, M)
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and np.count_nonzero(R[:, c]) == 1
    R2, piv2 = rref(F, R)
    assert np.array_equal(R, R2) and piv == piv2


@pytest.mark.parametrize("q", [(31, 1, 1), (2, 1, 3), (3, 1, 2)])
def test_nullspace_is_dual(q):
    F = make_field(*q)
    rng = np.random.default_rng(5)
    G = rng.integers(0, F.order, size=(4, 9))
    H = nullspace(F, G)
    assert H.shape == (9 - rank(F, G), 9)
    assert not matmul(F, G, H.T).any()
    assert rank(F, H) == H.shape[0]


def test_identity_and_membership():
    F = make_field(5)
    eye = np.eye(4, dtype=np.int64)
    assert rank(F, eye) == 4
    assert in_row_space(F, eye[:2], [3, 4, 0, 0])
    assert not in_row_space(F, eye[:2], [0, 0, 1, 0])
    assert rank(F, np.zeros((0, 3), dtype=np.int64)) == 0
    with pytest.raises(ValueError):
        matmul(F, eye, np.ones((3, 1), dtype=np.int64))


def test_f31_t3_code_dual(f31):
    from qcag import build_qc_with_long_orbits

    code = build_qc_with_long_orbits(f31.curve, f31.sigma, 3, f31.partition)
    assert code.k == 2
    H = code.parity_check()
    assert H.shape == (18, 20)
    assert not matmul(f31.field, code.G, H.T).any()
