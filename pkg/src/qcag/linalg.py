"""Dense Gaussian elimination over a GaloisField; matrices are int64 arrays of element codes."""

from __future__ import annotations

import numpy as np

from .gf import GaloisField


def as_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A


def rref(F: GaloisField, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.vmul(A[r], F.inv(int(A[r, c])))
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = F.vsub(A[others], F.vmul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GaloisField, M) -> int:
    A = as_matrix(M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: GaloisField, M) -> np.ndarray:
    """Rows spanning {v : M v^T = 0}; for a generator matrix this is a parity-check matrix."""
    A = as_matrix(M)
    n = A.shape[1]
    R, pivots = rref(F, A)
    free = [c for c in range(n) if c not in set(pivots)]
    H = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        H[i, f] = 1
        if pivots:
            H[i, pivots] = F.vneg(R[:, f])
    return H


dual = nullspace


def matmul(F: GaloisField, A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch")
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        acc = F.vadd(acc, F.vmul(A[:, i : i + 1], B[i : i + 1, :]))
    return acc


def in_row_space(F: GaloisField, M, v) -> bool:
    A = as_matrix(M)
    return rank(F, np.vstack([A, as_matrix(v)])) == rank(F, A)
