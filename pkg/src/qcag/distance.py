"""Minimum distance of linear codes over a GaloisField.

Three routes, cheapest first:

* ``enumerate``: every codeword up to scalars, in chunks.
* ``circuits``: smallest set of linearly dependent columns of a parity-check
  matrix H (this equals d).  One depth-first pass per candidate size, in
  increasing order, over independent column subsets.
* ``hyperplanes``: d = n - (most columns of G inside one hyperplane).  Every
  hyperplane is visited exactly once through its greedy column basis; the last
  basis vector is resolved by a histogram over the projective line of the
  two-dimensional quotient.

Work is metered in field-element operations.  When the budget runs out the
result carries the bounds proved so far and ``exact=False``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .gf import GaloisField
from .linalg import as_matrix, nullspace, rref

DEFAULT_BUDGET = 2**24
_CHUNK_ELEMS = 1 << 21


@dataclass(frozen=True)
class DistanceResult:
    d_lower: int
    d_upper: int
    exact: bool
    method: str
    work: int = 0

    @property
    def d(self) -> int | None:
        return self.d_lower if self.exact else None

    def as_tuple(self) -> tuple[int, int, bool]:
        return (self.d_lower, self.d_upper, self.exact)


class _OutOfBudget(Exception):
    pass


class _Meter:
    def __init__(self, budget: int):
        self.budget = budget
        self.used = 0

    def charge(self, ops: int) -> None:
        self.used += ops
        if self.used > self.budget:
            raise _OutOfBudget


def _weights(F: GaloisField, base: np.ndarray, span: np.ndarray) -> np.ndarray:
    return np.count_nonzero(F.vadd(span, base[None, :]), axis=1)


def _span(F: GaloisField, rows: np.ndarray) -> np.ndarray:
    """All F-combinations of ``rows`` (Q^len x n), first row varying slowest."""
    n = rows.shape[1]
    out = np.zeros((1, n), dtype=np.int64)
    for row in rows[::-1]:
        scaled = F.vmul(np.arange(F.order, dtype=np.int64)[:, None], row[None, :])
        out = F.vadd(scaled[:, None, :], out[None, :, :]).reshape(-1, n)
    return out


def enumeration_cost(F: GaloisField, k: int, n: int) -> int:
    return (F.order**k - 1) // (F.order - 1) * n


def distance_by_enumeration(F: GaloisField, G, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Scan one representative per line of the code: first nonzero coefficient 1."""
    R, _ = rref(F, G)
    k, n = R.shape
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    meter = _Meter(budget)
    best = n
    tail_rows = max(0, min(k, int(math.log(max(_CHUNK_ELEMS // n, 1), F.order))))
    try:
        for lead in range(k):
            free = R[lead + 1 :]
            split = max(0, free.shape[0] - tail_rows)
            tail = _span(F, free[split:])
            for coeffs in itertools.product(range(F.order), repeat=split):
                base = R[lead].copy()
                for c, row in zip(coeffs, free[:split]):
                    if c:
                        base = F.vadd(base, F.vmul(c, row))
                meter.charge(tail.size)
                best = min(best, int(_weights(F, base, tail).min()))
    except _OutOfBudget:
        return DistanceResult(1, best, False, "enumerate", meter.used)
    return DistanceResult(best, best, True, "enumerate", meter.used)


def _eliminate(F: GaloisField, R: np.ndarray, used: np.ndarray, j: int) -> tuple[np.ndarray, np.ndarray] | None:
    """Pivot column j on an unused row; None if column j is already in the span."""
    rows = np.nonzero((R[:, j] != 0) & ~used)[0]
    if rows.size == 0:
        return None
    piv = int(rows[0])
    R = R.copy()
    R[piv] = F.vmul(R[piv], F.inv(int(R[piv, j])))
    col = R[:, j].copy()
    col[piv] = 0
    others = np.nonzero(col)[0]
    if others.size:
        R[others] = F.vsub(R[others], F.vmul(col[others, None], R[piv][None, :]))
    used = used.copy()
    used[piv] = True
    return R, used


def _in_span(R: np.ndarray, used: np.ndarray) -> np.ndarray:
    """Columns whose residual on the unused rows vanishes."""
    return ~np.any(R[~used] != 0, axis=0)


def _subset_count(n: int, max_size: int, starts=None) -> int:
    """Subsets of range(n) of size <= max_size whose minimum lies in ``starts``."""
    return 1 + sum(_sized_count(n, s, starts) for s in range(1, max_size + 1))


def _sized_count(n: int, size: int, starts=None) -> int:
    """Subsets of range(n) of exactly ``size`` elements whose minimum lies in ``starts``."""
    if size <= 0:
        return int(size == 0)
    firsts = range(n) if starts is None else starts
    return sum(math.comb(n - 1 - i, size - 1) for i in firsts)


def circuit_cost(n: int, r: int, d_guess: int, starts=None, lower: int = 1) -> int:
    """Work to rule out circuits of sizes lower..d_guess-1 and find one of size d_guess."""
    leaves = sum(_sized_count(n, w - 1, starts) for w in range(max(lower, 2), d_guess + 1))
    return max(leaves, 1) * max(r, 1) * n


def distance_by_circuits(F: GaloisField, H, budget: int = DEFAULT_BUDGET, starts=None, lower: int = 1) -> DistanceResult:
    """Least w such that some w columns of H are dependent.

    Pass w looks only for circuits of exactly w columns: an independent set S
    of w - 1 columns together with a later column in its span (S is the
    circuit minus its largest column).  Passes run in increasing w, so an
    exhausted budget still certifies d >= w.  ``lower`` is a known lower
    bound on d, such as the designed distance; smaller passes are skipped.
    With rank(H) = r every r + 1 columns are dependent, which caps the search.
    ``starts`` limits the smallest column of a circuit; see :func:`_block_starts`.
    """
    H = as_matrix(H)
    Hr = rref(F, H)[0] if H.size else np.zeros((0, H.shape[1]), dtype=np.int64)
    r, n = Hr.shape
    if not np.all(np.any(Hr != 0, axis=0)):
        return DistanceResult(1, 1, True, "circuits", Hr.size)
    meter = _Meter(budget)
    first = range(n) if starts is None else sorted(starts)

    def found(R: np.ndarray, used: np.ndarray, size: int, last: int, w: int) -> bool:
        meter.charge(R.size)
        if size == w - 1:
            return bool(_in_span(R, used)[last + 1 :].any())
        need = w - 1 - size  # columns still to pick for S, the closing column comes after them
        for j in (first if size == 0 else range(last + 1, n)):
            if j > n - 1 - need:
                break
            step = _eliminate(F, R, used, j)
            if step is None:
                continue  # a circuit smaller than w, already excluded
            if found(step[0], step[1], size + 1, j, w):
                return True
        return False

    w = max(lower, 2)
    try:
        while w <= r and not found(Hr, np.zeros(r, dtype=bool), 0, -1, w):
            w += 1
    except _OutOfBudget:
        return DistanceResult(w, r + 1, False, "circuits", meter.used)
    return DistanceResult(w, w, True, "circuits", meter.used)


def hyperplane_cost(n: int, k: int, starts=None) -> int:
    return _subset_count(n, k - 2, starts) * k * n


def distance_by_hyperplanes(F: GaloisField, G, budget: int = DEFAULT_BUDGET, starts=None) -> DistanceResult:
    """n minus the largest number of columns of G in a common hyperplane."""
    R, _ = rref(F, G)
    k, n = R.shape
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    if k == 1:
        w = int(np.count_nonzero(R[0]))
        return DistanceResult(w, w, True, "hyperplanes", n)
    meter = _Meter(budget)
    Q = F.order
    best = 0  # most columns seen in one hyperplane
    idx = np.arange(n)
    first = range(n) if starts is None else sorted(starts)

    def leaf(Rm: np.ndarray, used: np.ndarray, last: int) -> None:
        nonlocal best
        meter.charge(Rm.size + 4 * n)
        a, b = Rm[~used]
        zero = (a == 0) & (b == 0)
        key = np.full(n, Q, dtype=np.int64)
        nz_a = a != 0
        if nz_a.any():
            key[nz_a] = F.vmul(b[nz_a], F.vinv(a[nz_a]))
        cols = idx[~zero]
        _, cls = np.unique(key[~zero], return_inverse=True)
        hist = np.bincount(cls.ravel()) if cols.size else np.zeros(0, dtype=np.int64)
        # a class holding a column at or before ``last`` has another greedy basis
        hist[cls[cols <= last]] = 0
        if last < 0 and starts is not None:
            # k == 2: the class minimum is the first basis column
            lowest = np.full(hist.size, n, dtype=np.int64)
            np.minimum.at(lowest, cls, cols)
            hist[~np.isin(lowest, list(starts))] = 0
        if hist.any():
            best = max(best, int(zero.sum() + hist.max()))

    def dfs(Rm: np.ndarray, used: np.ndarray, size: int, last: int) -> None:
        if size == k - 2:
            leaf(Rm, used, last)
            return
        meter.charge(Rm.size)
        spanned = _in_span(Rm, used)
        for j in (first if size == 0 else range(last + 1, n)):
            if spanned[j]:
                continue
            step = _eliminate(F, Rm, used, j)
            # greedy-basis rule: no skipped column may become newly spanned
            now = _in_span(step[0], step[1])
            fresh = now & ~spanned
            fresh[j] = False
            if fresh[:j].any():
                continue
            dfs(step[0], step[1], size + 1, j)

    try:
        dfs(R, np.zeros(k, dtype=bool), 0, -1)
    except _OutOfBudget:
        return DistanceResult(1, n - best if best else n - k + 1, False, "hyperplanes", meter.used)
    return DistanceResult(n - best, n - best, True, "hyperplanes", meter.used)


def _block_starts(block_lengths) -> list[int]:
    """First coordinate of every block.

    If the code is invariant under rotating each block, every codeword (and
    every dual codeword) has a rotation whose support, or zero set, has its
    smallest element at a block start.  Searches may then fix that element.
    """
    starts, pos = [], 0
    for length in block_lengths:
        starts.append(pos)
        pos += length
    return starts


def minimum_distance(
    F: GaloisField,
    G,
    budget: int = DEFAULT_BUDGET,
    designed: int | None = None,
    method: str = "auto",
    shift_blocks=None,
) -> DistanceResult:
    """Minimum distance of the row space of ``G``.

    ``auto`` enumerates when that fits in the budget, and otherwise runs the
    column search with the smaller worst-case cost, then the other one if the
    first runs out; each strategy gets the full budget.  ``designed`` is a proven
    lower bound such as n - t: the circuit search starts there and inexact
    answers are tightened with it.
    ``shift_blocks`` are block lengths under whose rotation the code is known
    to be invariant; the column searches then exploit that symmetry.
    """
    R, _ = rref(F, G)
    k, n = R.shape
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    starts = None
    if shift_blocks is not None:
        if sum(shift_blocks) != n:
            raise ValueError("block lengths do not sum to n")
        starts = _block_starts(shift_blocks)
    lower = designed if designed is not None else 1
    if method == "auto":
        # AG codes sit just below the Singleton bound, so guess d near n - k
        d_guess = max(designed if designed is not None else n - k, 1)
        costs = {
            "circuits": circuit_cost(n, n - k, d_guess, starts, lower),
            "hyperplanes": hyperplane_cost(n, k, starts),
        }
        if enumeration_cost(F, k, n) <= budget:
            order = ["enumerate"]
        else:
            # the budget is per strategy: if the cheaper search runs out, try the other
            order = sorted(costs, key=costs.get)
    elif method in ("enumerate", "circuits", "hyperplanes"):
        order = [method]
    else:
        raise ValueError(f"unknown method {method!r}")
    lo, hi, work = max(lower, 1), n - k + 1, 0
    for name in order:
        if name == "enumerate":
            res = distance_by_enumeration(F, R, budget)
        elif name == "circuits":
            res = distance_by_circuits(F, nullspace(F, R), budget, starts, lower)
        else:
            res = distance_by_hyperplanes(F, R, budget, starts)
        work += res.work
        if res.exact:
            return DistanceResult(res.d_lower, res.d_upper, True, name, work)
        lo, hi = max(lo, res.d_lower), min(hi, res.d_upper)
        if lo >= hi:
            return DistanceResult(hi, hi, True, name, work)
    return DistanceResult(lo, hi, False, "bounds", work)
