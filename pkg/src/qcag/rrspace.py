"""Monomial bases of L(t P_inf) on x^m = B(y).

At the unique point at infinity x has a pole of order d = deg B and y a pole
of order m, so x^a y^b with a < m has pole order a d + b m.  Distinct a < m
give distinct residues mod m (gcd(m, d) = 1), hence these monomials have
distinct pole orders and are independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .curve import INFINITY, AffinePoint, KummerCurve
from .exceptions import ConstraintError, CurveError


@dataclass(frozen=True, eq=False)
class MonomialBasis:
    curve: KummerCurve
    t: int
    monomials: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def __len__(self):
        return self.dim

    def pole_orders(self) -> list[int]:
        m, d = self.curve.m, self.curve.d
        return [a * d + b * m for a, b in self.monomials]

    def records(self) -> list[dict]:
        return [{"a": a, "b": b, "pole_order": w} for (a, b), w in zip(self.monomials, self.pole_orders())]


def rr_basis(curve: KummerCurve, t: int) -> MonomialBasis:
    """All x^a y^b with a <= m-1 and a d + b m <= t, sorted by pole order."""
    if t < 0:
        raise ConstraintError("t must be non-negative")
    m, d = curve.m, curve.d
    mons = [(a, b) for a in range(min(m - 1, t // d) + 1) for b in range((t - a * d) // m + 1)]
    mons.sort(key=lambda ab: (ab[0] * d + ab[1] * m, ab[0]))
    g = curve.genus
    if t > 2 * g - 2 and len(mons) != t + 1 - g:
        raise CurveError(f"basis size {len(mons)} != t + 1 - g = {t + 1 - g}")
    return MonomialBasis(curve, t, tuple(mons))


def evaluate_basis(basis: MonomialBasis, P) -> list:
    """[x^a y^b at P for each monomial], as field elements."""
    if P is INFINITY:
        raise CurveError("monomials have a pole at P_inf")
    if not basis.curve.contains(P):
        raise CurveError(f"{P!r} is not on the curve")
    F = basis.curve.field
    if isinstance(P, AffinePoint):
        x, y = P.x, P.y
    else:
        x, y = F(P[0]), F(P[1])
    return [x**a * y**b for a, b in basis.monomials]


def evaluation_matrix(basis: MonomialBasis, points: Sequence[AffinePoint]) -> np.ndarray:
    """dim x n array of codes, column j the basis evaluated at points[j]."""
    F = basis.curve.field
    xs = np.array([P.x.code for P in points], dtype=np.int64)
    ys = np.array([P.y.code for P in points], dtype=np.int64)
    max_a = max((a for a, _ in basis.monomials), default=0)
    max_b = max((b for _, b in basis.monomials), default=0)
    xpow = [np.ones_like(xs)]
    for _ in range(max_a):
        xpow.append(F.vmul(xpow[-1], xs))
    ypow = [np.ones_like(ys)]
    for _ in range(max_b):
        ypow.append(F.vmul(ypow[-1], ys))
    if not basis.monomials:
        return np.zeros((0, len(points)), dtype=np.int64)
    return np.stack([F.vmul(xpow[a], ypow[b]) for a, b in basis.monomials])


def gaps(curve: KummerCurve) -> list[int]:
    """Positive integers that are not pole orders of any function regular off P_inf."""
    m, d = curve.m, curve.d
    bound = (m - 1) * (d - 1)
    reach = set(a * d + b * m for a in range(m) for b in range(bound // m + 1))
    return [w for w in range(1, bound) if w not in reach]
