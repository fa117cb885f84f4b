"""Affine-triangular automorphisms (x, y) -> (a x + b, c x + d y + e) and their orbits."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .curve import INFINITY, AffinePoint, KummerCurve, RationalPointSet
from .exceptions import AutomorphismError, ConstraintError
from .gf import FieldElement, GaloisField

Bivariate = dict  # {(i, j): code} for X^i Y^j


def _bv_mul(F: GaloisField, f: Bivariate, g: Bivariate) -> Bivariate:
    out: Bivariate = {}
    for (i, j), a in f.items():
        for (k, l), b in g.items():
            key = (i + k, j + l)
            out[key] = F.add(out.get(key, 0), F.mul(a, b))
    return {k: v for k, v in out.items() if v}


def _bv_axpy(F: GaloisField, acc: Bivariate, c: int, f: Bivariate) -> None:
    for key, v in f.items():
        acc[key] = F.add(acc.get(key, 0), F.mul(c, v))


def _bv_pow(F: GaloisField, f: Bivariate, e: int) -> Bivariate:
    result: Bivariate = {(0, 0): 1}
    while e:
        if e & 1:
            result = _bv_mul(F, result, f)
        f = _bv_mul(F, f, f)
        e >>= 1
    return result


def pullback_is_proportional(curve: KummerCurve, coeffs: Sequence[int]) -> bool:
    """Whether F(aX+b, cX+dY+e) = lambda * F(X, Y) for F = X^m - B(Y), as polynomials."""
    F = curve.field
    a, b, c, d, e = coeffs
    xlin = {k: v for k, v in {(1, 0): a, (0, 0): b}.items() if v}
    ylin = {k: v for k, v in {(1, 0): c, (0, 1): d, (0, 0): e}.items() if v}
    pulled = _bv_pow(F, xlin, curve.m)
    power: Bivariate = {(0, 0): 1}
    subst: Bivariate = {}
    for j, bj in enumerate(curve.B):
        if j:
            power = _bv_mul(F, power, ylin)
        if bj:
            _bv_axpy(F, subst, bj, power)
    _bv_axpy(F, pulled, F.neg(1), subst)
    pulled = {k: v for k, v in pulled.items() if v}
    lam = F.pow(a, curve.m)
    target = {(curve.m, 0): lam}
    for j, bj in enumerate(curve.B):
        if bj:
            target[(0, j)] = F.add(target.get((0, j), 0), F.neg(F.mul(lam, bj)))
    target = {k: v for k, v in target.items() if v}
    return pulled == target


@dataclass(frozen=True, eq=False)
class Automorphism:
    """The map (x, y) -> (alpha x + beta, gamma x + delta y + epsilon) on ``curve``.

    Instances are only produced by :func:`make_automorphism` and the preset
    constructors below, which certify the map symbolically.
    """

    curve: KummerCurve
    alpha: FieldElement
    beta: FieldElement
    gamma: FieldElement
    delta: FieldElement
    epsilon: FieldElement
    kind: str = "raw"

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.alpha.code, self.beta.code, self.gamma.code, self.delta.code, self.epsilon.code)

    @property
    def is_identity(self) -> bool:
        return self.coefficients == (1, 0, 0, 1, 0)

    @property
    def fixes_infinity(self) -> bool:
        # triangular affine maps send the pole of x and y to itself
        return True

    def _apply_codes(self, x: int, y: int) -> tuple[int, int]:
        F = self.curve.field
        a, b, c, d, e = self.coefficients
        return (F.add(F.mul(a, x), b), F.add(F.add(F.mul(c, x), F.mul(d, y)), e))

    def __call__(self, P):
        return apply(self, P)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self o other (apply ``other`` first)."""
        if other.curve is not self.curve:
            raise AutomorphismError("automorphisms of different curves")
        F = self.curve.field
        a1, b1, c1, d1, e1 = self.coefficients
        a2, b2, c2, d2, e2 = other.coefficients
        coeffs = (
            F.mul(a1, a2),
            F.add(F.mul(a1, b2), b1),
            F.add(F.mul(c1, a2), F.mul(d1, c2)),
            F.mul(d1, d2),
            F.add(F.add(F.mul(c1, b2), F.mul(d1, e2)), e1),
        )
        return _trusted(self.curve, coeffs, "composite")

    def power(self, i: int) -> "Automorphism":
        """sigma^i by repeated squaring; negative i counts modulo the order."""
        e = i % self.order if i < 0 else i
        result = identity(self.curve)
        base = self
        while e:
            if e & 1:
                result = base.compose(result)
            base = base.compose(base)
            e >>= 1
        return _trusted(self.curve, result.coefficients, f"{self.kind}^{i}")

    @cached_property
    def order(self) -> int:
        return automorphism_order(self)

    def describe(self) -> str:
        a, b, c, d, e = (repr(v) for v in (self.alpha, self.beta, self.gamma, self.delta, self.epsilon))
        return f"(x, y) -> ({a}x + {b}, {c}x + {d}y + {e})"

    def spec(self) -> dict:
        return {
            "kind": "raw",
            "alpha": self.alpha.code, "beta": self.beta.code, "gamma": self.gamma.code,
            "delta": self.delta.code, "epsilon": self.epsilon.code,
        }


def _trusted(curve: KummerCurve, coeffs: Sequence[int], kind: str) -> Automorphism:
    F = curve.field
    return Automorphism(curve, *(FieldElement(F, c) for c in coeffs), kind=kind)


def make_automorphism(curve: KummerCurve, alpha, beta=0, gamma=0, delta=1, epsilon=0, kind: str = "raw") -> Automorphism:
    F = curve.field
    coeffs = tuple(F(v).code for v in (alpha, beta, gamma, delta, epsilon))
    if coeffs[0] == 0 or coeffs[3] == 0:
        raise AutomorphismError("alpha and delta must be nonzero")
    if not pullback_is_proportional(curve, coeffs):
        raise AutomorphismError(f"map {coeffs} does not preserve {curve.describe()}")
    return _trusted(curve, coeffs, kind)


def identity(curve: KummerCurve) -> Automorphism:
    return _trusted(curve, (1, 0, 0, 1, 0), "identity")


def diagonal(curve: KummerCurve, x_scale, y_scale) -> Automorphism:
    """(x, y) -> (x_scale x, y_scale y)."""
    return make_automorphism(curve, x_scale, 0, 0, y_scale, 0, kind="diagonal")


def hermitian_psi(curve: KummerCurve, a, b, c) -> Automorphism:
    """psi_{a,b,c}: (x, y) -> (a x + b, a b^q x + a^(q+1) y + c), needs c^q + c = b^(q+1)."""
    F = curve.field
    if curve.family != "hermitian":
        raise AutomorphismError("psi maps are defined on the Hermitian curve")
    q = F.q
    a, b, c = F(a), F(b), F(c)
    if c**q + c != b ** (q + 1):
        raise AutomorphismError("psi needs c^q + c = b^(q+1)")
    return make_automorphism(curve, a, b, a * b**q, a ** (q + 1), c, kind="hermitian_psi")


def norm_trace_map(curve: KummerCurve, b, a=0) -> Automorphism:
    """(x, y) -> (b x, b^N y + a) with N = (q^r - 1)/(q - 1) and Tr(a) = 0."""
    F = curve.field
    if curve.family not in ("norm_trace", "hermitian"):
        raise AutomorphismError("norm-trace maps are defined on norm-trace curves")
    b, a = F(b), F(a)
    if F.trace(a.code, F.h) != 0:
        raise AutomorphismError("translation part must have trace zero")
    return make_automorphism(curve, b, 0, 0, b**curve.m, a, kind="norm_trace")


def quotient_shift(field: GaloisField) -> int:
    """Smallest nonzero c with c^q + c = 0; equals 1 in characteristic 2."""
    q = field.q
    return next(c for c in range(1, field.order) if field.add(field.pow(c, q), c) == 0)


def quotient_eta(curve: KummerCurve, zeta, shift=None) -> Automorphism:
    """(x, y) -> (zeta x, y + c) on y^q + y = x^m, with c^q + c = 0, c != 0."""
    if curve.family != "hermitian_quotient":
        raise AutomorphismError("eta is defined on y^q + y = x^m")
    F = curve.field
    c = quotient_shift(F) if shift is None else F(shift).code
    if c == 0 or F.add(F.pow(c, F.q), c) != 0:
        raise AutomorphismError("the shift c must satisfy c^q + c = 0, c != 0")
    return make_automorphism(curve, zeta, 0, 0, 1, c, kind="quotient_eta")


def automorphism_order(sigma: Automorphism) -> int:
    """Least k >= 1 with sigma^k = id, by iterated composition."""
    F = sigma.curve.field
    cap = F.p * (F.order - 1)
    current = sigma
    for k in range(1, cap + 1):
        if current.is_identity:
            return k
        current = sigma.compose(current)
    raise AutomorphismError("order exceeds p(Q-1); not a valid automorphism")


def apply(sigma: Automorphism, P):
    if P is INFINITY:
        return INFINITY
    curve = sigma.curve
    if not curve.contains(P):
        raise AutomorphismError(f"{P!r} is not on the curve")
    x, y = (P.x.code, P.y.code) if isinstance(P, AffinePoint) else (int(P[0]), int(P[1]))
    u, v = sigma._apply_codes(x, y)
    F = curve.field
    return AffinePoint(FieldElement(F, u), FieldElement(F, v))


# -- orbits -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OrbitPartition:
    """Orbits of ``automorphism`` on a set of affine points, each as [P, sP, s^2 P, ...]."""

    automorphism: Automorphism
    orbits: tuple[tuple[AffinePoint, ...], ...]

    @property
    def order(self) -> int:
        return self.automorphism.order

    @property
    def lengths(self) -> list[int]:
        return [len(o) for o in self.orbits]

    def is_long(self, i: int) -> bool:
        return len(self.orbits[i]) == self.order

    @property
    def long_orbits(self) -> list[tuple[AffinePoint, ...]]:
        return [o for o in self.orbits if len(o) == self.order]

    @property
    def short_orbits(self) -> list[tuple[AffinePoint, ...]]:
        return [o for o in self.orbits if len(o) < self.order]

    @property
    def fixed_points(self) -> list[AffinePoint]:
        return [o[0] for o in self.orbits if len(o) == 1]

    def length_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for n in self.lengths:
            out[n] = out.get(n, 0) + 1
        return dict(sorted(out.items()))

    def records(self) -> list[dict]:
        return [
            {
                "id": i,
                "length": len(o),
                "type": "long" if len(o) == self.order else "short",
                "points": [[P.x.code, P.y.code] for P in o],
            }
            for i, o in enumerate(self.orbits)
        ]


def orbit_partition(sigma: Automorphism, points: RationalPointSet | Iterable[AffinePoint]) -> OrbitPartition:
    """Partition the affine points into sigma-orbits.

    Points are scanned in global (y, x) order, so every orbit starts at its
    minimal point and orbits come out sorted by that point.
    """
    pts = sorted(points, key=AffinePoint.key)
    index = {P.codes(): i for i, P in enumerate(pts)}
    seen = [False] * len(pts)
    orbits = []
    for i, P in enumerate(pts):
        if seen[i]:
            continue
        orbit = []
        j = i
        while not seen[j]:
            seen[j] = True
            orbit.append(pts[j])
            image = sigma._apply_codes(*pts[j].codes())
            if image not in index:
                raise AutomorphismError(f"image of {pts[j]!r} lies outside the point set")
            j = index[image]
        if j != i:
            raise AutomorphismError("map is not a bijection on the point set")
        orbits.append(tuple(orbit))
    return OrbitPartition(sigma, tuple(orbits))


def select_long_orbits(partition: OrbitPartition) -> list[tuple[AffinePoint, ...]]:
    found = partition.long_orbits
    if not found:
        raise ConstraintError("no long orbits")
    return found


def select_orbits_by_length(partition: OrbitPartition, lengths: Iterable[int]) -> list[tuple[AffinePoint, ...]]:
    wanted = set(lengths)
    missing = wanted - set(partition.lengths)
    if not wanted or missing:
        raise ConstraintError(f"no orbits of length {sorted(missing) or '[]'}")
    return [o for o in partition.orbits if len(o) in wanted]


def select_nontrivial_orbits(partition: OrbitPartition) -> list[tuple[AffinePoint, ...]]:
    """Every orbit of length > 1, short ones first, each group in canonical order."""
    order = partition.order
    short = [o for o in partition.orbits if 1 < len(o) < order]
    long = [o for o in partition.orbits if len(o) == order and order > 1]
    if not short and not long:
        raise ConstraintError("no non-trivial orbits")
    return short + long
