"""Plane curves x^m = B(y) over a finite field, with family presets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Sequence

from .exceptions import CurveError
from .gf import FieldElement, GaloisField, make_field, prime_factors

FAMILIES = ("generic", "hyperelliptic", "norm_trace", "hermitian", "hermitian_quotient")


class AffinePoint(NamedTuple):
    x: FieldElement
    y: FieldElement

    def key(self) -> tuple[int, int]:
        """Global point order: y first, then x, by canonical code."""
        return (self.y.code, self.x.code)

    def codes(self) -> tuple[int, int]:
        return (self.x.code, self.y.code)

    def __repr__(self):
        return f"({self.x!r}, {self.y!r})"


class _Infinity:
    """The unique point at infinity P_inf; never an evaluation point."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "P_inf"


INFINITY = _Infinity()


@dataclass(frozen=True, eq=False)
class KummerCurve:
    """The curve x^m = B(y) with B separable, gcd(m, deg B) = 1 and p not dividing m.

    ``B`` is the little-endian coefficient vector of codes; use
    :func:`make_curve` or the preset constructors rather than building this
    directly, so the invariants get checked.
    """

    field: GaloisField
    m: int
    B: tuple[int, ...]
    family: str = "generic"
    name: str = dc_field(default="", compare=False)

    @property
    def d(self) -> int:
        return len(self.B) - 1

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.d - 1) // 2

    @property
    def degree(self) -> int:
        return max(self.m, self.d)

    def B_elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.B]

    def eval_B(self, y: int) -> int:
        return self.field.poly_eval(self.B, y)

    def contains(self, P) -> bool:
        if P is INFINITY:
            return True
        x, y = (P.x.code, P.y.code) if isinstance(P, AffinePoint) else (int(P[0]), int(P[1]))
        F = self.field
        return F.pow(x, self.m) == self.eval_B(y)

    def point(self, x, y) -> AffinePoint:
        P = AffinePoint(self.field(x), self.field(y))
        if not self.contains(P):
            raise CurveError(f"{P!r} is not on the curve")
        return P

    def describe(self) -> str:
        terms = []
        for i in range(self.d, -1, -1):
            c = self.B[i]
            if c:
                coef = "" if c == 1 and i else repr(FieldElement(self.field, c))
                mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
                terms.append(f"{coef}{'*' if coef and mono else ''}{mono}")
        return f"x^{self.m} = {' + '.join(terms)} over {self.field!r}"

    def spec(self) -> dict:
        return {"field": self.field.spec(), "family": self.family, "m": self.m, "B": list(self.B)}

    def base_change(self, field: GaloisField) -> "KummerCurve":
        """The same equation over ``field``; coefficients must lie in the prime field."""
        if field == self.field:
            return self
        if field.p != self.field.p or any(c >= self.field.p for c in self.B):
            raise CurveError("base change needs prime-field coefficients and equal characteristic")
        return make_curve(field, self.m, list(self.B), self.family)


# -- validation ---------------------------------------------------------------

def _check_family(field: GaloisField, m: int, B: list[int], family: str) -> None:
    p = field.p
    if family in ("generic", "hyperelliptic") and p == 2:
        raise CurveError(f"family {family!r} requires odd characteristic")
    if family == "hyperelliptic" and m != 2:
        raise CurveError("hyperelliptic curves have m = 2")
    if family in ("hermitian", "norm_trace", "hermitian_quotient"):
        q, r = field.q, field.r
        if family == "hermitian_quotient":
            if r != 2:
                raise CurveError("hermitian_quotient lives over F_{q^2}")
            expect = [0] * (q + 1)
            expect[1] = expect[q] = 1
            if B != expect:
                raise CurveError("hermitian_quotient needs B(y) = y^q + y")
            if m <= 1 or (q + 1) % m or math.gcd(m, q) != 1:
                raise CurveError("hermitian_quotient needs m > 1, m | q+1, gcd(m, q) = 1")
            return
        if family == "hermitian" and r != 2:
            raise CurveError("hermitian curves live over F_{q^2}")
        if r < 2:
            raise CurveError("norm-trace curves need r >= 2")
        expect = [0] * (q ** (r - 1) + 1)
        for i in range(r):
            expect[q**i] = 1
        if B != expect or m != (q**r - 1) // (q - 1):
            raise CurveError(f"{family} preset shape violated")


def make_curve(field: GaloisField, m: int, B: Sequence, family: str = "generic", name: str = "") -> KummerCurve:
    """Validate and build x^m = B(y).

    ``B`` holds coefficients c_0..c_d as anything ``field`` can coerce.
    """
    if family not in FAMILIES:
        raise CurveError(f"unknown family {family!r}")
    codes = field.poly_trim(field(c).code for c in B)
    d = len(codes) - 1
    if m < 2:
        raise CurveError("m must be at least 2")
    if d < 1:
        raise CurveError("B must have degree at least 1")
    if m % field.p == 0:
        raise CurveError(f"p = {field.p} divides m = {m}")
    if math.gcd(m, d) != 1:
        raise CurveError(f"gcd(m, deg B) = gcd({m}, {d}) != 1")
    if max(m, d) < 3:
        raise CurveError("curve degree max(m, deg B) must be at least 3")
    if len(field.poly_gcd(codes, field.poly_deriv(codes))) != 1:
        raise CurveError("B is not separable")
    _check_family(field, m, codes, family)
    return KummerCurve(field, m, tuple(codes), family, name)


def make_hyperelliptic(field: GaloisField, f: Sequence, name: str = "") -> KummerCurve:
    return make_curve(field, 2, f, "hyperelliptic", name)


def make_norm_trace(q: int, r: int) -> KummerCurve:
    p = prime_factors(q)[0]
    h = round(math.log(q, p))
    F = make_field(p, h, r)
    B = [0] * (q ** (r - 1) + 1)
    for i in range(r):
        B[q**i] = 1
    return make_curve(F, (q**r - 1) // (q - 1), B, "norm_trace", f"normtrace-{q}-{r}")


def make_hermitian(q: int) -> KummerCurve:
    p = prime_factors(q)[0]
    h = round(math.log(q, p))
    F = make_field(p, h, 2)
    B = [0] * (q + 1)
    B[1] = B[q] = 1
    return make_curve(F, q + 1, B, "hermitian", f"hermitian-{q}")


def make_hermitian_quotient(q: int, m: int) -> KummerCurve:
    p = prime_factors(q)[0]
    h = round(math.log(q, p))
    F = make_field(p, h, 2)
    # y^q + y rather than y^q - y: for odd q the latter is a non-maximal twist
    B = [0] * (q + 1)
    B[1] = B[q] = 1
    return make_curve(F, m, B, "hermitian_quotient", f"quotient-{q}-{m}")


def genus(curve: KummerCurve) -> int:
    return curve.genus


# -- rational points ----------------------------------------------------------

@dataclass(frozen=True)
class RationalPointSet:
    curve: KummerCurve
    affine: tuple[AffinePoint, ...]
    has_infinity: bool = True

    @property
    def count(self) -> int:
        return len(self.affine) + int(self.has_infinity)

    def __len__(self):
        return len(self.affine)

    def __iter__(self):
        return iter(self.affine)

    def index(self) -> dict[tuple[int, int], int]:
        return {P.codes(): i for i, P in enumerate(self.affine)}

    def records(self) -> list[list[list[int]]]:
        return [[P.x.coeffs, P.y.coeffs] for P in self.affine]


def enumerate_points(curve: KummerCurve) -> RationalPointSet:
    """All F-rational points, affine ones ordered by (y, x) codes, plus P_inf.

    The m-th power map is tabulated by one scan over the field, then every
    y is looked up.
    """
    F = curve.field
    preimages: dict[int, list[int]] = {}
    for x in range(F.order):
        preimages.setdefault(F.pow(x, curve.m), []).append(x)
    dB = F.poly_deriv(curve.B)
    pts = []
    for y in range(F.order):
        for x in preimages.get(curve.eval_B(y), ()):
            # defensive: no affine singular points on a separated curve
            if x == 0 and F.poly_eval(dB, y) == 0:
                raise CurveError(f"singular affine point (0, {y}); B is not separable")
            pts.append(AffinePoint(FieldElement(F, x), FieldElement(F, y)))
    return RationalPointSet(curve, tuple(pts), True)


def hasse_weil_ok(curve: KummerCurve, count: int) -> bool:
    """|N - (Q+1)| <= 2 g sqrt(Q), checked in exact integers."""
    dev = count - curve.field.order - 1
    return dev * dev <= 4 * curve.genus**2 * curve.field.order


def is_maximal(curve: KummerCurve, over_field: GaloisField | None = None) -> bool:
    """Whether the curve attains Q + 1 + 2 g sqrt(Q) points over a square-order field."""
    if over_field is not None:
        curve = curve.base_change(over_field)
    Q = curve.field.order
    s = math.isqrt(Q)
    if s * s != Q:
        raise CurveError(f"field order {Q} is not a square")
    return enumerate_points(curve).count == Q + 1 + 2 * curve.genus * s
