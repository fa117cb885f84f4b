"""Predicted orbit structures and code parameters, computed without touching orbits.

Each census turns a structural statement about an automorphism into
counts (orbit lengths and multiplicities, explicit short orbits where they
are known in closed form).  :func:`crosscheck` then compares those counts
with an orbit partition computed directly, so the two sides are independent
implementations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .aut import Automorphism, OrbitPartition
from .curve import KummerCurve, enumerate_points, make_curve
from .exceptions import CensusError
from .gf import GaloisField, make_field, prime_factors

PointSet = frozenset  # frozenset of (x_code, y_code)


@dataclass(frozen=True)
class OrbitCensus:
    label: str
    order: int
    short: tuple[tuple[int, int], ...]  # (length, count)
    long_count: int
    covers: int
    orbit_sets: tuple[PointSet, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        total = sum(length * count for length, count in self.short) + self.long_count * self.order
        if total != self.covers:
            raise CensusError(f"{self.label}: census covers {total} points, expected {self.covers}")

    def length_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for length, count in self.short:
            if count:
                out[length] = out.get(length, 0) + count
        if self.long_count:
            out[self.order] = out.get(self.order, 0) + self.long_count
        return dict(sorted(out.items()))

    def to_record(self) -> dict:
        return {
            "label": self.label, "order": self.order,
            "short": [list(s) for s in self.short], "long_count": self.long_count,
            "covers": self.covers, "notes": list(self.notes),
        }


@dataclass(frozen=True)
class PredictedParams:
    """[n, t + 1 - g, >= n - t] for g - ... < t < n, with a co-index description."""

    n: int
    genus: int
    co_index: str
    t_range: tuple[int, int]  # exclusive bounds
    label: str = ""

    def k(self, t: int) -> int:
        return t + 1 - self.genus

    def designed_distance(self, t: int) -> int:
        return self.n - t

    def admissible(self, t: int) -> bool:
        return self.t_range[0] < t < self.t_range[1]

    def to_record(self) -> dict:
        return {"label": self.label, "n": self.n, "genus": self.genus, "co_index": self.co_index,
                "t_range": list(self.t_range), "k": f"t - {self.genus - 1}" if self.genus != 1 else "t"}


def _params(label: str, n: int, g: int, co_index: str) -> PredictedParams:
    return PredictedParams(n, g, co_index, (2 * g - 2, n), label)


def _count(curve: KummerCurve, count: int | None) -> int:
    return enumerate_points(curve).count if count is None else count


def _root_count(F: GaloisField, B) -> list[int]:
    return [v for v in range(F.order) if F.poly_eval(B, v) == 0]


def _exact_div(a: int, b: int, what: str) -> int:
    if b == 0 or a % b:
        raise CensusError(f"{what}: {a} is not divisible by {b}")
    return a // b


# -- Kummer curves --------------------------------------------------------------

def census_diagonal_kummer(curve: KummerCurve, sigma: Automorphism, count: int | None = None) -> OrbitCensus:
    """sigma = (eps x, y) with eps of order m: fixes the points (0, v) with B(v) = 0."""
    F = curve.field
    a, b, c, d, e = sigma.coefficients
    if (b, c, d, e) != (0, 0, 1, 0):
        raise CensusError("expected a map (x, y) -> (eps x, y)")
    m = curve.m
    if (F.order - 1) % m:
        raise CensusError(f"m = {m} does not divide Q - 1 = {F.order - 1}")
    if F.element_order(a) != m:
        raise CensusError("eps must have order m")
    roots = _root_count(F, curve.B)
    ell = len(roots)
    affine = _count(curve, count) - 1
    long_count = _exact_div(affine - ell, m, "long orbits")
    sets = tuple(PointSet({(0, v)}) for v in roots)
    return OrbitCensus("kummer tau", m, ((1, ell),), long_count, affine, sets)


def census_genus2_order8(field: GaloisField, count: int | None = None) -> OrbitCensus:
    """x^2 = y^5 - y with sigma = (a x, a^2 y), a of order 8."""
    p, Q = field.p, field.order
    if p in (2, 5) or Q % 8 != 1:
        raise CensusError("needs p not in {2, 5} and Q = 1 mod 8")
    if count is None:
        count = enumerate_points(make_curve(field, 2, [0, -1, 0, 0, 0, 1], "hyperelliptic")).count
    long_count = _exact_div(count - 6, 8, "(#Y - 6)/8")
    fourth = PointSet((0, v) for v in field.roots_of_unity(4))
    return OrbitCensus("genus 2, order 8", 8, ((1, 1), (4, 1)), long_count, count - 1,
                       (PointSet({(0, 0)}), fourth))


def census_genus2_order10(field: GaloisField, count: int | None = None) -> OrbitCensus:
    """x^2 = y^5 + 1 with sigma = (-x, xi y), xi of order 5."""
    p, Q = field.p, field.order
    if p in (2, 5) or Q % 5 != 1:
        raise CensusError("needs p not in {2, 5} and Q = 1 mod 5")
    if count is None:
        count = enumerate_points(make_curve(field, 2, [1, 0, 0, 0, 0, 1], "hyperelliptic")).count
    long_count = _exact_div(count - 8, 10, "(#X - 8)/10")
    minus_one = field.neg(1)
    pair = PointSet({(1, 0), (minus_one, 0)})
    five = PointSet((0, field.neg(z)) for z in field.roots_of_unity(5))
    return OrbitCensus("genus 2, order 10", 10, ((2, 1), (5, 1)), long_count, count - 1, (pair, five))


def genus2_order10_params(count: int) -> tuple[PredictedParams, PredictedParams]:
    return (_params("QC long orbits", count - 8, 2, "10"),
            _params("GQC all non-trivial orbits", count - 1, 2, "(2,5,10,...,10)"))


def census_maximal_hyperelliptic(q: int, g: int) -> tuple[OrbitCensus, PredictedParams, PredictedParams]:
    """x^2 = y^(2g+1) + 1 over F_{q^2} with (2g+1) | (q+1), sigma = (-x, xi y)."""
    if q % 2 == 0:
        raise CensusError("q must be odd")
    if (q + 1) % (2 * g + 1):
        raise CensusError(f"2g+1 = {2 * g + 1} does not divide q+1 = {q + 1}")
    count = q * q + 2 * g * q + 1
    long_count = _exact_div(q - 1, 2, "(q-1)/2") + _exact_div((q - 2) * (q + 1), 4 * g + 2, "(q-2)(q+1)/(4g+2)")
    F = _field_of_square(q)
    minus_one = F.neg(1)
    pair = PointSet({(1, 0), (minus_one, 0)})
    ring = PointSet((0, F.neg(z)) for z in F.roots_of_unity(2 * g + 1))
    census = OrbitCensus("maximal hyperelliptic", 4 * g + 2, ((2, 1), (2 * g + 1, 1)), long_count, count - 1,
                         (pair, ring))
    qc = _params("QC long orbits", q * q + 2 * g * (q - 1) - 3, g, str(4 * g + 2))
    gqc = _params("GQC all non-trivial orbits", q * q + 2 * g * q, g, f"(2,{2 * g + 1},{4 * g + 2},...,{4 * g + 2})")
    return census, qc, gqc


def _field_of_square(q: int) -> GaloisField:
    p = prime_factors(q)[0]
    h = round(math.log(q, p))
    return make_field(p, h, 2)


# -- norm-trace curves ------------------------------------------------------------

def _norm_trace_shape(curve: KummerCurve, sigma: Automorphism) -> tuple[int, int, int]:
    """(b, gamma, a) for sigma = (b x, gamma y + a), checking gamma = b^N."""
    a_, b_, c_, d_, e_ = sigma.coefficients
    F = curve.field
    if b_ != 0 or c_ != 0 or d_ != F.pow(a_, curve.m):
        raise CensusError("sigma is not of the form (b x, b^N y + a)")
    return a_, d_, e_


def census_norm_trace(curve: KummerCurve, sigma: Automorphism) -> OrbitCensus:
    """Orbit census for sigma in G x| C on the norm-trace curve, r >= 3.

    Omega = {(0, y) : Tr(y) = 0} has q^(r-1) points; the remaining
    q^(2r-1) - q^(r-1) affine points form orbits of full length.
    """
    F = curve.field
    if curve.family != "norm_trace":
        raise CensusError("not a norm-trace curve")
    q, r, p = F.q, F.r, F.p
    if r < 3:
        raise CensusError("the norm-trace census needs r >= 3")
    b, gamma, a = _norm_trace_shape(curve, sigma)
    affine = q ** (2 * r - 1)
    omega = q ** (r - 1)
    rest = affine - omega
    ord_b = F.element_order(b)
    ord_g = F.element_order(gamma)
    if b == 1 and a == 0:
        raise CensusError("identity map")
    if b == 1:
        # translation: semiregular, every orbit has length p
        count = _exact_div(affine, p, "q^(2r-1)/p")
        note = (f"q^(2r)/p = {q ** (2 * r) // p} orbits of length {p} would need {q ** (2 * r)} points; "
                f"the curve has {affine} affine points, so {count} orbits")
        return OrbitCensus("norm-trace G", p, (), count, affine, (), (note,))
    if a == 0:
        label, order, sets = "norm-trace C", ord_b, (PointSet({(0, 0)}),)
        short = ((1, 1), (ord_g, _exact_div(omega - 1, ord_g, "Omega orbits")))
    elif gamma != 1:
        y0 = F.div(a, F.sub(1, gamma))
        label, order, sets = "norm-trace case (a)", ord_b, (PointSet({(0, y0)}),)
        short = ((1, 1), (ord_g, _exact_div(omega - 1, ord_g, "Omega orbits")))
    else:
        label, order, sets = "norm-trace case (b)", p * ord_b, ()
        short = ((p, _exact_div(omega, p, "Omega orbits")),)
    return OrbitCensus(label, order, short, _exact_div(rest, order, "semiregular part"), affine, sets)


def norm_trace_params(q: int, r: int) -> dict[str, PredictedParams]:
    p = prime_factors(q)[0]
    g = q * (q ** (r - 1) - 1) ** 2 // (2 * (q - 1))
    n_all, n_off = q ** (2 * r - 1), q ** (2 * r - 1) - q ** (r - 1)
    return {
        "translation": _params("QC under G", n_all, g, str(p)),
        "off-omega": _params("QC off Omega", n_off, g, "p^nu * l, l | q^r - 1"),
        "gqc-C": _params("GQC under C", n_all - 1, g, "(gcd(l,q-1),...,l,...)"),
        "gqc-b": _params("GQC case (b)", n_all, g, "(p,...,p*l,...)"),
    }


# -- Hermitian curve ----------------------------------------------------------------

def hermitian_case(curve: KummerCurve, psi: Automorphism) -> str:
    """"S_p", "1", "2" or "3"; case 3 is the complement of cases 1 and 2."""
    F = curve.field
    q, p = F.q, F.p
    a = psi.alpha.code
    order = psi.order
    if a == 1:
        return "S_p"
    if order % p == 0:
        return "1"
    if (q + 1) % order == 0:
        return "2"
    return "3"


def census_hermitian(curve: KummerCurve, psi: Automorphism) -> OrbitCensus:
    F = curve.field
    if curve.family != "hermitian":
        raise CensusError("not a Hermitian curve")
    q, p = F.q, F.p
    a_, b_, c_, d_, e_ = psi.coefficients
    if psi.is_identity:
        raise CensusError("identity map")
    if d_ != F.pow(a_, q + 1) or c_ != F.mul(a_, F.pow(b_, q)) or F.add(F.pow(e_, q), e_) != F.pow(b_, q + 1):
        raise CensusError("not a map psi_{a,b,c}")
    affine = q**3
    order = psi.order
    case = hermitian_case(curve, psi)
    if case == "S_p":
        notes = () if order == p else (f"ord(psi) = {order} rather than p = {p}; orbits taken of length ord(psi)",)
        return OrbitCensus("hermitian S_p", order, (), _exact_div(affine, order, "q^3/ord"), affine, (), notes)
    if case == "1":
        short = ((p, _exact_div(q, p, "q/p")),)
    elif case == "2":
        short = ((1, q),)
    else:
        ord_a = F.element_order(a_)
        ord_n = F.element_order(F.pow(a_, q + 1))
        if ord_a != order:
            raise CensusError("case 3 expects ord(psi) = ord(a)")
        short = ((1, 1), (ord_n, _exact_div(q - 1, ord_n, "(q-1)/ord(a^(q+1))")))
    long_count = _exact_div(affine - q, order, "(q^3 - q)/ord")
    return OrbitCensus(f"hermitian case ({case})", order, short, long_count, affine)


def hermitian_params(q: int, case: str) -> PredictedParams:
    g = q * (q - 1) // 2
    n = q**3 if case == "S_p" else q**3 - q
    return PredictedParams(n, g, "ord(psi)", (q * (q - 1) - 2, n), f"hermitian {case}")


# -- Hermitian quotient -------------------------------------------------------------

def census_hermitian_quotient(q: int, m: int) -> tuple[OrbitCensus, PredictedParams, PredictedParams]:
    """eta = (zeta x, y + c) on y^q + y = x^m over F_{q^2}."""
    p = prime_factors(q)[0]
    if m <= 1 or p == 3 or math.gcd(p, m) != 1 or (q + 1) % m:
        raise CensusError("needs m > 1, p != 3, gcd(p, m) = 1 and m | q + 1")
    g = (q - 1) * (m - 1) // 2
    count = m * q * (q - 1) + q + 1
    affine = count - 1
    census = OrbitCensus(
        "hermitian quotient eta", p * m, ((p, q // p),),
        _exact_div(m * q * (q - 1), p * m, "mq(q-1)/(pm)"), affine,
        notes=("Omega = {(0, y) : y^q + y = 0}",),
    )
    qc = _params("QC long orbits", m * q * (q - 1), g, str(p * m))
    gqc = _params("GQC all non-trivial orbits", m * q * (q - 1) + q, g,
                  f"({p} x {q // p}, {p * m} x {q * (q - 1) // p})")
    return census, qc, gqc


# -- comparison -----------------------------------------------------------------------

@dataclass
class CrosscheckReport:
    label: str
    predicted: dict[int, int]
    computed: dict[int, int]
    diffs: list[str] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diffs

    def to_record(self) -> dict:
        return {"label": self.label, "passed": self.passed,
                "predicted": {str(k): v for k, v in self.predicted.items()},
                "computed": {str(k): v for k, v in self.computed.items()},
                "diffs": self.diffs, "notes": self.notes}


def crosscheck(census: OrbitCensus, partition: OrbitPartition) -> CrosscheckReport:
    computed = partition.length_census()
    predicted = census.length_census()
    rep = CrosscheckReport(census.label, predicted, computed, notes=list(census.notes))
    if partition.order != census.order:
        rep.diffs.append(f"order: predicted {census.order}, computed {partition.order}")
    covered = sum(partition.lengths)
    if covered != census.covers:
        rep.diffs.append(f"points: predicted {census.covers}, computed {covered}")
    for length in sorted(set(predicted) | set(computed)):
        if predicted.get(length, 0) != computed.get(length, 0):
            rep.diffs.append(f"orbits of length {length}: predicted {predicted.get(length, 0)}, "
                             f"computed {computed.get(length, 0)}")
    orbit_sets = {PointSet(P.codes() for P in o) for o in partition.orbits}
    for s in census.orbit_sets:
        if s not in orbit_sets:
            rep.diffs.append(f"predicted orbit {sorted(s)} not found")
    return rep


# -- dispatch -------------------------------------------------------------------------

CENSUS_NAMES = ("auto", "kummer_tau", "genus2_order8", "genus2_order10", "maximal", "norm_trace",
                "hermitian", "quotient")


def _is_maximal_shape(curve: KummerCurve) -> int | None:
    """g when curve is x^2 = y^(2g+1) + 1 over F_{q^2} with q odd, else None."""
    F = curve.field
    B = curve.B
    if curve.m != 2 or F.r != 2 or F.p == 2 or B[0] != 1 or B[-1] != 1 or any(B[1:-1]):
        return None
    return (curve.d - 1) // 2


def census_for(curve: KummerCurve, sigma: Automorphism, name: str = "auto") -> OrbitCensus:
    """The census whose hypotheses match (curve, sigma), or the one called ``name``."""
    if name not in CENSUS_NAMES:
        raise CensusError(f"unknown census {name!r}; choose from {CENSUS_NAMES}")
    F = curve.field
    a, b, c, d, e = sigma.coefficients
    if name == "auto":
        if curve.family == "hermitian":
            name = "hermitian"
        elif curve.family == "norm_trace":
            name = "norm_trace"
        elif curve.family == "hermitian_quotient":
            name = "quotient"
        elif (b, c, d, e) == (0, 0, 1, 0):
            name = "kummer_tau"
        elif curve.m == 2 and curve.B == (0, F.neg(1), 0, 0, 0, 1) and sigma.order == 8:
            name = "genus2_order8"
        elif curve.m == 2 and curve.B == (1, 0, 0, 0, 0, 1) and F.r == 1 and sigma.order == 10:
            name = "genus2_order10"
        elif _is_maximal_shape(curve) is not None:
            name = "maximal"
        else:
            raise CensusError("no census applies to this curve and automorphism")
    if name == "kummer_tau":
        return census_diagonal_kummer(curve, sigma)
    if name == "genus2_order8":
        return census_genus2_order8(F)
    if name == "genus2_order10":
        return census_genus2_order10(F)
    if name == "hermitian":
        return census_hermitian(curve, sigma)
    if name == "norm_trace":
        return census_norm_trace(curve, sigma)
    if name == "quotient":
        if curve.family != "hermitian_quotient":
            raise CensusError("not a Hermitian quotient curve")
        return census_hermitian_quotient(F.q, curve.m)[0]
    g = _is_maximal_shape(curve)
    if g is None:
        raise CensusError("the maximal census needs x^2 = y^(2g+1) + 1 over F_{q^2}")
    return census_maximal_hyperelliptic(F.q, g)[0]
