"""Orbit-ordered AG codes C(D, t P_inf), shift verification and parameter reports."""

from __future__ import annotations

import io
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .aut import Automorphism, OrbitPartition, orbit_partition, select_nontrivial_orbits
from .curve import INFINITY, AffinePoint, KummerCurve, enumerate_points
from .distance import DEFAULT_BUDGET, DistanceResult, minimum_distance
from .exceptions import ConstraintError, CurveError
from .gf import GaloisField, field_of_order
from .linalg import as_matrix, nullspace, rank
from .rrspace import evaluation_matrix, rr_basis

CLASSES = ("MDS", "AMDS", "NMDS", "other", "unknown")


@dataclass(frozen=True, eq=False)
class QcCode:
    """Generator matrix of an evaluation code with its block structure.

    Column j is the evaluation at ``points[j]``; blocks are the orbits in
    the order they were given, each listed as P, sP, s^2 P, ...
    """

    field: GaloisField
    G: np.ndarray
    block_lengths: tuple[int, ...]
    t: int | None = None
    curve: KummerCurve | None = None
    automorphism: Automorphism | None = None
    points: tuple[AffinePoint, ...] = ()
    meta: dict = dc_field(default_factory=dict)

    @property
    def n(self) -> int:
        return int(self.G.shape[1])

    @property
    def k(self) -> int:
        return rank(self.field, self.G)

    @property
    def genus(self) -> int | None:
        return None if self.curve is None else self.curve.genus

    @property
    def designed_distance(self) -> int | None:
        return None if self.t is None else self.n - self.t

    @property
    def co_index(self) -> str:
        lengths = set(self.block_lengths)
        if len(lengths) == 1:
            return str(self.block_lengths[0])
        return "(" + ",".join(map(str, self.block_lengths)) + ")"

    @property
    def is_quasi_cyclic(self) -> bool:
        return len(set(self.block_lengths)) == 1

    def parity_check(self) -> np.ndarray:
        return nullspace(self.field, self.G)

    def dual(self) -> "QcCode":
        return QcCode(self.field, self.parity_check(), self.block_lengths, meta={"dual_of": self.meta.get("id")})


def _check_orbit(sigma: Automorphism, orbit: Sequence[AffinePoint]) -> None:
    if not orbit:
        raise ConstraintError("empty orbit")
    for i, P in enumerate(orbit):
        if P is INFINITY:
            raise ConstraintError("orbits may not contain P_inf")
        nxt = orbit[(i + 1) % len(orbit)]
        if sigma(P) != nxt:
            raise ConstraintError(f"orbit is not ordered by sigma at {P!r}")


def build_code(
    curve: KummerCurve,
    sigma: Automorphism,
    orbits: Sequence[Sequence[AffinePoint]],
    t: int,
    meta: dict | None = None,
) -> QcCode:
    """C(D, t P_inf) with D the concatenated orbits; needs 2g - 2 < t < n."""
    if not orbits:
        raise ConstraintError("no orbits selected")
    if sigma.curve is not curve:
        raise ConstraintError("automorphism belongs to another curve")
    seen: set[tuple[int, int]] = set()
    order = sigma.order
    for orbit in orbits:
        _check_orbit(sigma, orbit)
        if order % len(orbit):
            raise ConstraintError(f"orbit length {len(orbit)} does not divide ord(sigma) = {order}")
        for P in orbit:
            if P.codes() in seen:
                raise ConstraintError(f"orbits overlap at {P!r}")
            seen.add(P.codes())
    points = tuple(P for orbit in orbits for P in orbit)
    n, g = len(points), curve.genus
    if not 2 * g - 2 < t < n:
        raise ConstraintError(f"t = {t} outside ({2 * g - 2}, {n})")
    basis = rr_basis(curve, t)
    G = evaluation_matrix(basis, points)
    k = rank(curve.field, G)
    if k != t + 1 - g:
        raise CurveError(f"rank {k} != t + 1 - g = {t + 1 - g}")
    info = {"curve": curve.name or curve.describe(), "automorphism": sigma.describe()}
    info.update(meta or {})
    return QcCode(curve.field, G, tuple(len(o) for o in orbits), t, curve, sigma, points, info)


def build_qc_with_long_orbits(curve: KummerCurve, sigma: Automorphism, t: int, partition: OrbitPartition | None = None) -> QcCode:
    partition = partition or orbit_partition(sigma, enumerate_points(curve))
    orbits = partition.long_orbits
    return build_code(curve, sigma, orbits, t, {"selection": "long"})


def build_gqc_with_short_orbits(curve: KummerCurve, sigma: Automorphism, t: int, partition: OrbitPartition | None = None) -> QcCode:
    """Every orbit of length > 1, short blocks first."""
    partition = partition or orbit_partition(sigma, enumerate_points(curve))
    orbits = select_nontrivial_orbits(partition)
    return build_code(curve, sigma, orbits, t, {"selection": "nontrivial"})


# -- quasi-cyclic structure -----------------------------------------------------

def shift_operator(c, block_lengths: Sequence[int]) -> np.ndarray:
    """Rotate each block right by one: (c0, ..., c_{l-1}) -> (c_{l-1}, c0, ..., c_{l-2}).

    Works on the last axis, so a matrix is shifted row by row.
    """
    c = np.asarray(c)
    if c.shape[-1] != sum(block_lengths):
        raise ConstraintError(f"length {c.shape[-1]} != sum of blocks {sum(block_lengths)}")
    out = np.empty_like(c)
    pos = 0
    for length in block_lengths:
        out[..., pos : pos + length] = np.roll(c[..., pos : pos + length], 1, axis=-1)
        pos += length
    return out


def verify_shift_invariance(code: QcCode | np.ndarray, field: GaloisField | None = None, block_lengths=None) -> bool:
    """True iff T(row) lies in the row space for every row, by a rank test."""
    if isinstance(code, QcCode):
        field, G, block_lengths = code.field, code.G, code.block_lengths
    else:
        G = as_matrix(code)
    k = rank(field, G)
    return rank(field, np.vstack([G, shift_operator(G, block_lengths)])) == k


# -- parameters -------------------------------------------------------------------

def singleton_defect(n: int, k: int, d: int) -> int:
    return n - k + 1 - d


def classify_params(n: int, k: int, d: int | None, d_dual: int | None = None) -> str:
    if d is None:
        return "unknown"
    s = singleton_defect(n, k, d)
    if s == 0:
        return "MDS"
    if s != 1:
        return "other"
    if d_dual is None:
        return "unknown"
    return "NMDS" if singleton_defect(n, n - k, d_dual) == 1 else "AMDS"


def classify(code: QcCode, d_exact: int | None, d_dual_exact: int | None = None) -> str:
    if d_exact is None:
        raise ConstraintError("classification needs an exact minimum distance")
    n, k = code.n, code.k
    if singleton_defect(n, k, d_exact) == 1 and d_dual_exact is None:
        raise ConstraintError("telling AMDS from NMDS needs the exact dual distance")
    return classify_params(n, k, d_exact, d_dual_exact)


def code_distance(code: QcCode, budget: int = DEFAULT_BUDGET, method: str = "auto", qc_verified: bool | None = None) -> DistanceResult:
    if qc_verified is None:
        qc_verified = verify_shift_invariance(code)
    return minimum_distance(
        code.field, code.G, budget,
        designed=code.designed_distance, method=method,
        shift_blocks=code.block_lengths if qc_verified else None,
    )


def dual_distance(code: QcCode, budget: int = DEFAULT_BUDGET, qc_verified: bool | None = None) -> DistanceResult:
    """Distance of the dual code; for C(D, t P_inf) it is at least t - (2g - 2)."""
    if qc_verified is None:
        qc_verified = verify_shift_invariance(code)
    designed = None
    if code.t is not None and code.genus is not None:
        designed = max(code.t - 2 * code.genus + 2, 1)
    return minimum_distance(code.field, code.parity_check(), budget, designed=designed,
                            shift_blocks=code.block_lengths if qc_verified else None)


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    q: int
    d_lower: int
    d_upper: int
    exact: bool
    singleton_defect: int | None
    classification: str
    qc_verified: bool
    co_index: str
    t: int | None = None
    dual_distance: int | None = None
    method: str = ""

    @property
    def d(self) -> int | None:
        return self.d_lower if self.exact else None

    def to_record(self) -> dict:
        return {
            "n": self.n, "k": self.k, "q": self.q, "t": self.t,
            "d_lower": self.d_lower, "d_upper": self.d_upper, "exact": self.exact,
            "singleton_defect": self.singleton_defect,
            "classification": self.classification,
            "dual_distance": self.dual_distance,
            "qc_verified": self.qc_verified, "co_index": self.co_index,
            "method": self.method,
        }


def code_report(code: QcCode, budget: int = DEFAULT_BUDGET, distances: bool = True) -> CodeReport:
    """Parameters of ``code``; the dual distance is only computed when it decides AMDS vs NMDS."""
    qc = verify_shift_invariance(code)
    n, k = code.n, code.k
    if distances:
        res = code_distance(code, budget, qc_verified=qc)
    else:
        lo = code.designed_distance if code.designed_distance is not None else 1
        res = DistanceResult(max(lo, 1), n - k + 1, False, "bounds")
    d = res.d
    d_dual = None
    if d is not None and singleton_defect(n, k, d) == 1:
        d_dual = dual_distance(code, budget, qc_verified=qc).d
    return CodeReport(
        n=n, k=k, q=code.field.order,
        d_lower=res.d_lower, d_upper=res.d_upper, exact=res.exact,
        singleton_defect=None if d is None else singleton_defect(n, k, d),
        classification=classify_params(n, k, d, d_dual),
        qc_verified=qc, co_index=code.co_index, t=code.t,
        dual_distance=d_dual, method=res.method,
    )


# -- matrix files -----------------------------------------------------------------

def format_matrix(code: QcCode) -> str:
    """Header "n k q blocks=..." then one row of element codes per line."""
    from .linalg import rref

    R, _ = rref(code.field, code.G)
    lines = [f"{code.n} {R.shape[0]} {code.field.order} blocks={','.join(map(str, code.block_lengths))}"]
    lines += [" ".join(str(int(v)) for v in row) for row in R]
    return "\n".join(lines) + "\n"


def write_matrix(code: QcCode, target: str | Path | TextIO) -> None:
    text = format_matrix(code)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text)
    else:
        target.write(text)


def read_matrix(source: str | Path | TextIO) -> QcCode:
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    lines = [ln for ln in io.StringIO(text).read().splitlines() if ln.strip()]
    if not lines:
        raise ConstraintError("empty matrix file")
    head = lines[0].split()
    try:
        n, k, q = int(head[0]), int(head[1]), int(head[2])
        blocks = tuple(int(b) for b in head[3].removeprefix("blocks=").split(","))
    except (IndexError, ValueError) as exc:
        raise ConstraintError(f"bad matrix header {lines[0]!r}") from exc
    rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    G = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    if len(rows) != k or sum(blocks) != n:
        raise ConstraintError("matrix header does not match its body")
    F = field_of_order(q)
    if G.size and (G.min() < 0 or G.max() >= q):
        raise ConstraintError("matrix entries outside the field")
    return QcCode(F, G, blocks)


def build_from_points(curve: KummerCurve, points: Iterable[AffinePoint], t: int) -> np.ndarray:
    """Evaluation matrix of L(t P_inf) at arbitrary points (no block structure)."""
    return evaluation_matrix(rr_basis(curve, t), list(points))
