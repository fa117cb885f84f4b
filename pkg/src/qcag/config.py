"""Job configuration: JSON records naming a field, a curve, an automorphism and a job.

A config looks like::

    {
      "field": {"p": 31},
      "curve": {"family": "hyperelliptic", "m": 2, "B": [1, 0, 0, 0, 0, 1]},
      "automorphism": {"kind": "diagonal", "x_scale": -1, "y_scale": 2},
      "orbits": "long",
      "t_range": [3, 19],
      "budget": 16777216
    }

Field elements are little-endian coefficient arrays over F_p.  A bare
integer is also accepted: non-negative means the packed code (for a prime
field simply the residue), negative means that multiple of 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any

from .aut import (
    Automorphism,
    OrbitPartition,
    diagonal,
    hermitian_psi,
    identity,
    make_automorphism,
    norm_trace_map,
    quotient_eta,
    select_long_orbits,
    select_nontrivial_orbits,
    select_orbits_by_length,
)
from .curve import (
    KummerCurve,
    make_curve,
    make_hermitian,
    make_hermitian_quotient,
    make_norm_trace,
)
from .distance import DEFAULT_BUDGET
from .exceptions import ConfigError, ConstraintError, QcagError
from .gf import GaloisField, field_from_spec

FORMATS = ("table", "records")
ORBIT_MODES = ("long", "nontrivial", "all")
_AUT_KEYS = {
    "identity": (),
    "diagonal": ("x_scale", "y_scale"),
    "hermitian_psi": ("a", "b", "c"),
    "norm_trace": ("b",),
    "quotient_eta": ("zeta",),
    "raw": ("alpha", "delta"),
}


def _require(record: dict, key: str, where: str):
    if key not in record:
        raise ConfigError(f"{where}: missing key {key!r}")
    return record[key]


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_element(F: GaloisField, value, where: str = "element") -> int:
    if isinstance(value, bool):
        raise ConfigError(f"{where}: booleans are not field elements")
    if isinstance(value, list) and not all(isinstance(c, int) and not isinstance(c, bool) for c in value):
        raise ConfigError(f"{where}: coefficient arrays hold integers")
    if isinstance(value, list) and F.p ** len(value) > F.order:
        raise ConfigError(f"{where}: {len(value)} coefficients for a field of order {F.order}")
    try:
        return F(value).code
    except QcagError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_field(spec: Any) -> GaloisField:
    if not isinstance(spec, dict):
        raise ConfigError(f"field spec must be a record, got {spec!r}")
    try:
        return field_from_spec(spec)
    except QcagError as exc:
        raise ConfigError(f"field: {exc}") from exc


def parse_curve(spec: Any, field: GaloisField | None) -> KummerCurve:
    """Presets take {family, q[, r | m]}; anything else takes {m, B} over ``field``."""
    if not isinstance(spec, dict):
        raise ConfigError("curve spec must be a record")
    family = spec.get("family", "generic")
    try:
        if family == "hermitian" and "q" in spec:
            return make_hermitian(_as_int(spec["q"], "curve.q"))
        if family == "norm_trace" and "q" in spec:
            return make_norm_trace(_as_int(spec["q"], "curve.q"), _as_int(_require(spec, "r", "curve"), "curve.r"))
        if family == "hermitian_quotient" and "q" in spec:
            return make_hermitian_quotient(_as_int(spec["q"], "curve.q"), _as_int(_require(spec, "m", "curve"), "curve.m"))
        if field is None:
            raise ConfigError("curve: a field spec is required")
        m = _as_int(_require(spec, "m", "curve"), "curve.m")
        B = _require(spec, "B", "curve")
        if not isinstance(B, list) or not B:
            raise ConfigError("curve.B must be a nonempty list of coefficients")
        coeffs = [parse_element(field, c, f"curve.B[{i}]") for i, c in enumerate(B)]
        return make_curve(field, m, coeffs, family, spec.get("name", ""))
    except ConfigError:
        raise
    except (QcagError, ValueError) as exc:
        raise ConfigError(f"curve: {exc}") from exc


def parse_automorphism(spec: Any, curve: KummerCurve) -> Automorphism:
    """Kinds: identity, diagonal, hermitian_psi, norm_trace, quotient_eta, raw; optional ``power``."""
    if not isinstance(spec, dict):
        raise ConfigError("automorphism spec must be a record")
    kind = spec.get("kind")
    if kind not in _AUT_KEYS:
        raise ConfigError(f"automorphism.kind must be one of {sorted(_AUT_KEYS)}")
    for key in _AUT_KEYS[kind]:
        _require(spec, key, "automorphism")
    F = curve.field

    def el(key: str, default=0) -> int:
        return parse_element(F, spec.get(key, default), f"automorphism.{key}")

    try:
        if kind == "identity":
            sigma = identity(curve)
        elif kind == "diagonal":
            sigma = diagonal(curve, el("x_scale"), el("y_scale"))
        elif kind == "hermitian_psi":
            sigma = hermitian_psi(curve, el("a"), el("b"), el("c"))
        elif kind == "norm_trace":
            sigma = norm_trace_map(curve, el("b"), el("a"))
        elif kind == "quotient_eta":
            sigma = quotient_eta(curve, el("zeta"), el("shift") if "shift" in spec else None)
        else:
            sigma = make_automorphism(curve, el("alpha"), el("beta"), el("gamma"), el("delta", 1), el("epsilon"))
        power = _as_int(spec.get("power", 1), "automorphism.power")
        return sigma if power == 1 else sigma.power(power)
    except QcagError as exc:
        raise ConfigError(f"automorphism: {exc}") from exc


def select_orbits(partition: OrbitPartition, selection: Any) -> list:
    """"long", "nontrivial", "all", {"lengths": [...]} or {"ids": [...]} (ids index the canonical listing)."""
    if selection == "long":
        return select_long_orbits(partition)
    if selection == "nontrivial":
        return select_nontrivial_orbits(partition)
    if selection == "all":
        return list(partition.orbits)
    if isinstance(selection, dict) and "lengths" in selection:
        return select_orbits_by_length(partition, [_as_int(v, "orbits.lengths") for v in selection["lengths"]])
    if isinstance(selection, dict) and "ids" in selection:
        ids = [_as_int(v, "orbits.ids") for v in selection["ids"]]
        if not ids:
            raise ConstraintError("empty orbit selection")
        bad = [i for i in ids if not 0 <= i < len(partition.orbits)]
        if bad:
            raise ConfigError(f"orbit ids {bad} out of range 0..{len(partition.orbits) - 1}")
        if len(set(ids)) != len(ids):
            raise ConfigError("orbit ids repeat")
        return [partition.orbits[i] for i in ids]
    raise ConfigError(f"orbit selection must be one of {ORBIT_MODES}, {{lengths}} or {{ids}}; got {selection!r}")


def parse_t_range(text: str) -> tuple[int, int]:
    """"A..B" (inclusive) to (A, B)."""
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError as exc:
        raise ConfigError(f"t-range must look like A..B, got {text!r}") from exc
    if lo > hi:
        raise ConfigError(f"empty t-range {text!r}")
    return lo, hi


@dataclass
class JobConfig:
    field: GaloisField | None
    curve: KummerCurve | None
    automorphism: Automorphism | None
    orbits: Any = "long"
    t_values: list[int] = dc_field(default_factory=list)
    budget: int = DEFAULT_BUDGET
    format: str = "table"
    out: str | None = None
    census: str = "auto"
    raw: dict = dc_field(default_factory=dict)

    def require_curve(self) -> KummerCurve:
        if self.curve is None:
            raise ConfigError("this command needs a curve")
        return self.curve

    def require_automorphism(self) -> Automorphism:
        if self.automorphism is None:
            raise ConfigError("this command needs an automorphism")
        return self.automorphism

    def require_t(self) -> list[int]:
        if not self.t_values:
            raise ConfigError("this command needs t or a t-range")
        return self.t_values


def job_from_record(record: dict) -> JobConfig:
    if not isinstance(record, dict):
        raise ConfigError("config must be a record")
    field = parse_field(record["field"]) if "field" in record else None
    curve = parse_curve(record["curve"], field) if "curve" in record else None
    if curve is not None:
        field = curve.field
    sigma = None
    if "automorphism" in record:
        if curve is None:
            raise ConfigError("an automorphism needs a curve")
        sigma = parse_automorphism(record["automorphism"], curve)
    if "t" in record and "t_range" in record:
        raise ConfigError("give t or t_range, not both")
    t_values: list[int] = []
    if "t" in record:
        t_values = [_as_int(record["t"], "t")]
    elif "t_range" in record:
        tr = record["t_range"]
        if isinstance(tr, str):
            lo, hi = parse_t_range(tr)
        elif isinstance(tr, list) and len(tr) == 2:
            lo, hi = (_as_int(v, "t_range") for v in tr)
        else:
            raise ConfigError("t_range must be [A, B] or \"A..B\"")
        t_values = list(range(lo, hi + 1))
    fmt = record.get("format", "table")
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {FORMATS}")
    budget = _as_int(record.get("budget", DEFAULT_BUDGET), "budget")
    if budget < 0:
        raise ConfigError("budget must be non-negative")
    census = record.get("census", "auto")
    if not isinstance(census, str):
        raise ConfigError("census must name a census")
    return JobConfig(field, curve, sigma, record.get("orbits", "long"), t_values, budget, fmt,
                     record.get("out"), census, record)


def load_record(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc


def load_config(path: str | Path) -> JobConfig:
    return job_from_record(load_record(path))
