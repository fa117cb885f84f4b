"""Reproduction presets: fixed curves and maps with golden expectations.

Preset ids are ``kummer-127``, ``hyper-73``, ``hyper-41``, ``hyper-31`` and the
parametrised families ``hermitian-Q``, ``normtrace-Q-R``, ``quotient-Q-M`` and
``maximal-Q-G``.  Family presets compare against closed forms; the
instances stored in ``data/golden.json`` additionally pin concrete numbers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources
from typing import Any, Callable

from .aut import (
    Automorphism,
    diagonal,
    hermitian_psi,
    norm_trace_map,
    orbit_partition,
    quotient_eta,
)
from .census import (
    _field_of_square,
    census_for,
    census_hermitian_quotient,
    census_maximal_hyperelliptic,
    crosscheck,
    hermitian_case,
)
from .code import build_code, build_gqc_with_short_orbits, build_qc_with_long_orbits, code_report, verify_shift_invariance
from .config import JobConfig, job_from_record
from .curve import (
    KummerCurve,
    enumerate_points,
    is_maximal,
    make_curve,
    make_hermitian,
    make_hermitian_quotient,
    make_norm_trace,
)
from .distance import DEFAULT_BUDGET
from .exceptions import AutomorphismError, CensusError, ConfigError, CurveError, FieldError

FIXED = ("kummer-127", "hyper-73", "hyper-41", "hyper-31")
FAMILIES = {
    "hermitian": re.compile(r"^hermitian-(\d+)$"),
    "normtrace": re.compile(r"^normtrace-(\d+)-(\d+)$"),
    "quotient": re.compile(r"^quotient-(\d+)-(\d+)$"),
    "maximal": re.compile(r"^maximal-(\d+)-(\d+)$"),
}
PRESET_PATTERNS = FIXED + ("hermitian-Q", "normtrace-Q-R", "quotient-Q-M", "maximal-Q-G")


@lru_cache(maxsize=1)
def golden() -> dict:
    text = resources.files("qcag").joinpath("data/golden.json").read_text()
    return json.loads(text)["presets"]


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    source: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_record(self) -> dict:
        return {"name": self.name, "ok": self.ok, "expected": _plain(self.expected),
                "actual": _plain(self.actual), "source": self.source}


def _plain(v):
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(x) for x in v)
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_plain(x) for x in v]
    return v


@dataclass
class ReproReport:
    preset: str
    source: str
    checks: list[Check] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, expected, actual, source: str = "") -> None:
        self.checks.append(Check(name, expected, actual, source or self.source))

    def to_record(self) -> dict:
        return {"preset": self.preset, "passed": self.passed, "source": self.source,
                "checks": [c.to_record() for c in self.checks], "notes": self.notes}


def parse_preset(pid: str) -> tuple[str, tuple[int, ...]]:
    if pid in FIXED:
        return pid, ()
    for family, pattern in FAMILIES.items():
        match = pattern.match(pid)
        if match:
            return family, tuple(int(v) for v in match.groups())
    raise ConfigError(f"unknown preset {pid!r}; known: {', '.join(PRESET_PATTERNS)}")


# -- automorphisms used by the family presets --------------------------------------

def _elements_of_order(F, n: int) -> list[int]:
    return [a for a in range(1, F.order) if F.element_order(a) == n]


def hermitian_examples(curve: KummerCurve) -> dict[str, Automorphism]:
    """One psi_{a,b,c} per case that occurs over this field, found by a small search."""
    F = curve.field
    q = F.q
    norm1 = [c for c in range(F.order) if F.add(F.pow(c, q), c) == 1]
    kernel = [c for c in range(1, F.order) if F.add(F.pow(c, q), c) == 0]
    out = {"S_p": hermitian_psi(curve, 1, 1, norm1[0])}
    for a in range(2, F.order):
        for c in [0] + kernel:
            psi = hermitian_psi(curve, a, 0, c)
            case = hermitian_case(curve, psi)
            out.setdefault(case, psi)
        if len(out) == 4:
            break
    return dict(sorted(out.items()))


def norm_trace_examples(curve: KummerCurve) -> dict[str, Automorphism]:
    F = curve.field
    q, r = F.q, F.r
    N = (q**r - 1) // (q - 1)
    a = next(y for y in range(1, F.order) if F.trace(y, F.h) == 0)
    prim = F.generator
    out = {"G": norm_trace_map(curve, 1, a), "C": norm_trace_map(curve, prim, 0)}
    if q > 2:
        out["(a)"] = norm_trace_map(curve, prim, a)
    out["(b)"] = norm_trace_map(curve, F.pow(prim, q - 1) if N > 1 else prim, a)
    return out


def quotient_example(curve: KummerCurve) -> Automorphism:
    return quotient_eta(curve, _elements_of_order(curve.field, curve.m)[0])


def maximal_example(curve: KummerCurve, g: int) -> Automorphism:
    F = curve.field
    return diagonal(curve, F.neg(1), _elements_of_order(F, 2 * g + 1)[0])


def _maximal_curve(q: int, g: int) -> KummerCurve:
    F = _field_of_square(q)
    return make_curve(F, 2, [1] + [0] * (2 * g) + [1], "hyperelliptic", f"maximal-{q}-{g}")


# -- jobs --------------------------------------------------------------------------------

def preset_job(pid: str, **overrides) -> JobConfig:
    """The curve and map of a preset as a JobConfig, ready for any subcommand."""
    family, params = parse_preset(pid)
    try:
        if family in FIXED:
            g = golden()[family]
            record = {k: g[k] for k in ("field", "curve", "automorphism")}
            record.update(overrides)
            return job_from_record(record)
        if family == "hermitian":
            curve = make_hermitian(*params)
            sigma = hermitian_examples(curve)["S_p"]
        elif family == "normtrace":
            curve = make_norm_trace(*params)
            sigma = norm_trace_examples(curve)["C"]
        elif family == "quotient":
            curve = make_hermitian_quotient(*params)
            sigma = quotient_example(curve)
        else:
            curve = _maximal_curve(*params)
            sigma = maximal_example(curve, params[1])
    except (FieldError, CurveError, AutomorphismError, CensusError, IndexError, StopIteration, ValueError) as exc:
        raise ConfigError(f"preset {pid!r} is not realisable: {exc}") from exc
    job = job_from_record({k: v for k, v in overrides.items()})
    job.field, job.curve, job.automorphism = curve.field, curve, sigma
    return job


# -- reproduction --------------------------------------------------------------------------

def _as_sets(orbits) -> set[frozenset]:
    return {frozenset(tuple(p) for p in o) for o in orbits}


def _computed_sets(orbits) -> set[frozenset]:
    return {frozenset(P.codes() for P in o) for o in orbits}


def _lengths(d: dict) -> dict[int, int]:
    return {int(k): v for k, v in d.items()}


def _qc_build_checks(rep: ReproReport, curve, sigma, ts, n: int, k_of: Callable[[int], int], block: int, partition) -> None:
    for t in ts:
        code = build_qc_with_long_orbits(curve, sigma, t, partition)
        rep.add(f"t={t}: [n, k]", [n, k_of(t)], [code.n, code.k])
        rep.add(f"t={t}: blocks", {block}, set(code.block_lengths))
        rep.add(f"t={t}: shift invariant", True, verify_shift_invariance(code))


def _reproduce_kummer_127(rep: ReproReport, budget: int) -> None:
    g = golden()["kummer-127"]
    e = g["expect"]
    job = preset_job("kummer-127")
    curve, sigma = job.curve, job.automorphism
    try:
        diagonal(curve, *g["listed_map"])
        listed_ok = True
    except AutomorphismError:
        listed_ok = False
    rep.add("listed map (19x, 2y) rejected", False, listed_ok)
    rep.notes.append(g["listed_map_note"])
    part = orbit_partition(sigma, enumerate_points(curve))
    rep.add("ord(sigma)", e["order"], sigma.order)
    rep.add("long orbits", e["long_orbits"], len(part.long_orbits))
    rep.add("short orbit lengths", _lengths(e["short_lengths"]),
            {k: v for k, v in part.length_census().items() if k != sigma.order})
    rep.add("genus", e["genus"], curve.genus)
    _qc_build_checks(rep, curve, sigma, e["t_samples"], e["n"], lambda t: t - 6, 21, part)
    cube = sigma.power(3)
    rep.add("sigma^3 orbit lengths", _lengths(e["cube_lengths"]),
            orbit_partition(cube, enumerate_points(curve)).length_census())


def _reproduce_hyper_73(rep: ReproReport, budget: int) -> None:
    e = golden()["hyper-73"]["expect"]
    job = preset_job("hyper-73")
    curve, sigma = job.curve, job.automorphism
    pts = enumerate_points(curve)
    part = orbit_partition(sigma, pts)
    rep.add("#X(F_73)", e["count"], pts.count)
    rep.add("ord(sigma)", e["order"], sigma.order)
    rep.add("orbit lengths", _lengths(e["lengths"]), part.length_census())
    rep.add("genus", e["genus"], curve.genus)
    rep.notes.append(e["length_note"])
    _qc_build_checks(rep, curve, sigma, e["t_samples"], e["n"], lambda t: t - 3, 18, part)


def _reproduce_hyper_41(rep: ReproReport, budget: int) -> None:
    e = golden()["hyper-41"]["expect"]
    job = preset_job("hyper-41")
    curve, sigma = job.curve, job.automorphism
    pts = enumerate_points(curve)
    part = orbit_partition(sigma, pts)
    rep.add("#Y(F_41)", e["count"], pts.count)
    rep.add("ord(sigma)", e["order"], sigma.order)
    rep.add("long orbits O1..O6", _as_sets(e["long_orbits"]), _computed_sets(part.long_orbits))
    rep.add("short orbits", _as_sets(e["short_orbits"]), _computed_sets(part.short_orbits))
    _qc_build_checks(rep, curve, sigma, e["t_samples"], e["n"], lambda t: t - 1, 8, part)


def _reproduce_hyper_31(rep: ReproReport, budget: int) -> None:
    e = golden()["hyper-31"]["expect"]
    job = preset_job("hyper-31")
    curve, sigma = job.curve, job.automorphism
    pts = enumerate_points(curve)
    part = orbit_partition(sigma, pts)
    rep.add("#X(F_31)", e["count"], pts.count)
    rep.add("ord(sigma)", e["order"], sigma.order)
    rep.add("short orbits", _as_sets(e["short_orbits"]), _computed_sets(part.short_orbits))
    rep.add("long orbits O1, O2", _as_sets(e["long_orbits"]), _computed_sets(part.long_orbits))
    nmds, defect_one = [], []
    for t_text, d in sorted(e["distance"].items(), key=lambda kv: int(kv[0])):
        t = int(t_text)
        code = build_qc_with_long_orbits(curve, sigma, t, part)
        report = code_report(code, budget)
        rep.add(f"t={t}: [n, k, d]", [e["n"], t - 1, d], [code.n, code.k, report.d])
        if report.singleton_defect == 1:
            defect_one.append(t)
        if report.classification == "NMDS":
            nmds.append(t)
    rep.add("t with Singleton defect 1", e["defect_one"], defect_one)
    rep.add("NMDS set", e["nmds"], nmds)
    rep.notes.append(e["nmds_note"])
    gq = e["gqc"]
    code = build_gqc_with_short_orbits(curve, sigma, gq["t"], part)
    rep.add("GQC [n, k]", [gq["n"], gq["k"]], [code.n, code.k])
    rep.add("GQC blocks", gq["blocks"], list(code.block_lengths))
    rep.add("GQC shift invariant", True, verify_shift_invariance(code))
    sq = e["square"]
    square = sigma.power(2)
    long_pts = [P for o in part.long_orbits for P in o]
    sub = [o for o in orbit_partition(square, long_pts).orbits]
    for t in sq["t_samples"]:
        code = build_code(curve, square, sub, t, {"selection": "sigma^2 on O1, O2"})
        rep.add(f"sigma^2, t={t}: [n, k]", [sq["n"], t - 1], [code.n, code.k])
        rep.add(f"sigma^2, t={t}: blocks", sq["blocks"], list(code.block_lengths))
        rep.add(f"sigma^2, t={t}: shift invariant", True, verify_shift_invariance(code))


def _census_checks(rep: ReproReport, label: str, curve, sigma) -> None:
    report = crosscheck(census_for(curve, sigma), orbit_partition(sigma, enumerate_points(curve)))
    rep.add(f"{label}: orbit census", report.predicted, report.computed)
    rep.add(f"{label}: crosscheck", [], report.diffs)
    rep.notes.extend(f"{label}: {n}" for n in report.notes)


def _pinned(pid: str) -> dict:
    return golden().get(pid, {}).get("expect", {})


def _reproduce_hermitian(rep: ReproReport, q: int) -> None:
    curve = make_hermitian(q)
    rep.add("#H(F_q^2) = q^3 + 1", q**3 + 1, enumerate_points(curve).count, "closed form")
    for key, value in _pinned(rep.preset).items():
        actual = {"count": enumerate_points(curve).count, "genus": curve.genus}[key]
        rep.add(f"pinned {key}", value, actual)
    for case, psi in hermitian_examples(curve).items():
        _census_checks(rep, f"case {case}", curve, psi)


def _reproduce_normtrace(rep: ReproReport, q: int, r: int) -> None:
    curve = make_norm_trace(q, r)
    p = curve.field.p
    count = enumerate_points(curve).count
    rep.add("#N(F_q^r) = q^(2r-1) + 1", q ** (2 * r - 1) + 1, count, "closed form")
    examples = norm_trace_examples(curve)
    for label, sigma in examples.items():
        _census_checks(rep, f"sigma in {label}", curve, sigma)
    translations = len(orbit_partition(examples["G"], enumerate_points(curve)).orbits)
    rep.add("orbits of a translation = q^(2r-1)/p", q ** (2 * r - 1) // p, translations, "closed form")
    pinned = _pinned(rep.preset)
    if pinned:
        rep.add("pinned count", pinned["count"], count)
        rep.add("pinned genus", pinned["genus"], curve.genus)
        rep.add("pinned translation orbits", pinned["translation_orbits"], translations)


def _reproduce_quotient(rep: ReproReport, q: int, m: int) -> None:
    curve = make_hermitian_quotient(q, m)
    count = enumerate_points(curve).count
    rep.add("#C_m(F_q^2) = mq(q-1) + q + 1", m * q * (q - 1) + q + 1, count, "closed form")
    sigma = quotient_example(curve)
    _census_checks(rep, "eta", curve, sigma)
    _, qc, gqc = census_hermitian_quotient(q, m)
    part = orbit_partition(sigma, enumerate_points(curve))
    t = 2 * curve.genus - 1
    code = build_gqc_with_short_orbits(curve, sigma, t, part)
    rep.add(f"GQC t={t}: [n, k]", [gqc.n, gqc.k(t)], [code.n, code.k], "closed form")
    rep.add(f"GQC t={t}: shift invariant", True, verify_shift_invariance(code))
    pinned = _pinned(rep.preset)
    if pinned:
        rep.add("pinned count", pinned["count"], count)
        rep.add("pinned genus", pinned["genus"], curve.genus)
        rep.add("pinned orbit lengths", _lengths(pinned["lengths"]), part.length_census())
        rep.add("pinned GQC blocks", pinned["gqc_blocks"], list(code.block_lengths))


def _reproduce_maximal(rep: ReproReport, q: int, g: int) -> None:
    try:
        _, qc, gqc = census_maximal_hyperelliptic(q, g)
    except CensusError as exc:
        raise ConfigError(f"preset {rep.preset!r}: {exc}") from exc
    curve = _maximal_curve(q, g)
    count = enumerate_points(curve).count
    rep.add("#X_g(F_q^2) = q^2 + 2gq + 1", q * q + 2 * g * q + 1, count, "closed form")
    rep.add("maximal", True, is_maximal(curve))
    sigma = maximal_example(curve, g)
    _census_checks(rep, "(-x, xi y)", curve, sigma)
    part = orbit_partition(sigma, enumerate_points(curve))
    t = 2 * g - 1
    qc_code = build_qc_with_long_orbits(curve, sigma, t, part)
    gqc_code = build_gqc_with_short_orbits(curve, sigma, t, part)
    rep.add(f"QC t={t}: [n, k]", [qc.n, qc.k(t)], [qc_code.n, qc_code.k], "closed form")
    rep.add(f"GQC t={t}: [n, k]", [gqc.n, gqc.k(t)], [gqc_code.n, gqc_code.k], "closed form")
    rep.add("GQC shift invariant", True, verify_shift_invariance(gqc_code))
    pinned = _pinned(rep.preset)
    if pinned:
        rep.add("pinned count", pinned["count"], count)
        rep.add("pinned QC length", pinned["qc_n"], qc_code.n)
        rep.add("pinned GQC length", pinned["gqc_n"], gqc_code.n)


def reproduce(pid: str, budget: int = DEFAULT_BUDGET) -> ReproReport:
    """Recompute a preset and compare with its expectations; raises ConfigError for unknown ids."""
    family, params = parse_preset(pid)
    source = golden().get(pid, {}).get("source", "closed forms for this family")
    rep = ReproReport(pid, source)
    try:
        if family == "kummer-127":
            _reproduce_kummer_127(rep, budget)
        elif family == "hyper-73":
            _reproduce_hyper_73(rep, budget)
        elif family == "hyper-41":
            _reproduce_hyper_41(rep, budget)
        elif family == "hyper-31":
            _reproduce_hyper_31(rep, budget)
        elif family == "hermitian":
            _reproduce_hermitian(rep, *params)
        elif family == "normtrace":
            _reproduce_normtrace(rep, *params)
        elif family == "quotient":
            _reproduce_quotient(rep, *params)
        else:
            _reproduce_maximal(rep, *params)
    except (FieldError, CurveError, AutomorphismError, CensusError) as exc:
        raise ConfigError(f"preset {pid!r} is not realisable: {exc}") from exc
    return rep
