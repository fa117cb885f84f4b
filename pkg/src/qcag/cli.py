"""Command line: ``qcag <command> (--config FILE | --preset ID) [options]``.

Exit codes: 0 success, 2 bad configuration, 3 constraint violation
(t out of range, census preconditions, a block structure that is not
shift invariant), 4 mismatch against expectations (reproduce, census).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from .aut import orbit_partition
from .census import CENSUS_NAMES, census_for, crosscheck
from .code import (
    QcCode,
    build_code,
    code_distance,
    code_report,
    read_matrix,
    verify_shift_invariance,
    write_matrix,
)
from .config import JobConfig, job_from_record, load_record, parse_t_range, select_orbits
from .curve import enumerate_points
from .exceptions import (
    AutomorphismError,
    CensusError,
    ConfigError,
    ConstraintError,
    CurveError,
    FieldError,
)
from .presets import preset_job, reproduce
from .rrspace import rr_basis

EXIT_OK, EXIT_CONFIG, EXIT_CONSTRAINT, EXIT_MISMATCH = 0, 2, 3, 4


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- job assembly --------------------------------------------------------------------

def _job(args) -> JobConfig:
    overrides = {}
    if args.budget is not None:
        overrides["budget"] = args.budget
    if args.format is not None:
        overrides["format"] = args.format
    if args.t is not None and args.t_range is not None:
        raise ConfigError("give --t or --t-range, not both")
    if args.t is not None:
        overrides["t"] = args.t
    if args.t_range is not None:
        overrides["t_range"] = list(parse_t_range(args.t_range))
    if getattr(args, "orbits", None):
        overrides["orbits"] = json.loads(args.orbits) if args.orbits.startswith("{") else args.orbits
    if args.config and args.preset:
        raise ConfigError("give --config or --preset, not both")
    if args.config:
        record = load_record(args.config)
        if overrides.keys() & {"t", "t_range"}:
            record.pop("t", None)
            record.pop("t_range", None)
        record.update(overrides)
        job = job_from_record(record)
    elif args.preset:
        job = preset_job(args.preset, **overrides)
    else:
        job = job_from_record(overrides)
    if args.out is not None:
        job.out = args.out
    return job


def _codes(job: JobConfig) -> list[QcCode]:
    curve, sigma = job.require_curve(), job.require_automorphism()
    partition = orbit_partition(sigma, enumerate_points(curve))
    orbits = select_orbits(partition, job.orbits)
    selection = job.orbits if isinstance(job.orbits, str) else json.dumps(job.orbits, sort_keys=True)
    return [build_code(curve, sigma, orbits, t, {"selection": selection}) for t in job.require_t()]


def _matrix_or_codes(args, job_factory: Callable[[], JobConfig]) -> list[QcCode]:
    if args.matrix:
        try:
            return [read_matrix(Path(args.matrix))]
        except OSError as exc:
            raise ConfigError(f"cannot read matrix {args.matrix}: {exc}") from exc
    return _codes(job_factory())


# -- commands: each returns (records, table text) -----------------------------------------

def cmd_points(job: JobConfig):
    pts = enumerate_points(job.require_curve())
    rec = {"curve": job.curve.spec(), "count": pts.count, "affine": pts.records()}
    rows = [[i, repr(P.x), repr(P.y)] for i, P in enumerate(pts)]
    text = _table(["#", "x", "y"], rows) + f"\n{pts.count} rational points (including P_inf)"
    return rec, text


def cmd_orbits(job: JobConfig):
    sigma = job.require_automorphism()
    part = orbit_partition(sigma, enumerate_points(job.require_curve()))
    rec = {"order": part.order, "lengths": {str(k): v for k, v in part.length_census().items()},
           "orbits": part.records()}
    rows = [[r["id"], r["type"], r["length"], " ".join(repr(P) for P in part.orbits[r["id"]])]
            for r in rec["orbits"]]
    census = ", ".join(f"{v} x {k}" for k, v in part.length_census().items())
    text = _table(["id", "type", "len", "points"], rows) + f"\nord(sigma) = {part.order}; orbits: {census}"
    return rec, text


def cmd_basis(job: JobConfig):
    curve = job.require_curve()
    out, blocks = [], []
    for t in job.require_t():
        basis = rr_basis(curve, t)
        out.append({"t": t, "dim": basis.dim, "genus": curve.genus, "monomials": basis.records()})
        mons = " ".join(f"x^{a}y^{b}" for a, b in basis.monomials)
        blocks.append(f"t={t} dim={basis.dim} (g={curve.genus}): {mons}")
    return out, "\n".join(blocks)


def _report_rows(reports) -> str:
    headers = ["t", "n", "k", "d", "s", "class", "qc", "co-index", "method"]
    rows = []
    for r in reports:
        d = r.d if r.exact else f"{r.d_lower}..{r.d_upper}"
        s = "-" if r.singleton_defect is None else r.singleton_defect
        rows.append([r.t, r.n, r.k, d, s, r.classification, r.qc_verified, r.co_index, r.method])
    return _table(headers, rows)


def cmd_build(job: JobConfig):
    codes = _codes(job)
    reports = [code_report(c, job.budget) for c in codes]
    written = []
    if job.out:
        target = Path(job.out)
        target.mkdir(parents=True, exist_ok=True)
        for c in codes:
            path = target / f"code_t{c.t}.txt"
            write_matrix(c, path)
            written.append(str(path))
    job.out = None  # the directory holds matrices; the report goes to stdout
    rec = [dict(r.to_record(), matrix=w) for r, w in zip(reports, written or [None] * len(reports))]
    return rec, _report_rows(reports)


def cmd_verify_qc(codes: list[QcCode]):
    rec = [{"t": c.t, "n": c.n, "k": c.k, "blocks": list(c.block_lengths), "qc_verified": verify_shift_invariance(c)}
           for c in codes]
    rows = [[_t(r["t"]), r["n"], r["k"], ",".join(map(str, r["blocks"])), r["qc_verified"]] for r in rec]
    return rec, _table(["t", "n", "k", "blocks", "shift invariant"], rows)


def cmd_distance(codes: list[QcCode], budget: int):
    rec, rows = [], []
    for c in codes:
        res = code_distance(c, budget)
        rec.append({"t": c.t, "n": c.n, "k": c.k, "d_lower": res.d_lower, "d_upper": res.d_upper,
                    "exact": res.exact, "method": res.method, "work": res.work})
        rows.append([_t(c.t), c.n, c.k, res.d_lower, res.d_upper, res.exact, res.method])
    return rec, _table(["t", "n", "k", "d_lower", "d_upper", "exact", "method"], rows)


def cmd_census(job: JobConfig):
    curve, sigma = job.require_curve(), job.require_automorphism()
    census = census_for(curve, sigma, job.census)
    report = crosscheck(census, orbit_partition(sigma, enumerate_points(curve)))
    lines = [f"census: {report.label}",
             f"predicted: {report.predicted}",
             f"computed:  {report.computed}",
             f"result: {'pass' if report.passed else 'FAIL'}"]
    lines += [f"  diff: {d}" for d in report.diffs]
    lines += [f"  note: {n}" for n in report.notes]
    return report.to_record(), "\n".join(lines), report.passed


def cmd_reproduce(pid: str, budget: int):
    rep = reproduce(pid, budget)
    rows = [["ok" if c.ok else "FAIL", c.name, _short(c.expected), _short(c.actual)] for c in rep.checks]
    lines = [f"preset {pid}: {rep.source}", _table(["", "check", "expected", "actual"], rows)]
    lines += [f"note: {n}" for n in rep.notes]
    if not rep.passed:
        lines += [f"mismatch in {c.name!r}; expected value from: {c.source}" for c in rep.checks if not c.ok]
    lines.append(f"result: {'pass' if rep.passed else 'FAIL'}")
    return rep.to_record(), "\n".join(lines), rep.passed


def _t(t) -> str:
    return "-" if t is None else str(t)


def _short(v, width: int = 60) -> str:
    if isinstance(v, (set, frozenset)) and v and all(isinstance(x, frozenset) for x in v):
        text = f"{len(v)} orbits"
    else:
        text = str(sorted(v)) if isinstance(v, (set, frozenset)) else str(v)
    return text if len(text) <= width else text[: width - 3] + "..."


# -- entry point ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcag", description="QC and GQC AG codes from Kummer curves.")
    parser.add_argument("--version", action="version", version=f"qcag {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON job file")
        p.add_argument("--preset", help="preset id, e.g. hyper-31 or hermitian-3")
        p.add_argument("--t", type=int, help="pole order t of t P_inf")
        p.add_argument("--t-range", dest="t_range", help="inclusive range A..B")
        p.add_argument("--budget", type=int, help="distance budget in field operations")
        p.add_argument("--format", choices=("table", "records"), help="output format")
        p.add_argument("--out", help="write output here (build: directory for matrix files)")
        return p

    add("points", "list rational points")
    add("orbits", "orbits of the automorphism on the affine points")
    add("basis", "monomial basis of L(t P_inf)")
    for name, text in (("build", "build codes and report parameters"),
                       ("verify-qc", "check invariance under the block shift"),
                       ("distance", "minimum distance (exact or bounds)")):
        p = add(name, text)
        p.add_argument("--orbits", help="long | nontrivial | all | JSON like {\"ids\": [0, 2]}")
        if name != "build":
            p.add_argument("--matrix", help="read a generator matrix file instead of building")
    p = add("census", "compare computed orbits with the predicted census")
    p.add_argument("--census", choices=CENSUS_NAMES, help="force a census instead of choosing by shape")
    p = sub.add_parser("reproduce", help="recompute a preset and compare with its expectations")
    p.add_argument("preset_id")
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=("table", "records"))
    p.add_argument("--out")
    return parser


def _emit(rec, text: str, fmt: str, out: str | None) -> None:
    body = json.dumps(rec, indent=2, sort_keys=True) if fmt == "records" else text
    if out:
        Path(out).write_text(body + "\n")
    else:
        print(body)


def run(args) -> int:
    cmd = args.command
    ok = True
    if cmd == "reproduce":
        from .distance import DEFAULT_BUDGET

        rec, text, ok = cmd_reproduce(args.preset_id, args.budget if args.budget is not None else DEFAULT_BUDGET)
        _emit(rec, text, args.format or "table", args.out)
        return EXIT_OK if ok else EXIT_MISMATCH
    if cmd in ("verify-qc", "distance") and args.matrix:
        if args.config or args.preset:
            raise ConfigError("--matrix replaces --config/--preset")
        job = job_from_record({k: v for k, v in (("budget", args.budget), ("format", args.format)) if v is not None})
        job.out = args.out
        codes = _matrix_or_codes(args, lambda: job)
    else:
        job = _job(args)
        if cmd == "census" and args.census:
            job.census = args.census
        codes = None
    if cmd == "points":
        rec, text = cmd_points(job)
    elif cmd == "orbits":
        rec, text = cmd_orbits(job)
    elif cmd == "basis":
        rec, text = cmd_basis(job)
    elif cmd == "build":
        rec, text = cmd_build(job)
    elif cmd == "verify-qc":
        rec, text = cmd_verify_qc(codes if codes is not None else _codes(job))
        ok = all(r["qc_verified"] for r in rec)
    elif cmd == "distance":
        rec, text = cmd_distance(codes if codes is not None else _codes(job), job.budget)
    elif cmd == "census":
        rec, text, ok = cmd_census(job)
    else:  # pragma: no cover - argparse restricts the choices
        raise ConfigError(f"unknown command {cmd!r}")
    _emit(rec, text, job.format, job.out)
    if not ok:
        return EXIT_CONSTRAINT if cmd == "verify-qc" else EXIT_MISMATCH
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ConfigError, FieldError, CurveError, AutomorphismError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConstraintError, CensusError) as exc:
        print(f"constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except json.JSONDecodeError as exc:
        print(f"config error: --orbits is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
