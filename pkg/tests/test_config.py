import json

import pytest

from qcag import ConfigError, ConstraintError, make_field, orbit_partition, enumerate_points
from qcag.config import (
    job_from_record,
    load_config,
    parse_automorphism,
    parse_curve,
    parse_element,
    parse_t_range,
    select_orbits,
)
from qcag.presets import parse_preset, preset_job

F31_RECORD = {
    "field": {"p": 31},
    "curve": {"family": "hyperelliptic", "m": 2, "B": [1, 0, 0, 0, 0, 1]},
    "automorphism": {"kind": "diagonal", "x_scale": -1, "y_scale": 2},
    "t_range": [3, 5],
}


def test_full_record():
    job = job_from_record(F31_RECORD)
    assert job.field.order == 31
    assert job.curve.genus == 2
    assert job.automorphism.order == 10
    assert job.t_values == [3, 4, 5]
    assert job.format == "table" and job.orbits == "long"


def test_load_from_file(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(dict(F31_RECORD, t_range="3..4")))
    assert load_config(path).t_values == [3, 4]
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "bad.json")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")


def test_elements():
    F = make_field(5, 1, 2)
    assert parse_element(F, [2, 1]) == F([2, 1]).code
    assert parse_element(F, -1) == F.neg(1)
    assert parse_element(F, 0) == 0
    for bad in (True, [1, "a"], [1, 2, 3], 10**6):
        with pytest.raises(ConfigError):
            parse_element(F, bad)


def test_preset_curves():
    assert parse_curve({"family": "hermitian", "q": 3}, None).field.order == 9
    assert parse_curve({"family": "norm_trace", "q": 2, "r": 3}, None).genus == 9
    assert parse_curve({"family": "hermitian_quotient", "q": 5, "m": 2}, None).genus == 2
    with pytest.raises(ConfigError):
        parse_curve({"m": 2, "B": [1, 0, 1]}, None)
    with pytest.raises(ConfigError):
        parse_curve({"family": "norm_trace", "q": 2}, None)


@pytest.mark.parametrize("spec", [
    {"kind": "diagonal", "x_scale": 19, "y_scale": 2},  # does not preserve the curve
    {"kind": "spin"},
    {"kind": "diagonal", "x_scale": 1},
    "diagonal",
])
def test_bad_automorphisms(spec):
    F = make_field(127)
    C = parse_curve({"m": 3, "B": [0, -1, 0, 0, 0, 0, 0, 0, 1]}, F)
    with pytest.raises(ConfigError):
        parse_automorphism(spec, C)


def test_automorphism_power():
    job = job_from_record(dict(F31_RECORD, automorphism={"kind": "diagonal", "x_scale": -1, "y_scale": 2, "power": 2}))
    assert job.automorphism.order == 5


def test_orbit_selection(f31):
    part = f31.partition
    assert [len(o) for o in select_orbits(part, "long")] == [10, 10]
    assert sorted(len(o) for o in select_orbits(part, "nontrivial")) == [2, 5, 10, 10]
    assert len(select_orbits(part, "all")) == len(part.orbits)
    assert [len(o) for o in select_orbits(part, {"lengths": [5]})] == [5]
    assert select_orbits(part, {"ids": [0]}) == [part.orbits[0]]
    with pytest.raises(ConfigError):
        select_orbits(part, {"ids": [99]})
    with pytest.raises(ConfigError):
        select_orbits(part, {"ids": [0, 0]})
    with pytest.raises(ConstraintError):
        select_orbits(part, {"ids": []})
    with pytest.raises(ConfigError):
        select_orbits(part, "short")


def test_t_range():
    assert parse_t_range("3..19") == (3, 19)
    for bad in ("3-19", "a..b", "9..3"):
        with pytest.raises(ConfigError):
            parse_t_range(bad)


@pytest.mark.parametrize("patch", [
    {"t": 3},  # together with t_range
    {"format": "xml"},
    {"budget": -1},
    {"budget": 1.5},
    {"census": 3},
    {"t_range": [3]},
    {"field": {"p": 12}},
])
def test_bad_records(patch):
    with pytest.raises(ConfigError):
        job_from_record(dict(F31_RECORD, **patch))
    with pytest.raises(ConfigError):
        job_from_record([F31_RECORD])


def test_automorphism_without_curve():
    with pytest.raises(ConfigError):
        job_from_record({"automorphism": {"kind": "identity"}})


def test_presets():
    assert parse_preset("hyper-31") == ("hyper-31", ())
    assert parse_preset("normtrace-2-3") == ("normtrace", (2, 3))
    for bad in ("hyper-32", "normtrace-2", "nothing"):
        with pytest.raises(ConfigError):
            parse_preset(bad)
    job = preset_job("hyper-31")
    assert enumerate_points(job.curve).count == 28
    assert orbit_partition(job.automorphism, enumerate_points(job.curve)).order == 10
    assert preset_job("hermitian-3").curve.field.order == 9
