import json
import subprocess
import sys

import pytest

from qcag.cli import main

F31 = {
    "field": {"p": 31},
    "curve": {"family": "hyperelliptic", "m": 2, "B": [1, 0, 0, 0, 0, 1]},
    "automorphism": {"kind": "diagonal", "x_scale": -1, "y_scale": 2},
}


def write(tmp_path, record, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(record))
    return str(path)


def records(capsys, argv):
    code = main(argv + ["--format", "records"])
    return code, json.loads(capsys.readouterr().out)


def test_points(capsys):
    code, rec = records(capsys, ["points", "--preset", "hyper-31"])
    assert code == 0 and rec["count"] == 28
    assert main(["points", "--preset", "hyper-31"]) == 0
    assert "28 rational points" in capsys.readouterr().out


def test_orbits(capsys, tmp_path):
    code, rec = records(capsys, ["orbits", "--config", write(tmp_path, F31)])
    assert code == 0 and rec["order"] == 10
    assert rec["lengths"] == {"2": 1, "5": 1, "10": 2}  # the fixed point is P_inf


def test_basis(capsys):
    code, rec = records(capsys, ["basis", "--preset", "hyper-31", "--t-range", "3..5"])
    assert code == 0
    assert [r["dim"] for r in rec] == [2, 3, 4]


def test_build_writes_matrices(capsys, tmp_path):
    out = tmp_path / "mats"
    code, rec = records(capsys, ["build", "--preset", "hyper-31", "--t", "3", "--out", str(out)])
    assert code == 0
    assert rec[0]["n"] == 20 and rec[0]["k"] == 2 and rec[0]["d_lower"] == 18
    assert rec[0]["classification"] == "NMDS"
    assert (out / "code_t3.txt").exists()
    assert main(["verify-qc", "--matrix", str(out / "code_t3.txt")]) == 0
    assert main(["distance", "--matrix", str(out / "code_t3.txt")]) == 0
    assert "18" in capsys.readouterr().out


def test_verify_qc_fails_on_broken_blocks(capsys, tmp_path):
    mats = tmp_path / "mats"
    assert main(["build", "--preset", "hyper-31", "--t", "3", "--out", str(mats)]) == 0
    text = (mats / "code_t3.txt").read_text().splitlines()
    head = text[0].split()
    head[3] = "blocks=3,7,3,7"  # a valid split of the same columns that the code does not respect
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join([" ".join(head)] + text[1:]) + "\n")
    assert main(["verify-qc", "--matrix", str(bad)]) == 3


def test_gqc_selection(capsys):
    code, rec = records(capsys, ["verify-qc", "--preset", "hyper-31", "--t", "4", "--orbits", "nontrivial"])
    assert code == 0
    assert rec[0]["n"] == 27 and rec[0]["k"] == 3 and rec[0]["qc_verified"] is True


def test_census_pass_and_negative_control(capsys, tmp_path):
    assert main(["census", "--preset", "hyper-31"]) == 0
    assert "result: pass" in capsys.readouterr().out
    square = dict(F31, census="genus2_order10")
    square["automorphism"] = dict(F31["automorphism"], power=2)
    assert main(["census", "--config", write(tmp_path, square)]) == 4
    assert "FAIL" in capsys.readouterr().out


def test_reproduce(capsys):
    assert main(["reproduce", "hermitian-3"]) == 0
    assert "result: pass" in capsys.readouterr().out
    code, rec = records(capsys, ["reproduce", "normtrace-2-3"])
    assert code == 0 and rec["passed"] is True


@pytest.mark.parametrize("argv", [
    ["points"],
    ["points", "--preset", "nothing-here"],
    ["basis", "--preset", "hyper-31"],
    ["orbits", "--preset", "hyper-31", "--t-range", "5..3"],
    ["build", "--preset", "hyper-31", "--t", "3", "--orbits", "{bad json"],
    ["reproduce", "nothing-here"],
])
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "config error" in capsys.readouterr().err


def test_invalid_map_exits_2(tmp_path, capsys):
    rec = dict(F31, automorphism={"kind": "diagonal", "x_scale": 2, "y_scale": 2})
    assert main(["orbits", "--config", write(tmp_path, rec)]) == 2


def test_constraint_errors_exit_3(capsys):
    assert main(["build", "--preset", "hyper-31", "--t", "2"]) == 3  # t <= 2g - 2
    assert main(["build", "--preset", "hyper-31", "--t", "20"]) == 3  # t >= n
    assert "constraint violation" in capsys.readouterr().err


def test_output_file(tmp_path, capsys):
    out = tmp_path / "pts.json"
    assert main(["points", "--preset", "hyper-31", "--format", "records", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["count"] == 28


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "qcag.cli", "points", "--preset", "hyper-31"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "28 rational points" in res.stdout
