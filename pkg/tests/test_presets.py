import copy

import pytest

from qcag import presets
from qcag.cli import main
from qcag.presets import golden, reproduce

FIXED = sorted(golden())


@pytest.mark.parametrize("pid", FIXED + ["hermitian-4", "normtrace-2-4", "quotient-4-5", "maximal-5-1"])
def test_reproduce_passes(pid):
    rep = reproduce(pid)
    failed = [(c.name, c.expected, c.actual) for c in rep.checks if not c.ok]
    assert rep.passed, failed
    assert rep.checks


def test_every_expectation_names_a_source():
    for pid, entry in golden().items():
        assert entry["source"], pid
        text = str(entry).lower()
        for word in ("§", "et al", "thm.", "prop.", "eq."):
            assert word not in text, (pid, word)


def test_mismatch_exits_4(monkeypatch, capsys):
    tampered = copy.deepcopy(golden())
    tampered["hyper-41"]["expect"]["count"] = 55
    monkeypatch.setattr(presets, "golden", lambda: tampered)
    assert not reproduce("hyper-41").passed
    assert main(["reproduce", "hyper-41"]) == 4
    out = capsys.readouterr().out
    assert "FAIL" in out and "mismatch" in out
