import pytest

from qcag import (
    diagonal,
    enumerate_points,
    make_curve,
    make_field,
    orbit_partition,
)


class Setup:
    """Curve, map, points and partition bundled for reuse across tests."""

    def __init__(self, curve, sigma):
        self.curve = curve
        self.field = curve.field
        self.sigma = sigma
        self.points = enumerate_points(curve)
        self.partition = orbit_partition(sigma, self.points)


@pytest.fixture(scope="session")
def f31():
    F = make_field(31)
    C = make_curve(F, 2, [1, 0, 0, 0, 0, 1], "hyperelliptic")
    return Setup(C, diagonal(C, -1, 2))


@pytest.fixture(scope="session")
def f41():
    F = make_field(41)
    C = make_curve(F, 2, [0, -1, 0, 0, 0, 1], "hyperelliptic")
    return Setup(C, diagonal(C, 3, 9))


@pytest.fixture(scope="session")
def f127():
    F = make_field(127)
    C = make_curve(F, 3, [0, -1, 0, 0, 0, 0, 0, 0, 1])
    return Setup(C, diagonal(C, 100, 2))


# -- acceptance summary: one line per criterion ------------------------------------

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number = int(name.split("_")[2])
        if hasattr(report, "wasxfail"):
            outcome = "xfail"
        else:
            outcome = report.outcome
        _CRITERIA.setdefault(number, []).append((name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        checks = _CRITERIA[number]
        bad = [f"{n} ({o})" for n, o in checks if o != "passed"]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {number:2d}: {status}  ({len(checks) - len(bad)}/{len(checks)} checks)"
        if bad:
            line += "; not met: " + ", ".join(bad)
        terminalreporter.write_line(line)
