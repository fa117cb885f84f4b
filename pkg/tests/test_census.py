"""Closed-form orbit censuses against orbits computed by applying the map point by point."""

from dataclasses import replace

import pytest

from qcag import (
    CensusError,
    census_diagonal_kummer,
    census_for,
    census_genus2_order8,
    census_genus2_order10,
    census_hermitian_quotient,
    census_maximal_hyperelliptic,
    crosscheck,
    diagonal,
    enumerate_points,
    identity,
    make_curve,
    make_field,
    make_hermitian,
    make_hermitian_quotient,
    make_norm_trace,
    orbit_partition,
)
from qcag.presets import (
    _maximal_curve,
    hermitian_examples,
    maximal_example,
    norm_trace_examples,
    quotient_example,
)


def element_of_order(F, n):
    return next(a for a in range(1, F.order) if F.element_order(a) == n)


def check(curve, sigma, name="auto"):
    census = census_for(curve, sigma, name)
    part = orbit_partition(sigma, enumerate_points(curve))
    rep = crosscheck(census, part)
    assert rep.passed, rep.diffs
    return census, part


@pytest.mark.parametrize("p,m,B", [
    (127, 3, [0, -1, 0, 0, 0, 0, 0, 0, 1]),
    (31, 3, [1, 0, 0, 0, 1]),
    (13, 4, [0, 1, 0, 1]),
    (37, 2, [3, 0, 0, 0, 0, 0, 0, 1]),
])
def test_kummer_tau(p, m, B):
    F = make_field(p)
    C = make_curve(F, m, B)
    census, part = check(C, diagonal(C, element_of_order(F, m), 1))
    assert census.label == "kummer tau"


@pytest.mark.parametrize("p", [17, 41, 73, 89, 97])
def test_genus2_order8(p):
    F = make_field(p)
    C = make_curve(F, 2, [0, -1, 0, 0, 0, 1], "hyperelliptic")
    a = element_of_order(F, 8)
    sigma = diagonal(C, a, F.mul(a, a))
    assert sigma.order == 8
    census, _ = check(C, sigma)
    assert census.label == "genus 2, order 8"


@pytest.mark.parametrize("p", [11, 31, 41, 61, 71])
def test_genus2_order10(p):
    F = make_field(p)
    C = make_curve(F, 2, [1, 0, 0, 0, 0, 1], "hyperelliptic")
    sigma = diagonal(C, F.neg(1), element_of_order(F, 5))
    census, _ = check(C, sigma)
    assert census.label == "genus 2, order 10"


@pytest.mark.parametrize("q,g", [(5, 1), (9, 2), (11, 1), (13, 3)])
def test_maximal_hyperelliptic(q, g):
    C = _maximal_curve(q, g)
    census, part = check(C, maximal_example(C, g))
    assert enumerate_points(C).count == q * q + 2 * g * q + 1
    _, qc, gqc = census_maximal_hyperelliptic(q, g)
    assert qc.n == sum(len(o) for o in part.long_orbits)
    assert gqc.n == sum(l for l in part.lengths if l > 1)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_hermitian(q):
    H = make_hermitian(q)
    examples = hermitian_examples(H)
    assert "S_p" in examples
    for case, psi in examples.items():
        census, _ = check(H, psi)
        assert case in census.label


@pytest.mark.parametrize("q,r", [(2, 3), (3, 3), (2, 4)])
def test_norm_trace(q, r):
    N = make_norm_trace(q, r)
    examples = norm_trace_examples(N)
    assert ("(a)" in examples) == (q > 2)
    for name, sigma in examples.items():
        census, part = check(N, sigma)
        if name == "G":
            assert part.length_census() == {census.order: q ** (2 * r - 1) // census.order}


@pytest.mark.parametrize("q,m", [(5, 2), (5, 3), (4, 5), (8, 3), (7, 2), (7, 4)])
def test_hermitian_quotient(q, m):
    C = make_hermitian_quotient(q, m)
    census, part = check(C, quotient_example(C))
    assert enumerate_points(C).count == m * q * (q - 1) + q + 1
    _, qc, gqc = census_hermitian_quotient(q, m)
    assert qc.n == sum(len(o) for o in part.long_orbits)
    assert qc.genus == C.genus


def test_negative_control_square_map(f31):
    """sigma^2 has order 5, so the order-10 census must not match it."""
    s2 = f31.sigma.power(2)
    part = orbit_partition(s2, f31.points)
    rep = crosscheck(census_for(f31.curve, f31.sigma, "genus2_order10"), part)
    assert not rep.passed
    assert any("order" in d for d in rep.diffs)
    assert part.order == 5 and set(part.length_census()) <= {1, 5}


def test_negative_control_wrong_orbit_set(f31):
    """Same lengths but a different short orbit is still caught."""
    census = census_for(f31.curve, f31.sigma, "genus2_order10")
    assert crosscheck(census, f31.partition).passed
    bogus = frozenset({(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)})
    rep = crosscheck(replace(census, orbit_sets=(bogus,)), f31.partition)
    assert not rep.passed and "not found" in rep.diffs[0]


def test_closed_form_errors():
    with pytest.raises(CensusError):
        census_genus2_order8(make_field(31))  # 31 != 1 mod 8
    with pytest.raises(CensusError):
        census_genus2_order10(make_field(13))
    with pytest.raises(CensusError):
        census_maximal_hyperelliptic(9, 3)  # 7 does not divide 10
    with pytest.raises(CensusError):
        census_maximal_hyperelliptic(4, 1)
    with pytest.raises(CensusError):
        census_hermitian_quotient(9, 2)  # p = 3 excluded
    with pytest.raises(CensusError):
        census_hermitian_quotient(5, 4)  # 4 does not divide 6
    F = make_field(31)
    C = make_curve(F, 3, [1, 0, 0, 0, 1])
    with pytest.raises(CensusError):
        census_diagonal_kummer(C, diagonal(C, 1, 1))


def test_dispatch_errors(f31):
    with pytest.raises(CensusError):
        census_for(f31.curve, f31.sigma, "nonsense")
    with pytest.raises(CensusError):
        census_for(f31.curve, f31.sigma, "quotient")
    with pytest.raises(CensusError):
        census_for(f31.curve, f31.sigma, "maximal")
    with pytest.raises(CensusError):
        census_for(f31.curve, f31.sigma.power(2))
    with pytest.raises(CensusError):
        census_for(make_hermitian(3), identity(make_hermitian(3)))
