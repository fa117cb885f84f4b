import pytest

from qcag import (
    AutomorphismError,
    ConstraintError,
    apply,
    automorphism_order,
    diagonal,
    enumerate_points,
    hermitian_psi,
    identity,
    make_automorphism,
    make_curve,
    make_field,
    make_hermitian,
    make_hermitian_quotient,
    make_norm_trace,
    norm_trace_map,
    orbit_partition,
    quotient_eta,
    select_long_orbits,
    select_nontrivial_orbits,
    select_orbits_by_length,
)
from qcag.aut import pullback_is_proportional, quotient_shift


def maps_points_to_points(sigma):
    pts = enumerate_points(sigma.curve)
    return all(sigma.curve.contains(sigma(P)) for P in pts)


def test_diagonal_validation_f127(f127):
    with pytest.raises(AutomorphismError):
        diagonal(f127.curve, 19, 2)
    assert f127.sigma.order == 21
    assert maps_points_to_points(f127.sigma)


def test_symbolic_check_implies_points_preserved():
    F = make_field(13)
    C = make_curve(F, 3, [1, 0, 0, 0, 1])  # x^3 = y^4 + 1
    accepted = 0
    for a in range(1, 13):
        for d in range(1, 13):
            coeffs = (a, 0, 0, d, 0)
            sym = pullback_is_proportional(C, coeffs)
            images_ok = all(
                F.pow(F.mul(a, P.x.code), 3) == C.eval_B(F.mul(d, P.y.code)) for P in enumerate_points(C)
            )
            # symbolic validity implies the rational points are preserved
            if sym:
                assert images_ok
                accepted += 1
    # exactly the pairs with a^3 = 1 and d^4 = 1
    assert accepted == 12


def test_order_and_composition(f31):
    s = f31.sigma
    assert s.order == automorphism_order(s) == 10
    assert s.power(10).is_identity and not s.power(5).is_identity
    assert s.power(3).compose(s.power(7)).is_identity
    assert s.power(-1).compose(s).is_identity
    P = f31.curve.point(21, 11)
    assert s.power(2)(P) == s(s(P)) == apply(s.power(2), P)
    assert s.power(2).kind.endswith("^2")


def test_identity_gives_singletons(f41):
    part = orbit_partition(identity(f41.curve), f41.points)
    assert part.length_census() == {1: len(f41.points)}


def test_partition_is_a_partition(f41):
    part = f41.partition
    pts = [P.codes() for o in part.orbits for P in o]
    assert sorted(pts) == sorted(P.codes() for P in f41.points)
    for o in part.orbits:
        for i, P in enumerate(o):
            assert f41.sigma(P) == o[(i + 1) % len(o)]
        assert part.order % len(o) == 0
    firsts = [o[0].key() for o in part.orbits]
    assert firsts == sorted(firsts)


def test_orbit_selection(f31):
    part = f31.partition
    assert [len(o) for o in select_long_orbits(part)] == [10, 10]
    assert [len(o) for o in select_nontrivial_orbits(part)] == [2, 5, 10, 10]
    assert [len(o) for o in select_orbits_by_length(part, [5])] == [5]
    with pytest.raises(ConstraintError):
        select_orbits_by_length(part, [3])
    with pytest.raises(ConstraintError):
        select_long_orbits(orbit_partition(identity(f31.curve), []))


def test_hermitian_psi_constraint():
    H = make_hermitian(3)
    F = H.field
    c = next(c for c in range(9) if F.add(F.pow(c, 3), c) == 1)
    psi = hermitian_psi(H, 1, 1, c)
    assert psi.order == 3 and maps_points_to_points(psi)
    bad = next(c for c in range(9) if F.add(F.pow(c, 3), c) != 1)
    with pytest.raises(AutomorphismError):
        hermitian_psi(H, 1, 1, bad)


def test_norm_trace_map_requires_trace_zero():
    N = make_norm_trace(2, 3)
    F = N.field
    zero_tr = [a for a in range(1, 8) if F.trace(a, F.h) == 0]
    other = [a for a in range(1, 8) if F.trace(a, F.h) != 0]
    assert len(zero_tr) == 3
    assert maps_points_to_points(norm_trace_map(N, 1, zero_tr[0]))
    with pytest.raises(AutomorphismError):
        norm_trace_map(N, 1, other[0])


def test_quotient_eta():
    C = make_hermitian_quotient(5, 2)
    F = C.field
    c = quotient_shift(F)
    assert c and F.add(F.pow(c, 5), c) == 0
    eta = quotient_eta(C, F.neg(1))
    assert eta.order == 10 and maps_points_to_points(eta)
    with pytest.raises(AutomorphismError):
        quotient_eta(C, F.neg(1), shift=1)


def test_raw_maps_rejected_when_not_automorphisms(f31):
    with pytest.raises(AutomorphismError):
        make_automorphism(f31.curve, 1, 0, 0, 1, 1)
    with pytest.raises(AutomorphismError):
        make_automorphism(f31.curve, 0, 0, 0, 1, 0)
    with pytest.raises(AutomorphismError):
        apply(f31.sigma, (1, 1))
