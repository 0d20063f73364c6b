from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropint.convex import Cone, Polyhedron, recession_cone
from tropint.errors import ConeNotInFan, DimensionMismatch, NotPointed, StratumNotInFan
from tropint.fan import (ExtendedPoint, Fan, approach_sequence, closure_polyhedron, coordinate_cone,
                         lift_quotient, project_quotient, quotient_basis, quotient_normal,
                         trop_point)

from conftest import rationals

QUADRANTS = Fan.from_generators([[(1, 0), (0, 1)], [(-1, 0), (0, 1)], [(-1, 0), (0, -1)], [(1, 0), (0, -1)]])
P2 = Fan.from_generators([[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]])
UNBOUNDED = Polyhedron([((-1, 0), -1), ((0, -1), -1), ((-1, -1), -3)], 2)


def cone(*gens):
    return Cone.from_generators(gens, ambient_dim=2)


def test_fans_valid_and_complete():
    for fan in (QUADRANTS, P2):
        assert fan.is_valid() and fan.is_complete() and fan.pointed
        assert Cone.zero(2) in fan
    assert len(P2.cones) == 7


def test_overlapping_cones_are_not_a_fan():
    bad = Fan.from_generators([[(1, 0), (0, 1)], [(1, 1), (-1, 1)]])
    assert not bad.is_valid()


def test_closure_of_unbounded_example():
    cl = closure_polyhedron(UNBOUNDED, QUADRANTS)
    assert set(cl.strata) == {Cone.zero(2), cone((1, 0)), cone((0, 1)), cone((1, 0), (0, 1))}
    assert cl.strata[Cone.zero(2)] == UNBOUNDED
    # at infinity along x, y >= 1 survives
    sx = cl.strata[cone((1, 0))]
    assert sx.vertex_list == ((1,),) and sx.rays == ((1,),)
    sy = cl.strata[cone((0, 1))]
    assert sy.vertex_list == ((1,),) and sy.rays == ((1,),)
    assert cl.strata[cone((1, 0), (0, 1))].ambient_dim == 0


def test_closure_of_polytope_and_ray():
    sq = Polyhedron.box((0, 0), (1, 1))
    assert list(closure_polyhedron(sq, QUADRANTS).strata) == [Cone.zero(2)]
    ray = Polyhedron.from_points([(0, 0)], rays=[(1, 0)])
    cl = closure_polyhedron(ray, QUADRANTS)
    assert cl.strata[cone((1, 0))].vertex_list == ((0,),)
    assert cl.contains(ExtendedPoint(cone((1, 0)), (Fraction(0),)))
    assert not cl.contains(ExtendedPoint(cone((1, 0)), (Fraction(1),)))


def test_closure_errors():
    with pytest.raises(ConeNotInFan):
        closure_polyhedron(UNBOUNDED, Fan.of_cone(cone((1, 0))))
    with pytest.raises(NotPointed):
        closure_polyhedron(Polyhedron([((1, 0), 0)], 2), QUADRANTS)


def test_face_closure_inside_closure():
    F = Polyhedron.from_points([(1, 2)], rays=[(0, 1)])
    big = closure_polyhedron(UNBOUNDED, QUADRANTS)
    small = closure_polyhedron(F, QUADRANTS)
    for tau, S in small.strata.items():
        assert big.strata[tau].contains_polyhedron(S)


def test_trop_point():
    p = trop_point((1, 0), QUADRANTS)
    assert p.is_finite and p.coset == (1, 0)
    q = trop_point(("inf", 1), QUADRANTS)
    assert q.stratum == cone((1, 0)) and q.coset == (1,)
    assert trop_point((0, 0), P2) == ExtendedPoint.finite((0, 0))
    assert trop_point(("inf", "inf"), P2).stratum == cone((1, 0), (0, 1))
    with pytest.raises(StratumNotInFan):
        trop_point((0, "inf"), Fan.of_cone(cone((1, 0))))
    with pytest.raises(DimensionMismatch):
        trop_point((1,), P2)


def test_project_quotient_golden():
    assert project_quotient(cone((1, 1)), (2, 0)) == (2,)
    assert project_quotient(Cone.zero(2), (3, Fraction(1, 2))) == (3, Fraction(1, 2))
    assert project_quotient(cone((1, 1)), (5, 5)) == (0,)
    assert quotient_basis(cone((1, 1))) == ((1, -1),)


@given(st.sampled_from([(1, 0), (0, 1), (1, 1), (-1, -1), (2, 3), (1, -2)]),
       st.tuples(rationals, rationals), rationals)
def test_projection_ignores_span(g, v, s):
    tau = cone(g)
    w = tuple(a + s * b for a, b in zip(v, g))
    q = project_quotient(tau, v)
    assert project_quotient(tau, w) == q
    assert project_quotient(tau, lift_quotient(tau, q)) == q


def test_coordinate_cones():
    assert coordinate_cone([0], 2) == cone((1, 0))
    assert coordinate_cone([], 2) == Cone.zero(2)


def test_approach_sequence_stays_in_polyhedron():
    tau = cone((1, 0))
    seq = approach_sequence(UNBOUNDED, tau, (Fraction(5, 2),))
    assert len(seq) == 5
    for x in seq:
        assert UNBOUNDED.contains(x)
        assert project_quotient(tau, x) == (Fraction(5, 2),)
    assert approach_sequence(UNBOUNDED, tau, (0,)) == []


def test_retained_inequalities_rule():
    cl = closure_polyhedron(UNBOUNDED, QUADRANTS)
    for tau, S in cl.strata.items():
        if tau.dim in (0, 2):
            continue
        kept = [(quotient_normal(tau, u), a) for u, a in UNBOUNDED.halfspaces
                if all(sum(x * y for x, y in zip(u, g)) == 0 for g in tau.rays)]
        assert kept
        assert S == Polyhedron(kept, 1)
