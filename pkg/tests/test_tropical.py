from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from tropint.convex import Cone, Polyhedron, recession_cone
from tropint.fan import ExtendedPoint, Fan
from tropint.linalg import dot, sub
from tropint.tropical import (TropicalPolynomial, face_polynomial, hypersurface, initial_support,
                              newton_fan, stratified_closure, translate, weight)

from conftest import rationals, tropical_polynomials

LINE = TropicalPolynomial({(1, 0): 0, (0, 1): 0, (0, 0): 1})
P2 = Fan.from_generators([[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]])


def cone(*gens):
    return Cone.from_generators(gens, ambient_dim=len(gens[0]))


def rays_of(H):
    return sorted(c.rays[0] for c in H.cells if c.dim == 1 and c.rays)


# ---------------------------------------------------------------- weights and initial forms


def test_weights():
    assert weight(LINE, (1, 1)) == 1
    assert weight(TropicalPolynomial({(1, 0): 1}), (5, 0)) == 6


def test_weight_on_boundary_stratum():
    f = TropicalPolynomial({(1, 0): 0, (0, 1): 0, (0, 0): 0})
    p = ExtendedPoint.at(cone((-1, -1)), (0, 0))
    assert weight(f, p) == 0
    assert initial_support(f, p) == {(1, 0), (0, 1)}


def test_initial_supports_on_line():
    assert initial_support(LINE, (1, 1)) == {(1, 0), (0, 1), (0, 0)}
    assert initial_support(LINE, (0, 0)) == {(1, 0), (0, 1)}
    assert initial_support(LINE, (7, -3)) == {(0, 1)}


# ---------------------------------------------------------------- hypersurfaces


def test_tropical_line_golden():
    H = hypersurface(LINE)
    verts = [c for c in H.cells if c.dim == 0]
    assert [v.vertex_list for v in verts] == [((1, 1),)]
    assert rays_of(H) == [(-1, -1), (0, 1), (1, 0)]
    assert H.dual(verts[0]) == Polyhedron.from_points([(0, 0), (1, 0), (0, 1)])
    # each ray is dual to the edge it is orthogonal to
    for c in H.cells:
        if c.dim == 1:
            a, b = H.dual(c).vertex_list
            assert dot(c.rays[0], sub(b, a)) == 0


def test_monomial_has_empty_hypersurface():
    assert hypersurface(TropicalPolynomial({(2, 1): 5})).cells == ()


@pytest.mark.parametrize("p", [3, 5])
def test_multeg_first_curve(p):
    f = TropicalPolynomial({(1, 0): 1, (p, 0): 0, (0, p): 0})
    H = hypersurface(f)
    v = Fraction(1, p - 1)
    assert [c.vertex_list[0] for c in H.cells if c.dim == 0] == [(v, v)]
    assert rays_of(H) == [(-1, -1), (0, 1), (p, 1)]


def test_square_with_bounded_edge():
    f = TropicalPolynomial({(0, 0): 0, (1, 0): 0, (0, 1): 0, (1, 1): 2})
    H = hypersurface(f)
    edges = [c for c in H.cells if c.dim == 1 and c.is_bounded]
    assert len(edges) == 1
    assert set(edges[0].vertex_list) == {(0, 0), (-2, -2)}
    fan = newton_fan(f)
    assert len(fan.maximal_cones) == 4
    assert fan.rays == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_newton_fans():
    assert newton_fan(LINE).rays == [(-1, -1), (0, 1), (1, 0)]
    assert newton_fan(TropicalPolynomial({(3, 1): 0})).maximal_cones == [Polyhedron.whole_space(2)]


# ---------------------------------------------------------------- translation


def test_translation_one_variable():
    f = TropicalPolynomial({(1,): 0, (0,): 1})
    zero = lambda g: [c.vertex_list[0] for c in hypersurface(g).cells]
    assert zero(f) == [(1,)]
    assert zero(translate(f, (2,))) == [(3,)]
    assert translate(f, (0,)) == f
    assert translate(translate(f, (Fraction(5, 3),)), (Fraction(-5, 3),)) == f


@given(tropical_polynomials(), st.tuples(rationals, rationals), st.tuples(rationals, rationals))
def test_translation_equivariance(f, t, v):
    g = translate(f, t)
    assert weight(g, tuple(a + b for a, b in zip(v, t))) == weight(f, v)


@given(tropical_polynomials(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_translated_hypersurface_is_shifted(f, t):
    H, G = hypersurface(f), hypersurface(translate(f, t))
    assert sorted(c.translate(t) for c in H.cells) == sorted(G.cells)
    for c in H.cells:
        assert G.dual(c.translate(t)) == H.dual(c)


# ---------------------------------------------------------------- structure


def _check_structure(f):
    H = hypersurface(f)
    n = f.n
    fan = newton_fan(f)
    for c in H.cells:
        d = H.dual(c)
        assert c.dim + d.dim == n
        for a in c.direction_basis:
            for b in d.direction_basis:
                assert dot(a, b) == 0
        assert recession_cone(c) in fan
    for c in H.complex.maximal_cells:
        assert c.dim == n - 1
    for i, j in H.complex.face_relation:
        a, b = H.cells[i], H.cells[j]
        if a != b:
            assert H.dual(b).is_face_of(H.dual(a))
    return H


@given(tropical_polynomials(n=2))
def test_structure_plane(f):
    _check_structure(f)


@given(tropical_polynomials(n=3, max_terms=5, max_exponent=2))
def test_structure_space(f):
    _check_structure(f)


@given(tropical_polynomials(max_exponent=2))
def test_support_criterion_on_grid(f):
    H = hypersurface(f)
    for x, y in product(range(-4, 5), repeat=2):
        v = (Fraction(x, 2), Fraction(y, 2))
        assert H.contains(v) == (len(initial_support(f, v)) >= 2)


# ---------------------------------------------------------------- strata


def test_stratified_closure_of_line():
    f = TropicalPolynomial({(1, 0): 0, (0, 1): 0, (0, 0): 0})
    cl = stratified_closure(f, P2)
    assert cl[Cone.zero(2)].cells == hypersurface(f).cells
    for g in [(1, 0), (0, 1), (-1, -1)]:
        pts = [c for c in cl[cone(g)].cells]
        assert len(pts) == 1 and pts[0].dim == 0
    assert cl[cone((1, 0), (0, 1))].cells == ()


def test_face_polynomial_of_line_on_diagonal():
    f = TropicalPolynomial({(1, 0): 0, (0, 1): 0, (0, 0): 0})
    g = face_polynomial(f, cone((-1, -1)))
    assert g.n == 1 and len(g.terms) == 2


def test_monomial_strata_empty():
    cl = stratified_closure(TropicalPolynomial({(1, 1): 3}), P2)
    assert all(H.cells == () for H in cl.values())


@given(tropical_polynomials(max_exponent=2))
def test_closure_consistency(f):
    fan = newton_fan(f)
    cl = stratified_closure(f, fan)
    for tau, H in cl.items():
        if tau.dim != 1:
            continue
        for k in range(-6, 7):
            q = (Fraction(k, 2),)
            p = ExtendedPoint(tau, q)
            assert H.contains(q) == (len(initial_support(f, p)) >= 2)
