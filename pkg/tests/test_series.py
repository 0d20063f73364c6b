import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropint.convex import Polyhedron
from tropint.errors import CertificateInsufficient, InvalidInput, NotPointed
from tropint.instances import SeriesConfig, random_series
from tropint.linalg import dot
from tropint.series import (TruncatedSeries, min_weight, restrict_to_laurent, stability_radius,
                            vertices_on_P)
from tropint.tropical import TropicalPolynomial, hypersurface, initial_support


def squares_series(kmax=4):
    P = Polyhedron.box((-3,), (0,))
    return TruncatedSeries(P, {(k,): k * k for k in range(kmax + 1)}, 10)


def brute_force_minimisers(weight, kmax, lo, hi, steps=600):
    """Minimising exponents of sum_k p^{weight(k)} x^k on a fine grid of [lo, hi]."""
    out = set()
    for i in range(steps + 1):
        v = lo + (hi - lo) * Fraction(i, steps)
        vals = {k: weight(k) + k * v for k in range(kmax + 1)}
        m = min(vals.values())
        out |= {k for k, x in vals.items() if x == m}
    return out


def test_squares_example():
    f = squares_series()
    got = vertices_on_P(f)
    assert got == {((0,), 0), ((1,), 1), ((2,), 4)}
    assert {e[0] for e, _ in got} == brute_force_minimisers(lambda k: k * k, 60, Fraction(-3), Fraction(0))
    assert restrict_to_laurent(f) == TropicalPolynomial({(0,): 0, (1,): 1, (2,): 4})


def test_truncation_too_short():
    P = Polyhedron.box((-3,), (0,))
    with pytest.raises(CertificateInsufficient):
        vertices_on_P(TruncatedSeries(P, {(0,): 0, (1,): 1}, 0))


def test_unbounded_retained_minimum_is_refused():
    P = Polyhedron([((-1,), 0)], 1)  # [0, inf)
    f = TruncatedSeries(P, {(1,): 0, (2,): 0}, 100)
    with pytest.raises(CertificateInsufficient):
        vertices_on_P(f)


def test_domain_and_support_validation():
    with pytest.raises(NotPointed):
        TruncatedSeries(Polyhedron([((1, 0), 0)], 2), {(0, 0): 0}, 1)
    quadrant = Polyhedron([((-1, 0), 0), ((0, -1), 0)], 2)
    with pytest.raises(InvalidInput):
        TruncatedSeries(quadrant, {(-1, 0): 0}, 1)


def test_polynomial_input():
    f = TropicalPolynomial({(1, 0): 0, (0, 1): 0, (0, 0): 1, (1, 1): 9})
    P = Polyhedron.box((-10, -10), (5, 5))
    s = TruncatedSeries(P, f.terms, 10**6)
    assert vertices_on_P(s) == {((1, 0), 0), ((0, 1), 0), ((0, 0), 1), ((1, 1), 9)}
    assert restrict_to_laurent(TruncatedSeries(Polyhedron.box((-1, -1), (0, 0)), f.terms, 10**6)) == \
        TropicalPolynomial({(1, 0): 0, (0, 1): 0})


def test_monomial_series():
    s = TruncatedSeries(Polyhedron.box((1,), (2,)), {(1,): 0}, 5)
    assert restrict_to_laurent(s) == TropicalPolynomial({(1,): 0})
    assert min_weight(s) == 1
    assert stability_radius(s) == 2


def test_min_weight_examples():
    f = {(1, 0): 0, (0, 1): 0, (0, 0): 1}
    assert min_weight(TruncatedSeries(Polyhedron.box((0, 0), (2, 2)), f, 10)) == 0
    assert min_weight(TruncatedSeries(Polyhedron.box((-4,), (7,)), {(0,): 0}, 1)) == 0
    with pytest.raises(CertificateInsufficient):
        min_weight(TruncatedSeries(Polyhedron.box((0,), (1,)), {(0,): 3}, 3))


def test_stability_threshold_line_on_square():
    f = TruncatedSeries(Polyhedron.box((0, 0), (2, 2)), {(1, 0): 0, (0, 1): 0, (0, 0): 1}, 10)
    delta = stability_radius(f)
    assert delta == 1
    base = vertices_on_P(f)
    # a perturbation of the constant whose weight stays above delta changes nothing
    assert vertices_on_P(f.with_terms({(0, 0): min(Fraction(1), delta + Fraction(1, 100))})) == base


def test_crafted_perturbation_outside_threshold():
    P = Polyhedron.box((0, 0), (2, 2))
    f = TruncatedSeries(P, {(1, 0): 0, (0, 1): 0}, 10)
    delta = stability_radius(f)
    assert delta == 2
    base = vertices_on_P(f)
    assert vertices_on_P(f.with_terms({(0, 0): delta + Fraction(1, 1000)})) == base
    assert vertices_on_P(f.with_terms({(0, 0): delta})) != base


def test_two_equal_lifted_points_three_terms():
    # 1-D: terms 0 and 1 tie at v = 0; the third term decides the radius
    P = Polyhedron.box((-1,), (1,))
    f = TruncatedSeries(P, {(0,): 0, (1,): 0, (2,): 3}, 20)
    assert vertices_on_P(f) == {((0,), 0), ((1,), 0)}
    delta = stability_radius(f)
    assert delta == 0
    assert vertices_on_P(f.with_terms({(2,): 2 + Fraction(1, 10)})) == vertices_on_P(f)


@given(st.integers(0, 10**6))
def test_tail_terms_do_not_matter(seed):
    rng = random.Random(seed)
    f = random_series(rng, SeriesConfig())
    base = vertices_on_P(f)
    extra = {}
    for _ in range(3):
        e = tuple(rng.randint(0, 6) for _ in range(f.n))
        if e in f.terms:
            continue
        lowest = min(dot(e, v) for v in f.domain.vertex_list)
        extra[e] = f.tail_bound - lowest + rng.randint(0, 3)
    assert vertices_on_P(f.with_terms(extra)) == base


@given(st.integers(0, 10**6))
def test_restriction_has_same_tropical_set(seed):
    rng = random.Random(seed)
    f = random_series(rng, SeriesConfig())
    g = restrict_to_laurent(f)
    H = hypersurface(g)
    lo = [min(v[i] for v in f.domain.vertex_list) for i in range(f.n)]
    hi = [max(v[i] for v in f.domain.vertex_list) for i in range(f.n)]
    for i in range(5):
        for j in range(5):
            v = (lo[0] + (hi[0] - lo[0]) * Fraction(i, 4), lo[1] + (hi[1] - lo[1]) * Fraction(j, 4))
            full = initial_support(TropicalPolynomial(f.terms), v)
            assert H.contains(v) == (len(full) >= 2)
