"""Tropical Laurent polynomials and their hypersurfaces.

A tropical polynomial maps integer exponents ``nu`` to rational weights
``w_nu`` (the valuations of the coefficients).  At ``v`` the term ``nu``
has weight ``w_nu + <nu, v>``; the hypersurface is where the minimum is
attained at least twice.  Cells of the hypersurface are dual to the
positive-dimensional lower faces of the lifted point set ``{(nu, w_nu)}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import dd
from .convex import Cone, PolyhedralComplex, Polyhedron, as_cone, normal_fan
from .errors import DimensionMismatch, FanNotCompatible, InvalidInput
from .fan import ExtendedPoint, Fan, as_extended, lift_quotient, quotient_basis, quotient_normal
from .linalg import dot, frac, fvec

INF = math.inf
Exponent = tuple[int, ...]


class TropicalPolynomial:
    """Finite map exponent -> weight, with at least one term."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | Sequence[tuple[Sequence[int], object]],
                 n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Exponent, Fraction] = {}
        for e, w in items:
            e = tuple(int(x) for x in e)
            if e in out:
                raise InvalidInput(f"repeated exponent {e}")
            out[e] = frac(w)
        if not out:
            raise InvalidInput("a tropical polynomial needs at least one term")
        dims = {len(e) for e in out}
        if len(dims) != 1:
            raise DimensionMismatch("exponent vectors of different lengths")
        d = dims.pop()
        if n is not None and n != d:
            raise DimensionMismatch(f"expected exponents of length {n}")
        self.n = d
        self.terms: dict[Exponent, Fraction] = dict(sorted(out.items()))
        self._hash = hash(tuple(self.terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, TropicalPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = " + ".join(f"{w}@{e}" for e, w in self.terms.items())
        return f"TropicalPolynomial({body})"

    @property
    def support(self) -> list[Exponent]:
        return list(self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def evaluate(self, v) -> dict[Exponent, Fraction]:
        v = fvec(v)
        return {e: w + dot(e, v) for e, w in self.terms.items()}


# ---------------------------------------------------------------- strata


def _stratum_face(f: TropicalPolynomial, tau: Cone) -> list[Exponent]:
    """Exponents on the face of the Newton polytope minimised by τ."""
    gens = list(tau.rays)
    if not gens and not tau.lines:
        return f.support
    w = tau.interior_vector()
    low = min(dot(e, w) for e in f.support)
    face = [e for e in f.support if dot(e, w) == low]
    for g in gens + list(tau.lines) + [tuple(-x for x in l) for l in tau.lines]:
        if len({dot(e, g) for e in face}) > 1:
            raise FanNotCompatible("stratum cone is not contained in a cone of the Newton fan")
    return face


def _face_reference(f: TropicalPolynomial, tau: Cone, face: list[Exponent]) -> Exponent | None:
    """Monomial used to normalise the face polynomial, or None if ``f`` vanishes on the stratum."""
    gens = list(tau.rays)
    regular = all(dot(e, g) >= 0 for e in f.support for g in gens) and not any(
        dot(e, l) != 0 for e in f.support for l in tau.lines)
    if regular:
        if all(dot(face[0], g) == 0 for g in gens):
            return tuple(0 for _ in range(f.n))
        return None
    return min(face)


def weight(f: TropicalPolynomial, v) -> Fraction | float:
    """Tropical evaluation ``min_nu (w_nu + <nu, v>)``; ``v`` may be an ExtendedPoint.

    On a boundary stratum τ the minimum runs over the face of the Newton
    polytope selected by τ.  When ``f`` is regular along τ the value is that
    of ``f`` itself (``inf`` if ``f`` vanishes identically there); otherwise
    ``f`` is first divided by the lexicographically smallest face monomial.
    """
    p = as_extended(v)
    if p.is_finite:
        x = p.coset
        return min(w + dot(e, x) for e, w in f.terms.items())
    face = _stratum_face(f, p.stratum)
    ref = _face_reference(f, p.stratum, face)
    if ref is None:
        return INF
    x = p.lift()
    return min(f.terms[e] + dot(e, x) - dot(ref, x) for e in face)


def initial_support(f: TropicalPolynomial, v) -> set[Exponent]:
    """Exponents attaining the minimum at ``v`` (face terms on boundary strata)."""
    p = as_extended(v)
    if p.is_finite:
        vals = f.evaluate(p.coset)
        m = min(vals.values())
        return {e for e, x in vals.items() if x == m}
    face = _stratum_face(f, p.stratum)
    x = p.lift()
    vals = {e: f.terms[e] + dot(e, x) for e in face}
    m = min(vals.values())
    return {e for e, val in vals.items() if val == m}


def face_polynomial(f: TropicalPolynomial, tau: Cone) -> TropicalPolynomial:
    """The polynomial induced by ``f`` on N_R/span(τ), in quotient coordinates."""
    if tau.dim == 0:
        return f
    face = _stratum_face(f, tau)
    ref = min(face)
    terms = {}
    for e in face:
        d = tuple(a - b for a, b in zip(e, ref))
        c = quotient_normal(tau, d)
        terms[tuple(int(x) for x in c)] = f.terms[e]
    return TropicalPolynomial(terms, n=len(quotient_basis(tau)))


# ---------------------------------------------------------------- hypersurface


@dataclass(frozen=True)
class TropicalHypersurface:
    ambient_dim: int
    complex: PolyhedralComplex
    dual_cells: dict = field(repr=False)
    supports: dict = field(repr=False)
    newton_polytope: Polyhedron = field(repr=False)

    @property
    def cells(self) -> tuple[Polyhedron, ...]:
        return self.complex.cells

    def dual(self, cell: Polyhedron) -> Polyhedron:
        return self.dual_cells[cell]

    def contains(self, v) -> bool:
        return self.complex.contains(v)


def _lower_faces(points: list[tuple]) -> list[frozenset[int]]:
    """Index sets of the bounded faces of conv(points) + R_{>=0} e_last."""
    n1 = len(points[0])
    up = tuple(int(i == n1 - 1) for i in range(n1))
    ineqs, eqs = dd.v_to_h(points, [up], n=n1)
    facet_sets = []
    lower_sets = []
    for u, a in ineqs:
        s = frozenset(i for i, p in enumerate(points) if dot(u, p) == a)
        facet_sets.append(s)
        if u[-1] < 0:
            lower_sets.append(s)
    if not ineqs:
        # the lifted set is a single point plus the vertical ray
        return [frozenset(range(len(points)))]
    faces = set(lower_sets)
    stack = list(lower_sets)
    while stack:
        s = stack.pop()
        for g in facet_sets:
            t = s & g
            if t and t not in faces:
                faces.add(t)
                stack.append(t)
    return sorted(faces, key=lambda s: (len(s), sorted(s)))


def _cell(f_items: list[tuple[Exponent, Fraction]], S: frozenset[int], n: int) -> Polyhedron:
    idx = sorted(S)
    e0, w0 = f_items[idx[0]]
    hs = []
    for i in idx[1:]:
        e, w = f_items[i]
        d = tuple(a - b for a, b in zip(e, e0))
        hs.append((d, w0 - w))
        hs.append((tuple(-x for x in d), w - w0))
    for i, (e, w) in enumerate(f_items):
        if i in S:
            continue
        hs.append((tuple(a - b for a, b in zip(e0, e)), w - w0))
    P = Polyhedron(hs, n, check=False)
    P._ensure_vrep()
    return P


def hypersurface(f: TropicalPolynomial) -> TropicalHypersurface:
    """Polyhedral complex of the tropical hypersurface with its dual Newton cells."""
    n = f.n
    items = list(f.terms.items())
    newton = Polyhedron.from_points([fvec(e) for e, _ in items], ambient_dim=n) if n else \
        Polyhedron([], 0, vrep=([()], [], []))
    if len(items) == 1:
        return TropicalHypersurface(n, PolyhedralComplex([], n, close=False), {}, {}, newton)
    lifted = [tuple(Fraction(x) for x in e) + (w,) for e, w in items]
    cells, duals, supports = [], {}, {}
    for S in _lower_faces(lifted):
        if len(S) < 2:
            continue
        P = _cell(items, S, n)
        exps = frozenset(items[i][0] for i in S)
        cells.append(P)
        supports[P] = exps
        duals[P] = Polyhedron.from_points([fvec(e) for e in sorted(exps)], ambient_dim=n)
    cx = PolyhedralComplex(cells, n, close=False)
    return TropicalHypersurface(n, cx, duals, supports, newton)


def newton_polytope(f: TropicalPolynomial) -> Polyhedron:
    return Polyhedron.from_points([fvec(e) for e in f.support], ambient_dim=f.n)


def newton_fan(f: TropicalPolynomial) -> Fan:
    """Normal fan (min convention) of the Newton polytope; always complete."""
    return normal_fan(newton_polytope(f))


def translate(f: TropicalPolynomial, t) -> TropicalPolynomial:
    """Weights shifted so that the hypersurface moves by ``t``."""
    t = fvec(t)
    return TropicalPolynomial({e: w - dot(e, t) for e, w in f.terms.items()}, n=f.n)


def stratified_closure(f: TropicalPolynomial, fan: Fan) -> dict[Cone, TropicalHypersurface]:
    """Hypersurface of the face polynomial on every stratum of N_R(Δ)."""
    out = {}
    for tau in fan.cones:
        out[tau] = hypersurface(face_polynomial(f, tau))
    return out


def common_refinement(*fans: Fan) -> Fan:
    """Fan of all intersections of cones, one from each fan."""
    n = fans[0].ambient_dim
    cur = list(fans[0].maximal_cones)
    for F in fans[1:]:
        nxt = set()
        for a in cur:
            for b in F.maximal_cones:
                c = a.intersection(b)
                if c is not None:
                    nxt.add(as_cone(c))
        cur = list(nxt)
    return Fan(cur, n)
