"""Fans, the partial compactification N_R(Δ), and closures of polyhedra in it.

A point of N_R(Δ) is stored as ``(τ, coset)`` where ``τ`` is a cone of the
fan and ``coset`` gives coordinates on the quotient N_R / span(τ).  Quotient
coordinates are the pairings with the canonical (Hermite normal form) basis
of ``span(τ)^⊥ ∩ Z^n``, so the lattice N / (span(τ) ∩ N) maps isomorphically
onto Z^(n - dim τ).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .convex import Cone, Polyhedron, as_cone, recession_cone, support_contains
from .errors import ConeNotInFan, DimensionMismatch, NotPointed, StratumNotInFan
from .linalg import dot, frac, fvec, solve_any
from .lp import feasible_point

INF = math.inf


class Fan:
    """Finite collection of cones closed under faces."""

    def __init__(self, cones: Iterable[Polyhedron], ambient_dim: int, *, closed: bool = False):
        self.ambient_dim = ambient_dim
        cs = {as_cone(c) if not isinstance(c, Cone) else c for c in cones}
        if not closed:
            allc = set()
            for c in cs:
                allc.update(as_cone(f) for f in c.faces())
            cs = allc
        if not cs:
            cs = {Cone.zero(ambient_dim)}
        self.cones: tuple[Cone, ...] = tuple(sorted(cs))
        self._set = set(self.cones)

    @classmethod
    def from_generators(cls, maximal: Sequence[Sequence[Sequence[int]]], ambient_dim: int | None = None) -> "Fan":
        """Fan generated by the maximal cones ``cone(rays)`` listed in ``maximal``."""
        if ambient_dim is None:
            ambient_dim = len(maximal[0][0])
        cones = [Cone.from_generators(rs, (), ambient_dim) for rs in maximal]
        return cls(cones, ambient_dim)

    @classmethod
    def of_cone(cls, cone: Cone) -> "Fan":
        return cls([cone], cone.ambient_dim)

    def __contains__(self, cone) -> bool:
        return cone in self._set

    def __iter__(self):
        return iter(self.cones)

    def __len__(self) -> int:
        return len(self.cones)

    def __repr__(self) -> str:
        return f"Fan({len(self.cones)} cones in R^{self.ambient_dim})"

    @property
    def pointed(self) -> bool:
        return all(c.is_pointed for c in self.cones)

    @property
    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones
                if not any(d != c and d.dim > c.dim and d.contains_polyhedron(c) for d in self.cones)]

    @property
    def rays(self) -> list[tuple[int, ...]]:
        return sorted({r for c in self.cones for r in c.rays})

    def is_complete(self) -> bool:
        return support_contains(self.maximal_cones, [Polyhedron.whole_space(self.ambient_dim)])

    def is_valid(self) -> bool:
        cs = self.cones
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                inter = cs[i].intersection(cs[j])
                inter = as_cone(inter)
                if inter not in self._set:
                    return False
                if not (inter.is_face_of(cs[i]) and inter.is_face_of(cs[j])):
                    return False
        return True

    def cone_containing(self, tau: Cone) -> Cone | None:
        """Smallest cone of the fan containing ``tau``, if any."""
        hits = [c for c in self.cones if c.contains_polyhedron(tau)]
        return min(hits, key=lambda c: c.dim) if hits else None


def coordinate_cone(axes: Iterable[int], n: int) -> Cone:
    gens = [tuple(int(i == j) for j in range(n)) for i in sorted(axes)]
    return Cone.from_generators(gens, (), n) if gens else Cone.zero(n)


# ---------------------------------------------------------------- quotients


@lru_cache(maxsize=4096)
def _quotient_basis(tau: Cone) -> tuple[tuple[int, ...], ...]:
    return tuple(tau.orthogonal_lattice())


def quotient_basis(tau: Cone) -> tuple[tuple[int, ...], ...]:
    """Rows ``m_j`` with quotient coordinates ``q_j = <m_j, v>``."""
    return _quotient_basis(tau)


def project_quotient(tau: Cone, v) -> tuple[Fraction, ...]:
    """Canonical coordinates of the class of ``v`` in N_R / span(τ)."""
    v = fvec(v)
    if len(v) != tau.ambient_dim:
        raise DimensionMismatch("vector and cone live in different spaces")
    return tuple(Fraction(dot(m, v)) for m in quotient_basis(tau))


def lift_quotient(tau: Cone, q) -> tuple[Fraction, ...]:
    """Some vector of N_R projecting to ``q``."""
    basis = quotient_basis(tau)
    n = tau.ambient_dim
    if not basis:
        return tuple(Fraction(0) for _ in range(n))
    x = solve_any(basis, fvec(q))
    assert x is not None
    return x


def quotient_normal(tau: Cone, u) -> tuple[Fraction, ...] | None:
    """Express a functional ``u`` vanishing on span(τ) in quotient coordinates."""
    basis = quotient_basis(tau)
    u = fvec(u)
    if any(dot(u, g) != 0 for g in list(tau.rays) + list(tau.lines)):
        return None
    if not basis:
        return ()
    cols = [[Fraction(m[i]) for m in basis] for i in range(tau.ambient_dim)]
    c = solve_any(cols, u)
    assert c is not None
    return c


def quotient_polyhedron(tau: Cone, P: Polyhedron) -> Polyhedron:
    """Polyhedron in N_R/span(τ) cut out by the inequalities of ``P`` annihilating τ."""
    k = len(quotient_basis(tau))
    hs = []
    for u, a in P.halfspaces:
        c = quotient_normal(tau, u)
        if c is not None:
            hs.append((c, a))
    if k == 0:
        return Polyhedron([], 0, vrep=([()], [], []))
    return Polyhedron(hs, k)


@dataclass(frozen=True)
class ExtendedPoint:
    stratum: Cone
    coset: tuple[Fraction, ...]

    @classmethod
    def at(cls, tau: Cone, v) -> "ExtendedPoint":
        return cls(tau, project_quotient(tau, v))

    @classmethod
    def finite(cls, v) -> "ExtendedPoint":
        v = fvec(v)
        return cls(Cone.zero(len(v)), v)

    @property
    def is_finite(self) -> bool:
        return self.stratum.dim == 0

    def lift(self) -> tuple[Fraction, ...]:
        return lift_quotient(self.stratum, self.coset)

    def __repr__(self) -> str:
        c = ", ".join(str(x) for x in self.coset)
        if self.is_finite:
            return f"ExtendedPoint(({c}))"
        return f"ExtendedPoint(stratum={list(self.stratum.rays)}, coset=({c}))"


def as_extended(v) -> ExtendedPoint:
    return v if isinstance(v, ExtendedPoint) else ExtendedPoint.finite(v)


def trop_point(coordinate_valuations: Sequence, fan: Fan) -> ExtendedPoint:
    """Tropicalisation of a point from its coordinate valuations (``inf`` allowed)."""
    n = fan.ambient_dim
    if len(coordinate_valuations) != n:
        raise DimensionMismatch("wrong number of coordinates")
    inf_axes = []
    finite = []
    for i, x in enumerate(coordinate_valuations):
        if x == INF or x == "inf":
            inf_axes.append(i)
            finite.append(Fraction(0))
        else:
            finite.append(frac(x))
    tau = coordinate_cone(inf_axes, n)
    if tau not in fan:
        raise StratumNotInFan(f"the coordinate cone on axes {inf_axes} is not a cone of the fan")
    return ExtendedPoint.at(tau, finite)


# ---------------------------------------------------------------- closures


@dataclass(frozen=True)
class ExtendedPolyhedron:
    base: Polyhedron
    fan: Fan = field(repr=False)
    strata: dict = field(hash=False)

    def contains(self, p: ExtendedPoint) -> bool:
        S = self.strata.get(p.stratum)
        return S is not None and S.contains(p.coset)


def closure_polyhedron(P: Polyhedron, fan: Fan) -> ExtendedPolyhedron:
    """Closure of a pointed polyhedron in N_R(Δ), stratum by stratum."""
    if not P.is_pointed:
        raise NotPointed("closure requires a pointed polyhedron")
    sigma = recession_cone(P)
    if sigma not in fan:
        raise ConeNotInFan("the recession cone of P is not a cone of the fan")
    strata = {}
    for tau in sigma.faces():
        tau = as_cone(tau)
        strata[tau] = P if tau.dim == 0 else quotient_polyhedron(tau, P)
    return ExtendedPolyhedron(P, fan, strata)


def approach_sequence(P: Polyhedron, tau: Cone, q, steps: int = 5) -> list[tuple[Fraction, ...]]:
    """Points of ``P`` projecting to ``q`` and moving off along the interior of τ."""
    basis = quotient_basis(tau)
    a_ub = [u for u, _ in P.halfspaces]
    b_ub = [a for _, a in P.halfspaces]
    x = feasible_point(a_ub, b_ub, [list(m) for m in basis], list(fvec(q)), n=P.ambient_dim)
    if x is None:
        return []
    w = tau.interior_vector()
    return [tuple(a + k * b for a, b in zip(x, w)) for k in range(1, steps + 1)]
