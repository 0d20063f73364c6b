"""Zero-dimensional tropical complete intersections.

Point multiplicities are mixed volumes of dual cells.  Positive-dimensional
components get a stable multiplicity: thicken the component, translate the
hypersurfaces by ``t * d_i`` for seeded integer directions ``d_i``, and sum
point multiplicities of the (now finite, transverse) intersection inside the
thickening.  A translation is accepted only after an exact check at ``t``
and ``t/2``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .convex import (Cone, PolyhedralComplex, Polyhedron, as_cone, mixed_volume,
                     recession_cone, refine_intersect, same_support)
from .errors import (BoundaryStratum, ConeNotInFan, DimensionMismatch, FanNotCompatible,
                     GenericityFailure, InvalidInput, NotIsolated, WellDefinednessViolation)
from .fan import ExtendedPoint, Fan, as_extended, closure_polyhedron
from .linalg import dot, fvec, rank, sub
from .tropical import (TropicalHypersurface, TropicalPolynomial, hypersurface, initial_support,
                       stratified_closure)

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1


def splitmix64(state: int):
    """Infinite stream of 64-bit outputs of the splitmix64 generator."""
    state &= MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


# ---------------------------------------------------------------- data


@dataclass(frozen=True)
class Component:
    index: int
    cells: tuple[Polyhedron, ...]
    bounded: bool

    @property
    def maximal_cells(self) -> list[Polyhedron]:
        return [c for c in self.cells
                if not any(d != c and d.dim > c.dim and d.contains_polyhedron(c) for d in self.cells)]

    @property
    def is_point(self) -> bool:
        return len(self.cells) == 1 and self.cells[0].dim == 0

    @property
    def point(self) -> tuple[Fraction, ...]:
        return self.cells[0].vertex_list[0]


@dataclass(frozen=True)
class Thickening:
    component: Component
    epsilon: Fraction
    relaxed: tuple[Polyhedron, ...]

    def contains(self, x) -> bool:
        return any(R.contains(x) for R in self.relaxed)

    def in_interior(self, x) -> bool:
        x = fvec(x)
        return any(all(dot(u, x) < a for u, a in R.halfspaces) for R in self.relaxed)


@dataclass
class MultiplicityReport:
    locus: object
    dual_cells: list[Polyhedron]
    multiplicity: int
    certificate: dict | None = None


@dataclass
class TranslationCertificate:
    directions: list[tuple[int, ...]]
    t: Fraction
    epsilon: Fraction
    seed: int
    points: list[dict] = field(default_factory=list)
    attempts: list[str] = field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return sum(p["multiplicity"] for p in self.points)


# ---------------------------------------------------------------- basics


def _check_dims(polys: Sequence[TropicalPolynomial]) -> int:
    if not polys:
        raise InvalidInput("at least one polynomial is required")
    n = polys[0].n
    if any(f.n != n for f in polys):
        raise DimensionMismatch("polynomials live in different dimensions")
    return n


def _square(polys) -> int:
    n = _check_dims(polys)
    if len(polys) != n:
        raise DimensionMismatch(f"need exactly {n} polynomials, got {len(polys)}")
    return n


def intersection_complex(*polys: TropicalPolynomial) -> PolyhedralComplex:
    """Complex supported on the intersection of the tropical hypersurfaces."""
    n = _check_dims(polys)
    hs = [hypersurface(f) for f in polys]
    cx = hs[0].complex
    for H in hs[1:]:
        cx = refine_intersect(cx, H.complex)
    return cx


def _dual_cell(f: TropicalPolynomial, v) -> Polyhedron:
    return Polyhedron.from_points([fvec(e) for e in sorted(initial_support(f, v))], ambient_dim=f.n)


def _local_cells(H: TropicalHypersurface, v) -> list[Polyhedron]:
    return [c for c in H.complex.maximal_cells if c.contains(v)]


def point_multiplicity(*polys: TropicalPolynomial, v) -> MultiplicityReport:
    """Mixed volume of the dual cells at an isolated intersection point.

    Points off the intersection get multiplicity 0 (some dual cell is a point).
    """
    n = _square(polys)
    p = as_extended(v)
    if not p.is_finite:
        raise BoundaryStratum("point multiplicities on boundary strata are not computed")
    x = p.coset
    duals = [_dual_cell(f, x) for f in polys]
    if all(len(initial_support(f, x)) >= 2 for f in polys):
        # isolated iff every choice of local cells meets only in x
        stars = [_local_cells(hypersurface(f), x) for f in polys]
        pieces = [Polyhedron.whole_space(n)]
        for star in stars:
            pieces = [q for P in pieces for c in star for q in [P.intersection(c)] if q is not None]
        if any(q.dim > 0 for q in pieces):
            raise NotIsolated(f"({', '.join(str(c) for c in x)}) lies on a positive-dimensional part of the intersection")
    mv = mixed_volume(*duals)
    return MultiplicityReport(p, duals, int(mv))


# ---------------------------------------------------------------- components


def components(*polys: TropicalPolynomial) -> list[Component]:
    """Connected components of the intersection, by nonempty pairwise intersection."""
    cx = intersection_complex(*polys)
    cells = cx.maximal_cells
    parent = list(range(len(cells)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if find(i) != find(j) and cells[i].meets(cells[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[Polyhedron]] = {}
    for i, c in enumerate(cells):
        groups.setdefault(find(i), []).append(c)
    out = []
    for g in groups.values():
        full = sorted({f for c in g for f in c.faces()})
        out.append(full)
    out.sort(key=lambda cs: cs[0].sort_key)
    return [Component(i, tuple(cs), all(c.is_bounded for c in cs)) for i, cs in enumerate(out)]


def thicken(C: Component, *polys: TropicalPolynomial, max_halvings: int = 200) -> Thickening:
    """Relax every cell of ``C`` by ``eps`` (halving from 1) until it avoids the rest."""
    others = [c for D in components(*polys) if D.cells != C.cells for c in D.maximal_cells]
    base = C.maximal_cells
    eps = Fraction(1)
    for _ in range(max_halvings):
        relaxed = tuple(c.relax(eps) for c in base)
        if not any(R.meets(X) for R in relaxed for X in others):
            return Thickening(C, eps, relaxed)
        eps /= 2
    raise GenericityFailure("could not separate the component from the others")


# ---------------------------------------------------------------- moving lemma


def _directions(seed: int, attempt: int, count: int, n: int) -> list[tuple[int, ...]]:
    bound = 1 + attempt
    rng = splitmix64(seed * 1_000_003 + attempt)
    out = []
    for _ in range(count):
        out.append(tuple(int(next(rng) % (2 * bound + 1)) - bound for _ in range(n)))
    return out


def _box(P: Polyhedron):
    """Coordinate bounding box of ``P`` (``None`` marks an unbounded side)."""
    lo, hi = [], []
    dirs = list(P.rays) + list(P.lines) + [tuple(-x for x in l) for l in P.lines]
    for i in range(P.ambient_dim):
        vals = [v[i] for v in P.vertex_list]
        lo.append(None if any(d[i] < 0 for d in dirs) else min(vals))
        hi.append(None if any(d[i] > 0 for d in dirs) else max(vals))
    return lo, hi


def _boxes_meet(a, b) -> bool:
    for l1, h1, l2, h2 in zip(a[0], a[1], b[0], b[1]):
        if h1 is not None and l2 is not None and h1 < l2:
            return False
        if h2 is not None and l1 is not None and h2 < l1:
            return False
    return True


def _translated_points(hs: list[TropicalHypersurface], shifts, thick: Thickening):
    """All points of the shifted intersection.

    Returns None if a positive-dimensional piece of the shifted intersection
    reaches the thickening; pieces far away are irrelevant.
    """
    levels = [[c.translate(s) for c in H.complex.maximal_cells] for H, s in zip(hs, shifts)]
    cur = [(c, _box(c)) for c in levels[0]]
    for cells in levels[1:]:
        boxed = [(c, _box(c)) for c in cells]
        nxt = []
        for P, bp in cur:
            for c, bc in boxed:
                if not _boxes_meet(bp, bc):
                    continue
                q = P.intersection(c)
                if q is not None:
                    nxt.append((q, _box(q)))
        cur = nxt
        if not cur:
            return []
    found = set()
    for q, _ in cur:
        if q.dim > 0:
            if any(q.meets(R) for R in thick.relaxed):
                return None
            continue
        found.add(q.vertex_list[0])
    return sorted(found)


def _point_data(polys, shifts, x):
    """Dual supports at ``x`` of the shifted system and the transversality verdict."""
    duals = []
    dirs = []
    dim_total = 0
    for f, s in zip(polys, shifts):
        supp = sorted(initial_support(f, sub(x, s)))
        duals.append(tuple(supp))
        diffs = [sub(e, supp[0]) for e in supp[1:]]
        dim_total += rank(diffs) if diffs else 0
        dirs.extend(diffs)
    n = len(x)
    transverse = dim_total == n and (rank(dirs) == n if dirs else n == 0)
    return tuple(duals), transverse


def _in_component(C: Component, x) -> bool:
    return any(c.contains(x) for c in C.maximal_cells)


def _try_translation(C: Component, polys, hs, thick: Thickening, dirs, t):
    """Check the certificate at ``t`` and ``t/2``; return the points at ``t`` or a reason.

    With the participating cells fixed, a shifted intersection point moves
    affinely in the parameter, so ``2 x(t/2) - x(t)`` is its exact limit.  Every
    point must keep its cells all the way down to the limit (convexity then
    covers the whole interval), and every point in the thickening must have
    its limit on ``C``.
    """
    levels = []
    for tt in (t, t / 2):
        shifts = [tuple(tt * x for x in d) for d in dirs]
        pts = _translated_points(hs, shifts, thick)
        if pts is None:
            return None, f"t={tt}: intersection not finite near the component"
        data = {}
        for x in pts:
            duals, ok = _point_data(polys, shifts, x)
            data[duals] = (x, ok)
        levels.append(data)
    big, small = levels
    chosen = []
    for level, other, tt in ((big, small, t), (small, big, t / 2)):
        for duals, (x, ok) in level.items():
            mate = other.get(duals)
            inside = thick.contains(x)
            if mate is None:
                return None, f"t={tt}: point {x} has no partner at the other scale"
            y = mate[0]
            x0 = tuple(2 * b - a for a, b in zip(x, y)) if tt == t else tuple(2 * a - b for a, b in zip(x, y))
            # the cells must persist down to the unshifted configuration
            if not all(set(d) <= initial_support(f, x0) for f, d in zip(polys, duals)):
                return None, f"t={tt}: point {x} changes cells before the limit"
            ours = _in_component(C, x0)
            if not ours:
                if inside:
                    return None, f"t={tt}: point {x} belongs to another component"
                continue
            if not thick.in_interior(x):
                return None, f"t={tt}: point {x} not interior to the thickening"
            if not ok:
                return None, f"t={tt}: intersection at {x} not transverse"
            if tt == t:
                chosen.append((x, duals))
    return sorted(chosen), None


def admissible_translation(C: Component, *polys: TropicalPolynomial, seed: int = 0,
                           thickening: Thickening | None = None, max_attempts: int = 40,
                           max_halvings: int = 12) -> TranslationCertificate:
    """Seeded generic translation isolating the intersection inside the thickening."""
    n = _square(polys)
    thick = thickening or thicken(C, *polys)
    hs = [hypersurface(f) for f in polys]
    attempts: list[str] = []
    if C.is_point:
        x = C.point
        duals, ok = _point_data(polys, [(0,) * n] * n, x)
        if ok:
            zero = [(0,) * n for _ in polys]
            mv = mixed_volume(*[Polyhedron.from_points([fvec(e) for e in d], ambient_dim=n) for d in duals])
            pts = [{"point": x, "dual_cells": duals, "multiplicity": int(mv)}]
            return TranslationCertificate(zero, Fraction(0), thick.epsilon, seed, pts, attempts)
    for attempt in range(max_attempts):
        dirs = _directions(seed, attempt, len(polys), n)
        if all(d == dirs[0] for d in dirs):
            # a common translation only moves the whole configuration
            attempts.append(f"attempt {attempt} dirs={dirs}: no relative motion")
            continue
        t = thick.epsilon / (4 * max(max(abs(x) for x in d) for d in dirs))
        for _ in range(max_halvings):
            data, why = _try_translation(C, polys, hs, thick, dirs, t)
            if data is not None:
                pts = []
                for x, duals in data:
                    cells = [Polyhedron.from_points([fvec(e) for e in d], ambient_dim=n) for d in duals]
                    pts.append({"point": x, "dual_cells": duals, "multiplicity": int(mixed_volume(*cells))})
                return TranslationCertificate(dirs, t, thick.epsilon, seed, pts, attempts)
            attempts.append(f"attempt {attempt} dirs={dirs} {why}")
            t /= 2
    raise GenericityFailure(f"no admissible translation after {max_attempts} attempts", attempts)


def stable_points(C: Component, *polys: TropicalPolynomial) -> list[dict]:
    """Vertices of ``C`` carrying a nonzero mixed volume of dual cells.

    Inside a positive-dimensional cell all dual cells are orthogonal to a
    common direction, so only vertices can contribute; the multiplicities
    sum to the stable multiplicity along ``C``.
    """
    _square(polys)
    out = []
    for c in C.cells:
        if c.dim != 0:
            continue
        x = c.vertex_list[0]
        duals = [_dual_cell(f, x) for f in polys]
        m = int(mixed_volume(*duals))
        if m:
            out.append({"point": x, "dual_cells": duals, "multiplicity": m})
    return out


def _derived_seed(seed: int, j: int) -> int:
    return seed if j == 0 else next(splitmix64(seed + j)) & 0xFFFFFFFF


def stable_multiplicity(C: Component, *polys: TropicalPolynomial, seed: int = 0,
                        cross_checks: int = 5) -> MultiplicityReport:
    """Stable intersection multiplicity along ``C``, cross-checked over several seeds."""
    n = _square(polys)
    thick = thicken(C, *polys)
    runs = []
    for j in range(max(1, cross_checks)):
        s = _derived_seed(seed, j)
        runs.append(admissible_translation(C, *polys, seed=s, thickening=thick))
    values = {r.multiplicity for r in runs}
    if len(values) != 1:
        raise WellDefinednessViolation(
            f"seeds disagree: {[(r.seed, r.multiplicity) for r in runs]}")
    m = values.pop()
    duals = []
    if C.is_point:
        duals = [_dual_cell(f, C.point) for f in polys]
    cert = {
        "epsilon": thick.epsilon,
        "relaxed_cells": list(thick.relaxed),
        "runs": [{"seed": r.seed, "directions": r.directions, "t": r.t,
                  "points": r.points, "multiplicity": r.multiplicity,
                  "rejected": list(r.attempts)} for r in runs],
        "seeds": [r.seed for r in runs],
    }
    return MultiplicityReport(C.index, duals, m, cert)


# ---------------------------------------------------------------- closures


@dataclass
class ComponentClosure:
    component: Component
    fan: Fan = field(repr=False)
    strata: dict[Cone, list[Polyhedron]]

    def boundary_points(self) -> list[ExtendedPoint]:
        out = []
        for tau, cells in self.strata.items():
            if tau.dim == 0:
                continue
            for c in cells:
                if c.dim == 0:
                    out.append(ExtendedPoint(tau, c.vertex_list[0]))
        return sorted(set(out), key=lambda p: (p.stratum.sort_key, p.coset))

    def contains(self, p: ExtendedPoint) -> bool:
        return any(c.contains(p.coset) for c in self.strata.get(p.stratum, ()))


def component_closure(C: Component, fan: Fan, polys: Sequence[TropicalPolynomial] = ()) -> ComponentClosure:
    """Closure of ``C`` in N_R(Δ), stratum by stratum.

    The strata come from closing each cell; when ``polys`` are supplied, each
    nonzero stratum is checked against the intersection of the stratified
    closures of the hypersurfaces (the two agree on the closure of ``C``).
    """
    strata: dict[Cone, set[Polyhedron]] = {}
    for X in C.maximal_cells:
        try:
            cl = closure_polyhedron(X, fan)
        except ConeNotInFan as exc:
            raise FanNotCompatible(str(exc)) from exc
        for tau, Q in cl.strata.items():
            strata.setdefault(tau, set()).add(Q)
    if polys:
        closures = [stratified_closure(f, fan) for f in polys]
        for tau, cells in strata.items():
            if tau.dim == 0:
                continue
            k = next(iter(cells)).ambient_dim
            cx = PolyhedralComplex(cells, k)
            for cl in closures:
                cx = refine_intersect(cx, cl[tau].complex)
            strata[tau] = set(cx.maximal_cells)
    out = {tau: sorted(cs) for tau, cs in sorted(strata.items()) if cs}
    return ComponentClosure(C, fan, out)


def closure_of_intersection(polys: Sequence[TropicalPolynomial], fan: Fan) -> dict[Cone, list[Polyhedron]]:
    """Closure in N_R(Δ) of the whole intersection, from the closures of its cells."""
    cx = intersection_complex(*polys)
    strata: dict[Cone, set[Polyhedron]] = {}
    for X in cx.maximal_cells:
        try:
            cl = closure_polyhedron(X, fan)
        except ConeNotInFan as exc:
            raise FanNotCompatible(str(exc)) from exc
        for tau, Q in cl.strata.items():
            strata.setdefault(tau, set()).add(Q)
    return {tau: sorted(cs) for tau, cs in strata.items()}


def intersection_of_closures(polys: Sequence[TropicalPolynomial], fan: Fan) -> dict[Cone, list[Polyhedron]]:
    """Stratum-wise intersection of the closures of the individual hypersurfaces."""
    closures = [stratified_closure(f, fan) for f in polys]
    out = {}
    for tau in fan.cones:
        cx = closures[0][tau].complex
        for cl in closures[1:]:
            cx = refine_intersect(cx, cl[tau].complex)
        out[tau] = list(cx.maximal_cells)
    return out


def closures_agree(polys: Sequence[TropicalPolynomial], fan: Fan) -> bool:
    """Exact stratum-by-stratum comparison of the two closures."""
    a = closure_of_intersection(polys, fan)
    b = intersection_of_closures(polys, fan)
    for tau in fan.cones:
        if not same_support(a.get(tau, []), b.get(tau, [])):
            return False
    return True
