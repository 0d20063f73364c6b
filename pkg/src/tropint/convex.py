"""Exact rational polyhedral geometry.

Polyhedra are stored by an H-representation with primitive integer normals
and rational offsets; the V-representation is computed on demand by double
description and kept in canonical form, so two polyhedra compare equal iff
they are the same set.

Conventions: ``face(P, u)`` is the set where ``<u, .>`` is *maximal*
(faces are never empty).  Normal fans use the *min* convention, matching
the min-plus tropical weights used elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from . import dd
from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    NotPointed,
    Unbounded,
    UnboundedDirection,
)
from .linalg import (
    dot,
    frac,
    fvec,
    hermite_rows,
    lattice_saturation,
    primitive,
    project_off,
    rank,
    rref,
    det,
    sub,
)
from .lp import feasible_point, linprog

Halfspace = tuple[tuple[int, ...], Fraction]


def _normalize_halfspace(u: Sequence, a) -> Halfspace | None:
    fu = fvec(u)
    if all(x == 0 for x in fu):
        if frac(a) < 0:
            raise EmptyPolyhedron("inequality 0 <= a with a < 0")
        return None
    pu = primitive(fu)
    # scale factor s with pu = s * fu
    k = next(i for i, x in enumerate(fu) if x != 0)
    s = Fraction(pu[k]) / fu[k]
    return pu, frac(a) * s


class Polyhedron:
    """Nonempty polyhedron ``{x in Q^n : <u_i, x> <= a_i}``."""

    def __init__(self, halfspaces: Iterable[tuple[Sequence, object]], ambient_dim: int | None = None,
                 *, vrep=None, check: bool = True):
        hs: list[Halfspace] = []
        for u, a in halfspaces:
            h = _normalize_halfspace(u, a)
            if h is not None:
                hs.append(h)
        if ambient_dim is None:
            if not hs and vrep is None:
                raise ValueError("ambient_dim required for an empty H-representation")
            ambient_dim = len(hs[0][0]) if hs else len(vrep[0][0])
        self.ambient_dim = ambient_dim
        # keep the tightest offset for repeated normals
        best: dict[tuple[int, ...], Fraction] = {}
        for u, a in hs:
            if len(u) != ambient_dim:
                raise DimensionMismatch(f"normal {u} has wrong length")
            if u not in best or a < best[u]:
                best[u] = a
        self.halfspaces: tuple[Halfspace, ...] = tuple(sorted(best.items()))
        if vrep is not None:
            self._set_vrep(*vrep)
        elif check:
            pt = feasible_point([u for u, _ in self.halfspaces], [a for _, a in self.halfspaces],
                                n=ambient_dim)
            if pt is None:
                raise EmptyPolyhedron("infeasible inequality system")

    # ------------------------------------------------------------ builders

    @classmethod
    def from_points(cls, points, rays=(), lines=(), ambient_dim: int | None = None) -> "Polyhedron":
        """conv(points) + cone(rays) + span(lines); generators may be redundant."""
        points = [fvec(p) for p in points]
        if not points:
            raise EmptyPolyhedron("no points")
        n = ambient_dim or len(points[0])
        ineqs, eqs = dd.v_to_h(points, rays, lines, n=n)
        hs = list(ineqs)
        for u, a in eqs:
            hs.append((u, a))
            hs.append((tuple(-x for x in u), -a))
        P = cls(hs, n, check=False)
        P._prune_vrep(points, [primitive(r) for r in rays if any(fvec(r))],
                      [primitive(l) for l in lines if any(fvec(l))])
        return P

    @classmethod
    def point(cls, p) -> "Polyhedron":
        p = fvec(p)
        n = len(p)
        hs = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            hs.append((e, p[i]))
            hs.append((tuple(-x for x in e), -p[i]))
        return cls(hs, n, vrep=([p], [], []))

    @classmethod
    def box(cls, lower, upper) -> "Polyhedron":
        n = len(lower)
        hs = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            hs.append((e, frac(upper[i])))
            hs.append((tuple(-x for x in e), -frac(lower[i])))
        return cls(hs, n)

    @classmethod
    def whole_space(cls, n: int) -> "Polyhedron":
        return cls([], n, vrep=([tuple(Fraction(0) for _ in range(n))], [],
                               [tuple(int(i == j) for j in range(n)) for i in range(n)]))

    # ------------------------------------------------------------ V-rep

    def _set_vrep(self, verts, rays, lines) -> None:
        n = self.ambient_dim
        lines = hermite_rows(lattice_saturation(lines, n)) if lines else []
        if lines:
            verts = [project_off(v, lines) for v in verts]
            rays = [primitive(project_off(r, lines)) for r in rays]
            rays = [r for r in rays if any(r)]
        self._verts = tuple(sorted(set(fvec(v) for v in verts)))
        self._rays = tuple(sorted(set(tuple(int(x) for x in r) for r in rays)))
        self._lines = tuple(lines)

    def _ensure_vrep(self) -> None:
        if hasattr(self, "_verts"):
            return
        res = dd.h_to_v(self.halfspaces, self.ambient_dim)
        if res is None:
            raise EmptyPolyhedron("infeasible inequality system")
        self._set_vrep(*res)

    def _prune_vrep(self, points, rays, lines) -> None:
        """Keep only generators that are extreme with respect to the H-rep."""
        n = self.ambient_dim
        if lines:
            # minimal faces are affine subspaces; recompute canonically
            self._set_vrep(*dd.h_to_v(self.halfspaces, n))
            return
        hs = self.halfspaces
        verts = [p for p in set(points)
                 if rank([u for u, a in hs if dot(u, p) == a]) == n]
        recs = [r for r in set(rays)
                if rank([u for u, _ in hs if dot(u, r) == 0]) == n - 1]
        self._set_vrep(verts, recs, [])

    @property
    def vertex_list(self) -> tuple[tuple[Fraction, ...], ...]:
        self._ensure_vrep()
        return self._verts

    @property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        self._ensure_vrep()
        return self._rays

    @property
    def lines(self) -> tuple[tuple[int, ...], ...]:
        self._ensure_vrep()
        return self._lines

    @property
    def is_pointed(self) -> bool:
        return not self.lines

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines

    @cached_property
    def key(self):
        return (self.ambient_dim, self.vertex_list, self.rays, self.lines)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyhedron) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Polyhedron") -> bool:
        return self.sort_key < other.sort_key

    @cached_property
    def sort_key(self):
        return (self.dim, self.vertex_list, self.rays, self.lines)

    def __repr__(self) -> str:
        def fmt(v):
            return "(" + ", ".join(str(x) for x in v) + ")"
        parts = [f"verts=[{', '.join(fmt(v) for v in self.vertex_list)}]"]
        if self.rays:
            parts.append(f"rays=[{', '.join(fmt(r) for r in self.rays)}]")
        if self.lines:
            parts.append(f"lines=[{', '.join(fmt(l) for l in self.lines)}]")
        return f"{type(self).__name__}({'; '.join(parts)})"

    # ------------------------------------------------------------ queries

    @cached_property
    def direction_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the linear space parallel to the affine hull."""
        v0 = self.vertex_list[0]
        gens = [sub(v, v0) for v in self.vertex_list[1:]] + list(self.rays) + list(self.lines)
        red, _ = rref(gens) if gens else ([], [])
        return [tuple(r) for r in red]

    @property
    def dim(self) -> int:
        return len(self.direction_basis)

    def contains(self, x) -> bool:
        x = fvec(x)
        return all(dot(u, x) <= a for u, a in self.halfspaces)

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        for u, a in self.halfspaces:
            if any(dot(u, v) > a for v in other.vertex_list):
                return False
            if any(dot(u, r) > 0 for r in other.rays):
                return False
            if any(dot(u, l) != 0 for l in other.lines):
                return False
        return True

    def relint_point(self) -> tuple[Fraction, ...]:
        vs = self.vertex_list
        k = len(vs)
        p = [sum((v[i] for v in vs), Fraction(0)) / k for i in range(self.ambient_dim)]
        for r in self.rays:
            p = [a + b for a, b in zip(p, r)]
        return tuple(p)

    def in_relint(self, x) -> bool:
        """True iff ``x`` lies in the relative interior."""
        x = fvec(x)
        if not self.contains(x):
            return False
        return self.minimal_face_containing(x) == self

    def minimal_face_containing(self, x) -> "Polyhedron":
        x = fvec(x)
        tight = [(u, a) for u, a in self.halfspaces if dot(u, x) == a]
        hs = list(self.halfspaces) + [(tuple(-c for c in u), -a) for u, a in tight]
        verts = [v for v in self.vertex_list if all(dot(u, v) == a for u, a in tight)]
        rays = [r for r in self.rays if all(dot(u, r) == 0 for u, _ in tight)]
        return Polyhedron(hs, self.ambient_dim, vrep=(verts, rays, self.lines))

    def affine_equations(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Equations ``u.x = a`` cutting out the affine hull."""
        _, eqs = dd.v_to_h(self.vertex_list, self.rays, self.lines, n=self.ambient_dim)
        return eqs

    def facets(self) -> list[Halfspace]:
        """Irredundant facet inequalities (affine-hull equations excluded)."""
        ineqs, _ = dd.v_to_h(self.vertex_list, self.rays, self.lines, n=self.ambient_dim)
        return ineqs

    def intersection(self, other: "Polyhedron") -> "Polyhedron | None":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        hs = list(self.halfspaces) + list(other.halfspaces)
        if feasible_point([u for u, _ in hs], [a for _, a in hs], n=self.ambient_dim) is None:
            return None
        return Polyhedron(hs, self.ambient_dim, check=False)

    def meets(self, other: "Polyhedron") -> bool:
        hs = list(self.halfspaces) + list(other.halfspaces)
        return feasible_point([u for u, _ in hs], [a for _, a in hs], n=self.ambient_dim) is not None

    def translate(self, t) -> "Polyhedron":
        t = fvec(t)
        hs = [(u, a + dot(u, t)) for u, a in self.halfspaces]
        verts = [tuple(x + y for x, y in zip(v, t)) for v in self.vertex_list]
        return Polyhedron(hs, self.ambient_dim, vrep=(verts, self.rays, self.lines))

    def relax(self, eps) -> "Polyhedron":
        """Every inequality offset increased by ``eps``."""
        eps = frac(eps)
        return Polyhedron([(u, a + eps) for u, a in self.halfspaces], self.ambient_dim, check=False)

    def faces(self) -> list["Polyhedron"]:
        """All nonempty faces (including the polyhedron itself)."""
        verts, rays = self.vertex_list, self.rays
        hs = self.halfspaces
        vt = [frozenset(i for i, (u, a) in enumerate(hs) if dot(u, v) == a) for v in verts]
        rt = [frozenset(i for i, (u, _) in enumerate(hs) if dot(u, r) == 0) for r in rays]
        all_idx = frozenset(range(len(hs)))
        start = (frozenset(range(len(verts))), frozenset(range(len(rays))))
        seen = {start}
        stack = [start]
        while stack:
            vs, rs = stack.pop()
            for i in range(len(hs)):
                nv = frozenset(j for j in vs if i in vt[j])
                if not nv or nv == vs and all(i in rt[j] for j in rs):
                    continue
                nr = frozenset(j for j in rs if i in rt[j])
                new = (nv, nr)
                if new not in seen:
                    seen.add(new)
                    stack.append(new)
        out = []
        for vs, rs in seen:
            # tight inequalities of the face
            tight = all_idx
            for j in vs:
                tight &= vt[j]
            for j in rs:
                tight &= rt[j]
            fverts = [verts[j] for j in vs]
            frays = [rays[j] for j in rs]
            fhs = list(hs) + [(tuple(-c for c in hs[i][0]), -hs[i][1]) for i in tight]
            out.append(Polyhedron(fhs, self.ambient_dim, vrep=(fverts, frays, self.lines)))
        return sorted(set(out))

    def is_face_of(self, other: "Polyhedron") -> bool:
        if not other.contains_polyhedron(self):
            return False
        return other.minimal_face_containing(self.relint_point()) == self


class Cone(Polyhedron):
    """Polyhedral cone: all offsets are zero."""

    @classmethod
    def from_generators(cls, rays=(), lines=(), ambient_dim: int | None = None) -> "Cone":
        rays = [primitive(r) for r in rays if any(fvec(r))]
        lines = [primitive(l) for l in lines if any(fvec(l))]
        if ambient_dim is None:
            ambient_dim = len((rays or lines)[0])
        origin = tuple(Fraction(0) for _ in range(ambient_dim))
        ineqs, eqs = dd.v_to_h([origin], rays, lines, n=ambient_dim)
        hs = list(ineqs)
        for u, a in eqs:
            hs += [(u, a), (tuple(-x for x in u), -a)]
        C = cls(hs, ambient_dim, check=False)
        C._prune_vrep([origin], rays, lines)
        return C

    @classmethod
    def zero(cls, n: int) -> "Cone":
        return cls.from_generators((), (), n)

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return self.rays

    def interior_vector(self) -> tuple[int, ...]:
        """An integral vector in the relative interior (sum of the rays)."""
        v = [0] * self.ambient_dim
        for r in self.rays:
            v = [a + b for a, b in zip(v, r)]
        return tuple(v)

    def dual(self) -> "Cone":
        """``{w : <w, s> >= 0 for all s in the cone}``."""
        hs = [(tuple(-x for x in r), 0) for r in self.rays]
        for l in self.lines:
            hs += [(tuple(l), 0), (tuple(-x for x in l), 0)]
        C = Cone(hs, self.ambient_dim, check=False)
        return C

    def orthogonal_lattice(self) -> list[tuple[int, ...]]:
        """Canonical Z-basis of span(cone)^perp ∩ Z^n."""
        from .linalg import integer_kernel
        gens = list(self.rays) + list(self.lines)
        return integer_kernel(gens, self.ambient_dim)


def as_cone(P: Polyhedron) -> Cone:
    if any(a != 0 for _, a in P.halfspaces):
        raise ValueError("not a cone")
    C = Cone(P.halfspaces, P.ambient_dim, vrep=(P.vertex_list, P.rays, P.lines))
    return C


# ---------------------------------------------------------------- operations


def face(P: Polyhedron, u) -> Polyhedron:
    """The face of ``P`` on which ``<u, .>`` attains its maximum."""
    u = fvec(u)
    if len(u) != P.ambient_dim:
        raise DimensionMismatch("functional has wrong length")
    if all(x == 0 for x in u):
        return P
    if any(dot(u, r) > 0 for r in P.rays) or any(dot(u, l) != 0 for l in P.lines):
        raise UnboundedDirection(f"<{u}, .> is unbounded above on P")
    top = max(dot(u, v) for v in P.vertex_list)
    verts = [v for v in P.vertex_list if dot(u, v) == top]
    rays = [r for r in P.rays if dot(u, r) == 0]
    hs = list(P.halfspaces) + [(u, top), (tuple(-x for x in u), -top)]
    return Polyhedron(hs, P.ambient_dim, vrep=(verts, rays, P.lines))


def vertices(P: Polyhedron) -> set[tuple[Fraction, ...]]:
    if not P.is_pointed:
        raise NotPointed("polyhedron contains a line")
    return set(P.vertex_list)


def recession_cone(P: Polyhedron) -> Cone:
    hs = [(u, 0) for u, _ in P.halfspaces]
    origin = tuple(Fraction(0) for _ in range(P.ambient_dim))
    return Cone(hs, P.ambient_dim, vrep=([origin], P.rays, P.lines))


def normal_cone(P: Polyhedron, F: Polyhedron) -> Cone:
    """``{w : F is contained in argmin_P <w, .>}`` for a face ``F`` of pointed ``P``."""
    n = P.ambient_dim
    v0 = F.vertex_list[0]
    fverts = set(F.vertex_list)
    frays = set(F.rays)
    hs = []
    for v in P.vertex_list:
        d = sub(v, v0)
        if v in fverts:
            hs += [(d, 0), (tuple(-x for x in d), 0)]
        else:
            hs.append((tuple(-x for x in d), 0))
    for r in P.rays:
        if r in frays:
            hs += [(r, 0), (tuple(-x for x in r), 0)]
        else:
            hs.append((tuple(-x for x in r), 0))
    C = Cone(hs, n, check=False)
    C._ensure_vrep()
    return C


def normal_fan(P: Polyhedron):
    """Normal fan of a pointed polyhedron (min convention), as a :class:`Fan`."""
    from .fan import Fan
    if not P.is_pointed:
        raise NotPointed("normal fan requires a pointed polyhedron")
    cones = [normal_cone(P, F) for F in P.faces()]
    return Fan(cones, P.ambient_dim, closed=True)


def _affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])


def _triangulate(points: list, d: int) -> list[list]:
    """Pulling triangulation of conv(points); ``points`` are exactly the vertices."""
    if len(points) == d + 1:
        return [points]
    v0 = min(points)
    ineqs, _ = dd.v_to_h(points)
    out = []
    for u, a in ineqs:
        if dot(u, v0) == a:
            continue
        fpts = [p for p in points if dot(u, p) == a]
        for s in _triangulate(fpts, d - 1):
            out.append([v0] + s)
    return out


def _shoelace(points) -> Fraction:
    # points are the vertices of a full-dimensional convex polygon
    cx = sum((p[0] for p in points), Fraction(0)) / len(points)
    cy = sum((p[1] for p in points), Fraction(0)) / len(points)

    def before(p, q):
        ax, ay, bx, by = p[0] - cx, p[1] - cy, q[0] - cx, q[1] - cy
        ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
        hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
        if ha != hb:
            return ha - hb
        cross = ax * by - ay * bx
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    pts = sorted(points, key=cmp_to_key(before))
    area = Fraction(0)
    for i in range(len(pts)):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % len(pts)]
        area += x1 * y2 - x2 * y1
    return abs(area) / 2


def lattice_volume(P: Polyhedron) -> Fraction:
    """Euclidean volume normalised so that the unit lattice cell has volume 1."""
    if not P.is_bounded:
        raise Unbounded("volume of an unbounded polyhedron")
    n = P.ambient_dim
    pts = list(P.vertex_list)
    if _affine_rank(pts) < n:
        return Fraction(0)
    if n == 1:
        return max(p[0] for p in pts) - min(p[0] for p in pts)
    if n == 2:
        return _shoelace(pts)
    total = Fraction(0)
    for s in _triangulate(pts, n):
        total += abs(det([sub(p, s[0]) for p in s[1:]]))
    return total / factorial(n)


def minkowski_sum(*polys: Polyhedron) -> Polyhedron:
    n = polys[0].ambient_dim
    pts = [tuple(Fraction(0) for _ in range(n))]
    for P in polys:
        if P.ambient_dim != n:
            raise DimensionMismatch("ambient dimensions differ")
        pts = list({tuple(a + b for a, b in zip(p, v)) for p in pts for v in P.vertex_list})
    rays = [r for P in polys for r in P.rays]
    lines = [l for P in polys for l in P.lines]
    return Polyhedron.from_points(pts, rays, lines, ambient_dim=n)


def mixed_volume(*polys: Polyhedron) -> Fraction:
    """Mixed volume by inclusion-exclusion over subset Minkowski sums."""
    if not polys:
        raise DimensionMismatch("need at least one polytope")
    n = polys[0].ambient_dim
    if len(polys) != n or any(P.ambient_dim != n for P in polys):
        raise DimensionMismatch(f"mixed volume needs exactly {n} polytopes in dimension {n}")
    for P in polys:
        if not P.is_bounded:
            raise Unbounded("mixed volume of an unbounded polyhedron")
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = -1 if (n - k) % 2 else 1
        for S in combinations(range(n), k):
            total += sign * lattice_volume(minkowski_sum(*(polys[i] for i in S)))
    return total


# ---------------------------------------------------------------- complexes


class PolyhedralComplex:
    """Finite set of polyhedra closed under faces (cells sorted canonically)."""

    def __init__(self, cells: Iterable[Polyhedron], ambient_dim: int, *, close: bool = True):
        self.ambient_dim = ambient_dim
        cells = set(cells)
        if close:
            allc = set()
            for c in cells:
                allc.update(c.faces())
            cells = allc
        self.cells: tuple[Polyhedron, ...] = tuple(sorted(cells))
        self._index = {c: i for i, c in enumerate(self.cells)}

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def index(self, cell: Polyhedron) -> int:
        return self._index[cell]

    @cached_property
    def face_relation(self) -> frozenset[tuple[int, int]]:
        """Pairs ``(i, j)`` with cell i a proper face of cell j."""
        rel = set()
        for i, a in enumerate(self.cells):
            for j, b in enumerate(self.cells):
                if i != j and a.dim < b.dim and b.contains_polyhedron(a):
                    rel.add((i, j))
        return frozenset(rel)

    @property
    def maximal_cells(self) -> list[Polyhedron]:
        below = {i for i, _ in self.face_relation}
        return [c for i, c in enumerate(self.cells) if i not in below]

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def contains(self, x) -> bool:
        return any(c.contains(x) for c in self.maximal_cells)

    def check_pc1(self) -> bool:
        cs = self.cells
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                inter = cs[i].intersection(cs[j])
                if inter is None:
                    continue
                if inter not in self._index:
                    return False
                if not (inter.is_face_of(cs[i]) and inter.is_face_of(cs[j])):
                    return False
        return True

    def check_pc2(self) -> bool:
        return all(f in self._index for c in self.cells for f in c.faces())


def refine_intersect(A: PolyhedralComplex, B: PolyhedralComplex) -> PolyhedralComplex:
    """Complex of all faces of ``P ∩ P'`` for cells ``P`` of A and ``P'`` of B."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    out = set()
    for P in A.maximal_cells:
        for Q in B.maximal_cells:
            inter = P.intersection(Q)
            if inter is not None:
                out.add(inter)
    return PolyhedralComplex(out, A.ambient_dim)


def _split_pieces(X: Polyhedron, hyperplanes) -> list[Polyhedron]:
    pieces = [X]
    for u, a in hyperplanes:
        nxt = []
        for Q in pieces:
            vals = [dot(u, v) - a for v in Q.vertex_list]
            rvals = [dot(u, r) for r in Q.rays] + [dot(u, l) for l in Q.lines]
            lo_ok = all(x <= 0 for x in vals) and all(x <= 0 for x in rvals[:len(Q.rays)]) \
                and all(x == 0 for x in rvals[len(Q.rays):])
            hi_ok = all(x >= 0 for x in vals) and all(x >= 0 for x in rvals[:len(Q.rays)]) \
                and all(x == 0 for x in rvals[len(Q.rays):])
            if lo_ok or hi_ok:
                nxt.append(Q)
                continue
            for sgn in (1, -1):
                h = (tuple(sgn * x for x in u), sgn * a)
                R = Polyhedron(list(Q.halfspaces) + [h], Q.ambient_dim, check=False)
                try:
                    R._ensure_vrep()
                except EmptyPolyhedron:
                    continue
                if R.dim == Q.dim:
                    nxt.append(R)
        pieces = nxt
    return pieces


def support_contains(outer: Iterable[Polyhedron], inner: Iterable[Polyhedron]) -> bool:
    """Exact test that the union of ``inner`` is contained in the union of ``outer``.

    Each inner cell is cut by every hyperplane of the outer cells; the relative
    interior of each full-dimensional piece lies entirely inside or outside
    each outer cell, so testing one point per piece is decisive.
    """
    outer = list(outer)
    hyper = sorted({h for c in outer for h in c.halfspaces})
    for X in inner:
        if any(c.contains_polyhedron(X) for c in outer):
            continue
        for piece in _split_pieces(X, hyper):
            p = piece.relint_point()
            if not any(c.contains(p) for c in outer):
                return False
    return True


def same_support(a: Iterable[Polyhedron], b: Iterable[Polyhedron]) -> bool:
    a, b = list(a), list(b)
    return support_contains(a, b) and support_contains(b, a)
